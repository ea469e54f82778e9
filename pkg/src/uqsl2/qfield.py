"""Exact coefficient arithmetic.

The coefficient field is Q(v) with q := v**2, so half-integer powers
q^(k/2) are ordinary monomials v**k.  Everything is immutable and
canonical after construction: a RatFunc is a reduced fraction of
polynomials with a monic denominator, so equality is structural.

A parallel "numeric" mode specializes q to an exact rational q0 with
q0 not in {0, 1, -1}; scalars are then plain fractions.Fraction values.
Both modes share the same duck-typed scalar surface (+ - * / ** == bool),
and a field object carries the mode-specific helpers (q powers, parsing,
canonical printing, square roots, power-of-q recognition).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

Rat = Fraction

_FRACTION_LIKE = (int, Fraction)


def _frac_sqrt(x: Fraction) -> Optional[Fraction]:
    """Exact square root of a rational, or None."""
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn != x.numerator or rd * rd != x.denominator:
        return None
    return Fraction(rn, rd)


class UniPoly:
    """Univariate polynomial over Q in the indeterminate v, stored sparsely.

    `coeffs` maps degree -> nonzero Fraction.  The zero polynomial is the
    empty map.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Union[dict, Iterable, int, Fraction] = ()):
        if isinstance(coeffs, UniPoly):
            self.coeffs = coeffs.coeffs
        elif isinstance(coeffs, dict):
            self.coeffs = {d: Fraction(c) for d, c in coeffs.items() if c}
        elif isinstance(coeffs, _FRACTION_LIKE):
            c = Fraction(coeffs)
            self.coeffs = {0: c} if c else {}
        else:
            # dense sequence indexed by degree
            self.coeffs = {d: Fraction(c) for d, c in enumerate(coeffs) if c}
        self._hash = None

    @staticmethod
    def _raw(coeffs: dict) -> "UniPoly":
        """Internal: wrap a dict whose values are already nonzero Fractions."""
        p = object.__new__(UniPoly)
        p.coeffs = coeffs
        p._hash = None
        return p

    @staticmethod
    def monomial(degree: int, coeff=1) -> "UniPoly":
        return UniPoly({degree: Fraction(coeff)})

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coeff(self) -> Fraction:
        return self.coeffs[max(self.coeffs)] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, _FRACTION_LIKE):
            other = UniPoly(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.coeffs.items())))
        return self._hash

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw({d: -c for d, c in self.coeffs.items()})

    def __add__(self, other) -> "UniPoly":
        other = UniPoly(other) if not isinstance(other, UniPoly) else other
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            s = out.get(d, 0) + c
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return UniPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        other = UniPoly(other) if not isinstance(other, UniPoly) else other
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return UniPoly(other) - self

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, _FRACTION_LIKE):
            c = Fraction(other)
            if not c:
                return UniPoly()
            return UniPoly._raw({d: a * c for d, a in self.coeffs.items()})
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            (da, ca), = a.items()
            return UniPoly._raw({da + d: ca * c for d, c in b.items()})
        if len(b) == 1:
            (db, cb), = b.items()
            return UniPoly._raw({db + d: cb * c for d, c in a.items()})
        out: dict = {}
        for d1, c1 in a.items():
            for d2, c2 in b.items():
                d = d1 + d2
                s = out.get(d, 0) + c1 * c2
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        return UniPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self.coeffs)
        quot: dict = {}
        db = other.degree()
        lb = other.leading_coeff()
        while rem:
            dr = max(rem)
            if dr < db:
                break
            f = rem[dr] / lb
            quot[dr - db] = f
            for d, c in other.coeffs.items():
                k = d + dr - db
                s = rem.get(k, 0) - f * c
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return UniPoly._raw(quot), UniPoly._raw(rem)

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.leading_coeff()
        if lc == 1:
            return self
        return UniPoly._raw({d: c / lc for d, c in self.coeffs.items()})

    def sqrt(self) -> Optional["UniPoly"]:
        """Exact polynomial square root (leading coefficient positive), or None."""
        if self.is_zero():
            return UniPoly()
        deg = self.degree()
        low = min(self.coeffs)
        if deg % 2 or low % 2:
            return None
        lc = _frac_sqrt(self.leading_coeff())
        if lc is None:
            return None
        e = deg // 2
        r = {e: lc}
        for i in range(e - 1, -1, -1):
            # coefficient of v^(e+i) in r**2 must match
            acc = self.coeffs.get(e + i, Fraction(0))
            for j in range(i + 1, e):
                k = e + i - j
                if i < k <= e and j in r and k in r:
                    acc -= r[j] * r[k]
            c = acc / (2 * lc)
            if c:
                r[i] = c
        cand = UniPoly(r)
        if cand * cand == self:
            return cand
        return None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in sorted(self.coeffs, reverse=True):
            c = self.coeffs[d]
            if d == 0:
                term = str(c)
            else:
                mono = "v" if d == 1 else f"v^{d}"
                if c == 1:
                    term = mono
                elif c == -1:
                    term = f"-{mono}"
                else:
                    term = f"{c}*{mono}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    __repr__ = __str__


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd: common v-power stripped first, then the Euclidean algorithm."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    la, lb = min(a.coeffs), min(b.coeffs)
    common = min(la, lb)
    if la:
        a = UniPoly._raw({d - la: c for d, c in a.coeffs.items()})
    if lb:
        b = UniPoly._raw({d - lb: c for d, c in b.coeffs.items()})
    if len(a.coeffs) == 1 or len(b.coeffs) == 1:
        # after stripping, a monomial operand is a unit
        g = _ONE_POLY
    else:
        while b.coeffs:
            a, b = b, (a % b).monic()
        g = a.monic()
    if common:
        g = g * UniPoly.monomial(common)
    return g


_ZERO_POLY = UniPoly()
_ONE_POLY = UniPoly(1)
_ONE_COEFFS = _ONE_POLY.coeffs


class RatFunc:
    """Element of Q(v) in canonical form: gcd(num, den) = 1, den monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=_ONE_POLY):
        num = num if isinstance(num, UniPoly) else UniPoly(num)
        den = den if isinstance(den, UniPoly) else UniPoly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = _ZERO_POLY, _ONE_POLY
        else:
            if den.coeffs != _ONE_COEFFS:
                g = poly_gcd(num, den)
                if g.degree() > 0:
                    num = num // g
                    den = den // g
                lc = den.leading_coeff()
                if lc != 1:
                    num = num * (1 / lc)
                    den = den * (1 / lc)
            self.num, self.den = num, den
        self._hash = None

    @staticmethod
    def _canonical(num: UniPoly, den: UniPoly) -> "RatFunc":
        """Internal: wrap parts already known to be in canonical form."""
        r = object.__new__(RatFunc)
        r.num, r.den = num, den
        r._hash = None
        return r

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc(UniPoly(Fraction(c)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def _coerce(self, other) -> Optional["RatFunc"]:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, _FRACTION_LIKE):
            return RatFunc.const(other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self) -> "RatFunc":
        return RatFunc._canonical(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFunc":
        o = self._coerce(other)
        return o - self if o is not None else NotImplemented

    def __mul__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return _RF_ZERO
        if o.num.coeffs == _ONE_COEFFS and o.den.coeffs == _ONE_COEFFS:
            return self
        if self.num.coeffs == _ONE_COEFFS and self.den.coeffs == _ONE_COEFFS:
            return o
        # cross-cancel, then the product of the reduced parts is canonical
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        if d2.coeffs != _ONE_COEFFS:
            g1 = poly_gcd(n1, d2)
            if g1.degree() > 0:
                n1, d2 = n1 // g1, d2 // g1
        if d1.coeffs != _ONE_COEFFS:
            g2 = poly_gcd(n2, d1)
            if g2.degree() > 0:
                n2, d1 = n2 // g2, d1 // g2
        num = n1 * n2
        den = d1 * d2
        lc = den.leading_coeff()
        if lc != 1:
            num = num * (1 / lc)
            den = den * (1 / lc)
        return RatFunc._canonical(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return self * RatFunc(o.den, o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        return o / self if o is not None else NotImplemented

    def __pow__(self, n: int) -> "RatFunc":
        if n == 0:
            return _RF_ONE
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc._canonical(self.num ** n, self.den ** n)

    def sqrt(self) -> Optional["RatFunc"]:
        rn = self.num.sqrt()
        if rn is None:
            return None
        rd = self.den.sqrt()
        if rd is None:
            return None
        return RatFunc(rn, rd)

    def as_monomial(self) -> Optional[tuple[int, Fraction]]:
        """(degree in v, coefficient) if this is c*v^k with k possibly negative."""
        if len(self.num.coeffs) != 1 or len(self.den.coeffs) != 1:
            return None
        (dn, cn), = self.num.coeffs.items()
        (dd, cd), = self.den.coeffs.items()
        return dn - dd, cn / cd

    def __str__(self) -> str:
        num = _poly_q_str(self.num)
        if self.den == _ONE_POLY:
            return num
        den = _poly_q_str(self.den)
        if " " in num:
            num = f"({num})"
        if den != "q":
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return str(self)


def _q_monomial_str(deg_v: int) -> str:
    """Render v^deg_v in q-notation (q = v^2)."""
    if deg_v % 2 == 0:
        k = deg_v // 2
        return "q" if k == 1 else f"q^({k})"
    return f"q^({deg_v}/2)"


def _poly_q_str(p: UniPoly) -> str:
    """Canonical q-notation string: monomials sorted by descending degree."""
    if p.is_zero():
        return "0"
    parts = []
    for d in sorted(p.coeffs, reverse=True):
        c = p.coeffs[d]
        if d == 0:
            term = str(c)
        else:
            mono = _q_monomial_str(d)
            if c == 1:
                term = mono
            elif c == -1:
                term = f"-{mono}"
            else:
                term = f"{c}*{mono}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


_RF_ZERO = RatFunc(_ZERO_POLY)
_RF_ONE = RatFunc(_ONE_POLY)


class BiPoly:
    """Polynomial in the commuting generators xi, h with field-scalar coefficients.

    `terms` maps (degree in xi, degree in h) -> nonzero scalar.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[dict] = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}
        self._hash = None

    @staticmethod
    def constant(c) -> "BiPoly":
        return BiPoly({(0, 0): c}) if c else BiPoly()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k)
                p = c1 * c2
                s = p if s is None else s + p
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return BiPoly(out)

    def scale(self, c) -> "BiPoly":
        if not c:
            return BiPoly()
        return BiPoly({k: c * v for k, v in self.terms.items()})

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            base = base * base
            n >>= 1
        if result is None:
            raise ValueError("BiPoly**0 needs a field-scalar one; scale explicitly")
        return result

    def eval(self, alpha, beta):
        """Image under xi -> alpha, h -> beta (a ring homomorphism to scalars)."""
        apow = {0: None}
        bpow = {0: None}
        total = None
        for (i, j), c in self.terms.items():
            val = c
            if i:
                val = val * _cached_pow(apow, alpha, i)
            if j:
                val = val * _cached_pow(bpow, beta, j)
            total = val if total is None else total + val
        if total is None:
            return alpha - alpha  # scalar zero of the right kind
        return total

    def subst(self, xi_image: "BiPoly", h_image: "BiPoly") -> "BiPoly":
        """Image under the algebra map xi -> xi_image, h -> h_image."""
        xpow: dict = {}
        hpow: dict = {}
        total = BiPoly()
        for (i, j), c in self.terms.items():
            term = None
            if i:
                term = _cached_bipow(xpow, xi_image, i)
            if j:
                hp = _cached_bipow(hpow, h_image, j)
                term = hp if term is None else term * hp
            if term is None:
                total = total + BiPoly.constant(c)
            else:
                total = total + term.scale(c)
        return total

    def degrees(self) -> tuple[int, int]:
        """(max degree in xi, max degree in h); (-1, -1) for zero."""
        if not self.terms:
            return (-1, -1)
        return (max(i for i, _ in self.terms), max(j for _, j in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, reverse=True):
            c = self.terms[(i, j)]
            mono = "*".join(
                ([f"xi^{i}" if i > 1 else "xi"] if i else [])
                + ([f"h^{j}" if j > 1 else "h"] if j else [])
            )
            cs = str(c)
            if not mono:
                term = f"({cs})" if _composite(cs) else cs
            elif cs == "1":
                term = mono
            elif cs == "-1":
                term = f"-{mono}"
            else:
                term = (f"({cs})" if _composite(cs) else cs) + f"*{mono}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    __repr__ = __str__


def _composite(s: str) -> bool:
    return " " in s or "/" in s or "*" in s


def _cached_pow(cache: dict, base, n: int):
    if n not in cache:
        cache[n] = _cached_pow(cache, base, n - 1) * base if n > 1 else base
    return cache[n]


def _cached_bipow(cache: dict, base: BiPoly, n: int) -> BiPoly:
    if n not in cache:
        cache[n] = _cached_bipow(cache, base, n - 1) * base if n > 1 else base
    return cache[n]


class SymbolicField:
    """Q(v) with q = v**2; the default coefficient field."""

    symbolic = True

    def __init__(self):
        self.q = RatFunc(UniPoly.monomial(2))
        self.zero = _RF_ZERO
        self.one = _RF_ONE
        self._qpow: dict[int, RatFunc] = {0: self.one, 1: self.q}

    def scalar(self, c) -> RatFunc:
        """Embed an integer or Fraction."""
        return RatFunc.const(c)

    def q_pow(self, n: int) -> RatFunc:
        if n not in self._qpow:
            if n > 0:
                self._qpow[n] = RatFunc(UniPoly.monomial(2 * n))
            else:
                self._qpow[n] = RatFunc(_ONE_POLY, UniPoly.monomial(-2 * n))
        return self._qpow[n]

    def q_half_pow(self, k: int) -> RatFunc:
        """q^(k/2) = v**k for any integer k."""
        if k >= 0:
            return RatFunc(UniPoly.monomial(k))
        return RatFunc(_ONE_POLY, UniPoly.monomial(-k))

    def as_q_power(self, t: RatFunc) -> Optional[int]:
        """n such that t == q**n exactly (unit coefficient), else None."""
        mono = t.as_monomial()
        if mono is None:
            return None
        deg, coeff = mono
        if coeff != 1 or deg % 2:
            return None
        return deg // 2

    def sqrt(self, t: RatFunc) -> Optional[RatFunc]:
        return t.sqrt()

    def to_text(self, t: RatFunc) -> str:
        return str(t)

    def describe_q(self) -> str:
        return "symbolic"

    def __repr__(self) -> str:
        return "SymbolicField()"

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolicField)

    def __hash__(self) -> int:
        return hash("SymbolicField")


class NumericField:
    """Q with q specialized to an exact rational q0, |q0| not in {0, 1}."""

    symbolic = False

    def __init__(self, q0):
        q0 = Fraction(q0)
        if q0 in (0, 1, -1):
            raise ValueError(f"q must avoid 0, 1 and -1; got {q0}")
        self.q = q0
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def scalar(self, c) -> Fraction:
        return Fraction(c)

    def q_pow(self, n: int) -> Fraction:
        return self.q ** n

    def q_half_pow(self, k: int) -> Fraction:
        if k % 2 == 0:
            return self.q ** (k // 2)
        root = _frac_sqrt(self.q)
        if root is None:
            raise ValueError(
                f"q^({k}/2) is irrational for q = {self.q}; "
                "half-integer powers need a perfect-square q"
            )
        return root ** k

    def as_q_power(self, t: Fraction) -> Optional[int]:
        t = Fraction(t)
        if t == 1:
            return 0
        if t == 0:
            return None
        a, b = abs(t.numerator), t.denominator
        c, d = abs(self.q.numerator), self.q.denominator
        # |q|^n = a/b determines |n| from digit lengths of the larger side
        if c > d:
            n = round(math.log(max(a, b)) / math.log(Fraction(c, d)))
        else:
            n = round(math.log(max(a, b)) / math.log(Fraction(d, c)))
        for cand in {n, -n, n + 1, -(n + 1), n - 1, -(n - 1)}:
            if self.q ** cand == t:
                return cand
        return None

    def sqrt(self, t: Fraction) -> Optional[Fraction]:
        return _frac_sqrt(Fraction(t))

    def to_text(self, t: Fraction) -> str:
        return str(Fraction(t))

    def describe_q(self) -> str:
        return str(self.q)

    def __repr__(self) -> str:
        return f"NumericField({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, NumericField) and self.q == other.q

    def __hash__(self) -> int:
        return hash(("NumericField", self.q))


Field = Union[SymbolicField, NumericField]

XI_GEN = (1, 0)
H_GEN = (0, 1)


def gen_xi(field: Field) -> BiPoly:
    return BiPoly({XI_GEN: field.one})


def gen_h(field: Field) -> BiPoly:
    return BiPoly({H_GEN: field.one})


def is_power_of_q(t, field: Field) -> Optional[int]:
    """n with t = q**n exactly, else None."""
    return field.as_q_power(t)
