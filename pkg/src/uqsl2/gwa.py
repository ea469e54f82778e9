"""Generic hyperbolic-algebra engine over R = k[xi, h].

Given an automorphism theta of R and the element xi, the algebra is
generated over R by x and y subject to

    x*y = xi,   y*x = theta^{-1}(xi),
    x*a = theta(a)*x,   y*a = theta^{-1}(a)*y   for a in R.

Elements are kept in the canonical form

    sum_{d>0} a_d(xi,h) * x^d  +  a_0(xi,h)  +  sum_{d<0} a_d(xi,h) * y^{-d}

with all coefficients written on the left, so equality is structural.
Mixed x/y monomials are contracted eagerly during multiplication.
"""

from __future__ import annotations

from .qfield import BiPoly, Field, gen_h, gen_xi


class Automorphism:
    """An automorphism of k[xi, h], stored as generator images both ways.

    Powers of the map are memoized: theta^n(p) is a single substitution of
    the cached n-step generator images into p.
    """

    def __init__(self, image_xi: BiPoly, image_h: BiPoly,
                 inv_image_xi: BiPoly, inv_image_h: BiPoly, field: Field):
        self.image_xi = image_xi
        self.image_h = image_h
        self.inv_image_xi = inv_image_xi
        self.inv_image_h = inv_image_h
        self.field = field
        self._images: dict[int, tuple[BiPoly, BiPoly]] = {
            0: (gen_xi(field), gen_h(field)),
            1: (image_xi, image_h),
            -1: (inv_image_xi, inv_image_h),
        }

    def _images_for(self, n: int) -> tuple[BiPoly, BiPoly]:
        if n not in self._images:
            step = 1 if n > 0 else -1
            prev_xi, prev_h = self._images_for(n - step)
            step_xi, step_h = self._images[step]
            self._images[n] = (prev_xi.subst(step_xi, step_h),
                               prev_h.subst(step_xi, step_h))
        return self._images[n]

    def apply(self, p: BiPoly, n: int = 1) -> BiPoly:
        """theta^n(p) for any integer n."""
        if n == 0:
            return p
        return p.subst(*self._images_for(n))

    def composition_is_identity(self) -> bool:
        """Check that the stored inverse really inverts on both generators."""
        xi, h = gen_xi(self.field), gen_h(self.field)
        return (
            self.inv_image_xi.subst(self.image_xi, self.image_h) == xi
            and self.inv_image_h.subst(self.image_xi, self.image_h) == h
            and self.image_xi.subst(self.inv_image_xi, self.inv_image_h) == xi
            and self.image_h.subst(self.inv_image_xi, self.inv_image_h) == h
        )


class GwaElement:
    """Canonical-form element: maps degree d to its left coefficient in R.

    d > 0 is the coefficient of x^d, d = 0 the R-part, d < 0 the
    coefficient of y^{-d}.  No zero coefficients are stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[int, BiPoly] | None = None):
        self.terms = {d: p for d, p in (terms or {}).items() if p}
        self._hash = None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GwaElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted((d, p) for d, p in self.terms.items())))
        return self._hash

    def degrees(self) -> set[int]:
        return set(self.terms)

    def coefficient(self, d: int) -> BiPoly:
        return self.terms.get(d, BiPoly())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for d in sorted(self.terms, reverse=True):
            p = self.terms[d]
            if d > 0:
                gen = "x" if d == 1 else f"x^{d}"
            elif d < 0:
                gen = "y" if d == -1 else f"y^{-d}"
            else:
                gen = ""
            ps = str(p)
            if not gen:
                parts.append(ps if len(p.terms) == 1 else f"({ps})")
            elif ps == "1":
                parts.append(gen)
            elif len(p.terms) == 1 and " " not in ps:
                parts.append(f"{ps}*{gen}")
            else:
                parts.append(f"({ps})*{gen}")
        return " + ".join(parts)

    __repr__ = __str__


class HyperbolicAlgebra:
    """The algebra R{theta, xi}: multiplication and linear structure."""

    def __init__(self, theta: Automorphism, xi: BiPoly, field: Field):
        self.theta = theta
        self.xi = xi
        self.field = field
        self.zero = GwaElement()
        self.one = GwaElement({0: BiPoly.constant(field.one)})
        self.x = GwaElement({1: BiPoly.constant(field.one)})
        self.y = GwaElement({-1: BiPoly.constant(field.one)})

    def of_poly(self, p: BiPoly) -> GwaElement:
        """Embed an element of the base ring R."""
        return GwaElement({0: p})

    def add(self, a: GwaElement, b: GwaElement) -> GwaElement:
        out = dict(a.terms)
        for d, p in b.terms.items():
            s = out.get(d)
            s = p if s is None else s + p
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return GwaElement(out)

    def neg(self, a: GwaElement) -> GwaElement:
        return GwaElement({d: -p for d, p in a.terms.items()})

    def sub(self, a: GwaElement, b: GwaElement) -> GwaElement:
        return self.add(a, self.neg(b))

    def scale(self, c, a: GwaElement) -> GwaElement:
        """Left-multiply by a scalar or an element of R."""
        if isinstance(c, BiPoly):
            return GwaElement({d: c * p for d, p in a.terms.items()})
        return GwaElement({d: p.scale(c) for d, p in a.terms.items()})

    def _contract(self, i: int, j: int) -> BiPoly | None:
        """Left coefficient of the contraction of x^i-ish degree i times degree j.

        Returns None when no contraction happens (same-sign or zero degrees);
        otherwise the product of the shifted xi factors collected while the
        mixed powers cancel pairwise.
        """
        if i > 0 and j < 0:
            steps = min(i, -j)
            coeff = None
            for k in range(steps):
                f = self.theta.apply(self.xi, i - 1 - k)
                coeff = f if coeff is None else coeff * f
            return coeff
        if i < 0 and j > 0:
            steps = min(-i, j)
            coeff = None
            for k in range(steps):
                f = self.theta.apply(self.xi, i + k)
                coeff = f if coeff is None else coeff * f
            return coeff
        return None

    def mul(self, a: GwaElement, b: GwaElement) -> GwaElement:
        out: dict[int, BiPoly] = {}
        for i, pa in a.terms.items():
            for j, pb in b.terms.items():
                coeff = pa * self.theta.apply(pb, i)
                extra = self._contract(i, j)
                if extra is not None:
                    coeff = coeff * extra
                d = i + j
                s = out.get(d)
                s = coeff if s is None else s + coeff
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        return GwaElement(out)

    def product(self, factors) -> GwaElement:
        result = self.one
        for f in factors:
            result = self.mul(result, f)
        return result

    def power(self, a: GwaElement, n: int) -> GwaElement:
        result = self.one
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def commutator(self, a: GwaElement, b: GwaElement) -> GwaElement:
        return self.sub(self.mul(a, b), self.mul(b, a))
