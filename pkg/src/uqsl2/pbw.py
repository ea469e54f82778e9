"""Ordered normal forms for words in the presentation generators e, f, h.

The three defining relations, oriented left-to-right as rewrite rules

    e h -> q*(h e) - 2*(e)
    h f -> q*(f h) - 2*(f)
    e f -> q*(f e) + (h) + (1-q)/4*(h h)

terminate in the unique normal form: a linear combination of ordered
monomials f^a h^b e^c (order f < h < e).  This normalizer is independent
of the hyperbolic-algebra engine and serves as its cross-checking oracle.
"""

from __future__ import annotations

from .qfield import BiPoly, Field

Word = tuple[str, ...]
LinComb = dict[Word, object]  # word -> scalar

_ORDER = {"f": 0, "h": 1, "e": 2}


class FreeWord:
    """A scalar multiple of a word in the alphabet {e, f, h}."""

    __slots__ = ("letters", "scalar")

    def __init__(self, letters, scalar):
        letters = tuple(letters)
        if any(c not in _ORDER for c in letters):
            raise ValueError(f"letters must be e, f or h; got {letters}")
        self.letters = letters
        self.scalar = scalar

    def __repr__(self) -> str:
        word = "*".join(self.letters) if self.letters else "1"
        return f"({self.scalar})*{word}"


def comb_add(into: LinComb, word: Word, scalar) -> None:
    s = into.get(word)
    s = scalar if s is None else s + scalar
    if s:
        into[word] = s
    else:
        into.pop(word, None)


def comb_scale(comb: LinComb, scalar) -> LinComb:
    out: LinComb = {}
    if scalar:
        for w, c in comb.items():
            out[w] = c * scalar
    return out


def comb_sub(a: LinComb, b: LinComb) -> LinComb:
    out = dict(a)
    for w, c in b.items():
        comb_add(out, w, -c)
    return out


def words_of_poly(p: BiPoly, tail: Word = ()) -> LinComb:
    """Expand a base-ring polynomial into free words, xi -> e f, times a tail."""
    out: LinComb = {}
    for (i, j), c in p.terms.items():
        comb_add(out, ("e", "f") * i + ("h",) * j + tail, c)
    return out


class PbwForm:
    """Linear combination of ordered monomials: (a, b, c) -> coefficient of f^a h^b e^c."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PbwForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs)))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b, c) in sorted(self.coeffs, reverse=True):
            coeff = self.coeffs[(a, b, c)]
            mono = "*".join(
                ([f"f^{a}" if a > 1 else "f"] if a else [])
                + ([f"h^{b}" if b > 1 else "h"] if b else [])
                + ([f"e^{c}" if c > 1 else "e"] if c else [])
            ) or "1"
            parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


class PbwRewriter:
    """Exhaustive rewriting to the f^a h^b e^c normal form."""

    def __init__(self, field: Field):
        self.field = field
        q = field.q
        quarter = (field.one - q) / field.scalar(4)
        self.rules: dict[tuple[str, str], list[tuple[object, Word]]] = {
            ("e", "h"): [(q, ("h", "e")), (field.scalar(-2), ("e",))],
            ("h", "f"): [(q, ("f", "h")), (field.scalar(-2), ("f",))],
            ("e", "f"): [(q, ("f", "e")), (field.one, ("h",)), (quarter, ("h", "h"))],
        }

    @staticmethod
    def _first_inversion(word: Word) -> int:
        for i in range(len(word) - 1):
            if _ORDER[word[i]] > _ORDER[word[i + 1]]:
                return i
        return -1

    def normal_form(self, comb: LinComb | FreeWord | list) -> PbwForm:
        """Normalize a linear combination of words (or FreeWords)."""
        if isinstance(comb, FreeWord):
            comb = {comb.letters: comb.scalar}
        elif isinstance(comb, list):
            acc: LinComb = {}
            for fw in comb:
                comb_add(acc, fw.letters, fw.scalar)
            comb = acc
        done: dict = {}
        stack = [(w, c) for w, c in comb.items()]
        while stack:
            word, coeff = stack.pop()
            i = self._first_inversion(word)
            if i < 0:
                key = (word.count("f"), word.count("h"), word.count("e"))
                s = done.get(key)
                s = coeff if s is None else s + coeff
                if s:
                    done[key] = s
                else:
                    done.pop(key, None)
                continue
            head, pair, tail = word[:i], (word[i], word[i + 1]), word[i + 2:]
            for rc, replacement in self.rules[pair]:
                stack.append((head + replacement + tail, coeff * rc))
        return PbwForm(done)

    def multiply(self, a: PbwForm, b: PbwForm) -> PbwForm:
        """Product of two normal forms, re-normalized."""
        comb: LinComb = {}
        for (a1, b1, c1), ca in a.coeffs.items():
            wa = ("f",) * a1 + ("h",) * b1 + ("e",) * c1
            for (a2, b2, c2), cb in b.coeffs.items():
                wb = ("f",) * a2 + ("h",) * b2 + ("e",) * c2
                comb_add(comb, wa + wb, ca * cb)
        return self.normal_form(comb)
