"""The deformation U_q(sl2) as a hyperbolic algebra over k[xi, h].

Generators e, f, h satisfy

    q h e - e h = 2 e,
    h f - q f h = -2 f,
    e f - q f e = h + (1-q)/4 h^2,

and with xi := e f the algebra is hyperbolic over R = k[xi, h] for the
automorphism

    theta(h)  = q h - 2,
    theta(xi) = q xi + q^2 h + (q^2 - q^3)/4 h^2 - (q + 1),

via e -> x, f -> y.  The Casimir element C = 2 xi - h + (q/2) h^2
q-commutes with the generators, equivalently theta(C) = q C.

Closed forms for theta^n on the generators are the production path; the
generic iterated-substitution automorphism is kept as the test path.
"""

from __future__ import annotations

from .gwa import Automorphism, GwaElement, HyperbolicAlgebra
from .pbw import FreeWord, LinComb, PbwForm, PbwRewriter, comb_add, words_of_poly
from .qfield import BiPoly, Field, SymbolicField, gen_h, gen_xi


def theta_h_value(field: Field, n: int, beta):
    """theta^n(h) evaluated at h = beta:  q^n beta - 2 (q^n - 1)/(q - 1)."""
    t = field.q_pow(n)
    one = field.one
    return t * beta - field.scalar(2) * (t - one) / (field.q - one)


def theta_xi_value(field: Field, n: int, alpha, beta):
    """theta^n(xi) evaluated at (xi, h) = (alpha, beta).

    q^n xi + q^(n+1) (1 - q^n)/4 h^2 + q^(n+1) (q^n - 1)/(q - 1) h
          - (q^n - 1)(q^(n+1) - 1)/(q - 1)^2
    """
    q = field.q
    one = field.one
    t = field.q_pow(n)
    qt = q * t
    four = field.scalar(4)
    qm1 = q - one
    return (
        t * alpha
        + qt * (one - t) / four * beta * beta
        + qt * (t - one) / qm1 * beta
        - (t - one) * (qt - one) / (qm1 * qm1)
    )


class UqSL2:
    """The deformed enveloping algebra with its hyperbolic structure."""

    def __init__(self, field: Field | None = None):
        self.field = field = field or SymbolicField()
        q = field.q
        one = field.one
        xi, h = gen_xi(field), gen_h(field)

        image_h = BiPoly({(0, 1): q, (0, 0): field.scalar(-2)})
        image_xi = BiPoly({
            (1, 0): q,
            (0, 1): q * q,
            (0, 2): (q * q - q * q * q) / field.scalar(4),
            (0, 0): -(q + one),
        })
        inv_image_h = BiPoly({(0, 1): one / q, (0, 0): field.scalar(2) / q})
        inv_image_xi = BiPoly({
            (1, 0): one / q,
            (0, 1): -(one / q),
            (0, 2): -(one - q) / (field.scalar(4) * q),
        })
        self.theta = Automorphism(image_xi, image_h, inv_image_xi, inv_image_h, field)
        self.xi = xi
        self.h = h
        self.casimir = BiPoly({
            (1, 0): field.scalar(2),
            (0, 1): -one,
            (0, 2): q / field.scalar(2),
        })
        self.gwa = HyperbolicAlgebra(self.theta, xi, field)
        self.pbw = PbwRewriter(field)

        # presentation generators inside the hyperbolic algebra
        self.e = self.gwa.x
        self.f = self.gwa.y
        self.h_elem = self.gwa.of_poly(h)
        self._gen_map = {"e": self.e, "f": self.f, "h": self.h_elem}

    def theta_n_closed(self, gen: str, n: int) -> BiPoly:
        """Closed-form theta^n image of 'h', 'xi' or 'casimir'."""
        field = self.field
        if gen == "h":
            t = field.q_pow(n)
            c = -field.scalar(2) * (t - field.one) / (field.q - field.one)
            return BiPoly({(0, 1): t, (0, 0): c})
        if gen == "xi":
            q, one = field.q, field.one
            t = field.q_pow(n)
            qt = q * t
            qm1 = q - one
            return BiPoly({
                (1, 0): t,
                (0, 2): qt * (one - t) / field.scalar(4),
                (0, 1): qt * (t - one) / qm1,
                (0, 0): -(t - one) * (qt - one) / (qm1 * qm1),
            })
        if gen == "casimir":
            return self.casimir.scale(field.q_pow(n))
        raise ValueError(f"unknown generator {gen!r}; expected 'h', 'xi' or 'casimir'")

    def from_word(self, word: FreeWord | LinComb) -> GwaElement:
        """Image of a word (or word combination) under e->x, f->y, h->h."""
        if isinstance(word, FreeWord):
            comb: LinComb = {word.letters: word.scalar}
        else:
            comb = word
        total = self.gwa.zero
        for letters, scalar in comb.items():
            elem = self.gwa.product(self._gen_map[c] for c in letters)
            total = self.gwa.add(total, self.gwa.scale(scalar, elem))
        return total

    def pbw_normal_form(self, comb: FreeWord | LinComb | list) -> PbwForm:
        return self.pbw.normal_form(comb)

    def gwa_to_pbw(self, elem: GwaElement) -> PbwForm:
        """Re-expand a canonical-form element into words and normalize.

        Coefficients p(xi, h) expand through xi -> e f; a degree-d term
        carries a tail of d copies of e (d > 0) or -d copies of f (d < 0).
        """
        comb: LinComb = {}
        for d, p in elem.terms.items():
            tail = ("e",) * d if d >= 0 else ("f",) * (-d)
            for w, c in words_of_poly(p, tail).items():
                comb_add(comb, w, c)
        return self.pbw.normal_form(comb)

    def casimir_words(self) -> LinComb:
        """C = 2 e f - h + (q/2) h^2 as a free-word combination."""
        field = self.field
        return {
            ("e", "f"): field.scalar(2),
            ("h",): -field.one,
            ("h", "h"): field.q / field.scalar(2),
        }
