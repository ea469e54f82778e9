"""Exact verification of the defining and structural identities.

Every identity is stated as a free-word combination that must vanish, and
is checked twice by independent normalizers: once in the hyperbolic-algebra
engine (canonical x/y form) and once by the ordered rewriting system
(f^a h^b e^c normal form).  A failure carries the nonzero residual.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import UqSL2
from .pbw import LinComb, comb_add, comb_scale, comb_sub, words_of_poly


@dataclass(frozen=True)
class IdentityResult:
    name: str
    gwa_zero: bool
    pbw_zero: bool
    gwa_residual: str = ""
    pbw_residual: str = ""

    @property
    def ok(self) -> bool:
        return self.gwa_zero and self.pbw_zero


@dataclass
class IdentityReport:
    results: list[IdentityResult] = dc_field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> list[IdentityResult]:
        return [r for r in self.results if not r.ok]

    def to_json_dict(self) -> dict:
        return {
            "identities": [
                {
                    "name": r.name,
                    "gwa_zero": r.gwa_zero,
                    "pbw_zero": r.pbw_zero,
                    **({"gwa_residual": r.gwa_residual} if not r.gwa_zero else {}),
                    **({"pbw_residual": r.pbw_residual} if not r.pbw_zero else {}),
                }
                for r in self.results
            ],
            "all_passed": self.all_ok,
        }


def _concat(prefix: tuple, comb: LinComb, suffix: tuple) -> LinComb:
    out: LinComb = {}
    for w, c in comb.items():
        comb_add(out, prefix + w + suffix, c)
    return out


def identity_suite(alg: UqSL2) -> list[tuple[str, LinComb]]:
    """The fixed list of identities, each as a combination that must vanish."""
    f = alg.field
    q, one = f.q, f.one
    two = f.scalar(2)
    quarter = (one - q) / f.scalar(4)
    C = alg.casimir_words()

    suite: list[tuple[str, LinComb]] = []

    # defining relations
    suite.append(("q*h*e - e*h - 2*e", {
        ("h", "e"): q, ("e", "h"): -one, ("e",): -two}))
    suite.append(("h*f - q*f*h + 2*f", {
        ("h", "f"): one, ("f", "h"): -q, ("f",): two}))
    suite.append(("e*f - q*f*e - h - (1-q)/4*h^2", {
        ("e", "f"): one, ("f", "e"): -q, ("h",): -one, ("h", "h"): -quarter}))

    # the Casimir q-commutes with the generators
    suite.append(("e*C - q*C*e",
                  comb_sub(_concat(("e",), C, ()), comb_scale(_concat((), C, ("e",)), q))))
    suite.append(("f*C - q^(-1)*C*f",
                  comb_sub(_concat(("f",), C, ()),
                           comb_scale(_concat((), C, ("f",)), one / q))))
    suite.append(("h*C - C*h",
                  comb_sub(_concat(("h",), C, ()), _concat((), C, ("h",)))))

    # h commutes with e*f
    suite.append(("h*(e*f) - (e*f)*h", {
        ("h", "e", "f"): one, ("e", "f", "h"): -one}))

    # the two displayed Casimir forms agree
    suite.append(("(2*e*f - h + q/2*h^2) - (2*q*f*e + h + 1/2*h^2)",
                  comb_sub(dict(C), {
                      ("f", "e"): two * q, ("h",): one, ("h", "h"): one / two})))

    # the hyperbolic structure: x a = theta(a) x, y a = theta^{-1}(a) y,
    # x y = xi, y x = theta^{-1}(xi), with x = e, y = f
    theta = alg.theta
    suite.append(("x*h - theta(h)*x",
                  comb_sub({("e", "h"): one},
                           words_of_poly(theta.apply(alg.h, 1), ("e",)))))
    suite.append(("x*xi - theta(xi)*x",
                  comb_sub({("e", "e", "f"): one},
                           words_of_poly(theta.apply(alg.xi, 1), ("e",)))))
    suite.append(("y*h - theta^(-1)(h)*y",
                  comb_sub({("f", "h"): one},
                           words_of_poly(theta.apply(alg.h, -1), ("f",)))))
    suite.append(("y*xi - theta^(-1)(xi)*y",
                  comb_sub({("f", "e", "f"): one},
                           words_of_poly(theta.apply(alg.xi, -1), ("f",)))))
    suite.append(("x*y - xi",
                  comb_sub({("e", "f"): one}, words_of_poly(alg.xi))))
    suite.append(("y*x - theta^(-1)(xi)",
                  comb_sub({("f", "e"): one},
                           words_of_poly(theta.apply(alg.xi, -1)))))
    return suite


def verify_identities(alg: UqSL2 | None = None) -> IdentityReport:
    """Run the full identity suite through both normalizers."""
    alg = alg or UqSL2()
    report = IdentityReport()
    for name, comb in identity_suite(alg):
        gwa_res = alg.from_word(comb)
        pbw_res = alg.pbw_normal_form(dict(comb))
        report.results.append(IdentityResult(
            name=name,
            gwa_zero=gwa_res.is_zero(),
            pbw_zero=pbw_res.is_zero(),
            gwa_residual="" if gwa_res.is_zero() else str(gwa_res),
            pbw_residual="" if pbw_res.is_zero() else str(pbw_res),
        ))
    return report
