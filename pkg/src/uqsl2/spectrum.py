"""Classification of closed points (xi - alpha, h - beta) of Spec R.

The pullback action of theta on a point (alpha, beta) is

    (alpha, beta) -> (q alpha + q^2 beta + (q^2 - q^3)/4 beta^2 - (q+1),
                      q beta - 2),

and the point's type is decided by its vanishing set

    V = { n in Z : theta^n(xi)(alpha, beta) = 0 }.

V is computed exactly: theta^n(xi)(alpha, beta) expands as a quadratic
A t^2 + B t + C in t = q^n, whose roots in the coefficient field are found
and tested for being exact powers of q.  A bounded direct scan is run as a
redundant witness; the two must agree on the scanned range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import theta_h_value, theta_xi_value
from .qfield import Field, SymbolicField

POINT_TYPES = ("FiniteOrbitSpecial", "T11", "T1n", "T1Inf", "TInf1", "TInfInf")

DEFAULT_SCAN_BOUND = 64


class SpectrumError(Exception):
    """Base class for classification errors."""


class UnclassifiedPointError(SpectrumError):
    """The vanishing-set pattern matches none of the constructed point types.

    Such points are theta-orbit translates of classifiable points; shifting
    the point `shift` steps along the orbit yields a classifiable pattern.
    """

    def __init__(self, vanishing: tuple[int, ...], shift: int):
        self.vanishing = vanishing
        self.shift = shift
        super().__init__(
            f"vanishing set {sorted(vanishing)} matches no constructed point type; "
            f"the orbit translate by {shift} steps is classifiable"
        )


class SolverScanMismatch(SpectrumError):
    """Internal error: exact solver and bounded scan disagree."""


@dataclass(frozen=True)
class PointParams:
    """A closed point of Spec R over the given coefficient field."""

    alpha: object
    beta: object
    field: Field

    @property
    def mode(self) -> str:
        return "symbolic" if self.field.symbolic else "numeric"

    def as_pair(self):
        return (self.alpha, self.beta)

    def __str__(self) -> str:
        f = self.field
        return f"(alpha={f.to_text(self.alpha)}, beta={f.to_text(self.beta)}, q={f.describe_q()})"


@dataclass(frozen=True)
class PointType:
    """Classification outcome plus its machine-checkable certificate."""

    kind: str  # one of POINT_TYPES
    n: Optional[int]  # ladder length for T1n
    vanishing: tuple[int, ...]
    certificate: dict

    def to_json_dict(self) -> dict:
        out: dict = {"type": self.kind}
        if self.n is not None:
            out["n"] = self.n
        out["vanishing_set"] = list(self.vanishing)
        out["certificate"] = self.certificate
        return out


def special_point(field: Field) -> PointParams:
    """The unique finite-orbit point (-1/(q-1)^2, 2/(q-1))."""
    qm1 = field.q - field.one
    return PointParams(-field.one / (qm1 * qm1), field.scalar(2) / qm1, field)


def theta_on_point(p: PointParams) -> PointParams:
    """Pullback of the point along theta (evaluate the theta images at it)."""
    f = p.field
    q, one = f.q, f.one
    alpha = (q * p.alpha + q * q * p.beta
             + (q * q - q * q * q) / f.scalar(4) * p.beta * p.beta
             - (q + one))
    beta = q * p.beta - f.scalar(2)
    return PointParams(alpha, beta, f)


def theta_inv_on_point(p: PointParams) -> PointParams:
    """Pullback along theta^{-1}."""
    f = p.field
    q, one = f.q, f.one
    alpha = (p.alpha / q - p.beta / q
             - (one - q) / (f.scalar(4) * q) * p.beta * p.beta)
    beta = (p.beta + f.scalar(2)) / q
    return PointParams(alpha, beta, f)


def orbit_point(p: PointParams, n: int) -> PointParams:
    """theta^n pullback of the point, via the closed forms."""
    f = p.field
    return PointParams(theta_xi_value(f, n, p.alpha, p.beta),
                       theta_h_value(f, n, p.beta), f)


def eval_xi_shift(n: int, p: PointParams):
    """theta^n(xi) evaluated at the point; zero iff theta^n(xi) lies in it."""
    return theta_xi_value(p.field, n, p.alpha, p.beta)


def shift_quadratic(p: PointParams):
    """Coefficients (A, B, C) with theta^n(xi)(point) = A t^2 + B t + C, t = q^n."""
    f = p.field
    q, one = f.q, f.one
    four = f.scalar(4)
    qm1 = q - one
    qm1sq = qm1 * qm1
    beta2 = p.beta * p.beta
    A = -(q / four) * beta2 + q * p.beta / qm1 - q / qm1sq
    B = p.alpha + (q / four) * beta2 - q * p.beta / qm1 + (q + one) / qm1sq
    C = -one / qm1sq
    return A, B, C


def _solve_vanishing(p: PointParams) -> tuple[list[int], list]:
    """All n with theta^n(xi)(point) = 0, plus the field roots of the quadratic."""
    f = p.field
    A, B, C = shift_quadratic(p)
    roots = []
    if not A:
        if B:
            roots = [-C / B]
        # A = B = 0 leaves the nonzero constant C: no roots
    else:
        disc = B * B - f.scalar(4) * A * C
        sq = f.sqrt(disc)
        if sq is not None:
            two_a = f.scalar(2) * A
            roots = [(-B + sq) / two_a]
            other = (-B - sq) / two_a
            if other != roots[0]:
                roots.append(other)
    ns = []
    for t in roots:
        n = f.as_q_power(t)
        if n is not None:
            ns.append(n)
    return sorted(set(ns)), roots


def xi_vanishing_set(p: PointParams, scan_bound: int = DEFAULT_SCAN_BOUND) -> set[int]:
    """Complete vanishing set, solved exactly and reconciled with a bounded scan."""
    if scan_bound < 1:
        raise ValueError("scan_bound must be >= 1")
    solved, _ = _solve_vanishing(p)
    scanned = {n for n in range(-scan_bound, scan_bound + 1)
               if not eval_xi_shift(n, p)}
    in_range = {n for n in solved if abs(n) <= scan_bound}
    if in_range != scanned:
        raise SolverScanMismatch(
            f"exact solver found {sorted(in_range)} within |n| <= {scan_bound} "
            f"but the direct scan found {sorted(scanned)}"
        )
    return set(solved)


def _orbit_distinct_certificate(p: PointParams) -> dict:
    """Why theta^i(P) != P for all i != 0, decided exactly.

    With beta != 2/(q-1) the orbit beta-coordinates q^i beta - 2(q^i-1)/(q-1)
    are pairwise distinct (q is not a root of unity).  On the line
    beta = 2/(q-1) the alpha-coordinates follow
    alpha_i = q^i (alpha + 1/(q-1)^2) - 1/(q-1)^2, distinct unless the point
    is the finite-orbit special point.
    """
    f = p.field
    qm1 = f.q - f.one
    beta_fixed = f.scalar(2) / qm1
    if p.beta != beta_fixed:
        return {"orbit_distinct": True, "argument": "beta-coordinate"}
    alpha_special = -f.one / (qm1 * qm1)
    if p.alpha != alpha_special:
        return {"orbit_distinct": True, "argument": "alpha-coordinate"}
    return {"orbit_distinct": False, "argument": "fixed point"}


def _inequality_cross_check(p: PointParams, scan_bound: int) -> list[int]:
    """Scan-range check of the dense-type membership inequality.

    For each n, alpha must differ from
    q(q^n-1)/4 beta^2 - q(q^n-1)/(q-1) beta + (q^n-1)(q^(n+1)-1)/((q-1)^2 q^n),
    which is algebraically the same statement as theta^n(xi)(point) != 0.
    Returns the list of n violating it (expected empty for dense points).
    """
    f = p.field
    q, one = f.q, f.one
    four = f.scalar(4)
    qm1 = q - one
    flagged = []
    for n in range(-scan_bound, scan_bound + 1):
        t = f.q_pow(n)
        rhs = (q * (t - one) / four * p.beta * p.beta
               - q * (t - one) / qm1 * p.beta
               + (t - one) * (q * t - one) / (qm1 * qm1 * t))
        if p.alpha == rhs:
            flagged.append(n)
    return flagged


def classify(p: PointParams, scan_bound: int = DEFAULT_SCAN_BOUND) -> PointType:
    """Decide the point type of (xi - alpha, h - beta) from its vanishing set."""
    f = p.field
    special = special_point(f)
    if p.alpha == special.alpha and p.beta == special.beta:
        step = theta_on_point(p)
        return PointType(
            kind="FiniteOrbitSpecial", n=None, vanishing=(),
            certificate={
                "fixed_point": step.as_pair() == p.as_pair(),
                "alpha": f.to_text(p.alpha),
                "beta": f.to_text(p.beta),
            },
        )

    vanishing = xi_vanishing_set(p, scan_bound)
    vtuple = tuple(sorted(vanishing))
    _, roots = _solve_vanishing(p)
    cert: dict = {
        "vanishing_set": list(vtuple),
        "scan_bound": scan_bound,
        "scan_agrees": True,
        "quadratic_roots": [f.to_text(r) for r in roots],
    }

    if not vanishing:
        cert.update(_orbit_distinct_certificate(p))
        flagged = _inequality_cross_check(p, scan_bound)
        cert["membership_inequality_violations"] = flagged
        return PointType("TInfInf", None, vtuple, cert)

    if -1 in vanishing:
        nonneg = sorted(n for n in vanishing if n >= 0)
        if not nonneg:
            return PointType("T1Inf", None, vtuple, cert)
        n = nonneg[0]
        if n == 0:
            return PointType("T11", None, vtuple, cert)
        gap = [i for i in range(0, n) if i in vanishing]
        if gap:
            raise SolverScanMismatch(f"impossible vanishing pattern {vtuple}")
        cert["ladder_interior_nonzero"] = [
            f.to_text(eval_xi_shift(i, p)) for i in range(0, n)
        ]
        return PointType("T1n", n, vtuple, cert)

    if 0 in vanishing and all(n >= 0 for n in vanishing):
        return PointType("TInf1", None, vtuple, cert)

    # a theta-orbit translate of a classifiable point
    shift = min(vanishing) + 1 if len(vanishing) > 1 else min(vanishing)
    raise UnclassifiedPointError(vtuple, shift)


def finite_dim_params(s: Fraction | int | str, branch: int, field: Field) -> PointParams:
    """The point carrying the (2s+1)-dimensional module, for half-integer s > 0.

    alpha = (1 - q^(-2s))/(q - 1),  beta = 2 (1 + branch * q^(-s))/(q - 1),
    with branch in {+1, -1}.  Its vanishing set is {-1, 2s}.
    """
    s = Fraction(s)
    two_s = 2 * s
    if two_s.denominator != 1 or two_s <= 0:
        raise ValueError(f"s must be a positive half-integer, got {s}")
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    n = int(two_s)
    one = field.one
    qm1 = field.q - one
    alpha = (one - field.q_pow(-n)) / qm1
    q_minus_s = field.q_half_pow(-n)
    sign = one if branch == 1 else -one
    beta = field.scalar(2) * (one + sign * q_minus_s) / qm1
    return PointParams(alpha, beta, field)
