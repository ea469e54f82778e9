"""Representations attached to classified points, with exact certificates.

Finite types (T11, T1n) become dense matrix representations on the basis
v_0, ..., v_n (images of 1, y, ..., y^n); infinite types become weight
modules materialized on a finite index window.  The ladder data is

    f: u_m -> fcoef(m) u_{m+1},   e: u_m -> ecoef(m) u_{m-1},
    h: u_m -> weight(m) u_m,      weight(m) = theta^m(h)(beta),

with structure constants read off the rewriting rules of the hyperbolic
algebra, so check_relations certifies the construction after the fact.
All checks are exact; failures return residuals rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .algebra import theta_h_value
from .qfield import Field
from .spectrum import (
    DEFAULT_SCAN_BOUND,
    PointParams,
    PointType,
    classify,
    eval_xi_shift,
)

DEFAULT_WINDOW = 200

KIND_FOR_TYPE = {"T1Inf": "highest", "TInf1": "lowest", "TInfInf": "dense"}


class WrongPointTypeError(ValueError):
    """The point's classification does not support the requested module."""

    def __init__(self, wanted: str, got: PointType):
        self.classification = got
        super().__init__(f"expected a {wanted} point, classification is {got.kind}")


Matrix = list[list]


def _zeros(dim: int, field: Field) -> Matrix:
    return [[field.zero for _ in range(dim)] for _ in range(dim)]


def mat_mul(a: Matrix, b: Matrix, field: Field) -> Matrix:
    dim = len(a)
    out = _zeros(dim, field)
    for i in range(dim):
        arow = a[i]
        orow = out[i]
        for k in range(dim):
            aik = arow[k]
            if not aik:
                continue
            brow = b[k]
            for j in range(dim):
                if brow[j]:
                    orow[j] = orow[j] + aik * brow[j]
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


@dataclass(frozen=True)
class MatrixRep:
    """Finite-dimensional representation: exact matrices for e, f, h."""

    dim: int
    E: tuple
    F: tuple
    H: tuple
    point: Optional[PointParams]
    field: Field

    def matrices(self) -> dict[str, Matrix]:
        return {"E": [list(r) for r in self.E],
                "F": [list(r) for r in self.F],
                "H": [list(r) for r in self.H]}


@dataclass(frozen=True)
class WeightModule:
    """Weight module on the index window [lo, hi] (inclusive)."""

    kind: str  # highest | lowest | dense
    lo: int
    hi: int
    weights: dict
    fcoef: dict
    ecoef: dict
    point: PointParams
    field: Field

    @property
    def window(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)


@dataclass
class RelationReport:
    """Outcome of the exact relation check; falsy when any residual is nonzero."""

    ok: bool
    residuals: list = dc_field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class IrreducibilityCertificate:
    """Per-method evidence; `witness` carries a proper invariant subspace on failure."""

    irreducible: bool
    methods: dict
    witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.irreducible


def _freeze(m: Matrix) -> tuple:
    return tuple(tuple(row) for row in m)


def build_finite(p: PointParams, scan_bound: int = DEFAULT_SCAN_BOUND,
                 classification: Optional[PointType] = None) -> MatrixRep:
    """Matrix representation for a T11/T1n point on the basis 1, y, ..., y^n.

    F v_k = v_{k+1} (F v_n = 0), E v_k = theta^{k-1}(xi)(point) v_{k-1}
    (E v_0 = 0), H v_k = theta^k(h)(beta) v_k.
    """
    cls = classification or classify(p, scan_bound)
    if cls.kind not in ("T11", "T1n"):
        raise WrongPointTypeError("T11 or T1n", cls)
    n = cls.n or 0
    dim = n + 1
    f = p.field
    E, F, H = _zeros(dim, f), _zeros(dim, f), _zeros(dim, f)
    for k in range(dim):
        H[k][k] = theta_h_value(f, k, p.beta)
    for k in range(dim - 1):
        F[k + 1][k] = f.one
    for k in range(1, dim):
        E[k - 1][k] = eval_xi_shift(k - 1, p)
    return MatrixRep(dim, _freeze(E), _freeze(F), _freeze(H), p, f)


def build_weight_module(p: PointParams, kind: str,
                        window_size: int = DEFAULT_WINDOW,
                        scan_bound: int = DEFAULT_SCAN_BOUND,
                        classification: Optional[PointType] = None) -> WeightModule:
    """Windowed weight module for a T1Inf (highest), TInf1 (lowest) or
    TInfInf (dense) point.

    Windows: highest [0, N], lowest [-N, 0], dense [-N, N].  The uniform
    ladder rule is fcoef(m) = 1 for m >= 0 and theta^m(xi)(point) for m < 0;
    ecoef(m) = theta^(m-1)(xi)(point) for m >= 1 and 1 for m <= 0 — except
    that crossing the quotient boundary gives 0 (ecoef(0) for highest,
    fcoef(0) for lowest, where it equals the vanishing structure constant).
    """
    if window_size < 1:
        raise ValueError("window_size must be >= 1")
    cls = classification or classify(p, scan_bound)
    expected = KIND_FOR_TYPE.get(cls.kind)
    if expected is None:
        raise WrongPointTypeError("T1Inf, TInf1 or TInfInf", cls)
    if kind != expected:
        raise WrongPointTypeError(f"point of kind {kind!r}", cls)

    f = p.field
    if kind == "highest":
        lo, hi = 0, window_size
    elif kind == "lowest":
        lo, hi = -window_size, 0
    else:
        lo, hi = -window_size, window_size

    weights = {m: theta_h_value(f, m, p.beta) for m in range(lo, hi + 1)}
    fcoef: dict = {}
    ecoef: dict = {}
    for m in range(lo, hi + 1):
        if kind == "highest":
            fcoef[m] = f.one
            ecoef[m] = f.zero if m == 0 else eval_xi_shift(m - 1, p)
        elif kind == "lowest":
            ecoef[m] = f.one
            fcoef[m] = eval_xi_shift(m, p)
        else:
            fcoef[m] = f.one if m >= 0 else eval_xi_shift(m, p)
            ecoef[m] = f.one if m <= 0 else eval_xi_shift(m - 1, p)
    return WeightModule(kind, lo, hi, weights, fcoef, ecoef, p, f)


def check_relations(rep) -> RelationReport:
    """Exact check of the three defining relations on a representation.

    For weight modules each relation is checked on every basis vector whose
    required neighbors lie inside the window.
    """
    if isinstance(rep, MatrixRep):
        return _check_relations_matrix(rep)
    return _check_relations_weight(rep)


def _check_relations_matrix(rep: MatrixRep) -> RelationReport:
    f = rep.field
    q = f.q
    E, F, H = rep.matrices().values()
    two = f.scalar(2)
    quarter = (f.one - q) / f.scalar(4)
    r1 = mat_sub(mat_sub(mat_scale(q, mat_mul(H, E, f)), mat_mul(E, H, f)),
                 mat_scale(two, E))
    r2 = mat_add(mat_sub(mat_mul(H, F, f), mat_scale(q, mat_mul(F, H, f))),
                 mat_scale(two, F))
    rhs = mat_add(H, mat_scale(quarter, mat_mul(H, H, f)))
    r3 = mat_sub(mat_sub(mat_mul(E, F, f), mat_scale(q, mat_mul(F, E, f))), rhs)
    residuals = []
    for name, r in (("q*H*E - E*H - 2*E", r1),
                    ("H*F - q*F*H + 2*F", r2),
                    ("E*F - q*F*E - H - (1-q)/4*H^2", r3)):
        if not mat_is_zero(r):
            residuals.append({
                "relation": name,
                "residual": [[f.to_text(x) for x in row] for row in r],
            })
    return RelationReport(not residuals, residuals)


def _check_relations_weight(mod: WeightModule) -> RelationReport:
    f = mod.field
    q = f.q
    two = f.scalar(2)
    quarter = (f.one - q) / f.scalar(4)
    residuals = []
    for m in mod.indices():
        w = mod.weights[m]
        if m - 1 >= mod.lo:
            r = mod.ecoef[m] * (q * mod.weights[m - 1] - w - two)
            if r:
                residuals.append({"relation": "q*h*e - e*h - 2*e", "index": m,
                                  "residual": f.to_text(r)})
        if m + 1 <= mod.hi:
            r = mod.fcoef[m] * (mod.weights[m + 1] - q * w + two)
            if r:
                residuals.append({"relation": "h*f - q*f*h + 2*f", "index": m,
                                  "residual": f.to_text(r)})
        if m - 1 >= mod.lo and m + 1 <= mod.hi:
            r = (mod.fcoef[m] * mod.ecoef[m + 1]
                 - q * mod.ecoef[m] * mod.fcoef[m - 1]
                 - w - quarter * w * w)
            if r:
                residuals.append({"relation": "e*f - q*f*e - h - (1-q)/4*h^2",
                                  "index": m, "residual": f.to_text(r)})
    return RelationReport(not residuals, residuals)


def _row_reduce_insert(rows: list[list], vec: list, field: Field) -> bool:
    """Reduce vec against the row basis (kept in echelon form); insert if new.

    Returns True when vec enlarged the span.  Exact arithmetic throughout.
    """
    v = list(vec)
    dim = len(v)
    for row in rows:
        pivot = next(i for i, x in enumerate(row) if x)
        if v[pivot]:
            c = v[pivot] / row[pivot]
            v = [a - c * b for a, b in zip(v, row)]
    lead = next((i for i, x in enumerate(v) if x), None)
    if lead is None:
        return False
    rows.append(v)
    rows.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
    return True


def _closure_of(seed: int, rep: MatrixRep) -> list[list]:
    """Row basis of the smallest E/F/H-invariant subspace containing v_seed."""
    f = rep.field
    mats = [rep.E, rep.F, rep.H]
    start = [f.zero] * rep.dim
    start[seed] = f.one
    rows: list[list] = []
    queue = [start]
    _row_reduce_insert(rows, start, f)
    while queue:
        v = queue.pop()
        for m in mats:
            image = [sum((m[i][j] * v[j] for j in range(rep.dim) if v[j]),
                         start=f.zero) for i in range(rep.dim)]
            if any(image) and _row_reduce_insert(rows, image, f):
                queue.append(image)
    return rows


def _ladder_shape_ok(rep: MatrixRep) -> bool:
    """True when E is strictly superdiagonal, F strictly subdiagonal, H diagonal."""
    for i in range(rep.dim):
        for j in range(rep.dim):
            if rep.E[i][j] and j != i + 1:
                return False
            if rep.F[i][j] and j != i - 1:
                return False
            if rep.H[i][j] and j != i:
                return False
    return True


def check_irreducible(rep) -> IrreducibilityCertificate:
    """Certify (ir)reducibility.

    MatrixRep: the generation method (every standard basis vector generates
    the whole space, by exact closure/rank) always runs; the ladder method
    (all adjacent structure constants nonzero) runs when the matrices have
    ladder shape, and the two must agree.  WeightModule: ladder method on
    the window, boundary pattern respected, plus the exact vanishing-set
    statement carried by the classification.
    """
    if isinstance(rep, MatrixRep):
        return _check_irreducible_matrix(rep)
    return _check_irreducible_weight(rep)


def _check_irreducible_matrix(rep: MatrixRep) -> IrreducibilityCertificate:
    f = rep.field
    closure_dims = []
    witness = None
    for seed in range(rep.dim):
        rows = _closure_of(seed, rep)
        closure_dims.append(len(rows))
        if witness is None and len(rows) < rep.dim:
            witness = {
                "seed": seed,
                "subspace_dim": len(rows),
                "dim": rep.dim,
                "subspace_basis": [[f.to_text(x) for x in row] for row in rows],
            }
    generation_ok = all(d == rep.dim for d in closure_dims)
    methods = {"generation": {"ok": generation_ok, "closure_dims": closure_dims}}

    if _ladder_shape_ok(rep):
        e_consts = [rep.E[k - 1][k] for k in range(1, rep.dim)]
        f_consts = [rep.F[k + 1][k] for k in range(rep.dim - 1)]
        ladder_ok = all(bool(c) for c in e_consts) and all(bool(c) for c in f_consts)
        methods["ladder"] = {
            "ok": ladder_ok,
            "e_constants": [f.to_text(c) for c in e_consts],
            "f_constants": [f.to_text(c) for c in f_consts],
        }
        if ladder_ok != generation_ok:
            raise RuntimeError(
                "irreducibility methods disagree: "
                f"generation={generation_ok} ladder={ladder_ok}"
            )
    return IrreducibilityCertificate(generation_ok, methods, witness)


def _check_irreducible_weight(mod: WeightModule) -> IrreducibilityCertificate:
    f = mod.field
    breaks = []
    if mod.kind == "highest":
        f_range = range(mod.lo, mod.hi)          # fcoef feeding m+1
        e_range = range(mod.lo + 1, mod.hi + 1)  # ecoef feeding m-1
    elif mod.kind == "lowest":
        f_range = range(mod.lo, mod.hi)          # fcoef(0) = 0 is the boundary
        e_range = range(mod.lo + 1, mod.hi + 1)
    else:
        f_range = range(mod.lo, mod.hi)
        e_range = range(mod.lo + 1, mod.hi + 1)
    for m in f_range:
        if not mod.fcoef[m]:
            breaks.append({"coef": "f", "index": m})
    for m in e_range:
        if not mod.ecoef[m]:
            breaks.append({"coef": "e", "index": m})
    ok = not breaks
    methods = {"ladder": {"ok": ok, "window": [mod.lo, mod.hi],
                          "breaks": breaks}}
    witness = None
    if breaks:
        witness = {"ladder_breaks": breaks}
    return IrreducibilityCertificate(ok, methods, witness)


def casimir_scalar_at_origin(p: PointParams):
    """C = 2 xi - h + (q/2) h^2 evaluated at the point."""
    f = p.field
    return (f.scalar(2) * p.alpha - p.beta
            + f.q / f.scalar(2) * p.beta * p.beta)


def casimir_action(rep, m: int):
    """Scalar action of the Casimir on u_m: q^m (2 alpha - beta + (q/2) beta^2)."""
    point = rep.point
    if point is None:
        raise ValueError("representation carries no point data")
    return point.field.q_pow(m) * casimir_scalar_at_origin(point)


def casimir_direct(rep, m: int):
    """Casimir scalar on u_m by direct application of 2 e f - h + (q/2) h^2.

    For weight modules this needs u_{m+1} inside the window; returns None
    at the boundary.  For matrices the full matrix is formed and must be
    diagonal at position m.
    """
    f = rep.field
    q = f.q
    if isinstance(rep, MatrixRep):
        E, F, H = rep.matrices().values()
        C = mat_add(mat_sub(mat_scale(f.scalar(2), mat_mul(E, F, f)), H),
                    mat_scale(q / f.scalar(2), mat_mul(H, H, f)))
        for j in range(rep.dim):
            if j != m and C[m][j]:
                raise RuntimeError("Casimir matrix is not diagonal")
        return C[m][m]
    if m + 1 > rep.hi:
        return None
    w = rep.weights[m]
    return (f.scalar(2) * rep.fcoef[m] * rep.ecoef[m + 1]
            - w + q / f.scalar(2) * w * w)


def matrix_rep_to_json(rep: MatrixRep) -> dict:
    f = rep.field
    return {
        "kind": "finite",
        "dim": rep.dim,
        "weights": [f.to_text(rep.H[k][k]) for k in range(rep.dim)],
        "E": [[f.to_text(x) for x in row] for row in rep.E],
        "F": [[f.to_text(x) for x in row] for row in rep.F],
        "H": [[f.to_text(x) for x in row] for row in rep.H],
        "casimir_scalar": f.to_text(casimir_scalar_at_origin(rep.point))
        if rep.point else None,
    }


def weight_module_to_json(mod: WeightModule) -> dict:
    f = mod.field
    idx = list(mod.indices())
    return {
        "kind": mod.kind,
        "window": [mod.lo, mod.hi],
        "indices": idx,
        "weights": [f.to_text(mod.weights[m]) for m in idx],
        "fcoef": [f.to_text(mod.fcoef[m]) for m in idx],
        "ecoef": [f.to_text(mod.ecoef[m]) for m in idx],
        "casimir_scalar": f.to_text(casimir_scalar_at_origin(mod.point)),
    }


def matrix_rep_from_json(doc: dict, point: Optional[PointParams], field: Field) -> MatrixRep:
    from .parser import parse_scalar

    def mat(rows):
        return _freeze([[parse_scalar(x, field) for x in row] for row in rows])

    return MatrixRep(doc["dim"], mat(doc["E"]), mat(doc["F"]), mat(doc["H"]),
                     point, field)


def weight_module_from_json(doc: dict, point: PointParams, field: Field) -> WeightModule:
    from .parser import parse_scalar

    lo, hi = doc["window"]
    idx = range(lo, hi + 1)
    weights = {m: parse_scalar(s, field) for m, s in zip(idx, doc["weights"])}
    fcoef = {m: parse_scalar(s, field) for m, s in zip(idx, doc["fcoef"])}
    ecoef = {m: parse_scalar(s, field) for m, s in zip(idx, doc["ecoef"])}
    return WeightModule(doc["kind"], lo, hi, weights, fcoef, ecoef, point, field)
