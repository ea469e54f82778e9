"""Exact computer algebra for a hyperbolic-algebra deformation of U(sl2).

The library verifies the algebra's defining and structural identities with
two independent normalizers, classifies closed points of the base-ring
spectrum into left-spectrum point types, and constructs the attached
irreducible weight representations (exact matrices for the finite types,
windowed ladder modules for the infinite ones) together with
machine-checkable certificates.
"""

from .algebra import UqSL2, theta_h_value, theta_xi_value
from .gwa import Automorphism, GwaElement, HyperbolicAlgebra
from .parser import FieldParseError, parse_scalar
from .pbw import FreeWord, PbwForm, PbwRewriter
from .qfield import (
    BiPoly,
    NumericField,
    RatFunc,
    SymbolicField,
    UniPoly,
    is_power_of_q,
)
from .reps import (
    IrreducibilityCertificate,
    MatrixRep,
    RelationReport,
    WeightModule,
    build_finite,
    build_weight_module,
    casimir_action,
    casimir_direct,
    check_irreducible,
    check_relations,
)
from .spectrum import (
    PointParams,
    PointType,
    UnclassifiedPointError,
    classify,
    eval_xi_shift,
    finite_dim_params,
    orbit_point,
    special_point,
    theta_on_point,
    xi_vanishing_set,
)
from .verify import IdentityReport, verify_identities

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "BiPoly",
    "FieldParseError",
    "FreeWord",
    "GwaElement",
    "HyperbolicAlgebra",
    "IdentityReport",
    "IrreducibilityCertificate",
    "MatrixRep",
    "NumericField",
    "PbwForm",
    "PbwRewriter",
    "PointParams",
    "PointType",
    "RatFunc",
    "RelationReport",
    "SymbolicField",
    "UniPoly",
    "UnclassifiedPointError",
    "UqSL2",
    "WeightModule",
    "build_finite",
    "build_weight_module",
    "casimir_action",
    "casimir_direct",
    "check_irreducible",
    "check_relations",
    "classify",
    "eval_xi_shift",
    "finite_dim_params",
    "is_power_of_q",
    "orbit_point",
    "parse_scalar",
    "special_point",
    "theta_h_value",
    "theta_on_point",
    "theta_xi_value",
    "verify_identities",
    "xi_vanishing_set",
    "__version__",
]
