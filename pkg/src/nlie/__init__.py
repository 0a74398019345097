"""Exact arithmetic for metric n-Lie (Filippov) algebras over the rationals."""

from .algebra import (
    Algebra,
    ViolationReport,
    Witness,
    bracket,
    bracket_span,
    center,
    centralizer,
    check_fundamental_identity,
    derived_algebra,
    derived_series,
    direct_sum,
    in_basis,
    is_abelian_ideal,
    is_ideal,
    is_perfect,
    is_solvable,
    is_subalgebra,
    quotient_algebra,
    restrict,
)
from .catalog import (
    FamilyParams,
    build,
    build_abelian,
    build_case1,
    build_case2,
    build_case3,
    build_g0,
    build_simple,
    ortho_direct_sum,
)
from .classify import ClassificationReport, Profile, classify, profile
from .errors import (
    ClassificationInconsistency,
    DimensionMismatch,
    NLieError,
    NotAnIdeal,
    NotASubalgebra,
    NotIsotropic,
    ParameterError,
    ParseError,
    VerificationError,
)
from .fileio import algebra_from_dict, algebra_to_dict, load_algebra, save_algebra
from .kernels import HAVE_EXTENSION
from .linalg import Mat, Subspace, annihilator, complement, intersect, span, sum_
from .metric import (
    Form,
    LeviAnnotation,
    LeviReport,
    MetricAlgebra,
    Status,
    check_all,
    check_invariance,
    check_nondegeneracy,
    check_symmetry,
    dual_isotropic_basis,
    invariant_form_space,
    is_isotropic,
    metric_quotient,
    orthogonal_complement,
    ortho_split,
    reduce_by_center,
    verify,
    verify_levi,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "algebra_from_dict",
    "algebra_to_dict",
    "annihilator",
    "bracket",
    "bracket_span",
    "build",
    "build_abelian",
    "build_case1",
    "build_case2",
    "build_case3",
    "build_g0",
    "build_simple",
    "center",
    "centralizer",
    "check_all",
    "check_fundamental_identity",
    "check_invariance",
    "check_nondegeneracy",
    "check_symmetry",
    "ClassificationInconsistency",
    "ClassificationReport",
    "classify",
    "complement",
    "derived_algebra",
    "derived_series",
    "DimensionMismatch",
    "direct_sum",
    "dual_isotropic_basis",
    "FamilyParams",
    "Form",
    "HAVE_EXTENSION",
    "in_basis",
    "intersect",
    "invariant_form_space",
    "is_abelian_ideal",
    "is_ideal",
    "is_isotropic",
    "is_perfect",
    "is_solvable",
    "is_subalgebra",
    "LeviAnnotation",
    "LeviReport",
    "load_algebra",
    "Mat",
    "metric_quotient",
    "MetricAlgebra",
    "NLieError",
    "NotAnIdeal",
    "NotASubalgebra",
    "NotIsotropic",
    "ortho_direct_sum",
    "ortho_split",
    "orthogonal_complement",
    "ParameterError",
    "ParseError",
    "Profile",
    "profile",
    "quotient_algebra",
    "reduce_by_center",
    "restrict",
    "save_algebra",
    "span",
    "Status",
    "Subspace",
    "sum_",
    "VerificationError",
    "verify",
    "verify_levi",
    "ViolationReport",
    "Witness",
]
