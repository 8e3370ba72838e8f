"""Exact arithmetic for LR-algebras and the Lie algebras that carry them.

An LR-algebra is a bilinear product whose left multiplications commute
with each other and whose right multiplications commute with each other.
An LR-structure on a Lie algebra is such a product with product minus
opposite product equal to the bracket.  Everything here runs over the
rationals with no floating point anywhere: structure constants,
characteristic series, verification of the axioms and of a battery of
derived identities, catalogued classifications in low dimensions,
explicit constructions, extension theory, and polynomial constraint
systems that decide whether a given Lie algebra admits such a product.
"""

from .linalg import (
    QQ,
    DimensionMismatch,
    Matrix,
    Subspace,
    Vector,
    matrix_is_nilpotent,
    nullspace,
    rref,
)
from .lie import (
    AntisymmetryConflict,
    JacobiViolation,
    LieAlgebra,
    LieError,
    SeriesReport,
    abelian_lie,
    bracket_subspaces,
    classify_solvability,
    derived_series,
    direct_sum_with_abelian,
    is_two_step_solvable,
    lie_from_table,
    lower_central_series,
    quotient_by_ideal,
    upper_central_series,
)
from .lr import (
    CompatViolation,
    LR1Violation,
    LR2Violation,
    LRAlgebra,
    LRError,
    VerificationReport,
    Violation,
    is_complete,
    lemma_suite,
    lr_from_table,
    verify_axioms,
)
from .constructions import (
    FiliformSpec,
    NotTwoStepNilpotent,
    SpecViolation,
    filiform_lie,
    filiform_lr,
    free3_dimension,
    free3_lie,
    free3_lr,
    free4_two_gen_lie,
    free4_two_gen_lr,
    free_two_step_lie,
    halved_adjoint_lr,
)
from .extensions import (
    ExtensionData,
    ExtensionError,
    HypothesisFailed,
    LiftConditionsFailed,
    LiftData,
    NotAbelian,
    NotInvertible,
    extension_lie_algebra,
    invertible_generator_lift,
    lift_product,
    random_abelian_extension,
    semidirect_lr,
    validate_extension,
    verify_lift_conditions,
)
from .catalog import (
    CatalogEntry,
    ParamOutOfDomain,
    UnknownName,
    catalog_entry,
    catalog_get,
    catalog_list,
    catalog_verify,
    counterexample_g13,
    expand_keys,
    lie_n3,
    lie_n3_plus_line,
    lie_n4,
    lie_r2,
)
from .poly import (
    GroebnerResult,
    MissingAssignment,
    Polynomial,
    groebner_basis,
    reduce_full,
    s_polynomial,
)
from .constraints import (
    CertifyResult,
    ConstraintSystem,
    IncompleteAssignment,
    IsoResult,
    ReducedSystem,
    assignment_from_lr,
    buchberger_certify,
    evaluate_candidate,
    generate_lr_system,
    iso_search,
    lr_fingerprint,
    structural_reduce,
)
from .fileformat import (
    AlgebraFile,
    MissingSection,
    ParseError,
    SystemFile,
    format_algebra,
    format_extension,
    format_system,
    parse_algebra_file,
    parse_algebra_text,
    parse_extension_file,
    parse_extension_text,
    parse_system_file,
    parse_system_text,
)

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "DimensionMismatch",
    "Matrix",
    "Subspace",
    "Vector",
    "matrix_is_nilpotent",
    "nullspace",
    "rref",
    "AntisymmetryConflict",
    "JacobiViolation",
    "LieAlgebra",
    "LieError",
    "SeriesReport",
    "abelian_lie",
    "bracket_subspaces",
    "classify_solvability",
    "derived_series",
    "direct_sum_with_abelian",
    "is_two_step_solvable",
    "lie_from_table",
    "lower_central_series",
    "quotient_by_ideal",
    "upper_central_series",
    "CompatViolation",
    "LR1Violation",
    "LR2Violation",
    "LRAlgebra",
    "LRError",
    "VerificationReport",
    "Violation",
    "is_complete",
    "lemma_suite",
    "lr_from_table",
    "verify_axioms",
    "FiliformSpec",
    "NotTwoStepNilpotent",
    "SpecViolation",
    "filiform_lie",
    "filiform_lr",
    "free3_dimension",
    "free3_lie",
    "free3_lr",
    "free4_two_gen_lie",
    "free4_two_gen_lr",
    "free_two_step_lie",
    "halved_adjoint_lr",
    "ExtensionData",
    "ExtensionError",
    "HypothesisFailed",
    "LiftConditionsFailed",
    "LiftData",
    "NotAbelian",
    "NotInvertible",
    "extension_lie_algebra",
    "invertible_generator_lift",
    "lift_product",
    "random_abelian_extension",
    "semidirect_lr",
    "validate_extension",
    "verify_lift_conditions",
    "CatalogEntry",
    "ParamOutOfDomain",
    "UnknownName",
    "catalog_entry",
    "catalog_get",
    "catalog_list",
    "catalog_verify",
    "counterexample_g13",
    "expand_keys",
    "lie_n3",
    "lie_n3_plus_line",
    "lie_n4",
    "lie_r2",
    "GroebnerResult",
    "MissingAssignment",
    "Polynomial",
    "groebner_basis",
    "reduce_full",
    "s_polynomial",
    "CertifyResult",
    "ConstraintSystem",
    "IncompleteAssignment",
    "IsoResult",
    "ReducedSystem",
    "assignment_from_lr",
    "buchberger_certify",
    "evaluate_candidate",
    "generate_lr_system",
    "iso_search",
    "lr_fingerprint",
    "structural_reduce",
    "AlgebraFile",
    "MissingSection",
    "ParseError",
    "SystemFile",
    "format_algebra",
    "format_extension",
    "format_system",
    "parse_algebra_file",
    "parse_algebra_text",
    "parse_extension_file",
    "parse_extension_text",
    "parse_system_file",
    "parse_system_text",
]
