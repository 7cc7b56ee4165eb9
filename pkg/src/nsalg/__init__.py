"""Exact classification of numerical semigroup algebras.

Decides, for an extension semigroup over a coefficient semigroup on a
common variable, whether the algebra is flat, rectangular and a complete
intersection, with full witnesses and exact integer arithmetic throughout.
"""

from .algebra import (
    AlgebraPair,
    AperySet,
    DeltaSet,
    DoubleRepresentation,
    FlatnessVerdict,
    check_flat_intersection,
    check_flat_root,
    check_flat_two_gen,
    common_divisor_condition,
    make_pair,
)
from .classify import (
    CI,
    NOT_CI,
    UNKNOWN,
    BresinskyData,
    ClassificationReport,
    RectangleAnalysis,
    bresinsky_c,
    bresinsky_relation_search,
    classify,
    gluing_apery_product_check,
    gorenstein_indicator,
)
from .rectangle import (
    BetaMatrix,
    Rectangle,
    beta_matrix,
    det_and_adjugate,
    find_rectangles,
    is_nonsingular,
    lemma_matrix_check,
    triangular_permutation,
    triangularizable,
)
from .semigroup import NumericalSemigroup, free_exponents, glue, normalize

__version__ = "0.1.0"

__all__ = [
    "AlgebraPair",
    "AperySet",
    "BetaMatrix",
    "BresinskyData",
    "CI",
    "ClassificationReport",
    "DeltaSet",
    "DoubleRepresentation",
    "FlatnessVerdict",
    "NOT_CI",
    "NumericalSemigroup",
    "Rectangle",
    "RectangleAnalysis",
    "UNKNOWN",
    "beta_matrix",
    "bresinsky_c",
    "bresinsky_relation_search",
    "check_flat_intersection",
    "check_flat_root",
    "check_flat_two_gen",
    "classify",
    "common_divisor_condition",
    "det_and_adjugate",
    "find_rectangles",
    "free_exponents",
    "glue",
    "gluing_apery_product_check",
    "gorenstein_indicator",
    "is_nonsingular",
    "lemma_matrix_check",
    "make_pair",
    "normalize",
    "triangular_permutation",
    "triangularizable",
]
