"""Apery resolutions of numerical semigroup rings."""
from .complexes import (
    BasisElement,
    FreeComplex,
    artinian_reduction,
    boundary_column,
    build_apery_complex,
    extraneous_binomials,
    i_generators,
    j_generators,
    koszul_complex,
    module_basis,
    rank_formula,
    regrade,
    rewrite_basis,
    sign_in,
    tensor,
)
from .errors import AperyError
from .kunz import FaceSignature, KunzPoint, face_signature, in_cone, kunz_point, same_face, signature_of
from .linalg import QQ, Field, parse_field
from .minimal import (
    BettiTable,
    betti_via_tor,
    is_minimal,
    koszul_relation_check,
    minimalize,
    pivot_uniformity_report,
    residue_class_sums,
)
from .oracle import (
    VerificationReport,
    all_normal_forms,
    check_artinian_reduction,
    check_complex,
    check_exactness_graded,
    check_generators,
    check_initial_ideal,
    euler_characteristic_check,
    normal_form,
)
from .ring import GradedMatrix, Polynomial, RingContext
from .semigroup import AperyTable, NumericalSemigroup, apery, apery_set, contains, from_generators, is_med

__version__ = "0.1.0"

__all__ = [
    "AperyError",
    "AperyTable",
    "BasisElement",
    "BettiTable",
    "FaceSignature",
    "Field",
    "FreeComplex",
    "GradedMatrix",
    "KunzPoint",
    "NumericalSemigroup",
    "Polynomial",
    "QQ",
    "RingContext",
    "VerificationReport",
    "all_normal_forms",
    "apery",
    "apery_set",
    "artinian_reduction",
    "betti_via_tor",
    "boundary_column",
    "build_apery_complex",
    "check_artinian_reduction",
    "check_complex",
    "check_exactness_graded",
    "check_generators",
    "check_initial_ideal",
    "contains",
    "euler_characteristic_check",
    "extraneous_binomials",
    "face_signature",
    "from_generators",
    "i_generators",
    "in_cone",
    "is_med",
    "is_minimal",
    "j_generators",
    "koszul_complex",
    "koszul_relation_check",
    "kunz_point",
    "minimalize",
    "module_basis",
    "normal_form",
    "parse_field",
    "pivot_uniformity_report",
    "rank_formula",
    "regrade",
    "residue_class_sums",
    "rewrite_basis",
    "same_face",
    "sign_in",
    "signature_of",
    "tensor",
]
