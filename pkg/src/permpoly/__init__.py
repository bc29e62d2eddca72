"""Transposition polynomials over finite fields, permutation-polynomial
lifting to finite local rings, and the groups of polynomial permutations."""

from .errors import (
    CongruentPoints,
    EqualPoints,
    FieldTooSmall,
    GNotUnitValued,
    MixedRings,
    NonPrimeCharacteristic,
    NonUnitInverse,
    NotAField,
    NotBijective,
    NotLocalRing,
    NotPrimeField,
    PermPolyError,
    ReducibleModulus,
    ResidueFieldTooSmall,
    ResidueNotPermutation,
    RingSpecError,
    RingTooLarge,
    TrivialIdeal,
    ZeroPoint,
)
from .experiment import ExperimentReport, SamplingConfig, question_experiment
from .lifting import (
    CriterionReport,
    brute_force_is_permutation,
    corollary_h,
    lift_poly,
    noebauer_is_permutation,
    proposition_h,
    residue_poly,
    transposition_poly_over_ring,
    unit_valued_witness,
)
from .permutations import (
    GroupClosure,
    PermutationTable,
    all_polynomial_functions,
    generated_subgroup,
    polynomial_permutation_group,
)
from .polys import (
    FunctionTable,
    Polynomial,
    function_table,
    poly_from_json,
    poly_str,
    poly_to_json,
    reduce_canonical,
)
from .rings import (
    Element,
    FiniteField,
    LocalRing,
    Ring,
    TruncatedPolynomialRing,
    ZModRing,
    make_field,
    make_fqu,
    make_zmod,
    parse_ring,
)
from .transpositions import (
    VerificationReport,
    base_transposition,
    carlitz_poly,
    carlitz_table,
    martin_poly,
    martin_poly_ab,
    ones_poly,
    transposition_poly,
    verify_transposition,
)

__version__ = "0.1.0"

__all__ = [
    "CongruentPoints",
    "CriterionReport",
    "Element",
    "EqualPoints",
    "ExperimentReport",
    "FieldTooSmall",
    "FiniteField",
    "FunctionTable",
    "GNotUnitValued",
    "GroupClosure",
    "LocalRing",
    "MixedRings",
    "NonPrimeCharacteristic",
    "NonUnitInverse",
    "NotAField",
    "NotBijective",
    "NotLocalRing",
    "NotPrimeField",
    "PermPolyError",
    "PermutationTable",
    "Polynomial",
    "ReducibleModulus",
    "ResidueFieldTooSmall",
    "ResidueNotPermutation",
    "Ring",
    "RingSpecError",
    "RingTooLarge",
    "SamplingConfig",
    "TrivialIdeal",
    "TruncatedPolynomialRing",
    "VerificationReport",
    "ZModRing",
    "ZeroPoint",
    "all_polynomial_functions",
    "base_transposition",
    "brute_force_is_permutation",
    "carlitz_poly",
    "carlitz_table",
    "corollary_h",
    "function_table",
    "generated_subgroup",
    "lift_poly",
    "make_field",
    "make_fqu",
    "make_zmod",
    "martin_poly",
    "martin_poly_ab",
    "noebauer_is_permutation",
    "ones_poly",
    "parse_ring",
    "poly_from_json",
    "poly_str",
    "poly_to_json",
    "polynomial_permutation_group",
    "proposition_h",
    "question_experiment",
    "reduce_canonical",
    "residue_poly",
    "transposition_poly",
    "transposition_poly_over_ring",
    "unit_valued_witness",
    "verify_transposition",
]
