# -*- coding: utf-8 -*-
__author__ = "The fibriordan developers"
__license__ = "GPLv3"
__version__ = "1.0.0"

from .fps import (
    FPSError,
    ZeroConstantTerm,
    NonzeroInnerConstant,
    BadValuation,
    NonSquareConstant,
    InsufficientOrder,
    Series,
    Poly,
    parse_rational,
    rational_sqrt,
    series_linear,
    series_mul,
    series_inv,
    series_pow,
    series_compose,
    series_reversion,
    series_sqrt,
    series_deriv,
    log_deriv_factor,
    even_odd_split,
    series_stretch,
    series_mul_xpow,
    series_div_xpow,
    series_to_json,
    series_from_json,
    poly_to_json,
    poly_from_json,
)
from .report import CheckReport
from .riordan import (
    NotProper,
    BadConstantTerm,
    ExactMatrix,
    LowerMatrix,
    RiordanPair,
    make_pair,
    identity_pair,
    sign_involution,
    conjugate_by_M,
    pair_to_matrix,
    pair_mul,
    pair_inverse,
    pair_apply,
    row_gf,
    pascal_power,
    euler_transform,
    shift_polynomial,
    pseudo_eigen_check,
    companion_b,
    verify_theorem1,
)
from .polyfam import (
    UnsupportedIndex,
    DegreeTooHigh,
    Family,
    family_poly,
    family_gf,
    reverse_J,
    dickson_pair,
    family_row_check,
    root_form_check,
    trig_product_check,
    gf_identities_check,
)
from .transforms import (
    NonPolynomialResidue,
    TypeOneContext,
    TypeTwoContext,
    type1_context,
    type2_context,
    type1_cs,
    type1_closed_forms,
    type1_cs_check,
    type1_quadratic_check,
    catalan_series,
    catalan_power_check,
    type2_tu,
    type2_row_polys,
    type2_closed_forms,
    type2_tu_check,
    type2_quadratic_check,
    type2_parity_check,
    type2_root_check,
    type2_special_cases_check,
    type1_pseudo_involution_check,
    type2_pseudo_involution_check,
    type2_column_split_check,
)
from .fibbasis import (
    ParityViolation,
    BasisKind,
    BasisMatrix,
    build_basis,
    pairing,
    duality_check,
    row_formula,
    row_formula_check,
    apply_B,
    kernel_check,
    right_inverse_B,
    right_inverse_column,
    right_inverse_check,
    coordinates_in_B,
    example2_check,
    theorem4_check,
    algebraic_relations_check,
    example3_check,
    golden_ratio_check,
    signature_check,
)
from .parser import ParseError, parse_series_expr
from .suites import CHECK_MANIFEST, run_suites
