"""Exact inverses of Hankel matrices of reciprocal generalized Catalan numbers."""

from .catbert import catbert_det_formula, catbert_inverse, catbert_matrix
from .exact import binom_rational, legendre_valuation, valuation
from .factorization import (
    build_K,
    build_L,
    build_M,
    build_N,
    det_inverse_formula,
    det_scaled_inverse_formula,
    factorize,
    inverse_via_LMK,
    scaled_inverse,
    three_term_coeffs,
)
from .matrices import ExactMatrix, det_oracle, hankel_G, invert_oracle, is_integer_matrix
from .params import CATBERT, GCParams, param_grid
from .sequences import catalan_numbers, gen_catalan

__version__ = "0.1.0"
