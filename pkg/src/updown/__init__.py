"""Exact up-down permutation numbers, the universal polynomial, and friends."""

from .compute import c_closed_form, c_recursion, c_triangle, even_rise_count, p_value, quadratic_check
from .exact_numbers import bernoulli, binomial, factorial, tangent_coeff
from .oracle import census, count_one
from .poly import LinearPolynomial, c_polynomial, evaluate, exp_star, gamma, phi, star_product
from .signatures import Composition, from_composition, signature_from_index, to_composition

__all__ = [
    "Composition",
    "LinearPolynomial",
    "bernoulli",
    "binomial",
    "c_closed_form",
    "c_polynomial",
    "c_recursion",
    "c_triangle",
    "census",
    "count_one",
    "evaluate",
    "even_rise_count",
    "exp_star",
    "factorial",
    "from_composition",
    "gamma",
    "p_value",
    "phi",
    "quadratic_check",
    "signature_from_index",
    "star_product",
    "tangent_coeff",
    "to_composition",
]

__version__ = "0.1.0"
