"""Exact arithmetic for bubble skein expansions and colored Jones tails.

The layers, bottom up: exactpoly (integer Laurent polynomials and reduced
rational functions in A), quantum (quantum integers, loop values, Gaussian
binomials), series (truncated integer q-series), bubble (expansion
coefficients by three independent routes, theta values), tail (state sums,
Pochhammer identities, the 8_5 tail).  The `qskein` console script in cli
exposes all of it.
"""

from .errors import (ConstraintViolation, EmptyWindow, ExponentNotMultipleOf4,
                     InsufficientOrder, InvalidParams, NonUnitLeading,
                     NotDivisible, QSkeinError, ZeroDenominator, ZeroSeries)
from .exactpoly import LaurentPoly, RationalFn
from .quantum import (alpha, beta, delta, delta_product_identity, gauss_binom,
                      qint, qpoch_finite)
from .series import (TruncatedSeries, lp_to_series, qpoch_infinite,
                     rf_to_series, ts_doteq)
from .bubble import (BubbleParams, ExpansionTerm, bubble_coeff_closed,
                     bubble_coeff_quantum, bubble_coeff_recursive,
                     bubble_expand, theta)
from .tail import (MonomialComparison, StateSumValue, TailSeries,
                   mixed_bubble_poch_form, qint_product_identity,
                   reference_tail_coeffs, sb_state_sum,
                   square_bubble_poch_form, stabilization_check,
                   tail_85, tail_85_double_sum, tail_summand,
                   theta_poch_form, theta_value_identity)

__version__ = "0.1.0"

__all__ = [
    "QSkeinError", "NotDivisible", "ZeroDenominator", "InvalidParams",
    "ConstraintViolation", "EmptyWindow", "NonUnitLeading", "ZeroSeries",
    "InsufficientOrder", "ExponentNotMultipleOf4",
    "LaurentPoly", "RationalFn",
    "qint", "delta", "qpoch_finite", "gauss_binom",
    "delta_product_identity", "alpha", "beta",
    "TruncatedSeries", "ts_doteq", "qpoch_infinite", "lp_to_series",
    "rf_to_series",
    "BubbleParams", "ExpansionTerm", "bubble_coeff_closed",
    "bubble_coeff_recursive", "bubble_coeff_quantum", "bubble_expand",
    "theta",
    "StateSumValue", "TailSeries", "MonomialComparison", "sb_state_sum",
    "qint_product_identity", "square_bubble_poch_form",
    "mixed_bubble_poch_form", "theta_poch_form", "theta_value_identity",
    "tail_summand", "tail_85", "tail_85_double_sum", "stabilization_check",
    "reference_tail_coeffs",
    "__version__",
]
