"""Exact verification of Landen's series transformation and certified ellipse perimeters."""

from .ellipse import compare_convergence, params_from_axes, perimeter_ivory, perimeter_maclaurin, pi_approx
from .exact import Rational, binom, gen_binom
from .fps import TruncatedSeries, binomial_series
from .landen import verify_step1, verify_step2, verify_theorem1

__all__ = [
    "Rational",
    "binom",
    "gen_binom",
    "TruncatedSeries",
    "binomial_series",
    "verify_step1",
    "verify_step2",
    "verify_theorem1",
    "params_from_axes",
    "pi_approx",
    "perimeter_maclaurin",
    "perimeter_ivory",
    "compare_convergence",
]
