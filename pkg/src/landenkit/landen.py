"""Coefficient-level verification of Landen's transformation.

Three coefficient families appear in the proof:

* Maclaurin ``c_m = -1/(2m-1) [C(2m,m)/4^m]^2`` (the series in e^2),
* Ivory ``I_n = [C(2n,n) / (4^n (2n-1))]^2`` (the series in x),
* intermediate ``g_m = -1/(4m-1) [C(4m,2m)/4^(2m)] [C(2m,m)/4^m]``, the series
  in ``(2 sqrt(x) / (1+x))^2``, which sits between the two.

All comparisons happen in ``u = x^(1/4)``, or in ``v = sqrt(x)`` for the
second step. Passing from one variable to another is an exact
:func:`~landenkit.fps.stretch`.

* ``lhs(u) = (1+u^2) sum_m c_m (2u/(1+u^2))^(2m)``
* ``mid(v) = (1+v^2)^(1/2) sum_m g_m (2v/(1+v^2))^(2m)``
* ``rhs(x) = sum_n I_n x^n``

The first step shows lhs(u) = mid(u^2), the second shows mid(v) = rhs(v^2), and
the theorem itself is lhs(u) = rhs(u^4).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .exact import binom, gen_binom
from .fps import TruncatedSeries, binomial_series, mul, scale_shift, stretch
from .identities import HALF, IdentityCheck, _check, _lemma2_closed, vandermonde

Family = Callable[[int], Fraction]

__all__ = [
    "VerificationReport",
    "maclaurin_coeff",
    "ivory_coeff",
    "intermediate_coeff",
    "intermediate_coeff_display_variant",
    "intermediate_from_lemma2",
    "lhs_series_in_u",
    "intermediate_series_in_v",
    "ivory_series_in",
    "compare_series",
    "verify_step1",
    "verify_step2",
    "verify_theorem1",
    "step2_coefficient_collapse",
]


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    order_checked: int
    first_mismatch: Optional[tuple[int, Fraction, Fraction]] = None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None


# ---------------------------------------------------------------- coefficient families


def _central(n: int) -> Fraction:
    """C(2n, n) / 4^n."""
    return binom(2 * n, n) / 4**n


def maclaurin_coeff(m: int) -> Fraction:
    return -_central(m) ** 2 / (2 * m - 1)


def ivory_coeff(n: int) -> Fraction:
    return (_central(n) / (2 * n - 1)) ** 2


def intermediate_coeff(m: int) -> Fraction:
    return -_central(2 * m) * _central(m) / (4 * m - 1)


def intermediate_coeff_display_variant(m: int) -> Fraction:
    """The displayed variant with C(2m,m)/4^(2m) as second factor (a misprint), kept as a negative control."""
    return -_central(2 * m) * binom(2 * m, m) / 4 ** (2 * m) / (4 * m - 1)


def intermediate_from_lemma2(n: int) -> Fraction:
    """Coefficient of (2 sqrt(x)/(1+x))^n after the diagonal collapse: (-1)^(n-1)/(2n-1) C(2n,n)/4^n S_n."""
    return Fraction(-((-1) ** n), 2 * n - 1) * _central(n) * _lemma2_closed(n)


# ---------------------------------------------------------------- series builders


def lhs_series_in_u(order: int, family: Family = maclaurin_coeff) -> TruncatedSeries:
    """sum_m c_m 4^m u^(2m) (1+u^2)^(1-2m), exact through u^order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    total = TruncatedSeries.zero(order)
    for m in range(order // 2 + 1):
        factor = stretch(binomial_series(1 - 2 * m, order // 2), 2, order)
        total = total + scale_shift(factor, family(m) * 4**m, 2 * m)
    return total


def intermediate_series_in_v(order: int, family: Family = intermediate_coeff) -> TruncatedSeries:
    """(1+v^2)^(1/2) sum_m g_m 4^m v^(2m) (1+v^2)^(-2m), exact through v^order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    inner = TruncatedSeries.zero(order)
    for m in range(order // 2 + 1):
        factor = stretch(binomial_series(-2 * m, order // 2), 2, order)
        inner = inner + scale_shift(factor, family(m) * 4**m, 2 * m)
    return mul(stretch(binomial_series(HALF, order // 2), 2, order), inner)


def ivory_series_in(variable_power: int, order: int, family: Family = ivory_coeff) -> TruncatedSeries:
    """sum_n I_n t^(variable_power * n) through t^order."""
    if variable_power < 1:
        raise ValueError("variable_power must be >= 1")
    cs = [Fraction(0)] * (order + 1)
    for n in range(order // variable_power + 1):
        cs[variable_power * n] = family(n)
    return TruncatedSeries(cs)


# ---------------------------------------------------------------- verifiers


def compare_series(claim: str, lhs: TruncatedSeries, rhs: TruncatedSeries) -> VerificationReport:
    order = min(lhs.order, rhs.order)
    for i in range(order + 1):
        if lhs[i] != rhs[i]:
            return VerificationReport(claim, order, (i, lhs[i], rhs[i]))
    return VerificationReport(claim, order)


def verify_step1(order: int, intermediate: Family = intermediate_coeff) -> VerificationReport:
    """lhs(u) against mid(u^2), through u^order."""
    mid = intermediate_series_in_v(order // 2, intermediate)
    return compare_series("step1", lhs_series_in_u(order), stretch(mid, 2, order))


def verify_step2(order: int, target: Family = ivory_coeff) -> VerificationReport:
    """mid(v) against sum_n target(n) v^(2n), through v^order."""
    return compare_series("step2", intermediate_series_in_v(order), ivory_series_in(2, order, target))


def verify_theorem1(order: int) -> VerificationReport:
    """lhs(u) against sum_n I_n u^(4n), through u^order."""
    return compare_series("theorem1", lhs_series_in_u(order), ivory_series_in(4, order))


def step2_coefficient_collapse(n: int) -> IdentityCheck:
    """Vandermonde collapse of the x^n coefficient, then C(1/2,n) -> I_n.

    ``lhs`` is the collapsed coefficient (-1)^(n-1)/(2n-1) C(2n,n)/4^n C(1/2,n),
    ``rhs`` is ivory_coeff(n).  When the convolution step itself fails the
    check is forced to fail by reporting the convolution's two sides instead.
    """
    conv = vandermonde(-n + HALF, n, n)
    pref = Fraction(-((-1) ** n), 2 * n - 1) * _central(n)
    if not conv.holds:
        return _check("collapse", conv.lhs, conv.rhs, n=n, stage="vandermonde")
    return _check("collapse", pref * gen_binom(HALF, n), ivory_coeff(n), n=n, c_half_n=conv.rhs)
