"""Ellipse perimeter by the Maclaurin and Ivory series with proven error radii.

For semi-axes a >= b,

    p = 2 a pi  sum_m c_m e2^m          (e2 = 1 - b^2/a^2)
      = pi (a+b) sum_n I_n h^n           (h = ((a-b)/(a+b))^2)

Everything in the trusted path is an exact :class:`~fractions.Fraction`.
Every reported error radius adds up three bounds: the series tail, the error
in the rational approximation of pi, and the final decimal rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import as_rational
from .landen import ivory_coeff, maclaurin_coeff

__all__ = [
    "MAX_TERMS",
    "EllipseError",
    "DomainError",
    "DegenerateInput",
    "PrecisionUnreachable",
    "EllipseParams",
    "BoundedDecimal",
    "Convergence",
    "params_from_axes",
    "pi_approx",
    "arctan_inv",
    "round_decimal",
    "round_up",
    "maclaurin_tail_bound",
    "ivory_tail_bound",
    "maclaurin_partial_sum",
    "ivory_partial_sum",
    "perimeter_maclaurin",
    "perimeter_ivory",
    "compare_convergence",
]

MAX_TERMS = 10_000


class EllipseError(ValueError):
    code = "ellipse-error"


class DomainError(EllipseError):
    code = "domain-error"


class DegenerateInput(DomainError):
    code = "degenerate-input"


class PrecisionUnreachable(EllipseError):
    code = "precision-unreachable"


@dataclass(frozen=True)
class EllipseParams:
    a: Fraction
    b: Fraction
    e2: Fraction
    h: Fraction
    x: Fraction
    sqrt_x: Fraction

    @property
    def degenerate(self) -> bool:
        return self.b == 0


def params_from_axes(a, b) -> EllipseParams:
    a, b = as_rational(a), as_rational(b)
    if a <= 0:
        raise DomainError(f"semi-major axis must be positive, got {a}")
    if b < 0 or b > a:
        raise DomainError(f"need 0 <= b <= a, got a={a}, b={b}")
    e2 = 1 - (b / a) ** 2
    s = (a - b) / (a + b)
    h = s * s
    # the eccentricity variable of the first series in terms of sqrt(x)
    assert 4 * s / (1 + s) ** 2 == e2
    return EllipseParams(a=a, b=b, e2=e2, h=h, x=h, sqrt_x=s)


@dataclass(frozen=True)
class BoundedDecimal:
    """``decimal`` is within ``error_radius`` of the true value."""

    decimal: str
    error_radius: Fraction
    terms: int = 0

    @property
    def value(self) -> Fraction:
        return Fraction(self.decimal)

    def contains(self, x: Fraction, slack: Fraction = Fraction(0)) -> bool:
        return abs(self.value - x) <= self.error_radius + slack


# ---------------------------------------------------------------- pi


def arctan_inv(x: int, terms: int) -> tuple[Fraction, Fraction]:
    """Partial sum of arctan(1/x) with ``terms`` terms, and the alternating-series remainder bound."""
    total = Fraction(0)
    x2 = x * x
    power = x
    for k in range(terms):
        total += Fraction((-1) ** k, (2 * k + 1) * power)
        power *= x2
    return total, Fraction(1, (2 * terms + 1) * power)


def round_decimal(value: Fraction, places: int) -> str:
    """Round half away from zero to ``places`` decimals."""
    scaled = abs(value) * 10**places
    q = int(scaled + Fraction(1, 2))
    sign = "-" if value < 0 and q else ""
    digits = str(q).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def round_up(q: Fraction, places: int) -> Fraction:
    """Smallest multiple of 10^-places that is >= q (q >= 0)."""
    scale = 10**places
    return Fraction(-((-q.numerator * scale) // q.denominator), scale)


def pi_approx(digits: int) -> tuple[Fraction, Fraction]:
    """(p, r) with |pi - p| <= r <= 10^-digits.

    Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).  The partial sums are
    rounded to ``digits + 2`` decimals to keep denominators small, and the
    exact rounding error is folded into r.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    eps = Fraction(1, 10**digits)
    k5 = k239 = 1
    while True:
        s5, t5 = arctan_inv(5, k5)
        if 16 * t5 <= eps / 4:
            break
        k5 += 1
    while True:
        s239, t239 = arctan_inv(239, k239)
        if 4 * t239 <= eps / 4:
            break
        k239 += 1
    exact = 16 * s5 - 4 * s239
    p = Fraction(round_decimal(exact, digits + 2))
    r = round_up(16 * t5 + 4 * t239 + abs(exact - p), digits + 3)
    assert r <= eps
    return p, r


# ---------------------------------------------------------------- tail bounds


def maclaurin_tail_bound(e2: Fraction, n: int) -> Fraction:
    """Bound on |sum_{m>n} c_m e2^m|; |c_m| is decreasing so a geometric majorant works for e2 < 1."""
    if e2 >= 1:
        raise DegenerateInput("the Maclaurin series has no geometric tail bound at e2 = 1")
    if e2 == 0:
        return Fraction(0)
    return -maclaurin_coeff(n + 1) * e2 ** (n + 1) / (1 - e2)


def ivory_tail_bound(h: Fraction, n: int) -> Optional[Fraction]:
    """Bound on sum_{m>n} I_m h^m, or None when none is available (h = 1, n = 0).

    For h < 1 the terms decrease geometrically.  At h = 1 the sequence
    I_m m^3 is non-increasing (the ratio test reduces to 1 <= 3m), so
    sum_{m>n} I_m <= I_{n+1} (n+1)^3 sum_{m>n} m^-3 <= I_{n+1} (n+1)^3 / (2 n^2).
    """
    if h == 0:
        return Fraction(0)
    if h < 1:
        return ivory_coeff(n + 1) * h ** (n + 1) / (1 - h)
    if n == 0:
        return None
    return ivory_coeff(n + 1) * (n + 1) ** 3 / (2 * n * n)


# ---------------------------------------------------------------- evaluation


def _binary_split(a, b, i: int, j: int) -> tuple[int, int, int]:
    """(P, Q, T) with sum_{m=i}^{j-1} prod_{k=i}^{m-1} a(k)/b(k) = T/Q and P/Q the full product."""
    if j - i == 1:
        return a(i), b(i), b(i)
    mid = (i + j) // 2
    p1, q1, t1 = _binary_split(a, b, i, mid)
    p2, q2, t2 = _binary_split(a, b, mid, j)
    return p1 * p2, q1 * q2, t1 * q2 + p1 * t2


def maclaurin_partial_sum(e2: Fraction, count: int) -> Fraction:
    """sum_{m<count} c_m e2^m exactly.

    Successive terms have ratio e2 (2m-1)(2m+1) / (2m+2)^2, which binary
    splitting turns into a handful of large integer products.
    """
    if count < 1:
        return Fraction(0)
    p, q = e2.numerator, e2.denominator
    _, den, num = _binary_split(lambda m: p * (2 * m - 1) * (2 * m + 1), lambda m: q * (2 * m + 2) ** 2, 0, count)
    return Fraction(num, den)


def ivory_partial_sum(h: Fraction, count: int) -> Fraction:
    """sum_{n<count} I_n h^n exactly; the term ratio is h (2n-1)^2 / (2n+2)^2."""
    if count < 1:
        return Fraction(0)
    p, q = h.numerator, h.denominator
    _, den, num = _binary_split(lambda n: p * (2 * n - 1) ** 2, lambda n: q * (2 * n + 2) ** 2, 0, count)
    return Fraction(num, den)


def _fewest_terms(tail_after, tolerance: Fraction, max_terms: int) -> Optional[tuple[int, Fraction]]:
    """Smallest count <= max_terms with tail_after(count - 1) <= tolerance, and that tail.

    Every tail bound used here is non-increasing in its index, so doubling
    followed by bisection finds the first acceptable count.
    """

    def ok(count: int) -> bool:
        t = tail_after(count - 1)
        return t is not None and t <= tolerance

    if not ok(max_terms):
        return None
    lo, hi = 0, 1  # ok(lo) is false (or lo == 0), ok(hi) decides
    while hi < max_terms and not ok(hi):
        lo, hi = hi, min(2 * hi, max_terms)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi, tail_after(hi - 1)


def _smallest_power_of_ten_below(bound: Fraction) -> int:
    d = 0
    while Fraction(1, 10**d) > bound:
        d += 1
    return d


def _evaluate(method: str, tail_after, partial_sum, prefactor: Fraction, digits: int, max_terms: int) -> BoundedDecimal:
    """prefactor * pi * S to ``digits`` decimals.

    The budget eps = 10^-digits splits as eps/8 for the tail, eps/8 for pi
    and eps/2 for rounding; the sum is rounded up to 10^-(digits+3) so the
    radius stays a short fraction.  With S = S_N + tail and pi = p + dp,
        |pi S - p S_N| <= |dp| (|S_N| + T) + p T,
    and p < 4 covers the second term.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    eps = Fraction(1, 10**digits)
    found = _fewest_terms(tail_after, eps / (32 * prefactor), max_terms)
    if found is None:
        raise PrecisionUnreachable(f"{method}: {max_terms} terms do not reach 10^-{digits}")
    count, tail = found
    partial = partial_sum(count)
    pi_digits = _smallest_power_of_ten_below(eps / (8 * prefactor * (abs(partial) + tail)))
    p, r = pi_approx(max(pi_digits, 1))
    value = prefactor * p * partial
    computed_error = prefactor * (r * (abs(partial) + tail) + p * tail)
    radius = round_up(computed_error + eps / 2, digits + 3)
    assert computed_error <= eps / 4 and radius <= eps
    return BoundedDecimal(round_decimal(value, digits), radius, count)


def perimeter_maclaurin(params: EllipseParams, digits: int, max_terms: int = MAX_TERMS) -> BoundedDecimal:
    e2 = params.e2
    if e2 >= 1:
        raise DegenerateInput("the Maclaurin series needs e2 < 1; use the Ivory series for b = 0")
    return _evaluate(
        "maclaurin",
        lambda n: maclaurin_tail_bound(e2, n),
        lambda count: maclaurin_partial_sum(e2, count),
        2 * params.a,
        digits,
        max_terms,
    )


def perimeter_ivory(params: EllipseParams, digits: int, max_terms: int = MAX_TERMS) -> BoundedDecimal:
    h = params.h
    return _evaluate(
        "ivory",
        lambda n: ivory_tail_bound(h, n),
        lambda count: ivory_partial_sum(h, count),
        params.a + params.b,
        digits,
        max_terms,
    )


@dataclass(frozen=True)
class Convergence:
    maclaurin_terms: Optional[int]
    ivory_terms: Optional[int]
    maclaurin_tail: Optional[Fraction]
    ivory_tail: Optional[Fraction]


def compare_convergence(params: EllipseParams, tolerance, max_terms: int = MAX_TERMS) -> Convergence:
    """Fewest terms whose proven series tail is <= tolerance, per method (None = unreachable)."""
    tolerance = as_rational(tolerance)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    e2, h = params.e2, params.h
    mac = None if e2 >= 1 else _fewest_terms(lambda n: maclaurin_tail_bound(e2, n), tolerance, max_terms)
    ivo = _fewest_terms(lambda n: ivory_tail_bound(h, n), tolerance, max_terms)
    return Convergence(
        maclaurin_terms=mac[0] if mac else None,
        ivory_terms=ivo[0] if ivo else None,
        maclaurin_tail=mac[1] if mac else None,
        ivory_tail=ivo[1] if ivo else None,
    )
