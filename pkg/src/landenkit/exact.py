"""Exact rational arithmetic and binomial coefficients.

``Rational`` is :class:`fractions.Fraction`: it keeps every value in lowest
terms with a positive denominator, and Python integers have no size limit.
"""

from fractions import Fraction
import math

Rational = Fraction

__all__ = ["Rational", "as_rational", "binom", "gen_binom", "is_canonical"]


def as_rational(value) -> Fraction:
    """Convert an int, Fraction or exact literal (``"3/4"``, ``"0.25"``) to a Fraction.

    Floats are refused, since going through binary floating point would lose
    exactness without saying so.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or string")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def is_canonical(q: Fraction) -> bool:
    return q.denominator > 0 and math.gcd(q.numerator, q.denominator) == 1


def binom(n: int, k: int) -> Fraction:
    """C(n, k) for a non-negative integer n, zero when k is outside [0, n]."""
    if n < 0:
        raise ValueError(f"binom needs n >= 0, got {n}; use gen_binom for other upper indices")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def gen_binom(r, k: int) -> Fraction:
    """Falling-factorial binomial r(r-1)...(r-k+1)/k!, zero for k < 0."""
    if k < 0:
        return Fraction(0)
    r = as_rational(r)
    p, q = r.numerator, r.denominator
    if q == 1 and p >= 0:
        return binom(p, k)
    # prod_{i<k} (p/q - i) = prod_{i<k} (p - i*q) / q^k, kept in integers
    num = 1
    for i in range(k):
        num *= p - i * q
    return Fraction(num, q**k * math.factorial(k))
