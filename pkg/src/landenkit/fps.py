"""Truncated formal power series over exact rationals.

A :class:`TruncatedSeries` of order N stands for a power series modulo
x^(N+1).  Binary operations work at the smaller of the two orders, so a result
never claims coefficients its inputs did not determine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .exact import as_rational

__all__ = [
    "TruncatedSeries",
    "add",
    "mul",
    "binomial_series",
    "stretch",
    "scale_shift",
]


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [c if type(c) is Fraction else as_rational(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("a truncated series needs order >= 0")
        cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.coeffs, order)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return add(self, other)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return scale_shift(self, other, 0)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TruncatedSeries:
        if e < 0:
            raise ValueError("series inversion is not supported")
        result = TruncatedSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = mul(result, base)
            e >>= 1
            if e:
                base = mul(base, base)
        return result

    def __repr__(self) -> str:
        return f"TruncatedSeries([{', '.join(str(c) for c in self.coeffs)}])"


def add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    n = min(s.order, t.order)
    return TruncatedSeries([s[i] + t[i] for i in range(n + 1)])


def _common_denominator(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in cs], den


def mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to min(s.order, t.order)."""
    n = min(s.order, t.order)
    # convolve integer numerators over a common denominator; one reduction per coefficient
    a, da = _common_denominator(s.coeffs[: n + 1])
    b, db = _common_denominator(t.coeffs[: n + 1])
    den = da * db
    if sum(1 for x in a if x) > sum(1 for x in b if x):
        a, b = b, a
    support = [(j, x) for j, x in enumerate(a) if x]
    out = []
    for i in range(n + 1):
        acc = 0
        for j, x in support:
            if j > i:
                break
            acc += x * b[i - j]
        out.append(Fraction(acc, den))
    return TruncatedSeries(out)


def binomial_series(alpha, order: int) -> TruncatedSeries:
    """(1 + x)^alpha = sum_k C(alpha, k) x^k, truncated at order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    alpha = as_rational(alpha)
    cs = [Fraction(1)]
    # C(alpha, k+1) = C(alpha, k) * (alpha - k) / (k + 1)
    for k in range(order):
        cs.append(cs[-1] * (alpha - k) / (k + 1))
    return TruncatedSeries(cs)


def stretch(s: TruncatedSeries, j: int, order: int) -> TruncatedSeries:
    """Substitute x -> x^j and truncate at ``order``."""
    if j < 1:
        raise ValueError("stretch factor must be >= 1")
    if order > j * (s.order + 1) - 1:
        # s is exact mod x^(s.order+1), so its stretch is exact only mod x^(j*(s.order+1))
        raise ValueError(f"order {order} exceeds what a stretch by {j} of order {s.order} determines")
    cs = [Fraction(0)] * (order + 1)
    for i in range(min(s.order, order // j) + 1):
        cs[j * i] = s[i]
    return TruncatedSeries(cs)


def scale_shift(s: TruncatedSeries, c, j: int) -> TruncatedSeries:
    """Multiply by c * x^j, keeping s.order."""
    if j < 0:
        raise ValueError("shift must be >= 0")
    c = as_rational(c)
    n = s.order
    cs = [Fraction(0)] * min(j, n + 1) + [c * s[i] for i in range(max(n + 1 - j, 0))]
    return TruncatedSeries(cs, n)
