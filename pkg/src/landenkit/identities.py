"""Exact checkers for the binomial identities behind Landen's transformation.

Each ``*_identity``/``vandermonde``/``absorption``/``lemma2_twoform`` call
evaluates both sides of one instance exactly and returns an
:class:`IdentityCheck`.  ``SweepBounds`` fixes the ranges the test suite and
the CLI sweep over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .exact import as_rational, binom, gen_binom
from .fps import TruncatedSeries, scale_shift

__all__ = [
    "IdentityCheck",
    "SweepBounds",
    "lemma1_lhs",
    "lemma1_rhs",
    "lemma1_check",
    "knuth_identity_a",
    "knuth_identity_b",
    "absorption",
    "lemma2_bruteforce",
    "lemma2_closedform",
    "lemma2_twoform",
    "lemma2_check",
    "g_first_form",
    "g_second_form",
    "sweep_lemma1",
    "sweep_lemma2",
    "sweep_vandermonde",
    "sweep_knuth",
    "sweep_absorption",
    "vandermonde",
    "RATIONAL_GRID",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    parameters: tuple[tuple[str, Fraction | int], ...]
    lhs: Fraction
    rhs: Fraction
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "holds", self.lhs == self.rhs)


def _check(name: str, lhs, rhs, **params) -> IdentityCheck:
    return IdentityCheck(name, tuple(params.items()), Fraction(lhs), Fraction(rhs))


@dataclass(frozen=True)
class SweepBounds:
    """Inclusive upper limits of the identity sweeps."""

    lemma1: int = 200
    lemma1_negative_k: int = 5
    lemma2: int = 200
    vandermonde: int = 30
    knuth: int = 60
    absorption: int = 50
    collapse: int = 80


# Rationals with small numerators and denominators, used by the deterministic sweeps.
RATIONAL_GRID: tuple[Fraction, ...] = tuple(
    sorted({Fraction(p, q) for q in (1, 2, 3, 5, 7, 20) for p in (-20, -7, -3, -1, 0, 1, 2, 5, 13, 20)})
)


# ---------------------------------------------------------------- Lemma 1


def lemma1_lhs(n: int, k: int) -> Fraction:
    """C(-n - 1/2, k)."""
    return gen_binom(-n - HALF, k)


def lemma1_rhs(n: int, k: int) -> Fraction:
    """C(2n+2k, n+k) C(n+k, k) / C(2n, n) * (-1)^k / 4^k."""
    if k < 0:
        return Fraction(0)
    return binom(2 * n + 2 * k, n + k) * binom(n + k, k) / binom(2 * n, n) * Fraction((-1) ** k, 4**k)


def lemma1_check(n: int, k: int) -> IdentityCheck:
    return _check("lemma1", lemma1_lhs(n, k), lemma1_rhs(n, k), n=n, k=k)


def knuth_identity_a(n: int, k: int) -> IdentityCheck:
    """C(n,k) C(n+1/2,k) = C(2n+1,k) C(2n+1-k,k) / 4^k."""
    lhs = binom(n, k) * gen_binom(n + HALF, k)
    rhs = binom(2 * n + 1, k) * gen_binom(2 * n + 1 - k, k) / 4**k
    return _check("knuth_a", lhs, rhs, n=n, k=k)


def knuth_identity_b(r, k: int) -> IdentityCheck:
    """C(-r,k) = (-1)^k C(r+k-1,k)."""
    r = as_rational(r)
    return _check("knuth_b", gen_binom(-r, k), (-1) ** k * gen_binom(r + k - 1, k), r=r, k=k)


def absorption(r, k: int) -> IdentityCheck:
    """C(r,k) = r/(r-k) C(r-1,k); undefined when r = k."""
    r = as_rational(r)
    if r == k:
        raise ValueError(f"absorption needs r != k (got r = k = {k})")
    return _check("absorption", gen_binom(r, k), r / (r - k) * gen_binom(r - 1, k), r=r, k=k)


# ---------------------------------------------------------------- Lemma 2


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"the sum S_n is studied for n >= 1, got {n}")


def lemma2_bruteforce(n: int) -> Fraction:
    """S_n = sum_{m=0}^{n} (-1)^m / 2^m C(2m,m) C(n,m), term by term."""
    _require_positive(n)
    return sum((Fraction((-1) ** m, 2**m) * binom(2 * m, m) * binom(n, m) for m in range(n + 1)), Fraction(0))


def _lemma2_closed(n: int) -> Fraction:
    if n % 2:
        return Fraction(0)
    return binom(n, n // 2) / 4 ** (n // 2)


def lemma2_closedform(n: int) -> Fraction:
    """C(n, n/2) / 4^(n/2) for even n, 0 for odd n."""
    _require_positive(n)
    return _lemma2_closed(n)


def g_first_form(n: int, order: int | None = None) -> TruncatedSeries:
    """G_n(x) = sum_m (1 - x/2)^(2m) C(n,m) x^(n-m), through x^order (default: the full degree 2n)."""
    deg = 2 * n if order is None else order
    square = TruncatedSeries([1, -1, Fraction(1, 4)], deg)  # (1 - x/2)^2
    power = TruncatedSeries.one(deg)
    total = TruncatedSeries.zero(deg)
    for m in range(n + 1):
        total = total + scale_shift(power, binom(n, m), n - m)
        power = power * square
    return total


def g_second_form(n: int, order: int | None = None) -> TruncatedSeries:
    """G_n(x) = (1 + x^2/4)^n, through x^order (default 2n)."""
    return TruncatedSeries([1, 0, Fraction(1, 4)], 2 * n if order is None else order) ** n


def lemma2_twoform(n: int) -> IdentityCheck:
    """Coefficient of x^n in both forms of G_n."""
    _require_positive(n)
    return _check("lemma2_twoform", g_first_form(n, n)[n], g_second_form(n, n)[n], n=n)


# ---------------------------------------------------------------- Vandermonde


def vandermonde(a, b, n: int) -> IdentityCheck:
    """sum_{m=0}^{n} C(a,m) C(b,n-m) = C(a+b,n)."""
    a, b = as_rational(a), as_rational(b)
    lhs = sum((gen_binom(a, m) * gen_binom(b, n - m) for m in range(n + 1)), Fraction(0))
    return _check("vandermonde", lhs, gen_binom(a + b, n), a=a, b=b, n=n)


# ---------------------------------------------------------------- sweeps


def sweep_lemma1(limit: int, negative_k: int = 0) -> Iterator[IdentityCheck]:
    for n in range(limit + 1):
        for k in range(-negative_k, limit + 1):
            yield lemma1_check(n, k)


def lemma2_check(n: int) -> IdentityCheck:
    """Brute-force S_n against the closed form and both G_n coefficients.

    ``rhs`` is the first of (closed form, first-form coefficient, second-form
    coefficient) that differs from the brute-force sum, so ``holds`` is true
    only when all four values agree.
    """
    brute = lemma2_bruteforce(n)
    closed = lemma2_closedform(n)
    two = lemma2_twoform(n)
    rhs = next((v for v in (closed, two.lhs, two.rhs) if v != brute), closed)
    return _check("lemma2", brute, rhs, n=n, closed=closed, first_form=two.lhs, second_form=two.rhs)


def sweep_lemma2(limit: int) -> Iterator[IdentityCheck]:
    for n in range(1, limit + 1):
        yield lemma2_check(n)


def sweep_vandermonde(limit: int, grid: Sequence[Fraction] = RATIONAL_GRID) -> Iterator[IdentityCheck]:
    for a in grid[::3]:
        for b in grid[1::4]:
            for n in range(limit + 1):
                yield vandermonde(a, b, n)


def sweep_knuth(limit: int, grid: Sequence[Fraction] = RATIONAL_GRID) -> Iterator[IdentityCheck]:
    for n in range(limit + 1):
        for k in range(limit + 1):
            yield knuth_identity_a(n, k)
    for r in grid[::2]:
        for k in range(limit + 1):
            yield knuth_identity_b(r, k)


def sweep_absorption(limit: int) -> Iterator[IdentityCheck]:
    for m in range(limit + 1):
        for k in range(limit + 1):
            yield absorption(-m + HALF, k)
