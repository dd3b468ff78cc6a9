import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from landenkit.exact import as_rational, binom, gen_binom, is_canonical

small_rationals = st.builds(F, st.integers(-40, 40), st.integers(1, 20))


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (5, 0, 1), (3, 5, 0), (3, -1, 0), (0, 0, 1)])
def test_binom_examples(n, k, expected):
    assert binom(n, k) == expected


def test_binom_rejects_negative_upper():
    with pytest.raises(ValueError):
        binom(-1, 2)


@pytest.mark.parametrize(
    "r, k, expected",
    [(F(1, 2), 2, F(-1, 8)), (F(-3, 2), 1, F(-3, 2)), (-3, 2, 6), (F(7, 3), 0, 1), (F(1, 2), -2, 0)],
)
def test_gen_binom_examples(r, k, expected):
    assert gen_binom(r, k) == expected


def _falling(r, k):
    out = F(1)
    for i in range(k):
        out *= F(r) - i
    return out / math.factorial(k)


@given(small_rationals, st.integers(0, 25))
def test_gen_binom_matches_fraction_falling_factorial(r, k):
    assert gen_binom(r, k) == _falling(r, k)


@given(small_rationals, st.integers(1, 30))
def test_pascal(r, k):
    assert gen_binom(r, k) == gen_binom(r - 1, k) + gen_binom(r - 1, k - 1)


@given(st.integers(0, 80), st.data())
def test_symmetry(n, data):
    k = data.draw(st.integers(0, n))
    assert binom(n, k) == binom(n, n - k)


@given(st.integers(0, 60), st.integers(0, 60))
def test_gen_binom_agrees_with_binom_on_naturals(n, k):
    assert gen_binom(F(n), k) == binom(n, k)


@given(small_rationals, st.integers(-3, 30))
def test_results_are_canonical(r, k):
    q = gen_binom(r, k)
    assert is_canonical(q)
    assert math.gcd(q.numerator, q.denominator) == 1


def test_large_integers():
    # well beyond 4096 bits
    top = binom(5000, 2500)
    assert top.numerator.bit_length() > 4096
    assert top == binom(4999, 2500) + binom(4999, 2499)
    half = gen_binom(F(9999, 2), 1200)
    assert half == gen_binom(F(9997, 2), 1200) + gen_binom(F(9997, 2), 1199)


def test_as_rational():
    assert as_rational("0.5") == F(1, 2)
    assert as_rational(" 3/4 ") == F(3, 4)
    assert as_rational("1e-3") == F(1, 1000)
    with pytest.raises(TypeError):
        as_rational(0.5)
