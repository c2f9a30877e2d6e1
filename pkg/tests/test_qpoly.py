from hypothesis import given, strategies as st

from staircase_rings.qpoly import (
    ONE,
    QPoly,
    ZERO,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
    q_stirling,
    rev_at,
    rev_q,
)

coeff_lists = st.lists(st.integers(-50, 50), max_size=8)


def test_q_int_examples():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(3) == QPoly((1, 1, 1))


def test_q_binomial_examples():
    assert q_binomial(3, 1) == q_int(3)
    assert q_binomial(4, 2) == QPoly((1, 1, 2, 1, 1))
    assert q_binomial(2, 5) == ZERO
    assert q_binomial(2, -1) == ZERO


def test_rev_q_examples():
    assert rev_q(ZERO) == ZERO
    assert rev_q(ONE) == ONE
    # reversal of (1+q)(2+q), the product appearing for the two-block
    # Stirling count at n = 3
    assert rev_q(QPoly((2, 3, 1))) == QPoly((1, 3, 2))
    assert QPoly((2, 3, 1)) == q_factorial(2) * q_stirling(3, 2)


def test_canonical_form():
    assert QPoly((1, 0, 0)).coeffs == (1,)
    assert QPoly(()).degree == -1
    assert QPoly((0, 0)).coeffs == ()


@given(coeff_lists)
def test_rev_q_involution(cs):
    f = QPoly(cs)
    if f and f.coefficient(0) != 0:
        assert rev_q(rev_q(f)) == f


@given(st.integers(0, 10), st.integers(-2, 12))
def test_q_binomial_at_one_and_symmetry(a, b):
    val = q_binomial(a, b)(1)
    if 0 <= b <= a:
        from math import comb

        assert val == comb(a, b)
        assert q_binomial(a, b) == q_binomial(a, a - b)
    else:
        assert val == 0


@given(coeff_lists, coeff_lists)
def test_ring_axioms(a, b):
    f, g = QPoly(a), QPoly(b)
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) * f == f * f + g * f
    assert f - f == ZERO


def test_multinomial_and_shift():
    assert q_multinomial((1, 1, 1)) == q_factorial(3)
    assert q_multinomial((2, 1)) == q_binomial(3, 2)
    assert QPoly((1, 1)).shift(2) == QPoly((0, 0, 1, 1))


def test_rev_at():
    assert rev_at(QPoly((1, 2)), 3) == QPoly((0, 0, 2, 1))
    assert rev_at(ZERO, 5) == ZERO


def test_json_round_trip():
    f = QPoly((10**30, -3, 7))
    assert QPoly.from_json(f.to_json()) == f
