from math import factorial

import pytest

from staircase_rings.qpoly import ONE, QPoly, ZERO, q_factorial
from staircase_rings.shapes import partitions_of
from staircase_rings.symfunc import (
    FundExpansion,
    SchurExpansion,
    e_perp,
    e_times,
    fund_to_schur,
    h_to_schur,
    hilbert_coefficient,
    hl_qprime_rev,
    kostka,
    llt_rows,
    n_stat,
    schur_to_fund,
    standard_tableau_descents,
)


def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((2, 2), (2, 1, 1)) == 1
    assert kostka((1, 1), (2,)) == 0
    assert kostka((), ()) == 1


def test_standard_tableau_descents_counts():
    # the number of SYT of shape (2, 1) is 2; of (2, 2) is 2
    assert len(list(standard_tableau_descents((2, 1)))) == 2
    assert sorted(standard_tableau_descents((2, 1))) in (
        [frozenset({1}), frozenset({2})],
        [frozenset({2}), frozenset({1})],
    )
    assert len(list(standard_tableau_descents((2, 2)))) == 2


def test_h_to_schur():
    assert h_to_schur((1, 1)).as_dict() == {(2,): ONE, (1, 1): ONE}
    assert h_to_schur((2,)).as_dict() == {(2,): ONE}


def test_fund_schur_round_trip():
    for n in range(0, 7):
        for la in partitions_of(n):
            back = fund_to_schur(schur_to_fund(la))
            assert back.as_dict() == {la: ONE}


def test_fund_to_schur_rejects_asymmetric():
    f = FundExpansion.make(3, {(1,): ONE})
    with pytest.raises(ValueError):
        fund_to_schur(f)


def test_e_perp_and_e_times_adjoint():
    # <e_j f, g> = <f, e_j-perp g> via the Schur basis being orthonormal
    for n in range(1, 6):
        for j in range(1, n + 1):
            for la in partitions_of(n - j):
                f = SchurExpansion.make(n - j, {la: ONE})
                lifted = e_times(j, f)
                for mu in partitions_of(n):
                    g = SchurExpansion.make(n, {mu: ONE})
                    dropped = e_perp(j, g)
                    assert lifted.coefficient(mu) == dropped.coefficient(la)


def test_hilbert_coefficient():
    f = FundExpansion.make(3, {(): ONE, (1,): QPoly((0, 2))})
    assert hilbert_coefficient(f) == QPoly((1, 2))


def test_n_stat():
    assert n_stat((2, 1)) == 1
    assert n_stat((1, 1, 1)) == 3
    assert n_stat((3,)) == 0


def test_hl_qprime_rev_examples():
    got = hl_qprime_rev((1, 1, 1)).as_dict()
    assert got == {
        (3,): ONE,
        (2, 1): QPoly((0, 1, 1)),
        (1, 1, 1): QPoly((0, 0, 0, 1)),
    }
    assert hl_qprime_rev((3,)).as_dict() == {(3,): ONE}


def test_hl_qprime_rev_regular_representation():
    # the one-column case carries the regular representation: the Hilbert
    # coefficient is the reversed q-factorial and q=1 dimensions are n!
    for n in range(1, 5):
        f = hl_qprime_rev((1,) * n)
        total = ZERO
        for la, c in f.terms:
            assert all(x >= 0 for x in c.coeffs)
            assert c.degree <= n_stat((1,) * n)
            dim = kostka(la, (1,) * n)
            total = total + c * dim
        assert total(1) == factorial(n)
        assert total == q_factorial(n)


def test_hl_qprime_rev_coefficients_nonnegative():
    for n in range(1, 7):
        for la in partitions_of(n):
            for mu, c in hl_qprime_rev(la).terms:
                assert all(x >= 0 for x in c.coeffs)
                assert c.degree <= n_stat(la)


def test_llt_rows_single_row_is_schur_like():
    # a single row of length 2 tallies semistandard one-row fillings with
    # no inversions possible
    tally = llt_rows([(1, 0)], 2)
    assert tally == {
        (2, 0): ONE, (1, 1): ONE, (0, 2): ONE,
    }


def test_llt_rows_two_single_cells():
    # two single-cell rows at equal content: the larger label on top row
    # creates one inversion
    tally = llt_rows([(0,), (0,)], 2)
    assert tally[(1, 1)] == QPoly((1, 1))
    assert tally[(2, 0)] == ONE
    assert tally[(0, 2)] == ONE


def test_llt_rows_rejects_gaps():
    with pytest.raises(ValueError):
        llt_rows([(0, 1)], 2)  # ascending, not descending
