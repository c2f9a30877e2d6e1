from fractions import Fraction

import pytest

from staircase_rings.frobenius import frob, hilb
from staircase_rings.oracle import (
    _IntEliminator,
    bounded_monomials,
    cycle_type_rep,
    graded_character,
    graded_frobenius_oracle,
    graded_quotient,
    hilbert_function,
    ideal_generators,
    murnaghan_nakayama,
    normal_form,
    permute_monomial,
    top_degree,
    verify_basis,
    z_of,
)
from staircase_rings.qpoly import QPoly


def test_bounded_monomials():
    assert bounded_monomials(2, 2, 2) == ((1, 1),)
    assert bounded_monomials(2, 1, 3) == ((1, 0), (0, 1))
    assert bounded_monomials(1, 3, 3) == ()
    assert len(bounded_monomials(3, 2, 3)) == 6


def test_ideal_generators_structure():
    gens = ideal_generators(2, (1,), 2)
    # two variable powers plus e_2(x1,x2) and nothing else: p^2_1((1,)) = 0
    # and p^2_2((1,)) = 1 forces only the full elementary of degree 2
    powers = [g for g in gens if len(g) == 1 and max(next(iter(g))) == 2]
    assert len(powers) == 2
    rest = [g for g in gens if g not in powers]
    assert rest == [{(1, 1): 1}]


def test_eliminator_small():
    elim = _IntEliminator()
    assert elim.add({0: 2, 1: 4})
    assert not elim.add({0: 1, 1: 2})  # dependent
    assert elim.add({1: 1})
    assert elim.rank == 2
    rref = elim.rref()
    assert rref[0] == {0: Fraction(1)}
    assert rref[1] == {1: Fraction(1)}


def test_hilbert_function_examples():
    assert hilbert_function(2, (1,), 2) == QPoly((1, 2))
    assert hilbert_function(3, (1, 1), 2) == QPoly((1, 3, 2))
    assert hilbert_function(0, (), 2) == QPoly((1,))


def test_hilbert_matches_filling_statistic():
    for n in range(0, 5):
        for s in (1, 2, 3):
            for la in [(), (1,), (2,), (1, 1), (2, 1)]:
                if sum(la) > n or len(la) > s:
                    continue
                assert hilbert_function(n, la, s) == hilb(n, la, s)


def test_verify_basis_small():
    assert verify_basis(4, (2, 1), 3)
    assert verify_basis(3, (), 2)
    assert verify_basis(1, (1,), 1)


def test_normal_form_example():
    gq = graded_quotient(4, (2, 1), 3)
    nf = normal_form((1, 0, 0, 2), gq)
    assert nf == {(0, 1, 0, 2): Fraction(-1), (0, 0, 1, 2): Fraction(-1)}


def test_normal_form_properties():
    gq = graded_quotient(3, (1,), 2)
    # idempotence: basis monomials are their own normal form
    for d, basis in gq.basis.items():
        for m in basis:
            assert gq.normal_form(m) == {m: Fraction(1)}
    # over-s monomials vanish
    assert gq.normal_form((2, 0, 0)) == {}
    with pytest.raises(ValueError):
        gq.normal_form((1, 1))  # wrong variable count
    with pytest.raises(ValueError):
        gq.normal_form((1, 1, 3))  # degree above the top


def test_ideal_generators_reduce_to_zero():
    # every generator's degree piece must have empty normal form
    n, la, s = 4, (2, 1), 3
    gq = graded_quotient(n, la, s)
    for g in ideal_generators(n, la, s):
        total: dict = {}
        for m, c in g.items():
            if max(m) >= s:
                continue
            for b, v in gq.normal_form(m).items():
                total[b] = total.get(b, Fraction(0)) + c * v
        assert all(v == 0 for v in total.values())


def test_permutation_action():
    w = cycle_type_rep((2, 1), 3)
    assert sorted(w) == [1, 2, 3] and w != (1, 2, 3)
    assert permute_monomial((2, 1, 3), (5, 0, 7)) == (0, 5, 7)


def test_graded_character_identity_is_hilbert():
    n, la, s = 4, (2, 1), 3
    assert graded_character(n, la, s, (1, 1, 1, 1)) == hilbert_function(n, la, s)


def test_murnaghan_nakayama_values():
    assert murnaghan_nakayama((2, 1), (1, 1, 1)) == 2
    assert murnaghan_nakayama((2, 1), (2, 1)) == 0
    assert murnaghan_nakayama((2, 1), (3,)) == -1
    assert murnaghan_nakayama((3,), (3,)) == 1
    assert murnaghan_nakayama((1, 1, 1), (3,)) == 1
    assert murnaghan_nakayama((4,), (2, 1, 1)) == 1


def test_character_orthogonality():
    # rows of the character table of S_4 are orthonormal against 1/z
    from staircase_rings.shapes import partitions_of

    cts = list(partitions_of(4))
    for nu1 in cts:
        for nu2 in cts:
            val = sum(
                Fraction(
                    murnaghan_nakayama(nu1, mu) * murnaghan_nakayama(nu2, mu),
                    z_of(mu),
                )
                for mu in cts
            )
            assert val == (1 if nu1 == nu2 else 0)


def test_z_of():
    assert z_of((1, 1, 1)) == 6
    assert z_of((3,)) == 3
    assert z_of((2, 2)) == 8


def test_graded_frobenius_oracle_matches_fillings():
    for n, la, s in [(2, (1,), 2), (3, (1, 1), 2), (4, (2, 1), 3), (3, (), 2)]:
        assert graded_frobenius_oracle(n, la, s) == frob(n, la, s).schur


def test_top_degree():
    assert top_degree(4, 3) == 8
    assert top_degree(3, 1) == 0
