from fractions import Fraction
from itertools import product

import pytest

from ihquot import linalg
from ihquot.rings import SU2Class
from ihquot.su2_p1n import (ih_basis_su2, ih_betti_su2, ih_pairing_su2, ih_table_su2,
                            is_unimodal, membership_basis_su2, membership_pairing_rank,
                            normal_form, pairing_matrix_su2, restrict_to_fixed, su2_betti,
                            su2_series, v_membership_su2)


def enumerate_invariant_monomials(n, r):
    """All monomials a^e b^k of degree r with exponents up to r, reduced and deduplicated."""
    half = r // 2
    seen = set()
    if r % 2:
        return 0
    for exps in product(range(half + 1), repeat=n):
        rest = half - sum(exps)
        if rest < 0:
            continue
        raw = {(tuple((i + 1, e) for i, e in enumerate(exps) if e), rest): 1}
        cls = normal_form(n, raw)
        if cls.weyl_invariant:
            seen.add(next(iter(cls.terms)))
    return len(seen)


def test_normal_form_examples():
    assert normal_form(2, {(((1, 2),), 0): 1}) == SU2Class.beta(2, 2)


@pytest.mark.parametrize("n,r,dim", [(4, 2, 4), (4, 4, 7), (4, 3, 0), (5, 7, 0), (4, 0, 1)])
def test_su2_betti_examples(n, r, dim):
    assert su2_betti(n, r) == dim


@pytest.mark.parametrize("n", range(1, 6))
def test_su2_betti_enumeration(n):
    for r in range(0, 4 * n + 1):
        assert su2_betti(n, r) == enumerate_invariant_monomials(n, r)


@pytest.mark.parametrize("n", range(1, 7))
def test_su2_series(n):
    series = su2_series(n, 4 * n)
    assert all(series[r] == su2_betti(n, r) for r in range(0, 4 * n + 1))


def test_restrict_to_fixed():
    assert restrict_to_fixed(SU2Class.alpha(4, 1), (1, -1, 1, -1)) == {1: 1}
    for a in product((1, -1), repeat=4):
        if sum(a) == 0:
            assert restrict_to_fixed(SU2Class.omega(4), a) == {}
    assert restrict_to_fixed(SU2Class.beta(4), (1, 1, 1, 1)) == {1: 1}


def test_membership_examples():
    assert v_membership_su2(SU2Class.constant(4), 4)
    assert v_membership_su2(SU2Class.omega(4), 4)
    assert not v_membership_su2(SU2Class.beta(4, 2), 4)
    assert v_membership_su2(SU2Class.beta(6, 2) * 0 + SU2Class.alpha(6, 1), 6)
    with pytest.raises(ValueError, match="odd"):
        v_membership_su2(SU2Class.constant(3), 3)
    with pytest.raises(ValueError, match="Weyl"):
        v_membership_su2(SU2Class.beta(4), 4)


def test_ih_n4():
    assert ih_table_su2(4) == [1, 0, 1]


@pytest.mark.parametrize("n", [4, 6, 8])
def test_ih_table_structure(n):
    m = n // 2
    table = ih_table_su2(n)
    assert table == table[::-1]
    assert table[2 * m - 3] == 0
    assert all(v == 0 for v in table[1::2])
    assert is_unimodal(table[::2])


def test_ih_n6_values():
    assert ih_table_su2(6) == [1, 0, 6, 0, 6, 0, 1]


@pytest.mark.parametrize("n", [4, 6])
def test_ih_equals_pairing_rank(n):
    m = n // 2
    for r in range(0, 4 * m - 5):
        assert membership_pairing_rank(n, r) == ih_betti_su2(n, r)


@pytest.mark.parametrize("n", [4, 6])
def test_membership_dims_below_2m(n):
    m = n // 2
    for r in range(0, min(2 * m, 4 * m - 5)):
        assert len(membership_basis_su2(n, r)) == ih_betti_su2(n, r)


def test_ih_out_of_range():
    with pytest.raises(ValueError):
        ih_betti_su2(4, 3)
    with pytest.raises(ValueError):
        ih_betti_su2(5, 0)


def test_pairing_examples():
    val = ih_pairing_su2(4, SU2Class.constant(4), SU2Class.omega(4))
    assert val == Fraction(1, 2)
    with pytest.raises(ValueError, match="degrees"):
        ih_pairing_su2(4, SU2Class.constant(4), SU2Class.constant(4))
    with pytest.raises(ValueError, match="IH subspace"):
        ih_pairing_su2(6, SU2Class.constant(6), SU2Class.beta(6, 2) * SU2Class.alpha(6, 1))
    with pytest.raises(ValueError, match="close to 0"):
        ih_pairing_su2(4, SU2Class.constant(4), SU2Class.omega(4), 3)


@pytest.mark.parametrize("n", [4, 6])
def test_pairing_full_rank_and_epsilon_free(n):
    m = n // 2
    top = 4 * m - 6
    for r in range(0, 2 * m - 3, 2):
        mat = pairing_matrix_su2(n, r)
        assert len(mat) == ih_betti_su2(n, r) == ih_betti_su2(n, top - r)
        assert linalg.rank(mat) == len(mat)
        for eps in (Fraction(1, 3), Fraction(-1, 2), Fraction(-3, 2), Fraction(3, 2)):
            assert pairing_matrix_su2(n, r, eps) == mat


def test_ih_basis_above_middle_is_omega_image():
    basis = ih_basis_su2(6, 4)
    omega = SU2Class.omega(6)
    assert basis == [omega * SU2Class.alpha(6, i) for i in range(1, 7)]
