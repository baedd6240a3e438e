import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from ihquot.circle_ih import member_basis
from ihquot.localization import (LaurentSeriesBeta, NonRegularLevel,
                                 abbv_integral, component_term, kalkman_reduced_integral,
                                 su2_reduced_integral, wall_residue)
from ihquot.rings import PnClass, SU2Class, su2_basis
from ihquot.space_model import linear_pn, product_p1_su2

from conftest import weight_multisets


def complete_homogeneous(weights, j):
    total = 0
    for combo in combinations_with_replacement(range(len(weights)), j):
        term = 1
        for i in combo:
            term *= weights[i]
        total += term
    return total


def random_pn_class(rng, weights, degree):
    basis = PnClass.basis(weights, degree)
    out = PnClass.constant(weights, 0)
    for b in basis:
        out = out + b * rng.randint(-5, 5)
    return out


SPACES = [w for w in weight_multisets([-2, -1, 0, 1, 3], 6, min_len=2)][::7]


def test_p1_examples():
    w = (1, -1)
    space = linear_pn(w)
    assert abbv_integral(space, PnClass.constant(w)).is_zero()
    assert abbv_integral(space, PnClass.x(w)) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_hyperplane_power_calibration(n):
    for weights in ([k - n // 2 for k in range(n + 1)], [1] * n + [-1], [0] * n + [2]):
        space = linear_pn(weights)
        assert abbv_integral(space, PnClass.x(space.linear_weights) ** n) == 1


@pytest.mark.parametrize("weights", SPACES)
def test_higher_powers_give_complete_homogeneous(weights):
    space = linear_pn(weights)
    n = space.half_dim
    for j in range(4):
        got = abbv_integral(space, PnClass.x(space.linear_weights) ** (n + j))
        assert got == LaurentSeriesBeta({j: complete_homogeneous(weights, j)})


@pytest.mark.parametrize("weights", SPACES)
def test_random_classes_cancel(weights):
    rng = random.Random(hash(tuple(weights)) & 0xFFFF)
    space = linear_pn(weights)
    for _ in range(20):
        deg = 2 * rng.randint(0, space.half_dim + 2)
        res = abbv_integral(space, random_pn_class(rng, space.linear_weights, deg))
        assert not res.has_negative_powers()


def test_partial_sums_do_not_cancel():
    # dropping one component leaves negative powers behind
    space = linear_pn([1, 1, -1])
    eta = PnClass.x(space.linear_weights)
    partial = component_term(space, eta, 1)
    assert partial.has_negative_powers()
    assert not (partial + component_term(space, eta, -1)).has_negative_powers()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_su2_top_class_direct_expansion(n):
    space = product_p1_su2(n)
    # integral over a product of spheres: a_S b^k integrates to b^k when S is everything
    for r in range(0, 2 * n + 5, 2):
        for cls in su2_basis(n, r, weyl_invariant=False):
            (S, k), = cls.terms
            expect = LaurentSeriesBeta({k: 1}) if len(S) == n else LaurentSeriesBeta()
            assert abbv_integral(space, cls) == expect


@pytest.mark.parametrize("n", range(1, 6))
def test_su2_random_classes_cancel(n):
    rng = random.Random(n)
    space = product_p1_su2(n)
    for _ in range(100):
        deg = 2 * rng.randint(0, n + 2)
        basis = su2_basis(n, deg, weyl_invariant=False)
        eta = SU2Class(n)
        for b in basis:
            eta = eta + b * rng.randint(-4, 4)
        assert not abbv_integral(space, eta).has_negative_powers()


def test_kalkman_examples():
    w = (1, -1)
    space = linear_pn(w)
    one = PnClass.constant(w)
    assert kalkman_reduced_integral(space, one, 0) == Fraction(1, 2)
    assert kalkman_reduced_integral(space, one, Fraction(1, 3)) == kalkman_reduced_integral(
        space, one, Fraction(2, 3))
    assert kalkman_reduced_integral(space, one, 2) == 0
    assert kalkman_reduced_integral(space, one, -2) == 0
    with pytest.raises(NonRegularLevel):
        kalkman_reduced_integral(space, one, 1)
    with pytest.raises(ValueError):
        kalkman_reduced_integral(space, PnClass.x(w), 0)


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 3), (3, 3), (1, 5)])
def test_kalkman_stabilizer_order(a, b):
    # generic stabilizer of the reduced point is cyclic of order a + b
    w = (a, -b)
    assert kalkman_reduced_integral(linear_pn(w), PnClass.constant(w), 0) == Fraction(1, a + b)


@pytest.mark.parametrize("weights", [w for w in weight_multisets([-2, -1, 0, 1, 2], 5, min_len=2)])
def test_wall_crossing(weights):
    space = linear_pn(weights)
    w = space.linear_weights
    values = sorted({F.moment_value for F in space.components})
    deg = 2 * space.half_dim - 2
    rng = random.Random(len(weights))
    for _ in range(3):
        eta = random_pn_class(rng, w, deg)
        for v in values:
            above = kalkman_reduced_integral(space, eta, v + Fraction(1, 7))
            above2 = kalkman_reduced_integral(space, eta, v + Fraction(1, 3))
            below = kalkman_reduced_integral(space, eta, v - Fraction(1, 7))
            assert above == above2
            assert below - above == wall_residue(space, eta, v)


@pytest.mark.parametrize("weights", [[1, -1, 0], [1, 1, -1, -1, 0], [2, 1, -1, -2, 0, 0], [1, -1, -1, 0, 0]])
def test_shift_symmetry_on_member_products(weights):
    space = linear_pn(weights)
    top = space.dim_reduced
    for r in range(0, top + 1, 2):
        for eta in member_basis(space, r):
            for zeta in member_basis(space, top - r):
                prod = eta * zeta
                assert kalkman_reduced_integral(space, prod, Fraction(1, 2)) == \
                    kalkman_reduced_integral(space, prod, Fraction(-1, 2))


def test_su2_point_reduction_is_positive():
    space = product_p1_su2(3)
    assert su2_reduced_integral(space, SU2Class.constant(3), Fraction(1, 2)) == Fraction(1, 2)


def test_su2_reduced_chamber_and_walls():
    space = product_p1_su2(4)
    omega = SU2Class.omega(4)
    vals = {su2_reduced_integral(space, omega, Fraction(k, 10)) for k in range(1, 20)}
    assert len(vals) == 1 and vals.pop() != 0
    with pytest.raises(NonRegularLevel):
        su2_reduced_integral(space, omega, 0)
    with pytest.raises(ValueError):
        su2_reduced_integral(space, SU2Class.constant(4), Fraction(1, 2))
    assert su2_reduced_integral(space, SU2Class(4), Fraction(1, 2)) == 0
