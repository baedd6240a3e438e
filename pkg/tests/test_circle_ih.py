from fractions import Fraction

import pytest
from hypothesis import given, settings

from ihquot import linalg
from ihquot.circle_ih import (NonPolynomialResult, closed_form, intersection_poincare_circle,
                              is_dual, member_basis, pairing_matrix_circle, pairing_rank_series,
                              restrict_to_component, singularity_data, v_dimension_series,
                              v_membership_circle)
from ihquot.rings import PnClass
from ihquot.space_model import CircleSpace, FixedComponent, linear_pn, weight_counts

from conftest import P, weight_lists, weight_multisets


@pytest.mark.parametrize("weights,d,e,n", [((1, 1, -1, -1), 2, 2, 3), ((1, -2), 1, 1, 1),
                                           ((3, 1, 1, -2), 1, 3, 1)])
def test_singularity_data(weights, d, e, n):
    s = singularity_data(FixedComponent("F", P(1), 0, weights))
    assert (s.d, s.e, s.perversity_n) == (d, e, n)


def test_singularity_data_rejects_off_level():
    with pytest.raises(ValueError):
        singularity_data(FixedComponent("F", P(1), 1, (1, -1)))


def test_ip_examples():
    assert intersection_poincare_circle(linear_pn([1, -1, 0])) == P(1, 1)
    assert intersection_poincare_circle(linear_pn([1, -1])) == P(1)
    assert intersection_poincare_circle(linear_pn([1, -1, 0])).is_exact


@pytest.mark.parametrize("p,q,r", [(1, 1, 1), (2, 2, 2), (1, 3, 0), (2, 3, 4)])
def test_ip_closed_form(p, q, r):
    assert intersection_poincare_circle(linear_pn([1] * p + [-1] * q + [0] * r)) == closed_form(p, q, r)


def test_closed_form_values():
    assert closed_form(1, 1, 1) == P(1, 1)
    assert closed_form(2, 2, 0) == P(1, 2, 1)
    assert closed_form(2, 2, 2) == P(1, 2, 2, 2, 1)


def test_non_polynomial_abstract_input():
    space = CircleSpace(P(1, 1, 1), (FixedComponent("N", P(1), 1, (-2, -1)),
                                     FixedComponent("S", P(1), -1, (2, 1)),
                                     FixedComponent("O", P(1, 1), 0, (1,))), 2)
    with pytest.raises(NonPolynomialResult):
        intersection_poincare_circle(space)


def test_abstract_input_matching_linear():
    space = CircleSpace(P(1, 1, 1), (FixedComponent("N", P(1), 1, (-2, -1)),
                                     FixedComponent("S", P(1), -1, (2, 1)),
                                     FixedComponent("O", P(1), 0, (1, -1))), 2)
    assert intersection_poincare_circle(space) == P(1, 1)


@given(weight_lists)
@settings(max_examples=200)
def test_duality(weights):
    space = linear_pn(weights)
    ip = intersection_poincare_circle(space)
    assert is_dual(ip, space)
    assert ip == closed_form(*weight_counts(weights))


def test_restrict_to_component():
    space = linear_pn([1, 1, -1, 0])
    by_value = {F.moment_value: F for F in space.components}
    w = space.linear_weights
    assert restrict_to_component(PnClass.constant(w), by_value[0]) == {(0, 0): 1}
    assert restrict_to_component(PnClass.x(w), by_value[0]) == {}
    assert restrict_to_component(PnClass.x(w), by_value[1]) == {(1, 0): 1, (0, 1): 1}


def test_membership_examples():
    space = linear_pn([1, -1, 0])
    w = space.linear_weights
    assert v_membership_circle(PnClass.constant(w), space)
    assert not v_membership_circle(PnClass.beta(w), space)
    assert v_membership_circle(PnClass.x(w), space)
    with pytest.raises(ValueError):
        v_membership_circle(PnClass.x(w) + PnClass.x(w) ** 2, space)


def test_member_basis_agrees_with_predicate():
    space = linear_pn([1, 1, -1, -1, 0, 0])
    for r in range(0, 12, 2):
        basis = member_basis(space, r)
        assert all(v_membership_circle(c, space) for c in basis)
        full = PnClass.basis(space.linear_weights, r)
        # every monomial passing the test lies in the span
        span = [c.coordinates(r) for c in basis]
        for mono in full:
            if v_membership_circle(mono, space):
                assert linalg.rank(span + [mono.coordinates(r)]) == len(basis)


@pytest.mark.parametrize("weights", [[1, -1], [1, -1, 0], [1, 1, -1, 0], [1, 1, -1, -1, 0, 0],
                                     [2, -1, 0, 0], [3, 1, -1, -2, 0]])
def test_v_dimension_series(weights):
    space = linear_pn(weights)
    assert v_dimension_series(space) == intersection_poincare_circle(space)


@pytest.mark.parametrize("weights", list(weight_multisets([-2, -1, 0, 1], 5, min_len=2))[::3])
def test_pairing_ranks_recover_ip(weights):
    # independent of the Morse series: ranks of the reduced-space pairing
    space = linear_pn(weights)
    eps = Fraction(1, 2)
    assert pairing_rank_series(space, eps) == intersection_poincare_circle(space)
    assert pairing_rank_series(space, -eps) == intersection_poincare_circle(space)


def test_pairing_matrix_p2():
    space = linear_pn([1, -1, 0])
    assert pairing_matrix_circle(space, 0, Fraction(1, 2)) == [[Fraction(1, 2)]]


def test_closed_form_without_positive_or_negative_weights():
    assert closed_form(0, 2, 1) == P(0)
    assert intersection_poincare_circle(linear_pn([0, 0])) == P(0)
