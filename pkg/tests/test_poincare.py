from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ihquot.poincare import (ONE, ONE_MINUS_T2, PoincarePolynomial, TruncationError, add,
                             divide_by_one_minus_t2, is_palindromic, mul)

from conftest import P

polys = st.dictionaries(st.integers(0, 6).map(lambda k: 2 * k),
                        st.fractions(max_denominator=5).filter(lambda q: abs(q) < 20),
                        max_size=5).map(PoincarePolynomial)


def test_add_examples():
    assert add(P(1, 1), P(0, 1)) == P(1, 2)
    assert add(P(3, 0, 7), PoincarePolynomial()) == P(3, 0, 7)
    assert add(P(1, 1, 1), P(0, 0, -1)) == P(1, 1)
    assert add(P(1, 1, 1), P(0, 0, -1)).top_degree == 2


def test_mul_examples():
    assert mul(P(1, 1), P(1, 1)) == P(1, 2, 1)
    assert mul(P(1, 0, -1), P(1, 0, -1)) == P(1, 0, -2, 0, 1)
    assert mul(P(2, 5), ONE) == P(2, 5)


def test_truncation_propagates():
    a = P(1, 1, 1, truncation=4)
    assert add(a, P(1)).truncation == 4
    assert mul(a, P(0, 1)).truncation == 6
    assert mul(a, P(1, 1)).truncation == 4
    assert mul(a, PoincarePolynomial()).is_exact


def test_divide_examples():
    q = divide_by_one_minus_t2(P(1, 0, -1), 10)
    assert q.is_exact and q == P(1, 1)
    # long division by hand: 1 + t^2 - t^4 over 1 - t^2
    q = divide_by_one_minus_t2(P(1, 1, -1), 8)
    assert q.truncation == 8
    assert q.to_triples() == [[0, 1, 1], [2, 2, 1], [4, 1, 1], [6, 1, 1], [8, 1, 1]]
    assert divide_by_one_minus_t2(PoincarePolynomial(), 6).is_zero()


def test_divide_rejects_negative_truncation():
    with pytest.raises(ValueError):
        divide_by_one_minus_t2(P(1), -2)


def test_palindromic_examples():
    assert is_palindromic(P(1, 1), 2)
    assert is_palindromic(P(1, 2, 1), 4)
    assert not is_palindromic(P(1, 1), 4)
    with pytest.raises(TruncationError):
        is_palindromic(P(1, 1, truncation=2), 4)


def test_truncated_equality_and_comparison_errors():
    a = P(1, 2, 3, truncation=2)
    assert a == P(1, 2, 99)
    assert a.agrees_up_to(P(1, 2), 2)
    with pytest.raises(TruncationError):
        a.agrees_up_to(P(1, 2, 3), 4)
    with pytest.raises(TruncationError):
        a.coefficient(4)


def test_serialization_round_trip():
    p = PoincarePolynomial({0: 1, 2: Fraction(-3, 4), 6: 5})
    assert p.to_triples() == [[0, 1, 1], [2, -3, 4], [6, 5, 1]]
    assert PoincarePolynomial.from_triples(p.to_triples()) == p
    assert str(p) == "1 - 3/4*t^2 + 5*t^6"


def test_immutable():
    with pytest.raises(AttributeError):
        P(1).truncation = 3


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)


@given(polys, st.integers(0, 12).map(lambda k: 2 * k))
def test_divide_then_multiply(p, trunc):
    q = divide_by_one_minus_t2(p, trunc)
    back = q * ONE_MINUS_T2
    bound = back.truncation if back.truncation is not None else p.top_degree
    assert back.agrees_up_to(p, bound) if bound >= 0 else back.is_zero()


@pytest.mark.parametrize("p", range(1, 5))
@pytest.mark.parametrize("q", range(1, 5))
@pytest.mark.parametrize("r", range(0, 4))
def test_pqr_quotient_palindromic(p, q, r):
    num = P(*([1] + [0] * (p - 1) + [-1])) * P(*([1] + [0] * (q + r - 1) + [-1]))
    quot = divide_by_one_minus_t2(divide_by_one_minus_t2(num, 100), 100)
    assert quot.is_exact
    top = 2 * (p + q + r - 1) - 2
    assert quot.top_degree == top
    assert is_palindromic(quot, top)
    assert quot.has_nonnegative_integer_coefficients()
