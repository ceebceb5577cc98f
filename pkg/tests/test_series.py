from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitz.series import MSeries


def small_series(max_weight=4):
    monos = st.lists(
        st.integers(min_value=1, max_value=max_weight), min_size=0, max_size=3
    ).map(lambda parts: tuple(sorted(parts, reverse=True)))
    coeff = st.fractions(
        min_value=-5, max_value=5, max_denominator=6
    )
    return st.dictionaries(monos, coeff, max_size=5).map(
        lambda d: MSeries(max_weight, d)
    )


@given(a=small_series(), b=small_series())
@settings(max_examples=60, deadline=None)
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@given(a=small_series(), b=small_series(), c=small_series())
@settings(max_examples=60, deadline=None)
def test_multiplication_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(a=small_series(), b=small_series(), c=small_series())
@settings(max_examples=40, deadline=None)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


def test_truncation_policy_is_min_of_bounds():
    a = MSeries(5, {(4,): 1})
    b = MSeries(3, {(1,): 1})
    assert (a * b).max_weight == 3
    assert (a + b).max_weight == 3
    assert (a * b).is_zero()  # weight 5 > 3 truncated away


def test_inverse_and_pow():
    one_minus = MSeries(6, {(): 1, (1,): -1})
    inv = one_minus.inverse()
    # geometric: all coefficients of powers of q_1 equal 1
    assert all(inv[(1,) * k] == 1 for k in range(7))
    assert (one_minus * inv) == MSeries.constant(1, 6)
    assert one_minus.pow(-2) == inv * inv


def test_inverse_requires_unit():
    with pytest.raises(ZeroDivisionError):
        MSeries(3, {(1,): 1}).inverse()


def test_derivative():
    s = MSeries(4, {(2, 1): Fraction(3), (1, 1): Fraction(1)})
    assert s.derivative(1)[(2,)] == 3
    assert s.derivative(1)[(1,)] == 2
    assert s.derivative(2)[(1,)] == 3


def test_exp_log_inverse_on_geometric():
    x = MSeries(6, {(1,): 1})
    # exp(log(1/(1-x))) == 1/(1-x)
    assert x.log_geometric().exp() == (MSeries.constant(1, 6) - x).inverse()


def test_substitute_requires_constant_free_images():
    s = MSeries(3, {(1,): 1})
    with pytest.raises(ValueError):
        s.substitute({1: MSeries.constant(1, 3)})


@given(a=small_series(), b=small_series())
@settings(max_examples=30, deadline=None)
def test_substitution_is_a_ring_map(a, b):
    # images: q_k -> q_k + q_k^2 (constant-free, weight-preserving)
    images = {
        k: MSeries(4, {(k,): 1, (k, k): 1}) for k in range(1, 5)
    }
    lhs = (a * b).substitute(images)
    rhs = a.substitute(images) * b.substitute(images)
    assert lhs == rhs


def test_truncate_cannot_extend():
    s = MSeries(3, {(1,): 1})
    with pytest.raises(ValueError):
        s.truncate(5)
