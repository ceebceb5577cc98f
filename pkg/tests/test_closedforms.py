from fractions import Fraction

import pytest

from hurwitz.closedforms import (
    bernoulli_constant,
    classical_genus0,
    classical_genus1,
    mn_single_cycle,
    monotone_genus0,
    monotone_genus1,
    normalized_value,
    polynomiality_extract,
    scaling_check,
)
from hurwitz.oracle import count_classical_transitive, count_monotone_transitive
from hurwitz.partitions import partitions
from hurwitz.polynomials import PolynomialQ


def test_monotone_genus0_examples():
    assert monotone_genus0((1,)) == 1
    assert monotone_genus0((3,)) == 4
    assert monotone_genus0((2, 2)) == 54


def test_monotone_genus1_examples():
    assert monotone_genus1((1,)) == 0
    assert monotone_genus1((2,)) == 1
    assert monotone_genus1((1, 1)) == 1


def test_classical_examples():
    assert classical_genus0((3,)) == 6
    assert classical_genus0((2, 2)) == 288
    assert classical_genus1((3,)) == 54


def test_formulas_match_oracle():
    for d in range(1, 6):
        for alpha in partitions(d):
            ell = len(alpha)
            r0, r1 = d + ell - 2, d + ell
            if r0 >= 0:
                assert monotone_genus0(alpha) == count_monotone_transitive(alpha, r0)
                assert classical_genus0(alpha) == count_classical_transitive(alpha, r0)
            assert monotone_genus1(alpha) == count_monotone_transitive(alpha, r1)
            assert classical_genus1(alpha) == count_classical_transitive(alpha, r1)


def test_mn_single_cycle_examples():
    assert mn_single_cycle(1, 2) == 1
    assert mn_single_cycle(2, 2) == 1
    assert mn_single_cycle(1, 1) == 0
    assert mn_single_cycle(4, 1) == 0


def test_mn_single_cycle_against_oracle():
    for g in range(1, 4):
        for d in range(1, 6):
            r = 2 * g - 2 + 1 + d
            assert mn_single_cycle(g, d) == count_monotone_transitive((d,), r), (g, d)


def test_bernoulli_constant_values():
    assert bernoulli_constant(2) == Fraction(1, 240)
    assert bernoulli_constant(3) == Fraction(-1, 1008)
    assert bernoulli_constant(4) == Fraction(1, 1440)
    with pytest.raises(ValueError):
        bernoulli_constant(1)


def test_scaling_examples():
    assert scaling_check(2)
    assert scaling_check(3)


def test_scaling_single_coefficients():
    from hurwitz.pipeline import rational_form
    from hurwitz.tables import paper_form

    mono = rational_form(2)
    clas = paper_form(2, classical=True)
    assert mono.coefficient((3,)) == Fraction(5, 720)
    assert clas.coefficient((3,)) == Fraction(5, 8 * 720)
    assert mono.coefficient((3,)) == 8 * clas.coefficient((3,))
    assert mono.coefficient((1, 1, 1)) == 8 * clas.coefficient((1, 1, 1))


def test_polynomiality_small_cases():
    p03 = polynomiality_extract(0, 3)
    assert p03.coeffs == {(0, 0, 0): Fraction(1)}  # identically one

    p11 = polynomiality_extract(1, 1)
    assert p11.coeffs == {(0,): Fraction(-1, 12), (1,): Fraction(1, 12)}

    p21 = polynomiality_extract(2, 1)
    assert isinstance(p21, PolynomialQ)
    assert p21((Fraction(2),)) == Fraction(1, 12)  # H_2((2)) normalized


def test_normalized_value_definition():
    # H_2((2)) = 1: 1 * |Aut| / (d! C(4,2)) = 1/12
    assert normalized_value(2, (2,)) == Fraction(1, 12)


def test_polynomiality_rejects_excluded_pairs():
    with pytest.raises(ValueError):
        polynomiality_extract(0, 1)
    with pytest.raises(ValueError):
        polynomiality_extract(0, 2)
