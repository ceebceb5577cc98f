from fractions import Fraction
from math import factorial

import pytest

from hurwitz.combinat import bernoulli
from hurwitz.forms import RationalForm
from hurwitz.inversion import gamma_in_p, monotone_from_rational_form
from hurwitz.joincut import solve_monotone
from hurwitz.partitions import Partition, partitions
from hurwitz.pipeline import (
    BasisDecomp,
    decompose_basis,
    delta1_element,
    genus1_closed,
    integrate_phi,
    normalized_delta1,
    rational_form,
    recompose_basis,
    solve_genus,
)
from hurwitz.qyseries import BiSeries, expand_ring_element, lift_px
from hurwitz.ring import RingElement
from hurwitz.series import MSeries

Y = RingElement.from_u_poly({1: Fraction(1, 4), 0: Fraction(-1, 4)})
H1 = RingElement.monomial(hs=(1,))


def test_genus1_normalized_lift():
    assert normalized_delta1(1) == Y * Y + (Y * H1).scale(Fraction(1, 6))
    assert normalized_delta1(1).in_ring(2)


def test_solve_genus_checks_supplied_lower_lifts():
    lower = [delta1_element(1)]
    assert solve_genus(2, lower) == delta1_element(2)
    with pytest.raises(ValueError):
        solve_genus(2, [delta1_element(1).scale(2)])


def test_genus1_decomposition_components():
    decomp = decompose_basis(1, normalized_delta1(1))
    assert decomp[0] == RingElement.zero()
    assert decomp[1] == RingElement(
        {(0, 0, ()): Fraction(-1, 16), (0, 0, (1,)): Fraction(1, 24)}
    )
    assert decomp[2] == RingElement.one().scale(Fraction(1, 24))


def test_decompose_recompose_identity():
    for g in range(1, 5):
        elem = normalized_delta1(g)
        decomp = decompose_basis(g, elem)
        assert recompose_basis(decomp) == elem


def test_structural_bounds_through_genus4():
    for g in range(1, 5):
        elem = normalized_delta1(g)
        assert elem.in_ring(3 * g - 1)
        decomp = decompose_basis(g, elem)  # raises if cond1/cond2 fail
        for j, Fj in enumerate(decomp.components):
            if Fj:
                assert Fj.weighted_degree() <= 3 * g - 1 - j


def test_genus2_rational_form_published_values():
    form = rational_form(2)
    scaled = {tuple(a): 720 * c for a, c in form.terms.items()}
    assert scaled == {
        (): 3,
        (1,): -5,
        (2,): -6,
        (3,): 5,
        (1, 1): -10,
        (2, 1): 29,
        (1, 1, 1): 28,
    }
    assert 720 * form.constant == -3
    # the empty-partition coefficient is the Bernoulli constant
    assert form.terms[Partition()] == -bernoulli(4) / (4 * 2) == Fraction(1, 240)


def test_genus3_constant_pair():
    form = rational_form(3)
    norm = Fraction(factorial(9), 4)
    assert norm * form.terms[Partition()] == -90
    assert norm * form.constant == 90
    assert norm * form.terms[Partition((6,))] == 70
    assert norm * form.terms[Partition((1,) * 6)] == 68600


def test_integrate_phi_rejects_genus_one():
    decomp = decompose_basis(1, normalized_delta1(1))
    with pytest.raises(ValueError):
        integrate_phi(1, decomp)


def test_genus1_closed_form_constants():
    lf = genus1_closed()
    assert (lf.coeff_eta, lf.coeff_gamma) == (Fraction(1, 24), Fraction(-1, 8))


def test_pipeline_extractions_match_joincut():
    table = solve_monotone(6, 16)  # worst case: g=3, alpha=(1^6) needs r=16
    for g in (2, 3):
        form = rational_form(g)
        for d in range(1, 7):
            for alpha in partitions(d):
                assert monotone_from_rational_form(form, alpha) == table.genus_value(
                    g, alpha
                ), (g, alpha)


def test_genus2_single_values():
    form = rational_form(2)
    assert monotone_from_rational_form(form, (1,)) == 0
    assert monotone_from_rational_form(form, (2,)) == 1


def test_single_cycle_law_beyond_acceptance_range():
    # the single-cycle closed formula keeps matching the pipeline at
    # genus 4 and 5 (acceptance only requires genus <= 3)
    from hurwitz.closedforms import mn_single_cycle

    for g in (4, 5):
        form = rational_form(g)
        for d in range(1, 5):
            assert monotone_from_rational_form(form, (d,)) == mn_single_cycle(g, d)


def test_single_part_polynomial_equals_form_coefficients():
    # expanding the rational form to first order in the q's gives the
    # closed single-part polynomial
    #     P(d) = (2g-2) c_0 (2d+1) + sum_k c_{(k)} (2d+1) d^k,
    # which must agree with the interpolated length-1 polynomial
    from hurwitz.closedforms import polynomiality_extract

    g = 2
    form = rational_form(g)
    poly = polynomiality_extract(g, 1)
    for d in range(1, 9):
        expected = (2 * g - 2) * form.coefficient(()) * (2 * d + 1)
        for k in range(1, 3 * g - 2):
            expected += form.coefficient((k,)) * (2 * d + 1) * d**k
        assert poly((Fraction(d),)) == expected, d


# -- series-level cross-checks against the join-cut tables ------------------
#
# Both checks convert a pipeline object (a closed y-expression) to the
# original (p, x) coordinates and compare with the literal lift
# sum_k k x^k d/dp_k applied to the join-cut genus slices.


def _genus_slice_p(table, g: int, D: int) -> MSeries:
    coeffs = {}
    for d in range(1, D + 1):
        for alpha in partitions(d):
            v = Fraction(table.genus_value(g, alpha), factorial(d))
            if v:
                coeffs[tuple(alpha)] = v
    return MSeries(D, coeffs)


def _to_px(elem: RingElement, wp: int, wx: int) -> BiSeries:
    series = expand_ring_element(elem, wp, wx)
    gp = gamma_in_p(wp)
    base = (MSeries.constant(1, wp) - gp).inverse()
    qmap = {k: MSeries.variable(k, wp) * base.pow(2 * k) for k in range(1, wp + 1)}
    return series.substitute(qmap, base.pow(2))


def _region(series: BiSeries, wp: int, wx: int):
    return {
        k: v for k, v in series.coeffs.items() if sum(k[0]) <= wp and k[1] <= wx
    }


def test_double_lift_of_genus0_matches_joincut():
    # q-weight <= 3 comparison of y^2 (1-4y)^(-2) against two literal lifts
    wp_in, wcmp, xcmp = 6, 3, 3
    table = solve_monotone(wp_in, 2 * wp_in - 2)
    G0 = BiSeries.from_mseries(_genus_slice_p(table, 0, wp_in), wp_in, xcmp, 0)
    lifted_twice = lift_px(lift_px(G0))
    algebraic = _to_px(RingElement(
        {(4, 0, ()): Fraction(1, 16), (2, 0, ()): Fraction(-1, 8), (0, 0, ()): Fraction(1, 16)}
    ), wcmp, xcmp)
    assert _region(lifted_twice, wcmp, xcmp) == _region(algebraic, wcmp, xcmp)


def test_lift_of_genus1_matches_joincut():
    # weight <= 4 comparison of the genus-1 lift against the literal lift
    wp_in, wcmp, xcmp = 8, 4, 4
    table = solve_monotone(wp_in, 2 * wp_in)
    G1 = BiSeries.from_mseries(_genus_slice_p(table, 1, wp_in), wp_in, xcmp, 0)
    lifted = lift_px(G1)
    algebraic = _to_px(delta1_element(1), wcmp, xcmp)
    assert _region(lifted, wcmp, xcmp) == _region(algebraic, wcmp, xcmp)


def test_basis_decomp_container():
    decomp = decompose_basis(2, normalized_delta1(2))
    assert isinstance(decomp, BasisDecomp)
    assert decomp.genus == 2
    assert len(decomp.components) == 6
    assert isinstance(rational_form(2), RationalForm)


def test_decompose_rejects_dishonest_elements():
    with pytest.raises(ValueError):
        decompose_basis(1, RingElement.monomial(u2=1))  # half power
    with pytest.raises(ValueError):
        decompose_basis(1, RingElement.monomial(u2=8))  # degree 4 > 2
