"""Genus recursion: from the double lift of genus zero to rational forms.

For genus g >= 1 the recursion determines the normalized lift

    E_g = (1 - eta)^(2g-1) (1 - 4y)^(1/2) D H_g

from the equation

    (1 - T) E_g = (1 - eta)^(2g-2) ( D^2 H_{g-1}
                                     + sum_{g'=1}^{g-1} D H_{g'} D H_{g-g'} ),

whose right side is an honest ring element of weighted degree <= 3g - 1.
E_g decomposes uniquely against the triangular basis

    (1 - 4y)^(-1/2),  eta(y) - gamma(y),  eta_1(y), ..., eta_{3g-2}(y)

(u-polynomial degrees 0, 1, 2, 3, ... after multiplying by (1-4y)^(1/2))
with coefficients F_0, ..., F_{3g-1} that are polynomials in the H_k alone.
Two structural identities must hold: F_0 = 0, and for g >= 2

    -F_1 (1 - eta) + sum_{j>=2} F_j eta_{j-1} = 0

(as a polynomial identity after clearing V).  The second cancels every
gamma out of the inversion of the lift, leaving

    (1 - eta)^(2g-1) Phi D H_g = F_2 eta + sum_{j=3}^{3g-1} F_j eta_{j-2},

and the t-integral of the dilated series ( q_j -> q_j t ) evaluates
term-by-term through

    int_0^1 t^m (1 - eta t)^(-(m+2g-1)) dt
        = sum_{i=0}^{2g-3} C(2g-3, i) eta^i / ((m+1+i) (1-eta)^(m+1+i)),

which collects, after writing eta = 1 - (1 - eta), into the rational form
of the genus-g generating function.  Genus one instead integrates to the
closed log form (1/24) log 1/(1-eta) - (1/8) log 1/(1-gamma).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .forms import LogForm, RationalForm
from .partitions import Partition
from .ring import (
    RingElement,
    apply_delta1,
    delta1_sq_H0,
    eta_y_upoly,
    invert_one_minus_T,
)

GENUS_CAP = 12  # weighted degrees grow as 3g-1; keep the recursion honest


@lru_cache(maxsize=None)
def normalized_delta1(g: int) -> RingElement:
    """E_g = (1-eta)^(2g-1) (1-4y)^(1/2) D H_g, asserted to lie in R_{3g-1}."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    if g > GENUS_CAP:
        raise ValueError(f"genus {g} above the configured cap {GENUS_CAP}")
    if g == 1:
        rhs = delta1_sq_H0()
    else:
        prev = delta1_element(g - 1)
        rhs = apply_delta1(prev.shift_v(-(2 * g - 3)), m=2 * g - 3)
        for gp in range(1, g):
            rhs = rhs + delta1_element(gp) * delta1_element(g - gp)
        rhs = rhs.shift_v(-(2 * g - 2))
    if not rhs.is_honest():
        raise AssertionError(f"genus {g} right side left the ring")
    out = invert_one_minus_T(rhs)
    if not out.in_ring(3 * g - 1):
        raise AssertionError(
            f"genus {g} solution violates the degree bound: {out.weighted_degree()}"
        )
    return out


@lru_cache(maxsize=None)
def delta1_element(g: int) -> RingElement:
    """D H_g itself: U^(1/2) V^(2g-1) E_g."""
    return normalized_delta1(g).shift_u2(1).shift_v(2 * g - 1)


def solve_genus(g: int, lower=None) -> RingElement:
    """D H_g from the recursion; ``lower`` optionally supplies
    [D H_1, ..., D H_{g-1}] and is checked against the cached solutions."""
    if lower is not None:
        expected = [delta1_element(gp) for gp in range(1, g)]
        if list(lower) != expected:
            raise ValueError("supplied lower-genus lifts disagree with the recursion")
    return delta1_element(g)


@dataclass(frozen=True)
class BasisDecomp:
    """Components F_0..F_{3g-1} of E_g against the triangular basis."""

    genus: int
    components: tuple[RingElement, ...]

    def __getitem__(self, j: int) -> RingElement:
        return self.components[j]


def _basis_u_poly(j: int) -> dict[int, Fraction]:
    """U-polynomial of basis element j after multiplying by (1-4y)^(1/2):
    degree exactly j."""
    if j == 0:
        return {0: Fraction(1)}
    if j == 1:
        return {1: Fraction(1), 0: Fraction(-1)}
    return dict(eta_y_upoly(j - 1))


def decompose_basis(g: int, E: RingElement) -> BasisDecomp:
    """Solve the triangular system writing E_g over the y-series basis.

    Asserts F_0 = 0, the weighted-degree bounds, and (g >= 2) the gamma
    cancellation identity."""
    if not E.in_ring(3 * g - 1):
        raise ValueError("decompose_basis expects the normalized honest element")
    by_degree: dict[int, dict[tuple[int, ...], Fraction]] = {}
    for (u2, _v, hs), c in E.terms.items():
        by_degree.setdefault(u2 // 2, {})[hs] = c
    comps: list[RingElement] = [RingElement.zero()] * (3 * g)
    for j in range(3 * g - 1, -1, -1):
        basis = _basis_u_poly(j)
        lead = basis[j]
        top = by_degree.pop(j, None)
        if not top:
            continue
        Fj = RingElement({(0, 0, hs): c / lead for hs, c in top.items()})
        comps[j] = Fj
        for e, b in basis.items():
            if e == j:
                continue
            row = by_degree.setdefault(e, {})
            for (_u2f, _vf, hsf), c in Fj.terms.items():
                s = row.get(hsf, Fraction(0)) - b * c
                if s:
                    row[hsf] = s
                else:
                    row.pop(hsf, None)
    remaining = {e: row for e, row in by_degree.items() if row}
    if remaining:
        raise AssertionError(f"decomposition left a remainder at degrees {sorted(remaining)}")
    if comps[0]:
        raise AssertionError("F_0 must vanish (the lift has no constant term in y)")
    for j, Fj in enumerate(comps):
        if Fj and Fj.weighted_degree() > 3 * g - 1 - j:
            raise AssertionError(f"F_{j} exceeds weighted degree {3*g-1-j}")
    if g >= 2:
        ident = comps[1].scale(-1)
        for j in range(2, 3 * g):
            ident = ident + comps[j] * RingElement.monomial(hs=(j - 1,))
        if ident:
            raise AssertionError("gamma-cancellation identity failed")
    return BasisDecomp(g, tuple(comps))


def recompose_basis(B: BasisDecomp) -> RingElement:
    """Inverse of decompose_basis (used by the invariance tests)."""
    out = RingElement.zero()
    for j, Fj in enumerate(B.components):
        if Fj:
            out = out + RingElement.from_u_poly(_basis_u_poly(j)) * Fj
    return out


def integrate_phi(g: int, B: BasisDecomp) -> RationalForm:
    """The t-integration producing the genus-g rational form, g >= 2."""
    if g < 2:
        raise ValueError("integrate_phi handles genus >= 2; genus one is the log form")
    acc: dict[tuple[tuple[int, ...], int], Fraction] = {}

    def add_eta_power(alpha: tuple[int, ...], coeff: Fraction, s: int, base: int):
        # coeff * eta_alpha * eta^s * (1-eta)^(-base), expanded via
        # eta = 1 - (1-eta) into pure (1-eta) powers
        for w in range(s + 1):
            key = (alpha, base - w)
            val = acc.get(key, Fraction(0)) + coeff * comb(s, w) * (-1) ** w
            if val:
                acc[key] = val
            else:
                acc.pop(key, None)

    def integral_terms(alpha: tuple[int, ...], coeff: Fraction, m: int, extra_eta: int):
        for i in range(2 * g - 2):
            w = coeff * Fraction(comb(2 * g - 3, i), m + 1 + i)
            add_eta_power(alpha, w, i + extra_eta, m + 1 + i)

    for (_u2, _v, hs), c in B[2].terms.items():
        integral_terms(hs, c, len(hs), extra_eta=1)
    for j in range(3, 3 * g):
        for (_u2, _v, hs), c in B[j].terms.items():
            alpha = tuple(sorted(hs + (j - 2,)))
            integral_terms(alpha, c, len(alpha) - 1, extra_eta=0)

    terms: dict[Partition, Fraction] = {}
    constant = Fraction(0)
    for (alpha, k), c in acc.items():
        if alpha:
            if k != len(alpha) + 2 * g - 2:
                raise AssertionError(
                    f"stray power (1-eta)^-{k} at eta_{alpha} (expected {len(alpha) + 2*g-2})"
                )
            terms[Partition(alpha)] = c
        elif k == 2 * g - 2:
            terms[Partition()] = c
        elif k == 0:
            constant = c
        else:
            raise AssertionError(f"stray constant-family power (1-eta)^-{k}")
    if constant != -terms.get(Partition(), Fraction(0)):
        raise AssertionError("constant term does not balance the empty-partition term")
    return RationalForm(genus=g, terms=terms)


def genus1_closed() -> LogForm:
    """The genus-one generating function in closed form."""
    return LogForm(Fraction(1, 24), Fraction(-1, 8))


@lru_cache(maxsize=None)
def rational_form(g: int) -> RationalForm:
    """Run the full pipeline for genus g >= 2 and return the rational form."""
    if g < 2:
        raise ValueError("rational forms exist for genus >= 2; use genus1_closed")
    return integrate_phi(g, decompose_basis(g, normalized_delta1(g)))
