"""Changes of variables and Lagrange-inversion coefficient extraction.

Monotone side.  The implicit change of variables is

    q_j = p_j (1 - gamma)^{-2j},     gamma = sum_k C(2k,k) q_k,

with companions eta = sum (2k+1) C(2k,k) q_k and
eta_j = sum (2k+1) k^j C(2k,k) q_k.  The multivariate Lagrange implicit
function theorem turns p-extraction into q-extraction:

    [p_alpha] F = [q_alpha] (1 - eta) F (1 - gamma)^{-(2d+1)},  d = |alpha|.

Classical side.  r_j = p_j e^{j delta} with delta = sum k^k r_k / k!,
phi = sum k^{k+1} r_k / k!, phi_j = sum k^{k+j+1} r_k / k!.  The same
theorem gives

    [p_alpha] F = [r_alpha] e^{d delta} (1 - phi) F.

The q (resp. r) basis is canonical internally; conversion back to p is a
fixed-point iteration on the implicit relation, used by tests and the
round-trip checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .combinat import central_binomial
from .forms import LogForm, RationalForm
from .partitions import Partition
from .series import MSeries


@dataclass(frozen=True)
class AuxSeries:
    """The linear series gamma, eta, eta_j truncated at a common weight."""

    gamma: MSeries
    eta: MSeries
    eta_k: tuple[MSeries, ...]  # eta_k[j-1] is eta_j

    def eta_j(self, j: int) -> MSeries:
        if j < 1 or j > len(self.eta_k):
            raise ValueError(f"eta_{j} not materialized (have 1..{len(self.eta_k)})")
        return self.eta_k[j - 1]


def aux_series(max_weight: int, j_max: int = 0) -> AuxSeries:
    """gamma, eta and eta_1..eta_{j_max} as q-series of the given weight."""
    gamma = MSeries.linear(central_binomial, max_weight)
    eta = MSeries.linear(lambda k: (2 * k + 1) * central_binomial(k), max_weight)
    etas = tuple(
        MSeries.linear(
            lambda k, j=j: (2 * k + 1) * k**j * central_binomial(k), max_weight
        )
        for j in range(1, j_max + 1)
    )
    return AuxSeries(gamma, eta, etas)


def lagrange_extract(F: MSeries, alpha) -> Fraction:
    """[p_alpha] of a q-basis series F, via Lagrange inversion."""
    alpha = Partition(alpha)
    d = alpha.size
    if d > F.max_weight:
        raise ValueError(f"series truncated below weight {d}")
    if d == 0:
        return F.constant_term()
    Fd = F.truncate(d)
    aux = aux_series(d)
    one_minus_gamma = MSeries.constant(1, d) - aux.gamma
    kernel = (MSeries.constant(1, d) - aux.eta) * one_minus_gamma.pow(-(2 * d + 1))
    return (kernel * Fd)[alpha]


def classical_extract(F: MSeries, alpha) -> Fraction:
    """[p_alpha] of an r-basis series F, via the classical analogue."""
    alpha = Partition(alpha)
    d = alpha.size
    if d > F.max_weight:
        raise ValueError(f"series truncated below weight {d}")
    if d == 0:
        return F.constant_term()
    Fd = F.truncate(d)
    aux = classical_aux_series(d)
    kernel = aux.delta.scale(d).exp() * (MSeries.constant(1, d) - aux.phi)
    return (kernel * Fd)[alpha]


@dataclass(frozen=True)
class ClassicalAux:
    """The linear series delta, phi, phi_j truncated at a common weight."""

    delta: MSeries
    phi: MSeries
    phi_k: tuple[MSeries, ...]

    def phi_j(self, j: int) -> MSeries:
        if j < 1 or j > len(self.phi_k):
            raise ValueError(f"phi_{j} not materialized (have 1..{len(self.phi_k)})")
        return self.phi_k[j - 1]


def classical_aux_series(max_weight: int, j_max: int = 0) -> ClassicalAux:
    """delta, phi and phi_1..phi_{j_max} as r-series of the given weight."""
    delta = MSeries.linear(lambda k: Fraction(k**k, factorial(k)), max_weight)
    phi = MSeries.linear(lambda k: Fraction(k ** (k + 1), factorial(k)), max_weight)
    phis = tuple(
        MSeries.linear(
            lambda k, j=j: Fraction(k ** (k + j + 1), factorial(k)), max_weight
        )
        for j in range(1, j_max + 1)
    )
    return ClassicalAux(delta, phi, phis)


def expand_log_form(form: LogForm, max_weight: int) -> MSeries:
    """q-series of a log(1/(1-eta)), log(1/(1-gamma)) combination."""
    aux = aux_series(max_weight)
    return aux.eta.log_geometric().scale(form.coeff_eta) + aux.gamma.log_geometric().scale(
        form.coeff_gamma
    )


def expand_rational_form(form: RationalForm, max_weight: int) -> MSeries:
    """Series of a rational form in its own basis (q monotone, r classical)."""
    j_max = max((max(a) for a in form.terms if a), default=0)
    if form.classical:
        caux = classical_aux_series(max_weight, j_max)
        base, series_j = caux.phi, caux.phi_j
    else:
        maux = aux_series(max_weight, j_max)
        base, series_j = maux.eta, maux.eta_j
    inv = (MSeries.constant(1, max_weight) - base).inverse()
    inv_pows: dict[int, MSeries] = {0: MSeries.constant(1, max_weight)}

    def inv_pow(k: int) -> MSeries:
        if k not in inv_pows:
            inv_pows[k] = inv_pow(k - 1) * inv
        return inv_pows[k]

    total = MSeries.constant(form.constant, max_weight)
    for alpha, c in form.terms.items():
        term = MSeries.constant(c, max_weight)
        for j in alpha:
            term = term * series_j(j)
        total = total + term * inv_pow(form.denominator_power(alpha))
    if not form.classical:
        assert total.constant_term() == 0, "monotone forms have no constant term"
    return total


def monotone_from_log_form(form: LogForm, alpha) -> Fraction:
    """H_1(alpha) = d! [p_alpha] of the expanded log form."""
    alpha = Partition(alpha)
    series = expand_log_form(form, alpha.size)
    return factorial(alpha.size) * lagrange_extract(series, alpha)


def monotone_from_rational_form(form: RationalForm, alpha) -> Fraction:
    """H_g(alpha) = d! [p_alpha] of the expanded rational form."""
    alpha = Partition(alpha)
    series = expand_rational_form(form, alpha.size)
    return factorial(alpha.size) * lagrange_extract(series, alpha)


def classical_from_rational_form(form: RationalForm, alpha) -> Fraction:
    """Classical H_g(alpha) = d! r! [p_alpha] of the expanded form."""
    alpha = Partition(alpha)
    r = 2 * form.genus - 2 + alpha.length + alpha.size
    series = expand_rational_form(form, alpha.size)
    return factorial(alpha.size) * factorial(r) * classical_extract(series, alpha)


def gamma_in_p(max_weight: int) -> MSeries:
    """gamma re-expressed as a p-series by fixed-point iteration on
    gamma = sum_k C(2k,k) p_k (1-gamma)^{-2k}.

    gamma is weight-graded with no constant term, so each iteration fixes
    one more weight and max_weight rounds converge exactly.
    """
    gamma = MSeries.zero(max_weight)
    for _ in range(max_weight):
        base = (MSeries.constant(1, max_weight) - gamma).inverse()
        powers = {0: MSeries.constant(1, max_weight)}

        def bpow(k):
            if k not in powers:
                powers[k] = bpow(k - 1) * base
            return powers[k]

        total = MSeries.zero(max_weight)
        for k in range(1, max_weight + 1):
            total = total + MSeries.variable(k, max_weight).scale(
                central_binomial(k)
            ) * bpow(2 * k)
        gamma = total
    return gamma


def q_series_to_p(F: MSeries) -> MSeries:
    """Convert a q-basis series to the p basis via q_j = p_j (1-gamma)^{-2j}."""
    w = F.max_weight
    gp = gamma_in_p(w)
    base = (MSeries.constant(1, w) - gp).inverse()
    images = {
        k: MSeries.variable(k, w) * base.pow(2 * k) for k in range(1, w + 1)
    }
    return F.substitute(images)


def p_series_to_q(F: MSeries) -> MSeries:
    """Convert a p-basis series to the q basis via p_j = q_j (1-gamma)^{2j}."""
    w = F.max_weight
    gq = aux_series(w).gamma
    one_minus = MSeries.constant(1, w) - gq
    images = {
        k: MSeries.variable(k, w) * one_minus.pow(2 * k) for k in range(1, w + 1)
    }
    return F.substitute(images)
