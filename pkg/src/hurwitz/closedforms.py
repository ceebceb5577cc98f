"""Closed formulas, published-table checks, and polynomiality extraction.

Genus 0 and 1 have explicit product formulas in both families:

    monotone genus 0:  d!/|Aut| * rising(2d+1, l-3) * prod C(2a_j, a_j)
    monotone genus 1:  (1/24) d!/|Aut| prod C(2a_j, a_j)
                       * ( rising(2d+1, l) - 3 rising(2d+1, l-1)
                           - sum_{k=2}^{l} (k-2)! rising(2d+1, l-k) e_k(2a+1) )
    classical genus 0: d!/|Aut| * (d+l-2)! d^(l-3) * prod a_j^{a_j}/a_j!
    classical genus 1: (1/24) d!/|Aut| (d+l)! prod a_j^{a_j}/a_j!
                       * ( d^l - d^(l-1) - sum_{k=2}^{l} (k-2)! d^(l-k) e_k(a) )

Single-cycle monotone numbers in any genus g >= 1 come from the
Matsumoto-Novak formula

    (2d)!/d! C(2g-2+2d, 2g-2) (2g(2g-1))^-1 [z^{2g}/(2g)!] (sinh(z/2)/(z/2))^{2d-2},

the constant of the genus-g rational form from -B_{2g}/(2g(2g-2)), and
the top rational-form coefficients satisfy c_{g,alpha} = 2^{3g-3}
a_{g,alpha} against the classical tables for |alpha| = 3g-3.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .combinat import bernoulli, central_binomial, elem_sym, elem_sym_shifted, rising
from .inversion import monotone_from_rational_form
from .partitions import Partition, aut_order, partitions
from .polynomials import InconsistentDataError, PolynomialQ, interpolate, monomials_upto
from .tables import paper_form


def monotone_genus0(alpha) -> Fraction:
    alpha = Partition(alpha)
    d, ell = alpha.size, alpha.length
    if d < 1:
        raise ValueError("alpha must be nonempty")
    out = Fraction(factorial(d), aut_order(alpha)) * rising(2 * d + 1, ell - 3)
    for a in alpha:
        out *= central_binomial(a)
    return out


def monotone_genus1(alpha) -> Fraction:
    alpha = Partition(alpha)
    d, ell = alpha.size, alpha.length
    if d < 1:
        raise ValueError("alpha must be nonempty")
    bracket = rising(2 * d + 1, ell) - 3 * rising(2 * d + 1, ell - 1)
    for k in range(2, ell + 1):
        bracket -= (
            factorial(k - 2) * rising(2 * d + 1, ell - k) * elem_sym_shifted(alpha, k)
        )
    out = Fraction(factorial(d), 24 * aut_order(alpha)) * bracket
    for a in alpha:
        out *= central_binomial(a)
    return out


def classical_genus0(alpha) -> Fraction:
    alpha = Partition(alpha)
    d, ell = alpha.size, alpha.length
    if d < 1:
        raise ValueError("alpha must be nonempty")
    out = Fraction(factorial(d), aut_order(alpha)) * factorial(d + ell - 2)
    out *= Fraction(d) ** (ell - 3)
    for a in alpha:
        out *= Fraction(a**a, factorial(a))
    return out


def classical_genus1(alpha) -> Fraction:
    alpha = Partition(alpha)
    d, ell = alpha.size, alpha.length
    if d < 1:
        raise ValueError("alpha must be nonempty")
    bracket = Fraction(d) ** ell - Fraction(d) ** (ell - 1)
    for k in range(2, ell + 1):
        bracket -= factorial(k - 2) * Fraction(d) ** (ell - k) * elem_sym(alpha, k)
    out = Fraction(factorial(d), 24 * aut_order(alpha)) * factorial(d + ell) * bracket
    for a in alpha:
        out *= Fraction(a**a, factorial(a))
    return out


def _sinh_ratio_even_coeffs(power: int, terms: int) -> list[Fraction]:
    """Even coefficients c_m of (sinh(z/2)/(z/2))^power = sum c_m z^(2m)."""
    base = [Fraction(1, 4**m * factorial(2 * m + 1)) for m in range(terms)]
    out = [Fraction(1)] + [Fraction(0)] * (terms - 1)
    for _ in range(power):
        nxt = [Fraction(0)] * terms
        for i, a in enumerate(out):
            if not a:
                continue
            for j in range(terms - i):
                nxt[i + j] += a * base[j]
        out = nxt
    return out


def mn_single_cycle(g: int, d: int) -> Fraction:
    """Monotone H_g((d)) for a single cycle, any genus g >= 1."""
    if g < 1 or d < 1:
        raise ValueError("need g >= 1 and d >= 1")
    coeff = _sinh_ratio_even_coeffs(2 * d - 2, g + 1)[g] * factorial(2 * g)
    return (
        Fraction(factorial(2 * d), factorial(d))
        * comb(2 * g - 2 + 2 * d, 2 * g - 2)
        * Fraction(1, 2 * g * (2 * g - 1))
        * coeff
    )


def bernoulli_constant(g: int) -> Fraction:
    """c_{g,()} = -B_{2g} / (2g (2g-2)) for g >= 2."""
    if g < 2:
        raise ValueError("the constant law starts at genus 2")
    return -bernoulli(2 * g) / (2 * g * (2 * g - 2))


def scaling_check(g: int, pipeline_form=None) -> bool:
    """c_{g,alpha} == 2^(3g-3) a_{g,alpha} for all alpha of size 3g-3.

    The classical a's come from the checked-in tables; the monotone c's
    come from the operator pipeline unless a form is supplied.
    """
    if pipeline_form is None:
        from .pipeline import rational_form

        pipeline_form = rational_form(g)
    classical = paper_form(g, classical=True)
    top = 3 * g - 3
    scale = 2**top
    monotone_top = {a: c for a, c in pipeline_form.terms.items() if a.size == top}
    classical_top = {a: c for a, c in classical.terms.items() if a.size == top}
    if set(monotone_top) != set(classical_top):
        return False
    return all(monotone_top[a] == scale * classical_top[a] for a in monotone_top)


# -- polynomiality -------------------------------------------------------


def normalized_value(g: int, alpha) -> Fraction:
    """H_g(alpha) |Aut alpha| / (d! prod C(2 a_j, a_j)): the quantity that
    is polynomial in the parts for fixed (g, len)."""
    alpha = Partition(alpha)
    h = _monotone_value(g, alpha)
    denom = Fraction(factorial(alpha.size))
    for a in alpha:
        denom *= central_binomial(a)
    return h * aut_order(alpha) / denom


def _monotone_value(g: int, alpha) -> Fraction:
    """Cheapest exact source of H_g(alpha) per genus."""
    if g == 0:
        return monotone_genus0(alpha)
    if g == 1:
        return monotone_genus1(alpha)
    from .pipeline import rational_form  # local: avoids an import cycle

    return monotone_from_rational_form(rational_form(g), alpha)


def _sample_partitions(ell: int, count: int, max_part: int = 8):
    """Distinct partitions with exactly ell parts, small sizes first."""
    out = []
    size = ell
    while len(out) < count and size <= ell * max_part:
        for a in partitions(size):
            if a.length == ell and a[0] <= max_part:
                out.append(a)
        size += 1
    if len(out) < count:
        raise ValueError(f"cannot find {count} sample partitions with {ell} parts")
    return out


def polynomiality_extract(
    g: int,
    ell: int,
    samples=None,
    holdouts: int = 3,
    max_degree: int = 8,
) -> PolynomialQ:
    """Interpolate the polynomial behind the normalized monotone numbers.

    The degree is raised until an exact fit on the sample partitions (with
    every coordinate permutation included, since the polynomial is
    symmetric) verifies on held-out partitions.  Raises on failure.
    """
    if (g, ell) in {(0, 1), (0, 2)}:
        raise ValueError(f"no polynomial exists for (g, ell) = {(g, ell)}")
    from itertools import permutations as iperm

    if samples is None:
        samples = _sample_partitions(ell, {1: 8, 2: 33}.get(ell, 26))
    samples = [Partition(a) for a in samples]
    if any(a.length != ell for a in samples):
        raise ValueError("every sample must have exactly ell parts")
    held = samples[-holdouts:]
    fit = samples[:-holdouts]
    values = {a: normalized_value(g, a) for a in samples}

    points = []
    for a in fit:
        for perm in set(iperm(tuple(a))):
            points.append((perm, values[a]))

    last_error: Exception | None = None
    for degree in range(max_degree + 1):
        if len(points) < len(monomials_upto(ell, degree)):
            continue
        try:
            poly = interpolate(points, degree)
        except InconsistentDataError as exc:
            last_error = exc
            continue
        if all(poly(tuple(a)) == values[a] for a in held):
            return poly
    raise InconsistentDataError(
        f"no polynomial of degree <= {max_degree} verifies for (g, ell) = {(g, ell)}"
    ) from last_error
