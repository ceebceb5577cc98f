"""The polynomial ring carrying the genus recursion, and its operators.

Generators and their shorthand in this module:

    U   = (1 - 4 y)^(-1)            (exponents may be half-integers)
    V   = (1 - eta)^(-1)
    H_k = eta_k (1 - eta)^(-1)      (k >= 1)

A ring element is a finite Fraction-linear combination of monomials
U^(u2/2) V^v H_{k1} H_{k2} ..., stored as a dict keyed by
(u2, v, (k1 <= k2 <= ...)) with u2, v nonnegative integers (u2 counts
half-units of the U exponent).  The honest ring R consists of elements
with v = 0 and even u2; the weighted degree of an honest monomial is
u2/2 + k1 + k2 + ... and R_d collects weighted degrees <= d.

The y-dependent series are never stored as series; they are resolved on
sight into U-polynomials times a half power of U:

    eta_j(y) = (y d/dy)^j (1-4y)^(-3/2) = P_j(U) U^(1/2),
    eta(y) - gamma(y) = 4y (1-4y)^(-3/2) = (U - 1) U^(1/2),

with P_0 = U and P_{j+1} = U(U-1) P_j' + (U-1) P_j / 2.

The lifting derivation acts on the generators by

    D U^e  = e (U-1)^2 U^(e+1/2) V,
    D V    = P_1(U) U^(1/2) V^2 + (U-1) U^(1/2) V^2 H_1,
    D H_j  = P_{j+1}(U) U^(1/2) V + (U-1) U^(1/2) V H_{j+1}
             + P_1(U) U^(1/2) V H_j + (U-1) U^(1/2) V H_j H_1,

and extends by the product rule.  The transfer operator T acts on honest
elements through the power basis Y^k, Y = y (1-4y)^(-1) = (U-1)/4:

    T(1) = T(Y) = 0,
    T(Y^k) = sum_{i=1}^{k-1} Y^(k-i) proj(i),      k >= 2,

where proj(i) is the projection of y^i (1-4y)^(-3/2-i) back to the
eta_j series, divided by (1 - eta); it is computed by exact polynomial
fitting of the coefficient sequence against (2k+1) C(2k,k) k^j and is
verified on extra points.  T is linear over V and the H_k.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .combinat import central_binomial, rising
from .polynomials import interpolate

Key = tuple[int, int, tuple[int, ...]]

ONE_KEY: Key = (0, 0, ())


class RingElement:
    """Immutable-by-convention exact linear combination of ring monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Key, Fraction] = {}
        for (u2, v, hs), c in (terms or {}).items():
            if u2 < 0 or v < 0:
                raise ValueError("negative exponents are not representable")
            c = Fraction(c)
            if c:
                clean[(u2, v, tuple(sorted(hs)))] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "RingElement":
        return cls()

    @classmethod
    def one(cls) -> "RingElement":
        return cls({ONE_KEY: Fraction(1)})

    @classmethod
    def monomial(cls, u2=0, v=0, hs=(), coeff=1) -> "RingElement":
        return cls({(u2, v, tuple(hs)): Fraction(coeff)})

    @classmethod
    def from_u_poly(cls, poly: dict[int, Fraction], u2_shift=0, v=0, hs=()) -> "RingElement":
        """Element sum_e poly[e] U^(e + u2_shift/2) V^v H_hs."""
        return cls(
            {(2 * e + u2_shift, v, tuple(hs)): c for e, c in poly.items()}
        )

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "RingElement") -> "RingElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = RingElement.__new__(RingElement)
        res.terms = out
        return res

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + other.scale(-1)

    def scale(self, c) -> "RingElement":
        c = Fraction(c)
        res = RingElement.__new__(RingElement)
        res.terms = {k: c * x for k, x in self.terms.items()} if c else {}
        return res

    def __mul__(self, other: "RingElement") -> "RingElement":
        out: dict[Key, Fraction] = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for (u1, v1, h1), c1 in a.items():
            for (u0, v0, h0), c0 in b.items():
                key = (u1 + u0, v1 + v0, tuple(sorted(h1 + h0)))
                s = out.get(key, Fraction(0)) + c1 * c0
                if s:
                    out[key] = s
                else:
                    del out[key]
        res = RingElement.__new__(RingElement)
        res.terms = out
        return res

    def __eq__(self, other) -> bool:
        return isinstance(other, RingElement) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"RingElement({len(self.terms)} terms)"

    def shift_u2(self, du2: int) -> "RingElement":
        """Multiply by U^(du2/2); negative shifts must stay representable."""
        out = {}
        for (u2, v, hs), c in self.terms.items():
            if u2 + du2 < 0:
                raise ValueError("shift would create a negative U exponent")
            out[(u2 + du2, v, hs)] = c
        res = RingElement.__new__(RingElement)
        res.terms = out
        return res

    def shift_v(self, dv: int) -> "RingElement":
        """Multiply by V^dv; negative shifts must stay representable."""
        out = {}
        for (u2, v, hs), c in self.terms.items():
            if v + dv < 0:
                raise ValueError("shift would create a negative V exponent")
            out[(u2, v + dv, hs)] = c
        res = RingElement.__new__(RingElement)
        res.terms = out
        return res

    # -- structure checks ----------------------------------------------

    def is_honest(self) -> bool:
        """True if the element lies in the ring proper: no V, integer U."""
        return all(v == 0 and u2 % 2 == 0 for (u2, v, _hs) in self.terms)

    def weighted_degree(self) -> Fraction:
        """Max over monomials of u2/2 + sum of H indices (-1 for zero)."""
        if not self.terms:
            return Fraction(-1)
        return max(Fraction(u2, 2) + sum(hs) for (u2, _v, hs) in self.terms)

    def in_ring(self, d: int) -> bool:
        return self.is_honest() and self.weighted_degree() <= d

    def u_degree2(self) -> int:
        return max((u2 for (u2, _v, _hs) in self.terms), default=-1)


# -- U-polynomial helpers ------------------------------------------------


@lru_cache(maxsize=None)
def eta_y_upoly(j: int) -> tuple[tuple[int, Fraction], ...]:
    """P_j with eta_j(y) = P_j(U) U^(1/2); P_0 = U."""
    if j == 0:
        return ((1, Fraction(1)),)
    prev = dict(eta_y_upoly(j - 1))
    out: dict[int, Fraction] = {}
    for e, c in prev.items():
        f = (Fraction(e) + Fraction(1, 2)) * c
        out[e + 1] = out.get(e + 1, Fraction(0)) + f
        out[e] = out.get(e, Fraction(0)) - f
    return tuple(sorted((e, c) for e, c in out.items() if c))


def _eta_y_element(j: int, extra_v: int, hs=()) -> RingElement:
    """eta_j(y) U^(1/2-free form): P_j(U) U^(1/2) V^extra_v H_hs."""
    return RingElement.from_u_poly(dict(eta_y_upoly(j)), u2_shift=1, v=extra_v, hs=hs)


# factor multiplying a monomial when the derivation hits its U part:
# (U-1)^2 U^(1/2) V
_DU = RingElement(
    {
        (5, 1, ()): Fraction(1),
        (3, 1, ()): Fraction(-2),
        (1, 1, ()): Fraction(1),
    }
)

# (U-1) U^(1/2) = the resolved form of eta(y) - gamma(y)
_ETA_MINUS_GAMMA = RingElement({(3, 0, ()): Fraction(1), (1, 0, ()): Fraction(-1)})


@lru_cache(maxsize=None)
def _dv_factor() -> RingElement:
    # D V / V = P_1(U) U^(1/2) V + (U-1) U^(1/2) V H_1
    return _eta_y_element(1, 1) + _ETA_MINUS_GAMMA * RingElement.monomial(v=1, hs=(1,))


@lru_cache(maxsize=None)
def _dh_factor(j: int) -> RingElement:
    # D H_j with the H_j factor removed where it survives
    keep = _eta_y_element(j + 1, 1)
    up = _ETA_MINUS_GAMMA * RingElement.monomial(v=1, hs=(j + 1,))
    same = _eta_y_element(1, 1, hs=(j,))
    prod = _ETA_MINUS_GAMMA * RingElement.monomial(v=1, hs=(j, 1))
    return keep + up + same + prod


def apply_delta1(F: RingElement, m: int = 0) -> RingElement:
    """The lifting derivation applied to V^m F, by the product rule."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m:
        F = F.shift_v(m)
    out = RingElement.zero()
    for (u2, v, hs), c in F.terms.items():
        base = RingElement.monomial(u2, v, hs, c)
        if u2:
            out = out + base * _DU.scale(Fraction(u2, 2))
        if v:
            out = out + base * _dv_factor().scale(v)
        for j in set(hs):
            mult = hs.count(j)
            stripped = list(hs)
            stripped.remove(j)
            out = out + RingElement.monomial(u2, v, tuple(stripped), c).scale(
                mult
            ) * _dh_factor(j)
    return out


def delta1_sq_H0() -> RingElement:
    """The genus-0 double lift: y^2 (1-4y)^(-2) = Y^2 = ((U-1)/4)^2."""
    return RingElement(
        {
            (4, 0, ()): Fraction(1, 16),
            (2, 0, ()): Fraction(-1, 8),
            (0, 0, ()): Fraction(1, 16),
        }
    )


# -- the transfer operator T ---------------------------------------------


class ProjectionFitError(AssertionError):
    """The coefficient sequence failed to fit the eta_j pattern."""


@lru_cache(maxsize=None)
def pi2_project(i: int) -> RingElement:
    """(1 - eta)^(-1) * projection of y^i (1-4y)^(-3/2-i) onto the series
    generated by eta, eta_1, eta_2, ... (constant term dropped).

    The coefficient of y^k is (2k+1) C(2k,k) p(k) for a polynomial p of
    degree <= i; p is interpolated exactly on k = 1..i+1 and verified on
    k = i+2..i+4.  The result is p(0) (V - 1) + sum_j p_j H_j.
    """
    if i < 0:
        raise ValueError("i must be >= 0")

    def a(k: int) -> Fraction:
        if k < i:
            return Fraction(0)
        m = k - i
        return 4**m * rising(Fraction(3, 2) + i, m) / factorial(m)

    pts = [
        ((Fraction(k),), a(k) / ((2 * k + 1) * central_binomial(k)))
        for k in range(1, i + 2)
    ]
    poly = interpolate(pts, i)
    for k in range(i + 2, i + 5):
        if poly((Fraction(k),)) * (2 * k + 1) * central_binomial(k) != a(k):
            raise ProjectionFitError(f"projection fit failed at i={i}, k={k}")
    coeffs = {e[0]: c for e, c in poly.coeffs.items()}
    if i >= 1 and coeffs.get(0):
        raise ProjectionFitError(f"projection at i={i} has a spurious eta term")
    out = RingElement.zero()
    p0 = coeffs.get(0, Fraction(0))
    if p0:
        # eta (1-eta)^(-1) = V - 1
        out = out + RingElement({(0, 1, ()): p0, ONE_KEY: -p0})
    for j in range(1, i + 1):
        pj = coeffs.get(j)
        if pj:
            out = out + RingElement.monomial(hs=(j,), coeff=pj)
    return out


@lru_cache(maxsize=None)
def _y_power(m: int) -> tuple[tuple[int, Fraction], ...]:
    """Y^m = ((U-1)/4)^m as a U-polynomial."""
    out = {
        e: Fraction(comb(m, e) * (-1) ** (m - e), 4**m) for e in range(m + 1)
    }
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _t_on_y_power(k: int) -> RingElement:
    if k <= 1:
        return RingElement.zero()
    out = RingElement.zero()
    for i in range(1, k):
        ypow = RingElement.from_u_poly(dict(_y_power(k - i)))
        out = out + ypow * pi2_project(i)
    return out


@lru_cache(maxsize=None)
def _t_on_u_power(e: int) -> RingElement:
    """T(U^e) via U = 4Y + 1 and linearity."""
    out = RingElement.zero()
    for k in range(2, e + 1):
        out = out + _t_on_y_power(k).scale(comb(e, k) * 4**k)
    return out


def apply_T(F: RingElement) -> RingElement:
    """T on an honest element (integer U exponents), linear over V, H_k."""
    out = RingElement.zero()
    for (u2, v, hs), c in F.terms.items():
        if u2 % 2:
            raise ValueError("T is defined on integer U exponents only")
        out = out + RingElement.monomial(0, v, hs, c) * _t_on_u_power(u2 // 2)
    return out


def invert_one_minus_T(F: RingElement) -> RingElement:
    """(1 - T)^(-1) F = F + T F + T^2 F + ...; T is locally nilpotent.

    Post-verifies (1 - T)(result) == F exactly.
    """
    total = F
    current = F
    # T strictly lowers the U degree, so it dies after u_degree + 1 rounds
    for _ in range(F.u_degree2() // 2 + 2):
        current = apply_T(current)
        if not current:
            break
        total = total + current
    else:
        raise AssertionError("T failed to nilpotate within the degree bound")
    if total - apply_T(total) != F:
        raise AssertionError("(1 - T) inverse verification failed")
    return total
