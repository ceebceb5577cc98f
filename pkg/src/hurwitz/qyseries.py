"""Truncated series in the q's plus two catalytic variables, and the
literal lifting/projection/splitting operators acting on them.

This module is the series-level oracle for the algebraic operator ring:
everything here is defined directly from the operator formulas

    lift(G)  = sum_k k y1^k dG/dq_k
               + 4 y1 (1-4y1)^(-3/2) (1-eta)^(-1)
                 ( sum_k k q_k dG/dq_k + y1 dG/dy1 + y2 dG/dy2 ),
    proj(M)  = [y2^0] M + sum_k q_k [y2^k] M,
    split(F) = (y2 F(y1) - y1 F(y2)) / (y1 - y2) + F(0),
    T(F)     = (1-eta)^(-1) proj( (1-4y2)^(-3/2) split( (1-4y1) F ) ),

with no reference to the ring representation, so agreement between the
two is a genuine two-route check.  The same container also hosts the
original-coordinate lift sum_k k x1^k d/dp_k (an MSeries slice embedded
with an extra catalytic variable) used to validate the pipeline against
the join-cut tables; only the naming of the variables differs.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .combinat import rising
from .inversion import aux_series
from .ring import RingElement
from .series import MSeries

QKey = tuple[tuple[int, ...], int, int]  # (q monomial, y1 degree, y2 degree)


class BiSeries:
    """Series in Q[[q]][[y1, y2]] truncated at q-weight wq and y-degrees
    w1, w2."""

    __slots__ = ("wq", "w1", "w2", "coeffs")

    def __init__(self, wq: int, w1: int, w2: int, coeffs=None):
        self.wq = wq
        self.w1 = w1
        self.w2 = w2
        clean: dict[QKey, Fraction] = {}
        for (mono, a, b), c in (coeffs or {}).items():
            mono = tuple(sorted(mono, reverse=True))
            if sum(mono) > wq or a > w1 or b > w2:
                continue
            c = Fraction(c)
            if c:
                clean[(mono, a, b)] = c
        self.coeffs = clean

    def _bounds(self, other: "BiSeries") -> tuple[int, int, int]:
        return (
            min(self.wq, other.wq),
            min(self.w1, other.w1),
            min(self.w2, other.w2),
        )

    @classmethod
    def constant(cls, value, wq: int, w1: int, w2: int) -> "BiSeries":
        return cls(wq, w1, w2, {((), 0, 0): Fraction(value)})

    @classmethod
    def from_mseries(cls, F: MSeries, wq: int, w1: int, w2: int) -> "BiSeries":
        return cls(wq, w1, w2, {(m, 0, 0): c for m, c in F.coeffs.items()})

    @classmethod
    def y_binomial(cls, numer2: int, wq: int, w1: int, w2: int, var=1) -> "BiSeries":
        """(1 - 4 y_var)^(numer2 / 2) expanded in the chosen y variable."""
        s = Fraction(-numer2, 2)
        cap = w1 if var == 1 else w2
        out = {}
        for m in range(cap + 1):
            c = 4**m * rising(s, m) / factorial(m)
            if c:
                key = ((), m, 0) if var == 1 else ((), 0, m)
                out[key] = c
        return cls(wq, w1, w2, out)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        wq, w1, w2 = self._bounds(other)
        out = BiSeries(wq, w1, w2, self.coeffs)
        res = dict(out.coeffs)
        for key, c in other.coeffs.items():
            mono, a, b = key
            if sum(mono) > wq or a > w1 or b > w2:
                continue
            s = res.get(key, Fraction(0)) + c
            if s:
                res[key] = s
            else:
                res.pop(key, None)
        out.coeffs = res
        return out

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + other.scale(-1)

    def scale(self, v) -> "BiSeries":
        v = Fraction(v)
        out = BiSeries(self.wq, self.w1, self.w2)
        if v:
            out.coeffs = {k: v * c for k, c in self.coeffs.items()}
        return out

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        wq, w1, w2 = self._bounds(other)
        res: dict[QKey, Fraction] = {}
        small = self.coeffs
        big = other.coeffs
        if len(small) > len(big):
            small, big = big, small
        for (m1, a1, b1), c1 in small.items():
            for (m2, a2, b2), c2 in big.items():
                a = a1 + a2
                b = b1 + b2
                if a > w1 or b > w2:
                    continue
                mono = tuple(sorted(m1 + m2, reverse=True))
                if sum(mono) > wq:
                    continue
                key = (mono, a, b)
                s = res.get(key, Fraction(0)) + c1 * c2
                if s:
                    res[key] = s
                else:
                    del res[key]
        out = BiSeries(wq, w1, w2)
        out.coeffs = res
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiSeries)
            and (self.wq, self.w1, self.w2) == (other.wq, other.w1, other.w2)
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"BiSeries(wq={self.wq}, w1={self.w1}, w2={self.w2}, {len(self.coeffs)} terms)"

    def restrict(self, wq: int, w1: int, w2: int) -> "BiSeries":
        return BiSeries(wq, w1, w2, self.coeffs)

    def dq(self, k: int) -> "BiSeries":
        out: dict[QKey, Fraction] = {}
        for (mono, a, b), c in self.coeffs.items():
            m = mono.count(k)
            if not m:
                continue
            rest = list(mono)
            rest.remove(k)
            key = (tuple(rest), a, b)
            s = out.get(key, Fraction(0)) + m * c
            if s:
                out[key] = s
            else:
                del out[key]
        res = BiSeries(self.wq, self.w1, self.w2)
        res.coeffs = out
        return res

    def dy(self, var: int) -> "BiSeries":
        out: dict[QKey, Fraction] = {}
        for (mono, a, b), c in self.coeffs.items():
            deg = a if var == 1 else b
            if not deg:
                continue
            key = (mono, a - 1, b) if var == 1 else (mono, a, b - 1)
            s = out.get(key, Fraction(0)) + deg * c
            if s:
                out[key] = s
            else:
                del out[key]
        res = BiSeries(self.wq, self.w1, self.w2)
        res.coeffs = out
        return res

    def y2_coefficient(self, k: int) -> "BiSeries":
        res = BiSeries(self.wq, self.w1, self.w2)
        res.coeffs = {
            (mono, a, 0): c for (mono, a, b), c in self.coeffs.items() if b == k
        }
        return res

    def substitute(self, qmap: dict[int, MSeries], yscale: MSeries) -> "BiSeries":
        """q_k -> qmap[k] and y1 -> y1 * yscale (a constant-term-1 series of
        the target variables); the result is read in the new basis."""
        out = BiSeries(self.wq, self.w1, self.w2)
        pow_cache: dict[tuple[int, int], BiSeries] = {}

        def qpow(k: int, e: int) -> BiSeries:
            if (k, e) not in pow_cache:
                if qmap[k].constant_term() != 0:
                    raise ValueError("substitution images must be constant-free")
                base = BiSeries.from_mseries(qmap[k].truncate(self.wq), self.wq, self.w1, self.w2)
                acc = BiSeries.constant(1, self.wq, self.w1, self.w2)
                for _ in range(e):
                    acc = acc * base
                pow_cache[(k, e)] = acc
            return pow_cache[(k, e)]

        ys_cache: dict[int, BiSeries] = {}

        def ypow_scale(a: int) -> BiSeries:
            if a not in ys_cache:
                base = BiSeries.from_mseries(yscale.truncate(self.wq), self.wq, self.w1, self.w2)
                acc = BiSeries.constant(1, self.wq, self.w1, self.w2)
                for _ in range(a):
                    acc = acc * base
                ys_cache[a] = acc
            return ys_cache[a]

        for (mono, a, b), c in self.coeffs.items():
            if b:
                raise ValueError("substitution is defined for y2-free series")
            term = BiSeries(self.wq, self.w1, self.w2, {((), a, 0): c})
            term = term * ypow_scale(a)
            for k in sorted(set(mono)):
                term = term * qpow(k, mono.count(k))
            out = out + term
        return out


# -- the literal operators ------------------------------------------------


def prefactor(wq: int, w1: int, w2: int) -> BiSeries:
    """4 y1 (1-4y1)^(-3/2) (1-eta)^(-1) as a concrete series."""
    eta = aux_series(wq).eta
    v = BiSeries.from_mseries(
        (MSeries.constant(1, wq) - eta).inverse(), wq, w1, w2
    )
    y1 = BiSeries(wq, w1, w2, {((), 1, 0): Fraction(4)})
    return y1 * BiSeries.y_binomial(-3, wq, w1, w2) * v


def lift_literal(G: BiSeries) -> BiSeries:
    """The transformed-coordinate lifting operator, term by term."""
    wq, w1, w2 = G.wq, G.w1, G.w2
    out = BiSeries(wq, w1, w2)
    for k in range(1, wq + 1):
        d = G.dq(k)
        if d.coeffs:
            yk = BiSeries(wq, w1, w2, {((), k, 0): Fraction(k)})
            out = out + yk * d
    euler = BiSeries(wq, w1, w2)
    for k in range(1, wq + 1):
        d = G.dq(k)
        if d.coeffs:
            qk = BiSeries(wq, w1, w2, {((k,), 0, 0): Fraction(k)})
            euler = euler + qk * d
    y1dy1 = BiSeries(wq, w1, w2, {((), 1, 0): Fraction(1)}) * G.dy(1)
    y2dy2 = BiSeries(wq, w1, w2, {((), 0, 1): Fraction(1)}) * G.dy(2)
    return out + prefactor(wq, w1, w2) * (euler + y1dy1 + y2dy2)


def lift_px(G: BiSeries) -> BiSeries:
    """The original-coordinate lift sum_k k x^k d/dp_k (G read in (p, x))."""
    wq, w1, w2 = G.wq, G.w1, G.w2
    out = BiSeries(wq, w1, w2)
    for k in range(1, wq + 1):
        d = G.dq(k)
        if d.coeffs:
            xk = BiSeries(wq, w1, w2, {((), k, 0): Fraction(k)})
            out = out + xk * d
    return out


def split_1_to_2(F: BiSeries) -> BiSeries:
    """(y2 F(y1) - y1 F(y2)) / (y1 - y2) + F(0) for a y2-free series."""
    out: dict[QKey, Fraction] = {}
    for (mono, n, b), c in F.coeffs.items():
        if b:
            raise ValueError("split expects a y2-free series")
        # y1^n maps to sum_{i=1}^{n-1} y1^i y2^(n-i); constants and y1 die
        for i in range(1, n):
            if i > F.w1 or n - i > F.w2:
                continue
            key = (mono, i, n - i)
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                del out[key]
    res = BiSeries(F.wq, F.w1, F.w2)
    res.coeffs = out
    return res


def project_2(M: BiSeries) -> BiSeries:
    """[y2^0] M + sum_k q_k [y2^k] M."""
    out = M.y2_coefficient(0)
    for k in range(1, M.wq + 1):
        piece = M.y2_coefficient(k)
        if piece.coeffs:
            qk = BiSeries(M.wq, M.w1, M.w2, {((k,), 0, 0): Fraction(1)})
            out = out + qk * piece
    return out


def transfer_literal(F: BiSeries) -> BiSeries:
    """T as literally composed from split, the y2 weight, and projection."""
    wq, w1, w2 = F.wq, F.w1, F.w2
    one_minus_4y1 = BiSeries(
        wq, w1, w2, {((), 0, 0): Fraction(1), ((), 1, 0): Fraction(-4)}
    )
    inner = split_1_to_2(one_minus_4y1 * F)
    inner = BiSeries.y_binomial(-3, wq, w1, w2, var=2) * inner
    eta = aux_series(wq).eta
    v = BiSeries.from_mseries((MSeries.constant(1, wq) - eta).inverse(), wq, w1, w2)
    return v * project_2(inner)


# -- expanding ring elements into series -----------------------------------


def expand_ring_element(E: RingElement, wq: int, w1: int, w2: int = 0) -> BiSeries:
    """Concrete (q, y1)-series of a ring element."""
    aux = aux_series(wq, j_max=max((max(hs) for (_, _, hs) in E.terms if hs), default=0))
    v_series = (MSeries.constant(1, wq) - aux.eta).inverse()
    out = BiSeries(wq, w1, w2)
    qcache: dict[tuple[int, tuple[int, ...]], MSeries] = {}
    for (u2, v, hs), c in E.terms.items():
        key = (v, hs)
        if key not in qcache:
            qpart = v_series.pow(v + len(hs))
            for j in hs:
                qpart = qpart * aux.eta_j(j)
            qcache[key] = qpart
        term = BiSeries.from_mseries(qcache[key], wq, w1, w2).scale(c)
        if u2:
            term = term * BiSeries.y_binomial(-u2, wq, w1, w2)
        out = out + term
    return out
