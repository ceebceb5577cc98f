"""Truncated multivariate formal power series over Fraction.

A series lives in Q[[v_1, v_2, ...]] for one indexed family of variables
(the p's or the q's -- the engine is basis-agnostic) and is graded by
weight: the variable with index k has weight k.  A monomial is a weakly
decreasing tuple of indices, so monomials are in bijection with partitions
and the weight of a monomial is the size of its partition.  Everything is
truncated at a fixed maximum weight; binary operations truncate eagerly to
the smaller of the two bounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .partitions import Partition


def _key(mono) -> tuple[int, ...]:
    return tuple(sorted(mono, reverse=True))


class MSeries:
    """Weight-truncated power series; immutable by convention."""

    __slots__ = ("max_weight", "coeffs")

    def __init__(self, max_weight: int, coeffs=None):
        if max_weight < 0:
            raise ValueError("max_weight must be >= 0")
        self.max_weight = max_weight
        clean: dict[tuple[int, ...], Fraction] = {}
        for mono, c in (coeffs or {}).items():
            key = _key(mono)
            if sum(key) > max_weight:
                continue
            c = Fraction(c)
            if c:
                clean[key] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, max_weight: int) -> "MSeries":
        return cls(max_weight)

    @classmethod
    def constant(cls, value, max_weight: int) -> "MSeries":
        return cls(max_weight, {(): Fraction(value)})

    @classmethod
    def variable(cls, k: int, max_weight: int) -> "MSeries":
        return cls(max_weight, {(k,): Fraction(1)})

    @classmethod
    def linear(cls, coeff_of_index, max_weight: int) -> "MSeries":
        """Series sum_k c(k) v_k with c given by a callable on k."""
        return cls(
            max_weight,
            {(k,): Fraction(coeff_of_index(k)) for k in range(1, max_weight + 1)},
        )

    # -- basic queries -----------------------------------------------

    def __getitem__(self, mono) -> Fraction:
        return self.coeffs.get(_key(mono), Fraction(0))

    def coefficient(self, alpha) -> Fraction:
        """[v_alpha] of the series (alpha any partition-like iterable)."""
        return self[alpha]

    def constant_term(self) -> Fraction:
        return self.coeffs.get((), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MSeries)
            and self.max_weight == other.max_weight
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        raise TypeError("MSeries is not hashable")

    def __repr__(self) -> str:
        n = len(self.coeffs)
        return f"MSeries(weight<={self.max_weight}, {n} terms)"

    # -- arithmetic ---------------------------------------------------

    def truncate(self, max_weight: int) -> "MSeries":
        if max_weight > self.max_weight:
            raise ValueError(
                "cannot extend a truncated series (coefficients above "
                f"weight {self.max_weight} are unknown)"
            )
        if max_weight == self.max_weight:
            out = MSeries(max_weight)
            out.coeffs = dict(self.coeffs)
            return out
        return MSeries(max_weight, self.coeffs)

    def __add__(self, other) -> "MSeries":
        if not isinstance(other, MSeries):
            return self + MSeries.constant(other, self.max_weight)
        w = min(self.max_weight, other.max_weight)
        out = dict(self.truncate(w).coeffs)
        for mono, c in other.coeffs.items():
            if sum(mono) > w:
                continue
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        res = MSeries(w)
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "MSeries":
        res = MSeries(self.max_weight)
        res.coeffs = {m: -c for m, c in self.coeffs.items()}
        return res

    def __sub__(self, other) -> "MSeries":
        if not isinstance(other, MSeries):
            other = MSeries.constant(other, self.max_weight)
        return self + (-other)

    def __rsub__(self, other) -> "MSeries":
        return MSeries.constant(other, self.max_weight) + (-self)

    def scale(self, value) -> "MSeries":
        value = Fraction(value)
        res = MSeries(self.max_weight)
        if value:
            res.coeffs = {m: value * c for m, c in self.coeffs.items()}
        return res

    def __mul__(self, other) -> "MSeries":
        if not isinstance(other, MSeries):
            return self.scale(other)
        w = min(self.max_weight, other.max_weight)
        out: dict[tuple[int, ...], Fraction] = {}
        # iterate the smaller operand outside
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        for m1, c1 in a.items():
            w1 = sum(m1)
            if w1 > w:
                continue
            room = w - w1
            for m2, c2 in b.items():
                if sum(m2) > room:
                    continue
                key = _key(m1 + m2)
                s = out.get(key, Fraction(0)) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        res = MSeries(w)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def pow(self, n: int) -> "MSeries":
        """Integer power; negative n requires an invertible constant term."""
        if n < 0:
            return self.inverse().pow(-n)
        result = MSeries.constant(1, self.max_weight)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self) -> "MSeries":
        """Multiplicative inverse; constant term must be nonzero."""
        c0 = self.constant_term()
        if c0 == 0:
            raise ZeroDivisionError("series has zero constant term")
        # 1/(c0 (1 + t)) with t = self/c0 - 1 of weight >= 1: alternating
        # geometric sum, exact after max_weight terms.
        t = self.scale(Fraction(1) / c0) - 1
        out = MSeries.constant(1, self.max_weight)
        power = MSeries.constant(1, self.max_weight)
        sign = 1
        for _ in range(self.max_weight):
            power = power * t
            sign = -sign
            if power.is_zero():
                break
            out = out + power.scale(sign)
        return out.scale(Fraction(1) / c0)

    def derivative(self, k: int) -> "MSeries":
        """Partial derivative with respect to the index-k variable."""
        out: dict[tuple[int, ...], Fraction] = {}
        for mono, c in self.coeffs.items():
            m = mono.count(k)
            if m == 0:
                continue
            rest = list(mono)
            rest.remove(k)
            key = tuple(rest)
            s = out.get(key, Fraction(0)) + m * c
            if s:
                out[key] = s
            else:
                del out[key]
        res = MSeries(self.max_weight)
        res.coeffs = out
        return res

    def substitute(self, images: dict[int, "MSeries"]) -> "MSeries":
        """Replace each variable v_k by images[k]; indices without an image
        raise.  Substitution must not lower weights below the grading
        (every image must have zero constant term) or truncation would be
        unsound."""
        w = self.max_weight
        cache: dict[tuple[int, int], MSeries] = {}

        def image_power(k: int, e: int) -> MSeries:
            key = (k, e)
            if key not in cache:
                img = images[k]
                if img.constant_term() != 0:
                    raise ValueError("substitution images must have no constant term")
                cache[key] = img.truncate(w).pow(e)
            return cache[key]

        total = MSeries.zero(w)
        for mono, c in self.coeffs.items():
            term = MSeries.constant(c, w)
            for k in sorted(set(mono)):
                term = term * image_power(k, mono.count(k))
            total = total + term
        return total

    def exp(self) -> "MSeries":
        """exp of a constant-free series."""
        if self.constant_term() != 0:
            raise ValueError("exp needs a constant-free series")
        out = MSeries.constant(1, self.max_weight)
        power = MSeries.constant(1, self.max_weight)
        for m in range(1, self.max_weight + 1):
            power = power * self
            if power.is_zero():
                break
            out = out + power.scale(Fraction(1, factorial(m)))
        return out

    def log_geometric(self) -> "MSeries":
        """log(1/(1 - x)) = sum_m x^m / m for a constant-free series x."""
        if self.constant_term() != 0:
            raise ValueError("log needs a constant-free series")
        out = MSeries.zero(self.max_weight)
        power = MSeries.constant(1, self.max_weight)
        for m in range(1, self.max_weight + 1):
            power = power * self
            if power.is_zero():
                break
            out = out + power.scale(Fraction(1, m))
        return out

    def monomials(self):
        """Iterate (Partition, coefficient) pairs in a canonical order."""
        for mono in sorted(self.coeffs, key=lambda m: (sum(m), m)):
            yield Partition(mono), self.coeffs[mono]
