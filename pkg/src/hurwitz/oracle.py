"""Brute-force counting of transitive transposition factorizations in S_d.

A factorization of type (alpha, r) is a tuple (rho, tau_1, ..., tau_r) with
rho of cycle type alpha, each tau_i a transposition, rho tau_1 ... tau_r
equal to the identity, and the generated subgroup transitive on {1..d}.
Monotone factorizations additionally require, writing tau_i = (a_i b_i)
with a_i < b_i, that b_1 <= ... <= b_r.

Permutations compose left to right (x -> q(p(x)) for the product p q); any
consistent convention yields the same counts, but one has to be fixed.

Two independent monotone implementations are provided:

* a depth-first enumeration of monotone sequences (rho is forced, being the
  inverse of the product of the transpositions), and
* a dynamic program over (permutation, last maximum) states that counts
  sequences without the transitivity condition, followed by an
  inclusion-exclusion over the orbit set partition.  Disjoint-support
  monotone sequences merge in exactly one monotone interleaving (their
  b-values are disjoint sets), so the reduction needs no interleaving
  factors; the classical reduction needs the binomial C(r, r') to choose
  time slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as iter_permutations
from math import comb

from .partitions import Partition, partitions, subpartitions

DP_MAX_POINTS = 8
DFS_MAX_POINTS = 6


class ResourceLimitError(ValueError):
    """Raised when a query exceeds the oracle's feasibility bounds."""


# -- permutation helpers (tuples of images on 0..n-1) ------------------


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Left-to-right product: (p*q)(x) = q(p(x))."""
    return tuple(q[p[x]] for x in range(len(p)))


def cycle_type(p: tuple[int, ...]) -> Partition:
    n = len(p)
    seen = [False] * n
    lens = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        lens.append(length)
    return Partition(lens)


@lru_cache(maxsize=None)
def transposition(n: int, a: int, b: int) -> tuple[int, ...]:
    img = list(range(n))
    img[a], img[b] = img[b], img[a]
    return tuple(img)


@lru_cache(maxsize=None)
def conjugacy_class(n: int, alpha: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    alpha = Partition(alpha)
    if alpha.size != n:
        raise ValueError(f"{alpha} is not a partition of {n}")
    return tuple(p for p in iter_permutations(range(n)) if cycle_type(p) == alpha)


def _connected(n: int, edges, extra_cycles=()) -> bool:
    """Union-find connectivity of transposition edges plus whole cycles."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for a, b in edges:
        union(a, b)
    for cyc in extra_cycles:
        for i in range(1, len(cyc)):
            union(cyc[0], cyc[i])
    root = find(0)
    return all(find(x) == root for x in range(n))


def _cycles(p: tuple[int, ...]) -> list[list[int]]:
    n = len(p)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(cyc)
    return out


# -- route 1: depth-first enumeration (monotone) -----------------------


@lru_cache(maxsize=None)
def _dfs_tables(d: int, rmax: int) -> dict:
    """Transitive monotone counts for every (alpha, r), r <= rmax, by
    exhaustive depth-first enumeration of monotone sequences.

    Every prefix of a monotone sequence is monotone, so one DFS tree
    enumerates all lengths at once.  rho is the inverse of the product and
    transitivity is connectivity of the transposition edges (the group they
    generate contains rho).
    """
    if d > DFS_MAX_POINTS:
        raise ResourceLimitError(f"DFS oracle refuses d={d} > {DFS_MAX_POINTS}")
    table: dict[tuple[Partition, int], int] = {}

    def record(prod, edges, depth):
        if d == 1 or _connected(d, edges):
            key = (cycle_type(prod), depth)
            table[key] = table.get(key, 0) + 1

    def descend(prod, edges, depth, min_b):
        record(prod, edges, depth)
        if depth == rmax:
            return
        for b in range(min_b, d):
            for a in range(b):
                descend(
                    compose(prod, transposition(d, a, b)),
                    edges + ((a, b),),
                    depth + 1,
                    b,
                )

    descend(identity(d), (), 0, 1)
    return table


def count_monotone_transitive_dfs(alpha, r: int) -> int:
    """Independent DFS implementation of count_monotone_transitive."""
    alpha = Partition(alpha)
    return _dfs_tables(alpha.size, r).get((alpha, r), 0)


# -- route 2: DP totals + set-partition inclusion-exclusion ------------


@lru_cache(maxsize=None)
def _monotone_totals(n: int, rmax: int) -> dict:
    """Non-transitive monotone counts on n points: (type(product), r) -> count.

    DP over states (permutation, r) processed in layers of constant b: a
    monotone sequence is, for b = 2..n in order, an ordered block of
    transpositions (a b) with a < b.
    """
    if n > DP_MAX_POINTS:
        raise ResourceLimitError(f"DP oracle refuses d={n} > {DP_MAX_POINTS}")
    states = {(identity(n), 0): 1}
    for b in range(1, n):
        frontier = states
        acc = dict(states)
        for _ in range(rmax):
            nxt: dict = {}
            for (p, r), cnt in frontier.items():
                if r == rmax:
                    continue
                for a in range(b):
                    key = (compose(p, transposition(n, a, b)), r + 1)
                    nxt[key] = nxt.get(key, 0) + cnt
            if not nxt:
                break
            for key, cnt in nxt.items():
                acc[key] = acc.get(key, 0) + cnt
            frontier = nxt
        states = acc
    out: dict[tuple[Partition, int], int] = {}
    for (p, r), cnt in states.items():
        key = (cycle_type(p), r)
        out[key] = out.get(key, 0) + cnt
    return out


@lru_cache(maxsize=None)
def _classical_totals(n: int, rmax: int) -> dict:
    """Non-transitive classical counts on n points: (type(product), r) -> count."""
    if n > DP_MAX_POINTS:
        raise ResourceLimitError(f"DP oracle refuses d={n} > {DP_MAX_POINTS}")
    taus = [transposition(n, a, b) for b in range(1, n) for a in range(b)]
    layer = {identity(n): 1}
    out: dict[tuple[Partition, int], int] = {}

    def flush(layer, r):
        for p, cnt in layer.items():
            key = (cycle_type(p), r)
            out[key] = out.get(key, 0) + cnt

    flush(layer, 0)
    for r in range(1, rmax + 1):
        nxt: dict = {}
        for p, cnt in layer.items():
            for t in taus:
                q = compose(p, t)
                nxt[q] = nxt.get(q, 0) + cnt
        layer = nxt
        flush(layer, r)
    return out


@lru_cache(maxsize=None)
def _transitive_from_totals(d: int, rmax: int, monotone: bool) -> dict:
    """Invert the orbit decomposition: totals -> transitive counts.

    A sequence on {1..d} splits over its orbit set partition into transitive
    pieces.  Fixing the block containing the point 1 (size n', type beta',
    r' transpositions) and letting the complement carry an arbitrary
    sequence gives

        A_d(alpha, r) = sum C(d-1, n'-1) [interleave] T(beta', r') A(alpha-beta', r-r'),

    with [interleave] = 1 for monotone sequences (b-values of distinct
    blocks are distinct, so exactly one merge is monotone) and C(r, r')
    classically.  Solving for the n' = d term yields T_d.
    """
    totals = _monotone_totals if monotone else _classical_totals
    trans: dict[tuple[Partition, int], int] = {}
    for n in range(1, d + 1):
        tot = totals(n, rmax)
        for alpha in partitions(n):
            for r in range(rmax + 1):
                val = tot.get((alpha, r), 0)
                for nsub in range(1, n):
                    rest = totals(n - nsub, rmax)
                    for beta, delta in subpartitions(alpha, nsub):
                        for rsub in range(r + 1):
                            t = trans.get((beta, rsub), 0)
                            if not t:
                                continue
                            a = rest.get((delta, r - rsub), 0)
                            if not a:
                                continue
                            ways = comb(n - 1, nsub - 1)
                            if not monotone:
                                ways *= comb(r, rsub)
                            val -= ways * t * a
                trans[(alpha, r)] = val
    return trans


# -- public operations --------------------------------------------------


def count_monotone_transitive(alpha, r: int) -> int:
    """Number of transitive monotone factorizations of type (alpha, r)."""
    alpha = Partition(alpha)
    if alpha.size < 1:
        raise ValueError("alpha must be a partition of d >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    if alpha.size > DP_MAX_POINTS:
        raise ResourceLimitError(
            f"DP oracle refuses d={alpha.size} > {DP_MAX_POINTS}"
        )
    table = _transitive_from_totals(alpha.size, r, True)
    return table.get((alpha, r), 0)


def count_classical_transitive(alpha, r: int) -> int:
    """Number of transitive factorizations of type (alpha, r), monotone or not."""
    alpha = Partition(alpha)
    if alpha.size < 1:
        raise ValueError("alpha must be a partition of d >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    if alpha.size > DP_MAX_POINTS:
        raise ResourceLimitError(
            f"DP oracle refuses d={alpha.size} > {DP_MAX_POINTS}"
        )
    table = _transitive_from_totals(alpha.size, r, False)
    return table.get((alpha, r), 0)


def count_monotone_all(d: int, r: int) -> dict[Partition, int]:
    """Monotone sequence counts without transitivity, keyed by the cycle
    type of the product (equivalently of its inverse), for all alpha of d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    tot = _monotone_totals(d, r)
    return {alpha: tot.get((alpha, r), 0) for alpha in partitions(d)}


def count_monotone_double(alpha, beta, r: int) -> int:
    """Transitive monotone tuples (rho, sigma, tau_1..tau_r) with rho of
    type alpha, sigma of type beta and rho sigma tau_1 ... tau_r = id."""
    alpha = Partition(alpha)
    beta = Partition(beta)
    if alpha.size != beta.size:
        raise ValueError(f"|alpha| = {alpha.size} != |beta| = {beta.size}")
    d = alpha.size
    if d > 5 or r > 8:
        raise ResourceLimitError(f"double oracle refuses d={d}, r={r} (d<=5, r<=8)")
    rhos = conjugacy_class(d, alpha)
    inverses = {p: tuple(sorted(range(d), key=lambda x: p[x])) for p in rhos}
    total = 0

    def visit(prod, edges, depth, min_b):
        nonlocal total
        if depth == r:
            prod_inv = tuple(sorted(range(d), key=lambda x: prod[x]))
            for rho in rhos:
                sigma = compose(inverses[rho], prod_inv)
                if cycle_type(sigma) != beta:
                    continue
                if _connected(d, edges, _cycles(rho)):
                    total += 1
            return
        for b in range(min_b, d):
            for a in range(b):
                visit(compose(prod, transposition(d, a, b)), edges + ((a, b),), depth + 1, b)

    visit(identity(d), (), 0, 1)
    return total


@dataclass(frozen=True)
class FactorQuery:
    """A counting query: cycle type(s), transposition count, and flavour.

    beta = None means no second constraint (the single-number case,
    equivalent to beta = 1^d)."""

    alpha: Partition
    r: int
    beta: Partition | None = None
    monotone: bool = True

    def __post_init__(self):
        object.__setattr__(self, "alpha", Partition(self.alpha))
        if self.beta is not None:
            object.__setattr__(self, "beta", Partition(self.beta))
            if self.alpha.size != self.beta.size:
                raise ValueError(
                    f"|alpha| = {self.alpha.size} != |beta| = {self.beta.size}"
                )
        if self.r < 0:
            raise ValueError("r must be >= 0")

    def count(self) -> int:
        if self.beta is not None:
            if not self.monotone:
                raise ValueError("double counting is implemented monotone-only")
            return count_monotone_double(self.alpha, self.beta, self.r)
        if self.monotone:
            return count_monotone_transitive(self.alpha, self.r)
        return count_classical_transitive(self.alpha, self.r)


class CountTable:
    """Exact counts (alpha, r) -> int for all alpha of size <= d, r <= rmax."""

    def __init__(self, d: int, rmax: int, monotone: bool = True):
        self.d = d
        self.rmax = rmax
        self.monotone = monotone
        self.counts: dict[tuple[Partition, int], int] = {}
        for n in range(1, d + 1):
            table = _transitive_from_totals(n, rmax, monotone)
            for (alpha, r), v in table.items():
                if v < 0:
                    raise AssertionError(f"negative count at {(alpha, r)}")
                if monotone and r < alpha.size - len(alpha) and v != 0:
                    raise AssertionError(f"sub-genus-0 count nonzero at {(alpha, r)}")
                if v:
                    self.counts[(alpha, r)] = v

    def __getitem__(self, key) -> int:
        alpha, r = key
        return self.counts.get((Partition(alpha), r), 0)
