from math import comb

import pytest

from hurwitz.oracle import (
    CountTable,
    FactorQuery,
    ResourceLimitError,
    count_classical_transitive,
    count_monotone_all,
    count_monotone_double,
    count_monotone_transitive,
    count_monotone_transitive_dfs,
    _monotone_totals,
    _transitive_from_totals,
)
from hurwitz.partitions import Partition, partitions, subpartitions


def test_monotone_examples():
    assert count_monotone_transitive((1,), 0) == 1
    assert count_monotone_transitive((2,), 1) == 1
    assert count_monotone_transitive((3,), 2) == 4
    assert count_monotone_transitive((2,), 3) == 1


def test_classical_examples():
    assert count_classical_transitive((2,), 1) == 1
    assert count_classical_transitive((3,), 2) == 6
    assert count_classical_transitive((1, 1), 2) == 1


def test_monotone_all_examples():
    assert count_monotone_all(1, 0) == {Partition((1,)): 1}
    assert count_monotone_all(2, 2) == {Partition((2,)): 0, Partition((1, 1)): 1}
    assert count_monotone_all(2, 1) == {Partition((2,)): 1, Partition((1, 1)): 0}


def test_double_examples():
    assert count_monotone_double((2,), (2,), 0) == 1
    assert count_monotone_double((2,), (1, 1), 1) == 1


def test_double_reduces_to_single_for_trivial_beta():
    for d in range(1, 5):
        ones = [1] * d
        for alpha in partitions(d):
            for r in range(5):
                assert count_monotone_double(alpha, ones, r) == count_monotone_transitive(
                    alpha, r
                ), (alpha, r)


def test_double_size_mismatch():
    with pytest.raises(ValueError):
        count_monotone_double((2,), (1, 1, 1), 1)


def test_dfs_agrees_with_dp_small():
    # the full d <= 5, r <= 8 comparison is acceptance criterion 1
    for d in range(1, 5):
        for alpha in partitions(d):
            for r in range(7):
                assert count_monotone_transitive(alpha, r) == count_monotone_transitive_dfs(
                    alpha, r
                ), (alpha, r)


def test_monotone_at_most_classical_and_parity():
    for d in range(1, 6):
        for alpha in partitions(d):
            for r in range(9):
                mono = count_monotone_transitive(alpha, r)
                full = count_classical_transitive(alpha, r)
                assert mono <= full
                if (r - (d - len(alpha))) % 2:
                    assert mono == 0 and full == 0


def test_orbit_decomposition_reconstructs_totals():
    # non-transitive totals must equal the orbit/set-partition sum over
    # transitive blocks (the identity the inversion step solves)
    rmax = 6
    for d in range(1, 6):
        totals = _monotone_totals(d, rmax)
        trans = _transitive_from_totals(d, rmax, True)
        for alpha in partitions(d):
            for r in range(rmax + 1):
                rebuilt = trans.get((alpha, r), 0)
                for nsub in range(1, d):
                    rest = _monotone_totals(d - nsub, rmax)
                    for beta, delta in subpartitions(alpha, nsub):
                        for rsub in range(r + 1):
                            rebuilt += (
                                comb(d - 1, nsub - 1)
                                * _transitive_from_totals(nsub, rmax, True).get(
                                    (beta, rsub), 0
                                )
                                * rest.get((delta, r - rsub), 0)
                            )
                assert rebuilt == totals.get((alpha, r), 0), (alpha, r)


def test_count_table_invariants():
    table = CountTable(4, 6, monotone=True)
    assert table[(3,), 2] == 4
    assert all(v >= 0 for v in table.counts.values())
    # below genus zero everything vanishes
    for (alpha, r), v in table.counts.items():
        assert r >= alpha.size - len(alpha)


def test_resource_guard():
    with pytest.raises(ResourceLimitError):
        count_monotone_transitive(tuple([1] * 9), 2)
    with pytest.raises(ResourceLimitError):
        count_monotone_double((3, 3), (3, 3), 1)


def test_factor_query_dispatch():
    assert FactorQuery((3,), 2).count() == 4
    assert FactorQuery((3,), 2, monotone=False).count() == 6
    assert FactorQuery((2,), 1, beta=(1, 1)).count() == 1
    with pytest.raises(ValueError):
        FactorQuery((2,), 1, beta=(1, 1, 1))
    with pytest.raises(ValueError):
        FactorQuery((2,), -1)
