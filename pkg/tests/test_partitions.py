"""Marker-routing combinatorics against plain slow enumerations."""

import itertools
import math
from fractions import Fraction

from curvecount.partitions import (
    automorphism_order,
    subvectors,
    subvectors_weighted,
    type2_partitions,
    vector_multinomial,
)
from oracles import ordered_type2_aggregate


def _value_of(dk, h_items, i_items):
    """Deterministic pseudo-random worth of a part, so that any
    miscounted configuration shifts the aggregate."""
    x = dk
    for (m, e), c in h_items:
        x = x * 31 + m * 7 + e * 3 + c
    for e, c in i_items:
        x = x * 37 + e * 5 + c
    return x % 101 + 1


def test_vector_multinomial_against_labeled_enumeration():
    pool = {"a": 3, "b": 2}
    picks = [{"a": 1, "b": 1}, {"a": 2}]
    # route labeled markers a1 a2 a3 b1 b2 by hand
    labels = ["a1", "a2", "a3", "b1", "b2"]
    count = 0
    for group1 in itertools.combinations(labels, 2):
        rest = [x for x in labels if x not in group1]
        for group2 in itertools.combinations(rest, 2):
            if sorted(x[0] for x in group1) == ["a", "b"] and all(
                x[0] == "a" for x in group2
            ):
                count += 1
    assert vector_multinomial(pool, picks) == count
    assert vector_multinomial(pool, [{"a": 4}]) == 0
    assert vector_multinomial(pool, []) == 1


def test_automorphism_order():
    assert automorphism_order([]) == 1
    assert automorphism_order([1, 2, 3]) == 1
    assert automorphism_order([1, 1, 2]) == 2
    assert automorphism_order(["x"] * 4) == 24


def test_subvectors_cover_the_power_set_with_binomial_weights():
    pool = (("a", 2), ("b", 1))
    seen = {}
    for sub, ways in subvectors(pool):
        seen[tuple(sorted(sub.items()))] = ways
    assert seen == {
        (): 1,
        (("a", 1),): 2,
        (("a", 2),): 1,
        (("b", 1),): 1,
        (("a", 1), ("b", 1)): 2,
        (("a", 2), ("b", 1)): 1,
    }
    assert sum(seen.values()) == 2**3


def test_subvectors_weighted_agrees_with_filtering():
    pool = ((0, 2), (1, 3), (2, 1))
    weight_of = lambda e: 2 - e
    for lo, hi in [(0, 3), (2, 2), (1, 4), (5, 9)]:
        fast = sorted(
            (tuple(sorted(s.items())), w)
            for s, w in subvectors_weighted(pool, weight_of, lo, hi)
        )
        slow = sorted(
            (tuple(sorted(s.items())), w)
            for s, w in subvectors(pool)
            if lo <= sum(weight_of(k) * c for k, c in s.items()) <= hi
        )
        assert fast == slow


def test_subvectors_weighted_handles_negative_weights():
    pool = ((-1, 2), (1, 2))
    weight_of = lambda e: e
    picked = sorted(
        (tuple(sorted(s.items())), w)
        for s, w in subvectors_weighted(pool, weight_of, 0, 0)
    )
    slow = sorted(
        (tuple(sorted(s.items())), w)
        for s, w in subvectors(pool)
        if sum(k * c for k, c in s.items()) == 0
    )
    assert picked == slow
    assert ((( -1, 1), (1, 1)), 4) in picked


def _window(n):
    def bounds(dk, h_sub, mk):
        base = (n + 1) * dk + (n - 3)
        base -= sum((n + m - e - 2) * c for (m, e), c in h_sub.items())
        base -= mk - 1
        return (base - (n - 1), base)

    return bounds


def test_type2_partitions_match_ordered_enumeration():
    cases = [
        (3, {(1, 2): 2}, {1: 5, 0: 1}, 3),
        (2, {(1, 1): 1, (2, 2): 1}, {1: 3}, 3),
        (4, {}, {1: 6, 0: 2}, 3),
        (3, {(1, 1): 2}, {0: 6}, 2),
    ]
    for d_avail, h_pool, i_pool, n in cases:
        bounds = _window(n)
        total = Fraction(0)
        for parts, comb in type2_partitions(d_avail, h_pool, i_pool, n, bounds):
            worth = comb
            for part in parts:
                worth *= _value_of(*part)
            total += worth
        oracle = ordered_type2_aggregate(d_avail, h_pool, i_pool, n, bounds, _value_of)
        assert total == oracle


def test_type2_partitions_respect_bounds_none():
    def bounds(dk, h_sub, mk):
        return None if dk == 2 else _window(3)(dk, h_sub, mk)

    for parts, _ in type2_partitions(4, {}, {1: 6}, 3, bounds):
        assert all(part[0] != 2 for part in parts)
    oracle = ordered_type2_aggregate(4, {}, {1: 6}, 3, bounds, _value_of)
    total = Fraction(0)
    for parts, comb in type2_partitions(4, {}, {1: 6}, 3, bounds):
        worth = comb
        for part in parts:
            worth *= _value_of(*part)
        total += worth
    assert total == oracle


def test_type2_partitions_yield_canonical_multisets():
    seen = set()
    for parts, comb in type2_partitions(4, {(1, 2): 1}, {1: 5}, 3, _window(3)):
        assert list(parts) == sorted(parts)
        assert parts not in seen
        seen.add(parts)
        assert sum(p[0] for p in parts) <= 4
        assert comb > 0
    assert () in seen


def test_type2_minimum_attachment_multiplicity():
    # with m_min = 2 every part keeps contact order at least 2
    for parts, _ in type2_partitions(4, {(1, 2): 2}, {1: 5}, 3, _window(3), m_min=2):
        for dk, h_items, _i in parts:
            assert dk - sum(m * c for (m, _), c in h_items) >= 2


def test_weights_scale_with_automorphisms():
    # two interchangeable parts carry a half weight
    bounds = lambda dk, h_sub, mk: (0, 99)
    entries = {
        parts: comb for parts, comb in type2_partitions(2, {}, {}, 2, bounds)
    }
    twin = ((1, (), ()), (1, (), ()))
    assert entries[twin] == Fraction(1, 2)
