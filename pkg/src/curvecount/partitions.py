"""Combinatorics for degeneration sums: distributing labeled markers
over curve components and enumerating component multisets."""

from __future__ import annotations

import math
from fractions import Fraction


def vector_multinomial(pool: dict, picks) -> int:
    """Ways to route labeled markers: each entry of ``pool`` is a supply
    of interchangeable-slot markers, each dict in ``picks`` draws from
    what the previous picks left over.  Returns 0 on overdraw."""
    rem = dict(pool)
    out = 1
    for pick in picks:
        for key, c in pick.items():
            have = rem.get(key, 0)
            if c > have:
                return 0
            out *= math.comb(have, c)
            rem[key] = have - c
    return out


def automorphism_order(items) -> int:
    """Order of the symmetry group permuting equal entries."""
    counts: dict = {}
    for item in items:
        counts[item] = counts.get(item, 0) + 1
    return math.prod(math.factorial(c) for c in counts.values())


def subvectors(pool_items):
    """Yield (sub_dict, ways) over all sub-vectors of the pool, with
    ways the number of marker choices realizing the sub-vector.

    ``pool_items`` is a sequence of (key, count) pairs.
    """
    yield from subvectors_weighted(pool_items, lambda key: 0, 0, 0)


def subvectors_weighted(pool_items, weight_of, lo, hi):
    """Yield (sub_dict, ways) over sub-vectors whose weighted size
    sum(weight_of(key) * take) lies in [lo, hi].  Weights may be
    negative; pruning uses suffix bounds."""
    items = list(pool_items)
    k = len(items)
    max_add = [0] * (k + 1)
    min_add = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        key, c = items[j]
        w = weight_of(key)
        max_add[j] = max_add[j + 1] + max(0, w) * c
        min_add[j] = min_add[j + 1] + min(0, w) * c

    sub: dict = {}

    def rec(j, total, ways):
        if total + min_add[j] > hi or total + max_add[j] < lo:
            return
        if j == k:
            yield dict(sub), ways
            return
        key, c = items[j]
        w = weight_of(key)
        for take in range(c + 1):
            if take:
                sub[key] = take
            yield from rec(j + 1, total + w * take, ways * math.comb(c, take))
            if take:
                del sub[key]

    yield from rec(0, 0, 1)


_MIN_PART_KEY = (0, (), ())


def type2_partitions(d_avail, h_pool: dict, i_pool: dict, n: int, i_bounds, m_min: int = 1):
    """Enumerate the unordered multisets of curve components split off
    the hyperplane component in a degeneration term.

    Each component takes a positive degree dk (total at most d_avail),
    a sub-vector of the tangency pool and a sub-vector of the incidence
    pool, and meets the hyperplane at its attachment point with
    multiplicity mk = dk - sum(m * h) >= m_min.

    ``i_bounds(dk, h_sub, mk)`` returns the admissible window (lo, hi)
    for the component's incidence weight sum((n-1-e) * c), or None to
    rule the shape out; windows come from the requirement that the
    component be rigid once its attachment point is constrained.

    Yields (parts, comb): parts is a nondecreasing tuple of
    (dk, h_items, i_items) with the vectors as sorted item tuples, and
    comb is a Fraction: the multinomial routing of labeled markers into
    the ordered components divided by the automorphism order of the
    multiset.
    """
    weight_of = lambda e: n - 1 - e

    def rec(d_rem, h_items, i_items, min_key):
        yield (), 1
        for dk in range(1, d_rem + 1):
            for h_sub, h_ways in subvectors(h_items):
                mk = dk - sum(m * c for (m, _), c in h_sub.items())
                if mk < m_min:
                    continue
                bounds = i_bounds(dk, h_sub, mk)
                if bounds is None:
                    continue
                lo, hi = bounds
                for i_sub, i_ways in subvectors_weighted(i_items, weight_of, lo, hi):
                    key = (
                        dk,
                        tuple(sorted(h_sub.items())),
                        tuple(sorted(i_sub.items())),
                    )
                    if key < min_key:
                        continue
                    h_next = tuple(
                        (kk, c - h_sub.get(kk, 0)) for kk, c in h_items if c - h_sub.get(kk, 0)
                    )
                    i_next = tuple(
                        (kk, c - i_sub.get(kk, 0)) for kk, c in i_items if c - i_sub.get(kk, 0)
                    )
                    for rest, rest_ways in rec(d_rem - dk, h_next, i_next, key):
                        yield (key,) + rest, h_ways * i_ways * rest_ways

    h_items = tuple(sorted(h_pool.items()))
    i_items = tuple(sorted(i_pool.items()))
    for parts, ways in rec(d_avail, h_items, i_items, _MIN_PART_KEY):
        yield parts, Fraction(ways, automorphism_order(parts))
