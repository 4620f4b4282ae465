"""Divisor-class counts on a one-parameter family of elliptic curves.

With the incidence conditions leaving exactly one degree of freedom,
the curves through them sweep out an elliptic surface fibered over the
parameter curve.  Each incidence marker gives a section of that
fibration, and the hyperplane class gives a further divisor on the
total space.  Counting the members whose hyperplane class equals a
fixed combination D of the marker sections reduces to intersection
numbers on the surface: the count is Q^2 - D'^2/2 where Q is any
section, D' = H - sum(c_s Q_s), and the pairings H^2, H.Q, Q.Q of
distinct sections and Q^2 itself are evaluated by degenerating the
family.  Every degeneration term is a product of rational and elliptic
counts of lower degree, divided by the relabelings of free contacts.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .engine import Engine
from .partitions import subvectors
from .problems import Problem, ZProblem, base_z_text, dim_z


def _memo(eng: Engine, key: str, compute):
    hit = eng.store.lookup(key)
    if hit is not None:
        return hit
    value = compute()
    eng.store.store(key, value)
    return value


def _bump(vec: dict, key, delta=1) -> dict:
    out = dict(vec)
    out[key] = out.get(key, 0) + delta
    assert out[key] >= 0, f"pool underflow at {key}"
    if out[key] == 0:
        del out[key]
    return out


def _uniform(n: int, d: int) -> dict:
    return {(1, n - 1): d}


def _exact(frac: Fraction) -> Fraction:
    assert frac.denominator == 1, "free-contact relabelings must divide the count"
    return frac


def _splits(eng: Engine, z: ZProblem, pool: dict, markers_to_base: tuple, extra_base: int):
    """Sum the broken-fiber contributions shared by all four pairings.

    The fiber degenerates into a rational curve of degree d0 keeping the
    listed markers (as incidence conditions) and an elliptic curve of
    degree d1 taking any sub-vector of the remaining pool; extra_base
    scales the term by d0**extra_base for the choices the hyperplane
    class makes on the rational side.  Over P^2 the two components meet
    in d0*d1 points and each meeting point gives a distinct fiber.
    """
    n, d = z.n, z.d
    total = Fraction(0)
    pool_items = tuple(sorted(pool.items()))
    for d0 in range(1, d):
        d1 = d - d0
        for i1, ways in subvectors(pool_items):
            i0 = {k: c - i1.get(k, 0) for k, c in pool.items() if c - i1.get(k, 0)}
            for e in markers_to_base:
                i0 = _bump(i0, e)
            x = Problem.make(0, n, d0, _uniform(n, d0), i0)
            vx = eng.count_x(x)
            if vx == 0:
                continue
            w = Problem.make(1, n, d1, _uniform(n, d1), i1)
            vw = eng.count_w(w)
            if vw == 0:
                continue
            term = (
                Fraction(vx, math.factorial(d0))
                * Fraction(vw, math.factorial(d1))
                * ways
                * d0**extra_base
            )
            if n == 2:
                term *= d0 * d1
            total += term
    return total


def sec_pair(eng: Engine, z: ZProblem, e1: int, e2: int) -> int:
    """Intersection of the two sections given by markers on slots e1, e2."""
    lo, hi = min(e1, e2), max(e1, e2)
    key = f"QQ|{base_z_text(z)} e={lo},{hi}"

    def compute():
        n, d = z.n, z.d
        pool = _bump(_bump(z.i_map(), e1, -1), e2, -1)
        total = Fraction(0)
        if e1 + e2 >= n:
            w = Problem.make(1, n, d, _uniform(n, d), _bump(pool, e1 + e2 - n))
            total += Fraction(eng.count_w(w), math.factorial(d))
        total += _splits(eng, z, pool, (e1, e2), 0)
        return int(_exact(total))

    return _memo(eng, key, compute)


def sec_hyp(eng: Engine, z: ZProblem, e: int) -> int:
    """Intersection of the hyperplane divisor with a marker section."""
    key = f"HQ|{base_z_text(z)} e={e}"

    def compute():
        n, d = z.n, z.d
        pool = _bump(z.i_map(), e, -1)
        total = Fraction(0)
        if e >= 1:
            w = Problem.make(1, n, d, _uniform(n, d), _bump(pool, e - 1))
            total += Fraction(eng.count_w(w), math.factorial(d))
        total += _splits(eng, z, pool, (e,), 1)
        return int(_exact(total))

    return _memo(eng, key, compute)


def hyp_self(eng: Engine, z: ZProblem) -> int:
    """Self-intersection of the hyperplane divisor on the total space."""
    key = f"HH|{base_z_text(z)}"

    def compute():
        n, d = z.n, z.d
        pool = z.i_map()
        w = Problem.make(1, n, d, _uniform(n, d), _bump(pool, n - 2))
        total = Fraction(eng.count_w(w), math.factorial(d))
        total += _splits(eng, z, pool, (), 2)
        return int(_exact(total))

    return _memo(eng, key, compute)


def hyp_minus_sec(eng: Engine, z: ZProblem, e: int) -> int:
    """Intersection of (hyperplane - section) with the same section.

    Moving the section into the hyperplane divisor turns the marker into
    a doubled contact; the broken fibers keep the marker as a contact
    point of the rational component instead of a free one.
    """
    key = f"HMQ|{base_z_text(z)} e={e}"

    def compute():
        n, d = z.n, z.d
        pool = _bump(z.i_map(), e, -1)
        total = Fraction(0)
        if d >= 2:
            h = _bump({(2, e): 1}, (1, n - 1), d - 2)
            w = Problem.make(1, n, d, h, pool)
            total += Fraction(eng.count_w(w), math.factorial(d - 2))
        pool_items = tuple(sorted(pool.items()))
        for d0 in range(2, d):
            d1 = d - d0
            for i1, ways in subvectors(pool_items):
                i0 = {k: c - i1.get(k, 0) for k, c in pool.items() if c - i1.get(k, 0)}
                x = Problem.make(0, n, d0, _bump(_uniform(n, d0 - 1), (1, e)), i0)
                vx = eng.count_x(x)
                if vx == 0:
                    continue
                w = Problem.make(1, n, d1, _uniform(n, d1), i1)
                vw = eng.count_w(w)
                if vw == 0:
                    continue
                term = (
                    Fraction(vx, math.factorial(d0 - 1))
                    * Fraction(vw, math.factorial(d1))
                    * ways
                    * (d0 - 1)
                )
                if n == 2:
                    term *= d0 * d1
                total += term
        return int(_exact(total))

    return _memo(eng, key, compute)


def sec_self(eng: Engine, z: ZProblem) -> int:
    """Self-intersection of a section; the same for every section."""
    key = f"SS|{base_z_text(z)}"

    def compute():
        slots = [e for e, c in z.i if c > 0 and e <= z.n - 1]
        assert slots, "a one-parameter family needs a marker below the top slot"
        values = [sec_hyp(eng, z, e) - hyp_minus_sec(eng, z, e) for e in slots]
        if eng.check_all_orders:
            assert len(set(values)) == 1, f"section self-intersection differs by slot: {values}"
        return values[0]

    return _memo(eng, key, compute)


def expand_z(eng: Engine, z: ZProblem):
    dim = dim_z(z)
    if dim != 0:
        return 0, eng.leaf_node(z, dim, 0, "zero-dim")
    markers = [(coeff, e) for coeff, e, _ in z.divisor]
    s2 = sec_self(eng, z)
    d2 = hyp_self(eng, z)
    for coeff, e in markers:
        d2 -= 2 * coeff * sec_hyp(eng, z, e)
        d2 += coeff * coeff * s2
    for s in range(len(markers)):
        for t in range(s + 1, len(markers)):
            cs, es = markers[s]
            ct, et = markers[t]
            d2 += 2 * cs * ct * sec_pair(eng, z, es, et)
    assert d2 % 2 == 0, "divisor self-intersection must be even"
    value = s2 - d2 // 2
    return value, eng.leaf_node(z, 0, value, "z-evaluation")
