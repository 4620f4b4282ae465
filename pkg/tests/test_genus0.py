"""Rational curve counts against classical values and two independent
oracles: the plane-curve associativity recursion and the Pieri rule for
lines.  Expected numbers are frozen here, not recomputed from the
engine."""

import math

from curvecount import Engine, Problem, UnsupportedProblem
from curvecount.genus0 import count_y
from oracles import kontsevich_numbers, lines_meeting

# degree: curves through 3d-1 general plane points
PLANE_COUNTS = {1: 1, 2: 1, 3: 12, 4: 620, 5: 87304, 6: 26312976}


def _plane_points(eng, d):
    p = Problem.make(0, 2, d, {(1, 1): d}, {0: 3 * d - 1})
    marked = eng.count(p)
    assert marked % math.factorial(d) == 0
    return marked // math.factorial(d)


def test_oracle_reproduces_frozen_plane_counts():
    assert kontsevich_numbers(6) == PLANE_COUNTS


def test_plane_counts_match_oracle():
    eng = Engine()
    for d in range(1, 7):
        assert _plane_points(eng, d) == PLANE_COUNTS[d]


def test_seed_line_through_two_points():
    eng = Engine()
    assert eng.count(Problem.make(0, 1, 1, {(1, 0): 1}, {0: 2})) == 1


def test_lines_against_pieri_oracle():
    eng = Engine()
    cases = [
        (3, (1, 1, 1, 1)),
        (3, (0, 1, 1)),
        (3, (0, 0)),
        (4, (2, 2, 2, 2, 2, 2)),
        (4, (1, 2, 2, 2)),
        (4, (0, 2, 2)),
        (5, (3, 3, 3, 3, 3, 3, 3, 3)),
    ]
    for n, dims in cases:
        i = {}
        for f in dims:
            i[f] = i.get(f, 0) + 1
        p = Problem.make(0, n, 1, {(1, n - 1): 1}, i)
        assert eng.count(p) == lines_meeting(n, dims)


def test_four_lines_in_space():
    assert Engine().count(Problem.make(0, 3, 1, {(1, 2): 1}, {1: 4})) == 2


def test_conics_through_eight_lines():
    eng = Engine()
    marked = eng.count(Problem.make(0, 3, 2, {(1, 2): 2}, {1: 8}))
    assert marked == 184
    assert marked // 2 == 92


def test_conics_tangent_to_the_hyperplane():
    eng = Engine()
    assert eng.count(Problem.make(0, 3, 2, {(2, 2): 1}, {1: 7})) == 116


def test_twisted_cubics_through_twelve_lines():
    eng = Engine()
    marked = eng.count(Problem.make(0, 3, 3, {(1, 2): 3}, {1: 12}))
    assert marked == 480960
    assert marked // 6 == 80160


def test_positive_dimension_counts_as_zero():
    eng = Engine()
    assert eng.count(Problem.make(0, 3, 2, {(1, 2): 2}, {1: 7})) == 0
    assert eng.count(Problem.make(0, 2, 2, {(1, 1): 2}, {0: 4})) == 0


def test_overdetermined_is_zero_too():
    eng = Engine()
    assert eng.count(Problem.make(0, 3, 2, {(1, 2): 2}, {1: 9})) == 0


def test_divisor_axiom_scaling():
    eng = Engine()
    for base, d in [
        (Problem.make(0, 2, 3, {(1, 1): 3}, {0: 8}), 3),
        (Problem.make(0, 3, 2, {(1, 2): 2}, {1: 8}), 2),
    ]:
        lifted = Problem.make(0, base.n, d, base.h_map(), _plus_free_plane(base))
        assert eng.count(lifted) == d * eng.count(base)


def _plus_free_plane(p):
    i = dict(p.i)
    i[p.n - 1] = i.get(p.n - 1, 0) + 1
    return i


def test_divisor_axiom_flag_equivalence():
    on = Engine(divisor_axiom=True)
    off = Engine(divisor_axiom=False)
    for p in [
        Problem.make(0, 2, 2, {(1, 1): 2}, {0: 5, 1: 1}),
        Problem.make(0, 3, 2, {(1, 2): 2}, {1: 8, 2: 2}),
    ]:
        assert on.count(p) == off.count(p)


def test_part_zero_rejects_ambient_points():
    # a component inside the hyperplane cannot pass through a general
    # ambient point
    eng = Engine()
    value, groups = count_y(eng, 3, 1, {}, {0: 1}, ())
    assert value == 0
    assert groups == []


def test_order_choice_does_not_change_counts():
    maxe = Engine(order="max-e")
    mine = Engine(order="min-e")
    for p in [
        Problem.make(0, 3, 2, {(1, 2): 2}, {1: 6, 0: 1}),
        Problem.make(0, 2, 3, {(1, 1): 3}, {0: 8}),
        Problem.make(0, 3, 3, {(1, 2): 3}, {1: 10, 0: 1}),
    ]:
        assert maxe.count(p) == mine.count(p)


def test_genus_two_is_rejected():
    import pytest

    from curvecount import InvalidProblem

    with pytest.raises(InvalidProblem):
        Engine().count(Problem.make(2, 3, 2, {(1, 2): 2}, {1: 8}))


def test_large_ambient_genus_zero_works():
    # rational normal quartic conditions in P^4 stay exact
    eng = Engine()
    assert eng.count(Problem.make(0, 4, 1, {(1, 3): 1}, {2: 6})) == 5


def test_unsupported_only_for_genus_one():
    import pytest

    eng = Engine()
    with pytest.raises(UnsupportedProblem):
        eng.count(Problem.make(1, 4, 2, {(1, 3): 2}, {2: 10}))
