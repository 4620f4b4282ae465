"""Problem grammar, validation and dimension formulas."""

import pytest

from curvecount import (
    InvalidProblem,
    Problem,
    ZProblem,
    dim_w,
    dim_x,
    dim_z,
    dimension,
    format_divisor,
    format_problem,
    parse_divisor,
    parse_problem,
    unmarked_factor,
    validate,
    validate_z,
)


def test_format_parse_round_trip():
    p = Problem.make(0, 3, 3, {(1, 2): 2, (1, 0): 1}, {1: 12})
    text = format_problem(p)
    assert text == "g=0 n=3 d=3 h=1,0:1;1,2:2 i=1:12"
    assert parse_problem(text) == p


def test_parse_canonicalizes_and_is_idempotent():
    text = "g=1 n=3 d=4 h=1,2:4 i=1:16"
    p = parse_problem(text)
    assert format_problem(p) == text
    assert parse_problem(format_problem(p)) == p


def test_empty_vectors_format_as_dash():
    p = Problem.make(0, 1, 1, {(1, 0): 1}, {0: 2})
    assert "h=1,0:1" in format_problem(p)
    q = Problem.make(0, 2, 1, {(1, 1): 1}, {})
    assert format_problem(q).endswith("i=-")
    assert parse_problem(format_problem(q)) == q
    assert parse_problem("g=0 n=2 d=1 h=1,1:1 i= -") == q


def test_totality_is_enforced():
    with pytest.raises(InvalidProblem):
        validate(Problem.make(0, 2, 2, {(1, 1): 1}, {0: 4}))
    with pytest.raises(InvalidProblem):
        validate(Problem.make(0, 2, 2, {(1, 1): 3}, {0: 4}))
    validate(Problem.make(0, 2, 2, {(1, 1): 2}, {0: 5}))


def test_validate_rejects_bad_ranges():
    with pytest.raises(InvalidProblem):
        validate(Problem.make(2, 2, 1, {(1, 1): 1}, {}))
    with pytest.raises(InvalidProblem):
        validate(Problem.make(0, 0, 1, {(1, 0): 1}, {}))
    with pytest.raises(InvalidProblem):
        validate(Problem.make(0, 2, 0, {}, {}))
    # contact plane must sit inside the hyperplane: e <= n-1
    with pytest.raises(InvalidProblem):
        validate(Problem.make(0, 2, 1, {(1, 2): 1}, {}))
    # incidence plane lives in the ambient space: e <= n
    with pytest.raises(InvalidProblem):
        validate(Problem.make(0, 2, 1, {(1, 1): 1}, {3: 1}))
    with pytest.raises(InvalidProblem):
        validate(Problem.make(0, 2, 1, {(0, 1): 1}, {}))


def test_dimension_formulas():
    # lines in P^3: dim 4, each line condition costs 1
    p = Problem.make(0, 3, 1, {(1, 2): 1}, {1: 4})
    assert dim_x(p) == 0
    # conics through 8 lines
    assert dim_x(Problem.make(0, 3, 2, {(1, 2): 2}, {1: 8})) == 0
    # plane rational cubics through 8 points
    assert dim_x(Problem.make(0, 2, 3, {(1, 1): 3}, {0: 8})) == 0
    # a tangency costs one more than a plain contact
    free = Problem.make(0, 3, 2, {(1, 2): 2}, {1: 7})
    tangent = Problem.make(0, 3, 2, {(2, 2): 1}, {1: 7})
    assert dim_x(free) == dim_x(tangent) + 1
    # elliptic curves have the genus correction removed
    w = Problem.make(1, 3, 4, {(1, 2): 4}, {1: 16})
    assert dim_w(w) == 0
    assert dimension(w) == 0
    assert dim_w(Problem.make(1, 2, 3, {(1, 1): 3}, {0: 9})) == 0


def test_dim_z_matches_one_parameter_family():
    z3 = ZProblem.make(2, 3, {0: 8}, parse_divisor("p1+p2+p3"))
    z4 = ZProblem.make(2, 4, {0: 11}, parse_divisor("p1+p2+p3+p4"))
    assert dim_z(z3) == 0
    assert dim_z(z4) == 0
    assert dim_z(ZProblem.make(2, 3, {0: 7}, parse_divisor("3*p1"))) == 1


def test_divisor_parse_and_format():
    d = parse_divisor("p1+p2+2*l1-p3")
    assert format_divisor(d) == "p1+p2-p3+2*l1"
    assert parse_divisor(format_divisor(d)) == d
    assert parse_divisor("") == ()
    assert parse_divisor("0") == ()
    assert format_divisor(()) == "0"


def test_divisor_merges_repeated_markers():
    assert parse_divisor("l1+l1+l1") == parse_divisor("3*l1")
    assert parse_divisor("p1-p1") == ()


def test_validate_z_checks_marker_indices_and_degree():
    i = {0: 8, 1: 1}
    validate_z(ZProblem.make(2, 3, i, parse_divisor("p1+p2+l1")))
    with pytest.raises(InvalidProblem):
        validate_z(ZProblem.make(2, 3, i, parse_divisor("p1+p2+l2")))
    with pytest.raises(InvalidProblem):
        validate_z(ZProblem.make(2, 3, i, parse_divisor("p1+p2+p3+l1-p9")))
    # coefficients must sum to the degree
    with pytest.raises(InvalidProblem):
        validate_z(ZProblem.make(2, 3, i, parse_divisor("p1+p2")))


def test_bad_divisor_text_is_rejected():
    with pytest.raises(InvalidProblem):
        parse_divisor("p1+q2")
    with pytest.raises(InvalidProblem):
        parse_divisor("p1++p2")
    with pytest.raises(InvalidProblem):
        parse_divisor("2*")
    with pytest.raises(InvalidProblem):
        parse_divisor("x1")


def test_unmarked_factor_counts_free_contacts_only():
    assert unmarked_factor(Problem.make(0, 3, 3, {(1, 2): 3}, {1: 12})) == 6
    assert unmarked_factor(Problem.make(0, 3, 2, {(2, 2): 1, (1, 2): 1}, {1: 7})) == 1
    assert unmarked_factor(Problem.make(1, 2, 4, {(1, 1): 4}, {0: 12})) == 24
    # markers pinned to proper subspaces of H reference distinct spaces
    assert unmarked_factor(Problem.make(1, 3, 4, {(1, 2): 2, (1, 1): 2}, {1: 10, 0: 2})) == 2
