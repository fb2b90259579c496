import itertools
import random

import pytest

from tropkit.errors import Infeasible
from tropkit.projector import Semimodule, project
from tropkit.semiring import scalar, sr_residual
from tropkit.tropmat import from_columns, matrix, vector
from tropkit.twosided import (
    InequalitySystem,
    check_solution,
    row_generators,
    solve_system,
    _pivot_matrix,
    _solve_one_sided,
)

BOT = "-inf"


def normalized(columns):
    out = set()
    for c in columns:
        finite = [e for e in c.entries if e.is_finite]
        shift = sr_residual(scalar(0), finite[0])
        out.add(tuple(repr(e) for e in c.scale(shift).entries))
    return out


def test_row_generators_examples():
    g = row_generators(vector([0, 3]), vector([2, 1]))
    assert normalized(g.columns()) == {("0", "-inf"), ("0", "-1")}
    s = InequalitySystem(matrix([[0, 3]]), matrix([[2, 1]]))
    for c in g.columns():
        assert check_solution(s, c)
    g2 = row_generators(vector([0, BOT]), vector([BOT, 0]))
    assert normalized(g2.columns()) == {("-inf", "0"), ("0", "0")}
    g3 = row_generators(vector([1, 2]), vector([1, 2]))
    assert normalized(g3.columns()) == {("0", "-inf"), ("-inf", "0")}
    with pytest.raises(Infeasible):
        row_generators(vector([5, 5]), vector([1, 1]))


def test_row_generators_hull_against_grid():
    # cone x1 <= x2: every integer grid solution lies in the generated hull
    a, b = vector([0, BOT]), vector([BOT, 0])
    gens = row_generators(a, b).columns()
    sm = Semimodule(from_columns(gens))
    s = InequalitySystem(matrix([[0, BOT]]), matrix([[BOT, 0]]))
    for p in itertools.product([None] + list(range(-3, 4)), repeat=2):
        x = vector(list(p))
        if x.is_zero or not check_solution(s, x):
            continue
        assert project(sm, x) == x


def test_check_solution_examples():
    s = InequalitySystem(matrix([[0, 3]]), matrix([[2, 1]]))
    assert check_solution(s, vector([BOT, BOT]))
    assert check_solution(s, vector([0, -1]))  # both sides equal 2
    assert s.a.apply(vector([0, -1])) == s.b.apply(vector([0, -1]))
    assert not check_solution(s, vector([0, 0]))  # lhs 3 > rhs 2


def test_star_criterion():
    # pivot star has a solution with x_p nonzero iff a_p <= b_p
    s = InequalitySystem(matrix([[0, 3]]), matrix([[2, 1]]))
    cols = _solve_one_sided(_pivot_matrix(s, 0, 0), set())
    assert any(not c[0].is_zero for c in cols)
    # pivot 1 has a_1 = 3 > 1 = b_1: every solution kills x_1
    cols_bad = _solve_one_sided(_pivot_matrix(s, 0, 1), set())
    assert all(c[1].is_zero for c in cols_bad)


def test_solve_system_examples():
    a = matrix([[0, 1], [1, 0]])
    s = InequalitySystem(a, a)
    sols = solve_system(s)
    sm = Semimodule(sols.generators)
    for v in (vector([5, -7]), vector([0, 0]), vector([BOT, 3])):
        assert project(sm, v) == v
    # single row reduces to the row case
    s1 = InequalitySystem(matrix([[0, BOT]]), matrix([[BOT, 0]]))
    assert normalized(solve_system(s1).columns()) == normalized(
        row_generators(vector([0, BOT]), vector([BOT, 0])).columns()
    )
    # x1 <= x2 and x2 <= x1: the diagonal
    s2 = InequalitySystem(
        matrix([[0, BOT], [BOT, 0]]), matrix([[BOT, 0], [0, BOT]])
    )
    sols2 = solve_system(s2).columns()
    assert len(sols2) == 1
    assert sr_residual(sols2[0][0], sols2[0][1]) == scalar(0)


def test_randomized_soundness_and_completeness():
    rng = random.Random(15)
    for _ in range(50):
        m = rng.randint(1, 2)
        n = rng.randint(2, 3)
        a = matrix(
            [[rng.choice([BOT] + list(range(-3, 4))) for _ in range(n)] for _ in range(m)]
        )
        b = matrix(
            [[rng.choice([BOT] + list(range(-3, 4))) for _ in range(n)] for _ in range(m)]
        )
        s = InequalitySystem(a, b)
        try:
            sols = solve_system(s).columns()
        except Infeasible:
            sols = []
        for c in sols:
            assert check_solution(s, c)
        sm = Semimodule(from_columns(sols)) if sols else None
        for p in itertools.product([None] + list(range(-3, 4)), repeat=n):
            x = vector(list(p))
            if x.is_zero or not check_solution(s, x):
                continue
            assert sm is not None
            assert project(sm, x) == x
