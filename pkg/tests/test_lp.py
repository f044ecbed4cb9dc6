import random
from fractions import Fraction as F

import pytest

from polylrs import (
    EmptyPolyhedronError,
    LPStatus,
    NoVertexError,
    build_initial_dictionary,
    maximize,
    oracle_rays,
    oracle_vertices,
    solve_lp,
)
from polylrs.vertex_search import find_initial_vertex
from polyfix import CHIMNEY, CHIMNEY_START, INTERVAL, INTERVAL_START, cube, hrep, random_pointed


def test_interval():
    res = solve_lp([1], INTERVAL, INTERVAL_START)
    assert res.status is LPStatus.OPTIMAL and res.x_opt == (1,) and res.max_value == 1
    assert res.objective_trace == (0, 1)


def test_chimney_unbounded():
    res = solve_lp([0, 0, 1], CHIMNEY, CHIMNEY_START)
    assert res.status is LPStatus.UNBOUNDED
    assert res.direction == (0, 0, 1)


def test_zero_objective():
    res = solve_lp([0, 0, 0], CHIMNEY, CHIMNEY_START)
    assert res.status is LPStatus.OPTIMAL and res.max_value == 0


def test_cube():
    res = maximize([1, 1, 1], cube())
    assert res.x_opt == (1, 1, 1) and res.max_value == 3


def test_wrapper_errors():
    with pytest.raises(NoVertexError):
        maximize([1, 0], hrep([[1, 0], [-1, 0]], [1, 1]))
    with pytest.raises(EmptyPolyhedronError):
        maximize([1], hrep([[1], [-1]], [0, -1]))
    with pytest.raises(ValueError):
        solve_lp([1, 2], INTERVAL, INTERVAL_START)


def test_random_against_oracle():
    rng = random.Random(7)
    for P, v in random_pointed(rng, 80):
        c = [F(rng.randint(-3, 3)) for _ in range(P.d)]
        res = solve_lp(c, P, v, check=True)
        trace = res.objective_trace
        assert all(a <= b for a, b in zip(trace, trace[1:]))
        improving = [r for r in oracle_rays(P) if sum(a * b for a, b in zip(c, r)) > 0]
        if improving:
            assert res.status is LPStatus.UNBOUNDED
            assert sum(a * b for a, b in zip(c, res.direction)) > 0
            assert all(sum(a * b for a, b in zip(h, res.direction)) <= 0 for h in P.H)
        else:
            assert res.status is LPStatus.OPTIMAL
            best = max(sum(a * b for a, b in zip(c, x)) for x in oracle_vertices(P))
            assert res.max_value == best
            assert res.x_opt in oracle_vertices(P)
            assert sum(a * b for a, b in zip(c, res.x_opt)) == res.max_value
