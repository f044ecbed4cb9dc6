import random
from itertools import combinations

import pytest

from polylrs import EventKind, FLOAT, InitialVertex, build_initial_dictionary, h_to_vr, lrs, oracle_rays, oracle_vertices
from polylrs._linalg import rank
from polylrs.model import canonicalize_ray, same_point_sets
from polylrs.vertex_search import accept_vertex_candidate
from polyfix import (
    CHIMNEY,
    CHIMNEY_RAY,
    CHIMNEY_START,
    CHIMNEY_VERTICES,
    CUBE_VERTICES,
    HALF_LINE,
    HALF_LINE_START,
    PERTURBED_CUBE,
    POINT,
    POINT_START,
    PYRAMID,
    PYRAMID_VERTICES,
    as_fractions,
    cube,
    random_pointed,
)


def run(P, v, **kw):
    return lrs(build_initial_dictionary(P, v), check=True, **kw)


def test_chimney():
    out = run(CHIMNEY, CHIMNEY_START)
    assert set(out.vertices) == as_fractions(CHIMNEY_VERTICES)
    assert len(out.vertices) == 5
    origins = {o for o, _ in out.ray_pairs}
    assert origins == as_fractions(CHIMNEY_VERTICES - {(0, 0, -1)})
    assert {r for _, r in out.ray_pairs} == {CHIMNEY_RAY}
    assert len(out.ray_pairs) == 4 and out.rays == [CHIMNEY_RAY]


def test_root_vertex_emitted_last():
    out = run(CHIMNEY, CHIMNEY_START)
    assert out.vertices[-1] == CHIMNEY_START.x0


def test_point_and_half_line():
    out = run(POINT, POINT_START)
    assert out.vertices == [(0,)] and out.ray_pairs == []
    out = run(HALF_LINE, HALF_LINE_START)
    assert out.vertices == [(0,)] and out.ray_pairs == [((0,), (1,))]


def test_cube():
    out = h_to_vr(cube(), check=True)
    assert set(out.vertices) == as_fractions(CUBE_VERTICES) and len(out.vertices) == 8
    assert out.ray_pairs == []


def test_pyramid_apex_once():
    out = h_to_vr(PYRAMID, check=True)
    assert sorted(out.vertices) == sorted(as_fractions(PYRAMID_VERTICES))


def test_events_stream_in_discovery_order():
    events = []
    out = run(CHIMNEY, CHIMNEY_START, on_event=lambda kind, payload: events.append((kind, payload)))
    assert [p for k, p in events if k is EventKind.VERTEX] == out.vertices
    assert [p for k, p in events if k is EventKind.RAY] == out.ray_pairs


def test_input_dictionary_untouched():
    D = build_initial_dictionary(CHIMNEY, CHIMNEY_START)
    before = D.copy()
    lrs(D)
    assert D == before


def test_random_against_oracle():
    rng = random.Random(99)
    for P, v in random_pointed(rng, 80):
        out = run(P, v)
        assert len(set(out.vertices)) == len(out.vertices)
        assert len(set(out.ray_pairs)) == len(out.ray_pairs)
        assert set(out.vertices) == oracle_vertices(P)
        assert set(out.rays) == oracle_rays(P)
        for x in out.vertices:
            tight = [h for h, bi in P.rows() if sum(a * c for a, c in zip(h, x)) == bi]
            assert rank(tight) == P.d
        for _, r in out.ray_pairs:
            assert all(sum(a * c for a, c in zip(h, r)) <= 0 for h in P.H)
            tight = [h for h in P.H if sum(a * c for a, c in zip(h, r)) == 0]
            assert rank(tight) == P.d - 1


def test_independent_of_start_vertex():
    rng = random.Random(4)
    for P, _ in random_pointed(rng, 15, d=3):
        starts = [accept_vertex_candidate(P, c) for c in combinations(range(1, P.m + 1), P.d)]
        results = {
            (frozenset(out.vertices), frozenset(out.rays))
            for out in (run(P, v) for v in starts if v is not None)
        }
        assert len(results) == 1


def test_float_mode_perturbed_cube():
    exact = h_to_vr(PERTURBED_CUBE)
    approx = h_to_vr(PERTURBED_CUBE, policy=FLOAT, check=True)
    assert len(exact.vertices) == len(approx.vertices) == 8
    assert same_point_sets(approx.vertices, [tuple(float(x) for x in v) for v in exact.vertices])
