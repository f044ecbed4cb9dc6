import random
from fractions import Fraction as F

import pytest

from polylrs import (
    EmptyInputError,
    HRep,
    NotFullDimensionalError,
    h_to_vr,
    hrep_equivalent,
    oracle_facets,
    oracle_vertices,
    vr_to_h,
)
from polylrs.model import canonicalize_inequality
from polylrs.transforms import MSG_NOT_FULL_DIMENSIONAL, lifted_cone
from polyfix import CHIMNEY, CHIMNEY_RAY, CHIMNEY_VERTICES, CUBE_VERTICES, as_fractions, cube, random_polytope


def test_chimney_facets():
    P = vr_to_h(sorted(CHIMNEY_VERTICES), [CHIMNEY_RAY], check=True)
    assert P.m == 8
    assert hrep_equivalent(P, CHIMNEY)


def test_cube_facets():
    P = vr_to_h(sorted(CUBE_VERTICES), check=True)
    assert hrep_equivalent(P, cube())
    assert {canonicalize_inequality(h, b) for h, b in P.rows()} == {
        canonicalize_inequality(h, b) for h, b in cube().rows()
    }


def test_not_full_dimensional():
    with pytest.raises(NotFullDimensionalError, match=MSG_NOT_FULL_DIMENSIONAL):
        vr_to_h([(0, 0), (1, 0)])
    with pytest.raises(NotFullDimensionalError):
        vr_to_h([(0, 0)])
    with pytest.raises(EmptyInputError):
        vr_to_h([])


def test_lifted_cone_layout():
    A = lifted_cone([(1, 2)], [(0, 1)])
    assert A.H == ((-1, -1, -2), (0, 0, -1)) and A.b == (0, 0)


def test_lifted_cone_has_only_the_apex():
    from polylrs.enumeration import lrs
    from polylrs.dictionary import build_initial_dictionary
    from polylrs.vertex_search import find_initial_vertex

    A = lifted_cone([tuple(F(x) for x in v) for v in CUBE_VERTICES], [])
    out = lrs(build_initial_dictionary(A, find_initial_vertex(A).vertex))
    assert out.vertices == [(0, 0, 0, 0)]
    assert len(out.rays) == 6


def test_full_recession_cone_drops_trivial_inequality():
    # the positive quadrant: polar ray (1, 0, 0) encodes 0 <= 1
    P = vr_to_h([(0, 0)], [(1, 0), (0, 1)])
    assert hrep_equivalent(P, HRep(((-1, 0), (0, -1)), (0, 0)))


def test_redundant_generators_ignored():
    points = sorted(CUBE_VERTICES) + [(0, 0, 0), (F(1, 2), 0, 1)]
    assert hrep_equivalent(vr_to_h(points), cube())


def test_round_trips():
    rng = random.Random(2024)
    for _ in range(30):
        P = random_polytope(rng)
        V = h_to_vr(P, check=True).vertices
        facets = oracle_facets(V)
        Q = vr_to_h(V, check=True)
        expected = HRep(tuple(h for h, _ in facets), tuple(b for _, b in facets))
        assert hrep_equivalent(Q, expected)
        # polarity soundness
        assert all(Q.contains(v) for v in V)
        back = h_to_vr(Q, check=True)
        assert set(back.vertices) == set(V) and back.ray_pairs == []


def test_unbounded_round_trip():
    Q = vr_to_h(sorted(CHIMNEY_VERTICES), [CHIMNEY_RAY])
    out = h_to_vr(Q)
    assert set(out.vertices) == as_fractions(CHIMNEY_VERTICES)
    assert out.rays == [CHIMNEY_RAY]
