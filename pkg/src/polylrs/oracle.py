"""Brute-force reference answers for small instances (exact arithmetic only).

These enumerate row or generator subsets directly and share nothing with
the reverse-search code path beyond the small linear solver.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations

from ._linalg import nullspace, rank, solve
from .model import HRep, Point, canonicalize_inequality, canonicalize_ray

MAX_ROWS = 12
MAX_DIM = 4


def _check_scale(n: int, d: int) -> None:
    if n > MAX_ROWS or d > MAX_DIM:
        raise ValueError(f"oracle limited to {MAX_ROWS} rows/generators and dimension {MAX_DIM}; got {n}, {d}")


def _exact(P: HRep) -> HRep:
    return HRep(tuple(tuple(Fraction(x) for x in row) for row in P.H), tuple(Fraction(x) for x in P.b))


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def oracle_vertices(P: HRep) -> set[Point]:
    P = _exact(P)
    _check_scale(P.m, P.d)
    found = set()
    for rows in combinations(range(P.m), P.d):
        x = solve([P.H[i] for i in rows], [P.b[i] for i in rows])
        if x is not None and all(_dot(h, x) <= bi for h, bi in P.rows()):
            found.add(tuple(x))
    return found


def oracle_rays(P: HRep) -> set[Point]:
    """Canonical extreme rays of ``{y : Hy <= 0}``."""
    P = _exact(P)
    _check_scale(P.m, P.d)
    d = P.d
    found = set()
    for rows in combinations(range(P.m), d - 1):
        sub = [P.H[i] for i in rows]
        if rank(sub) != d - 1:
            continue
        (t,) = nullspace(sub, d)
        for sign in (1, -1):
            y = [sign * x for x in t]
            if all(_dot(h, y) <= 0 for h in P.H):
                found.add(canonicalize_ray(y))
    return found


def oracle_facets(vertices: Sequence[Sequence], rays: Sequence[Sequence] = ()) -> set[tuple[Point, Fraction]]:
    """Canonical facet inequalities ``a . x <= beta`` of ``conv(vertices) + cone(rays)``.

    Generators are lifted to ``(1, v)`` and ``(0, r)``; every d-subset of rank
    d spans a linear hyperplane ``c . g = 0`` with ``c = (beta, -a)``. It is a
    facet when all lifted generators lie on one side and at least one vertex
    lies on it.
    """
    V = [tuple(Fraction(x) for x in v) for v in vertices]
    R = [tuple(Fraction(x) for x in r) for r in rays]
    gens = [(Fraction(1),) + v for v in V] + [(Fraction(0),) + r for r in R]
    d = len(gens[0]) - 1
    _check_scale(len(gens), d)
    found = set()
    for idx in combinations(range(len(gens)), d):
        sub = [gens[i] for i in idx]
        if not any(g[0] == 1 for g in sub) or rank(sub) != d:
            continue
        (c,) = nullspace(sub, d + 1)
        sides = [_dot(c, g) for g in gens]
        if all(x >= 0 for x in sides):
            pass
        elif all(x <= 0 for x in sides):
            c = [-x for x in c]
        else:
            continue
        beta, a = c[0], [-x for x in c[1:]]
        if all(x == 0 for x in a):
            continue
        found.add(canonicalize_inequality(a, beta))
    return found
