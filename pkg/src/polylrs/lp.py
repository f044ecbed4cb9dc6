"""Simplex method with the lexicographic pivot rule, started at a known vertex."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from .dictionary import build_initial_dictionary, check_invariants, pivot_in_place, read_ray_direction, read_vertex
from .errors import EmptyPolyhedronError, NoVertexError
from .model import HRep, InitialVertex, Point
from .numerics import RATIONAL, Scalar, TolerancePolicy
from .pivoting import select_pivot
from .vertex_search import MSG_EMPTY, MSG_NO_VERTEX, SearchStatus, VertexSearchConfig, find_initial_vertex

MSG_UNBOUNDED = "The problem is unbounded"


class LPStatus(Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    x_opt: Point | None = None
    max_value: Scalar | None = None
    direction: Point | None = None  # improving ray when unbounded
    objective_trace: tuple = ()  # T(1, last) before each pivot and at the end


def solve_lp(
    c: Sequence,
    P: HRep,
    v: InitialVertex,
    policy: TolerancePolicy = RATIONAL,
    check: bool = False,
) -> LPResult:
    """Maximize ``c . x`` over ``P`` starting from the vertex ``v``."""
    P = P.coerce(policy)
    if len(c) != P.d:
        raise ValueError(f"objective has {len(c)} entries, polyhedron dimension is {P.d}")
    D = build_initial_dictionary(P, v, policy)
    m, d = D.m, D.d
    cvec = policy.array(list(c))
    # x1 = c.x rewritten in terms of the cobasic slacks and the right-hand side
    u = cvec.dot(D.T[1 : d + 1, m + 1 :])
    D.T[0, :] = policy.zero
    D.T[0, 0] = policy.one
    D.T[0, m + 1 : m + d + 1] = u[:d]
    D.T[0, -1] = u[d]

    trace = [D.T[0, -1]]
    r, s = select_pivot(D)
    while s is not None:
        if r == 0:
            return LPResult(LPStatus.UNBOUNDED, direction=read_ray_direction(D, s), objective_trace=tuple(trace))
        pivot_in_place(D, r, s)
        if check:
            check_invariants(D)
        trace.append(D.T[0, -1])
        r, s = select_pivot(D)
    value = D.T[0, -1]
    if not policy.exact:
        value = float(value)
    return LPResult(LPStatus.OPTIMAL, read_vertex(D), value, objective_trace=tuple(trace))


def maximize(
    c: Sequence,
    P: HRep,
    cfg: VertexSearchConfig = VertexSearchConfig(),
    policy: TolerancePolicy = RATIONAL,
    check: bool = False,
) -> LPResult:
    """:func:`solve_lp` after locating a starting vertex."""
    found = find_initial_vertex(P, cfg, policy)
    if found.status is SearchStatus.NO_VERTEX:
        raise NoVertexError(MSG_NO_VERTEX)
    if found.status is SearchStatus.EMPTY:
        raise EmptyPolyhedronError(MSG_EMPTY)
    return solve_lp(c, P, found.vertex, policy, check)
