"""H -> VR by reverse search, and VR -> H through the polar of the homogenized cone."""

from __future__ import annotations

from collections.abc import Sequence

from ._linalg import rank
from .dictionary import build_initial_dictionary
from .enumeration import EnumerationOutput, Listener, lrs
from .errors import EmptyInputError, EmptyPolyhedronError, NoVertexError, NotFullDimensionalError
from .model import HRep, InitialVertex
from .numerics import RATIONAL, TolerancePolicy, to_scalar
from .vertex_search import MSG_EMPTY, MSG_NO_VERTEX, SearchStatus, VertexSearchConfig, find_initial_vertex

MSG_NOT_FULL_DIMENSIONAL = "VR-representation is not full dimensional"


def require_vertex(P: HRep, cfg: VertexSearchConfig, policy: TolerancePolicy) -> InitialVertex:
    found = find_initial_vertex(P, cfg, policy)
    if found.status is SearchStatus.NO_VERTEX:
        raise NoVertexError(MSG_NO_VERTEX)
    if found.status is SearchStatus.EMPTY:
        raise EmptyPolyhedronError(MSG_EMPTY)
    return found.vertex


def h_to_vr(
    P: HRep,
    v: InitialVertex | None = None,
    policy: TolerancePolicy = RATIONAL,
    *,
    cfg: VertexSearchConfig = VertexSearchConfig(),
    check: bool = False,
    on_event: Listener | None = None,
) -> EnumerationOutput:
    """Vertices and origin/ray pairs of ``P``; a starting vertex is searched for if ``v`` is None."""
    P = P.coerce(policy)
    if v is None:
        v = require_vertex(P, cfg, policy)
    return lrs(build_initial_dictionary(P, v, policy), on_event=on_event, check=check)


def lifted_cone(vertices: Sequence[Sequence], rays: Sequence[Sequence], policy: TolerancePolicy = RATIONAL) -> HRep:
    """Rows ``-(1, v)`` per vertex and ``-(0, r)`` per ray, right-hand side 0."""
    zero, one = policy.zero, policy.one
    rows = [(-one,) + tuple(-x for x in v) for v in vertices]
    rows += [(zero,) + tuple(-x for x in r) for r in rays]
    return HRep(tuple(rows), (zero,) * len(rows))


def vr_to_h(
    vertices: Sequence[Sequence],
    rays: Sequence[Sequence] = (),
    policy: TolerancePolicy = RATIONAL,
    *,
    cfg: VertexSearchConfig = VertexSearchConfig(),
    check: bool = False,
) -> HRep:
    """Facet inequalities of ``conv(vertices) + cone(rays)``.

    Each extreme ray ``z`` of the polar cone gives ``-z[1:] . x <= z[0]``. The
    ray ``(1, 0, .., 0)``, present when the recession cone is full
    dimensional, encodes ``0 <= 1`` and is dropped.
    """
    V = [tuple(to_scalar(x, policy) for x in v) for v in vertices]
    R = [tuple(to_scalar(x, policy) for x in r) for r in rays]
    if not V:
        raise EmptyInputError("at least one vertex is required")
    d = len(V[0])
    if any(len(p) != d for p in V + R):
        raise ValueError("generators have inconsistent dimensions")
    spans = [tuple(a - b for a, b in zip(v, V[0])) for v in V[1:]] + R
    if not spans or rank(spans, policy) < d:
        raise NotFullDimensionalError(MSG_NOT_FULL_DIMENSIONAL)

    A = lifted_cone(V, R, policy)
    apex = require_vertex(A, cfg, policy)
    out = lrs(build_initial_dictionary(A, apex, policy), check=check)
    H, b = [], []
    for _, z in out.ray_pairs:
        h = tuple(-x for x in z[1:])
        if all(x == 0 for x in h):
            continue
        H.append(h)
        b.append(z[0])
    return HRep(tuple(H), tuple(b))
