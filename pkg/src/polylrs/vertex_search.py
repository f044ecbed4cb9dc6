"""Find a starting vertex of ``{x : Hx <= b}``: a few random probes, then an exhaustive scan."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._linalg import rank, solve
from .model import HRep, InitialVertex
from .numerics import RATIONAL, TolerancePolicy, is_feasibly_nonneg
from .subsets import first_subset, indicator_to_rows, is_last_subset, next_subset

logger = logging.getLogger(__name__)

MSG_NO_VERTEX = "polyhedron Hx<=b has no vertex"
MSG_EMPTY = "polyhedron Hx<=b is empty"
MSG_FOUND = "vertex found"
MSG_SYSTEMATIC = "Systematic vertex search begins. This may take time."


class SearchStatus(Enum):
    VERTEX = "vertex"
    NO_VERTEX = "no vertex"
    EMPTY = "empty"


@dataclass(frozen=True)
class VertexSearchConfig:
    probe_limit: int = 10
    rng_seed: int = 0
    deterministic_only: bool = False

    def __post_init__(self) -> None:
        if self.probe_limit < 0:
            raise ValueError("probe_limit must be nonnegative")
        if self.deterministic_only:
            object.__setattr__(self, "probe_limit", 0)


@dataclass(frozen=True)
class VertexSearchResult:
    status: SearchStatus
    vertex: InitialVertex | None = None
    probes: int = 0  # candidate subsets examined

    def __bool__(self) -> bool:
        return self.status is SearchStatus.VERTEX


def accept_vertex_candidate(
    P: HRep, rows: Sequence[int], policy: TolerancePolicy = RATIONAL
) -> InitialVertex | None:
    """Solve the equality system of ``rows`` (1-based) and keep it if it satisfies ``Hx <= b``."""
    P = P.coerce(policy)
    rows = tuple(sorted(rows))
    if len(rows) != P.d:
        raise ValueError(f"need exactly {P.d} rows, got {len(rows)}")
    A = [P.H[i - 1] for i in rows]
    x = solve(A, [P.b[i - 1] for i in rows], policy)
    if x is None:
        return None
    for h, bi in P.rows():
        if not is_feasibly_nonneg(bi - sum(hj * xj for hj, xj in zip(h, x)), policy):
            return None
    return InitialVertex(tuple(x), rows)


def find_initial_vertex(
    P: HRep, cfg: VertexSearchConfig = VertexSearchConfig(), policy: TolerancePolicy = RATIONAL
) -> VertexSearchResult:
    P = P.coerce(policy)
    m, d = P.m, P.d
    if rank(P.H, policy) < d:
        logger.info(MSG_NO_VERTEX)
        return VertexSearchResult(SearchStatus.NO_VERTEX)

    probes = 0
    rng = np.random.default_rng(cfg.rng_seed)
    for _ in range(cfg.probe_limit):
        rows = [int(i) + 1 for i in rng.permutation(m)[:d]]
        probes += 1
        v = accept_vertex_candidate(P, rows, policy)
        if v is not None:
            logger.info(MSG_FOUND)
            return VertexSearchResult(SearchStatus.VERTEX, v, probes)

    logger.info(MSG_SYSTEMATIC)
    z = first_subset(m, d)
    while True:
        probes += 1
        v = accept_vertex_candidate(P, indicator_to_rows(z), policy)
        if v is not None:
            logger.info(MSG_FOUND)
            return VertexSearchResult(SearchStatus.VERTEX, v, probes)
        if is_last_subset(z):
            logger.info(MSG_EMPTY)
            return VertexSearchResult(SearchStatus.EMPTY, None, probes)
        z = next_subset(z)
