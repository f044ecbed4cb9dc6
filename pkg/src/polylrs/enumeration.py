"""Depth-first reverse search over lex-positive dictionaries.

Only the current dictionary is kept in memory. The tree is rooted at the
initial dictionary; children are reached by reverse steps and the way back
up is the lexicographic simplex pivot.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum

from .dictionary import DictionaryState, check_invariants, pivot_in_place, read_ray_direction, read_vertex
from .errors import InvariantViolation
from .model import Point, VRRep, canonicalize_ray
from .pivoting import is_lexmin_basis, reverse_step, select_pivot


class EventKind(Enum):
    VERTEX = "vertex"
    RAY = "ray"


Listener = Callable[[EventKind, object], None]


@dataclass
class EnumerationOutput:
    vertices: list[Point] = field(default_factory=list)
    ray_pairs: list[tuple[Point, Point]] = field(default_factory=list)
    pivots: int = 0

    @property
    def rays(self) -> list[Point]:
        """Canonical ray directions, duplicates across origins removed, in discovery order."""
        seen: dict[Point, None] = {}
        for _, r in self.ray_pairs:
            seen.setdefault(canonicalize_ray(r), None)
        return list(seen)

    def to_vrep(self, with_origins: bool = False) -> VRRep:
        d = len(self.vertices[0]) if self.vertices else None
        return VRRep(tuple(self.vertices), tuple(self.rays), tuple(self.ray_pairs) if with_origins else (), d)


def lrs(
    D0: DictionaryState,
    on_event: Listener | None = None,
    check: bool = False,
    on_pivot: Callable[[DictionaryState], None] | None = None,
) -> EnumerationOutput:
    """Emit every vertex and every origin/ray pair reachable from ``D0`` exactly once.

    ``D0`` must be an optimal initial dictionary (objective row nonnegative).
    It is not modified. With ``check=True`` the dictionary invariants,
    including lex-positivity, are verified after every pivot.
    """
    D = D0.copy()
    d = D.d
    out = EnumerationOutput()

    def emit_vertex() -> None:
        x = read_vertex(D)
        out.vertices.append(x)
        if on_event is not None:
            on_event(EventKind.VERTEX, x)

    def emit_ray(v: int) -> None:
        pair = (read_vertex(D), read_ray_direction(D, v))
        out.ray_pairs.append(pair)
        if on_event is not None:
            on_event(EventKind.RAY, pair)

    def step(r: int, s: int) -> None:
        pivot_in_place(D, r, s)
        out.pivots += 1
        if check:
            check_invariants(D)
        if on_pivot is not None:
            on_pivot(D)

    if check:
        check_invariants(D)
    j = 0
    while True:
        while j < d:
            v = D.cobasis[j]
            res = reverse_step(D, v)
            if res.is_reverse:
                step(res.u, v)
                if is_lexmin_basis(D, 0):
                    emit_vertex()
                j = 0
            else:
                if res.u == 0 and is_lexmin_basis(D, v):
                    emit_ray(v)
                j += 1
        r, s = select_pivot(D)
        if s is None:
            emit_vertex()
            return out
        if r == 0:
            raise InvariantViolation(f"objective unbounded along column {s} while backtracking")
        pos = D.cobasis.index(s)
        step(r, s)
        j = pos + 1
