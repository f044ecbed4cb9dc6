"""H- and VR-representations of pointed polyhedra and their canonical forms."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DuplicateRayError, DuplicateVertexError, ZeroInequalityError, ZeroRayError
from .numerics import RATIONAL, Scalar, TolerancePolicy, to_scalar

Point = tuple  # tuple of Scalars

FLOAT_MATCH_TOL = 1e-9


def _coerce_vector(v: Iterable, policy: TolerancePolicy) -> Point:
    return tuple(to_scalar(x, policy) for x in v)


def _is_exact(values: Iterable) -> bool:
    return not any(isinstance(x, float) for x in values)


@dataclass(frozen=True)
class HRep:
    """The polyhedron ``{x : H x <= b}`` with ``H`` of shape m x d."""

    H: tuple[Point, ...]
    b: Point

    def __post_init__(self) -> None:
        H = tuple(tuple(row) for row in self.H)
        b = tuple(self.b)
        if not H:
            raise ValueError("an H-representation needs at least one inequality")
        d = len(H[0])
        if d == 0 or any(len(row) != d for row in H):
            raise ValueError("H must be a nonempty rectangular matrix")
        if len(b) != len(H):
            raise ValueError(f"b has {len(b)} entries for {len(H)} rows of H")
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_rows(cls, H: Iterable[Iterable], b: Iterable, policy: TolerancePolicy = RATIONAL) -> HRep:
        return cls(tuple(_coerce_vector(row, policy) for row in H), _coerce_vector(b, policy))

    def coerce(self, policy: TolerancePolicy) -> HRep:
        return HRep.from_rows(self.H, self.b, policy)

    @property
    def m(self) -> int:
        return len(self.H)

    @property
    def d(self) -> int:
        return len(self.H[0])

    def rows(self) -> list[tuple[Point, Scalar]]:
        return list(zip(self.H, self.b))

    def scaled(self, factor) -> HRep:
        return HRep(tuple(tuple(factor * x for x in row) for row in self.H), tuple(factor * x for x in self.b))

    def contains(self, x: Sequence, policy: TolerancePolicy = RATIONAL) -> bool:
        slack = 0 if policy.exact else policy.feas_slack
        return all(sum(h * xi for h, xi in zip(row, x)) <= bi + slack for row, bi in zip(self.H, self.b))


@dataclass(frozen=True)
class VRRep:
    """Vertices plus extreme-ray directions, optionally with origin/ray pairs."""

    vertices: tuple[Point, ...] = ()
    rays: tuple[Point, ...] = ()
    pairs: tuple[tuple[Point, Point], ...] = ()
    dim: int | None = field(default=None)

    def __post_init__(self) -> None:
        vertices = tuple(tuple(v) for v in self.vertices)
        rays = tuple(tuple(r) for r in self.rays)
        pairs = tuple((tuple(o), tuple(r)) for o, r in self.pairs)
        dims = {len(p) for p in vertices + rays} | {len(p) for pair in pairs for p in pair}
        if self.dim is not None:
            dims.add(self.dim)
        if len(dims) > 1:
            raise ValueError(f"inconsistent dimensions {sorted(dims)}")
        if not dims:
            raise ValueError("cannot infer the dimension of an empty VR-representation")
        dim = dims.pop()
        for r in rays + tuple(r for _, r in pairs):
            if all(x == 0 for x in r):
                raise ZeroRayError("ray directions must be nonzero")
        if len(set(vertices)) != len(vertices):
            raise DuplicateVertexError("duplicate vertex in VR-representation")
        canon = [canonicalize_ray(r) for r in rays]
        if _is_exact(x for r in rays for x in r) and len(set(canon)) != len(canon):
            raise DuplicateRayError("duplicate ray direction in VR-representation")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "dim", dim)

    @property
    def d(self) -> int:
        return self.dim


@dataclass(frozen=True)
class InitialVertex:
    """A vertex together with the 1-based indices of d rows of H tight at it."""

    x0: Point
    tight_rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x0", tuple(self.x0))
        object.__setattr__(self, "tight_rows", tuple(int(i) for i in self.tight_rows))
        if len(set(self.tight_rows)) != len(self.tight_rows):
            raise ValueError("tight rows must be distinct")


def _integer_scale(values: Sequence[Fraction]) -> list[Fraction]:
    values = [Fraction(x) for x in values]
    lcm = 1
    for x in values:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in values]
    g = 0
    for n in ints:
        g = math.gcd(g, n)
    return [Fraction(n // g) for n in ints]


def _max_scale(values: Sequence[float]) -> list[float]:
    top = max(abs(x) for x in values)
    return [x / top for x in values]


def _canonical(values: Sequence) -> tuple:
    if _is_exact(values):
        return tuple(_integer_scale(values))
    return tuple(_max_scale([float(x) for x in values]))


def canonicalize_ray(r: Sequence) -> Point:
    """Positive multiple of ``r`` with coprime integer entries (max-abs 1 for floats)."""
    if all(x == 0 for x in r):
        raise ZeroRayError("cannot canonicalize the zero ray")
    return _canonical(r)


def canonicalize_inequality(h: Sequence, beta: Scalar) -> tuple[Point, Scalar]:
    """Scale ``h . x <= beta`` by the positive factor making all entries coprime integers."""
    values = list(h) + [beta]
    if all(x == 0 for x in values):
        raise ZeroInequalityError("cannot canonicalize the zero inequality")
    canon = _canonical(values)
    return canon[:-1], canon[-1]


def canonical_inequalities(P: HRep) -> list[tuple[Point, Scalar]]:
    return [canonicalize_inequality(row, bi) for row, bi in P.rows()]


def _flatten(ineq: tuple[Point, Scalar]) -> tuple:
    return tuple(ineq[0]) + (ineq[1],)


def _close(u: Sequence[float], v: Sequence[float], tol: float = FLOAT_MATCH_TOL) -> bool:
    return len(u) == len(v) and all(abs(float(a) - float(b)) <= tol for a, b in zip(u, v))


def same_point_sets(a: Iterable[Sequence], b: Iterable[Sequence], tol: float = FLOAT_MATCH_TOL) -> bool:
    """Set equality, exact for rationals and within ``tol`` per component for floats."""
    a, b = [tuple(p) for p in a], [tuple(p) for p in b]
    if _is_exact(x for p in a + b for x in p):
        return set(a) == set(b)
    return all(any(_close(p, q, tol) for q in b) for p in a) and all(any(_close(q, p, tol) for p in a) for q in b)


def hrep_equivalent(a: HRep, b: HRep) -> bool:
    """Equal sets of canonicalized inequalities; row order and positive scaling are ignored."""
    if a.d != b.d:
        raise ValueError("H-representations of different dimensions")
    return same_point_sets(map(_flatten, canonical_inequalities(a)), map(_flatten, canonical_inequalities(b)))
