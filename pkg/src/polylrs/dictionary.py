"""Dictionaries (tableaus) of a pointed polyhedron and the pivot operation.

Layout of the (m+1) x (m+d+2) tableau ``T``, using 1-based variable numbers
as everywhere in the public interface (variable ``j`` is column ``j-1``):

* variable 1: objective ``x1``
* variables 2..d+1: the original coordinates
* variables d+2..m+d+1: slacks, one per inequality
* last column: right-hand side

The initial dictionary has basis ``(1, .., m+1)`` and cobasis
``(m+2, .., m+d+1)``; the tight rows of the initial vertex are moved to the
bottom so their slacks are the cobasic ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from ._linalg import inverse
from .errors import InvariantViolation, SingularBlockError, ZeroPivotElementError
from .model import HRep, InitialVertex, Point
from .numerics import RATIONAL, TolerancePolicy, format_scalar, is_effectively_zero


@dataclass
class DictionaryState:
    T: np.ndarray
    basis: list[int]
    cobasis: list[int]
    policy: TolerancePolicy = field(default=RATIONAL)
    row_order: tuple[int, ...] = ()  # 1-based H row behind each slack d+1+k

    @property
    def m(self) -> int:
        return self.T.shape[0] - 1

    @property
    def d(self) -> int:
        return self.T.shape[1] - self.T.shape[0] - 1

    def copy(self) -> DictionaryState:
        return DictionaryState(self.T.copy(), list(self.basis), list(self.cobasis), self.policy, self.row_order)

    def entry(self, row: int, var: int):
        """``T(row, var)`` with 1-based row and column numbers."""
        return self.T[row - 1, var - 1]

    def column(self, var: int) -> np.ndarray:
        return self.T[:, var - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DictionaryState):
            return NotImplemented
        return (
            self.T.shape == other.T.shape
            and bool(np.all(self.T == other.T))
            and self.basis == other.basis
            and self.cobasis == other.cobasis
        )


def _snap(T: np.ndarray, policy: TolerancePolicy) -> None:
    if not policy.exact:
        T[np.abs(T) <= policy.zero_snap] = 0.0
        if not np.all(np.isfinite(T)):
            raise FloatingPointError("non-finite entry in dictionary")


def build_initial_dictionary(P: HRep, v: InitialVertex, policy: TolerancePolicy = RATIONAL) -> DictionaryState:
    P = P.coerce(policy)
    m, d = P.m, P.d
    tight = sorted(set(v.tight_rows))
    if len(tight) != d or tight[0] < 1 or tight[-1] > m:
        raise ValueError(f"initial vertex needs {d} distinct tight rows in 1..{m}, got {v.tight_rows}")
    tight_set = set(tight)
    order = [i for i in range(1, m + 1) if i not in tight_set] + tight
    H = policy.array([P.H[i - 1] for i in order]).reshape(m, d)
    b = policy.array([P.b[i - 1] for i in order])
    H_upp, b_upp, H_low, b_low = H[: m - d], b[: m - d], H[m - d :], b[m - d :]
    inv = inverse(H_low.tolist(), policy)
    if inv is None:
        raise SingularBlockError(f"rows {tuple(tight)} of H are linearly dependent")
    inv = policy.array(inv).reshape(d, d)

    zero, one = policy.zero, policy.one
    T = np.full((m + 1, m + d + 2), zero, dtype=policy.dtype)
    T[0, 0] = one
    T[0, m + 1 : m + d + 1] = one
    for k in range(1, m + 1):
        T[k, k] = one
    x0 = inv.dot(b_low)
    T[1 : d + 1, m + 1 : m + d + 1] = inv
    T[1 : d + 1, -1] = x0
    if m > d:
        T[d + 1 :, m + 1 : m + d + 1] = -H_upp.dot(inv)
        T[d + 1 :, -1] = b_upp - H_upp.dot(x0)
    if not policy.exact:
        T = np.ascontiguousarray(T, dtype=np.float64)
    _snap(T, policy)
    return DictionaryState(T, list(range(1, m + 2)), list(range(m + 2, m + d + 2)), policy, tuple(order))


def pivot_in_place(D: DictionaryState, r: int, s: int) -> None:
    """Exchange basic ``r`` with cobasic ``s``, mutating ``D``."""
    try:
        t = D.basis.index(r)
    except ValueError:
        raise ValueError(f"{r} is not a basic variable") from None
    try:
        tn = D.cobasis.index(s)
    except ValueError:
        raise ValueError(f"{s} is not a cobasic variable") from None
    if t <= D.d:
        raise ValueError(f"variable {r} is an objective or coordinate variable and must stay basic")
    if is_effectively_zero(D.T[t, s - 1], D.policy):
        raise ZeroPivotElementError(f"zero pivot element at row {t + 1}, column {s}")
    kernels.pivot_inplace(D.T, t, s - 1, float(D.policy.zero_snap))
    if not D.policy.exact and not np.all(np.isfinite(D.T)):
        raise FloatingPointError("non-finite entry in dictionary")
    D.basis[t] = s
    D.cobasis[tn] = r


def pivot(D: DictionaryState, r: int, s: int) -> DictionaryState:
    """Return the dictionary obtained by pivoting ``r`` out of and ``s`` into the basis."""
    out = D.copy()
    pivot_in_place(out, r, s)
    return out


def _as_point(values, policy: TolerancePolicy) -> Point:
    if policy.exact:
        return tuple(values)
    return tuple(float(x) for x in values)


def read_vertex(D: DictionaryState) -> Point:
    return _as_point(D.T[1 : D.d + 1, -1], D.policy)


def read_ray_direction(D: DictionaryState, s: int) -> Point:
    """``-T(2..d+1, s)``: direction of the edge or ray obtained by raising ``x_s``."""
    if s not in D.cobasis:
        raise ValueError(f"{s} is not a cobasic variable")
    return _as_point(-D.T[1 : D.d + 1, s - 1], D.policy)


def is_lex_positive_row(row, policy: TolerancePolicy) -> bool:
    for x in row:
        if not is_effectively_zero(x, policy):
            return x > 0
    return False


def check_invariants(D: DictionaryState, lex_positive: bool = True) -> None:
    """Raise :class:`InvariantViolation` unless ``D`` is a well-formed feasible dictionary."""
    m, d = D.m, D.d
    if D.T.shape != (m + 1, m + d + 2) or len(D.basis) != m + 1 or len(D.cobasis) != d:
        raise InvariantViolation("dictionary, basis and cobasis sizes disagree")
    if D.basis[: d + 1] != list(range(1, d + 2)):
        raise InvariantViolation(f"basis must start with 1..{d + 1}: {D.basis}")
    if not all(d + 2 <= s <= m + d + 1 for s in D.cobasis):
        raise InvariantViolation(f"cobasis outside the slack range: {D.cobasis}")
    if sorted(D.basis + D.cobasis) != list(range(1, m + d + 2)):
        raise InvariantViolation("basis and cobasis do not partition the variables")
    B = D.T[:, [j - 1 for j in D.basis]]
    if not np.all(B == np.eye(m + 1)):
        raise InvariantViolation("basic columns are not the identity")
    slack = 0 if D.policy.exact else D.policy.feas_slack
    if np.any(D.T[d + 1 :, -1] < -slack):
        raise InvariantViolation("negative basic slack value")
    if lex_positive:
        cols = [m + d + 1] + list(range(m + 1))
        for t in range(d + 1, m + 1):
            if not is_lex_positive_row(D.T[t, cols], D.policy):
                raise InvariantViolation(f"row {t + 1} is not lexicographically positive")


def format_dictionary(D: DictionaryState) -> str:
    """Debug dump: tableau rows, then ``basis:`` and ``cobasis:`` lines."""
    lines = [" ".join(format_scalar(x) for x in row) for row in D.T]
    lines.append("basis: " + " ".join(map(str, D.basis)))
    lines.append("cobasis: " + " ".join(map(str, D.cobasis)))
    return "\n".join(lines)
