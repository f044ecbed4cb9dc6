"""Pivot selection: lexicographic ratio test, simplex rule, lexmin test, reverse steps."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from . import kernels
from .dictionary import DictionaryState
from .errors import NonUniqueLexMinError
from .numerics import is_feasibly_nonneg


@dataclass(frozen=True)
class ReverseResult:
    is_reverse: bool
    u: int  # basic variable found by the ratio test, 0 for a ray


def lex_min_rows(M: Sequence[Sequence]) -> set[int]:
    """1-based indices of all rows equal to the lexicographically smallest row.

    Narrows the candidate set one column at a time, keeping the rows that
    attain the column minimum.
    """
    rows = [list(r) for r in M]
    if not rows:
        return set()
    cand = list(range(len(rows)))
    ncols = len(rows[0])
    j = 0
    while len(cand) >= 2 and j < ncols:
        low = min(rows[i][j] for i in cand)
        cand = [i for i in cand if rows[i][j] == low]
        j += 1
    return {i + 1 for i in cand}


def lex_min_ratio(D: DictionaryState, s: int) -> int:
    """Leaving variable for entering ``s`` by the lexicographic ratio test; 0 if ``s`` is a ray."""
    if s not in D.cobasis:
        raise ValueError(f"{s} is not a cobasic variable")
    t = kernels.lex_ratio_row(D.T, s - 1, D.d)
    if t == kernels.NO_CANDIDATE:
        return 0
    if t == kernels.TIE:
        raise NonUniqueLexMinError(f"lexicographic ratio test for column {s} has no unique minimum")
    return D.basis[t]


def select_pivot(D: DictionaryState) -> tuple[int, int | None]:
    """Lexicographic simplex rule.

    Returns ``(0, None)`` when the objective row has no negative entry
    (optimal), ``(0, s)`` when column ``s`` is unbounded, else ``(r, s)``.
    """
    row = D.T[0, :-1]
    s = next((j + 1 for j, x in enumerate(row) if x < 0), None)
    if s is None:
        return 0, None
    return lex_min_ratio(D, s), s


def is_lexmin_basis(D: DictionaryState, v: int = 0) -> bool:
    """Whether the basis is the lexicographically smallest one for its vertex (``v=0``)
    or for the ray given by cobasic column ``v``."""
    if v and v not in D.cobasis:
        raise ValueError(f"{v} is not a cobasic variable")
    return not kernels.lexmin_violation(D.T, D.basis, D.cobasis, v)


def reverse_step(D: DictionaryState, v: int) -> ReverseResult:
    """Decide whether entering ``v`` is a pivot the simplex rule would undo.

    With ``u`` from the ratio test and ``i`` its row, the pivot is a reverse
    step iff ``T(1, v) > 0`` and the updated objective row
    ``w0 - (a0 / ai) * wi`` is nonnegative on every cobasic ``j < u``.
    """
    u = lex_min_ratio(D, v)
    if u == 0:
        return ReverseResult(False, 0)
    i = D.basis.index(u)
    T = D.T
    a0, ai = T[0, v - 1], T[i, v - 1]
    if not a0 > 0:
        return ReverseResult(False, u)
    for j in D.cobasis:
        if j < u:
            wbar = T[0, j - 1] - a0 * T[i, j - 1] / ai
            if not is_feasibly_nonneg(wbar, D.policy):
                return ReverseResult(False, u)
    return ReverseResult(True, u)
