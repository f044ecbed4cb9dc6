"""Pure-Python tableau kernels; reference behaviour for the compiled ``_ckernels``.

All indices are 0-based positions into the tableau ``T`` of shape
(m+1) x (m+d+2). Float tableaus are C-contiguous float64 arrays; exact
tableaus are object arrays of Fractions.
"""

from __future__ import annotations

import numpy as np

NO_CANDIDATE = -1
TIE = -2


def pivot_inplace(T: np.ndarray, t: int, s: int, zero_snap: float) -> None:
    """Make column ``s`` the ``t``-th unit vector by row operations on ``T``."""
    if T.dtype == object:
        _pivot_object(T, t, s)
    else:
        _pivot_float(T, t, s, zero_snap)


def _pivot_float(T: np.ndarray, t: int, s: int, zero_snap: float) -> None:
    a = T[:, s].copy()
    T[t] = T[t] / a[t]
    others = np.flatnonzero(a)
    others = others[others != t]
    if others.size:
        T[others] -= np.outer(a[others], T[t])
    if zero_snap > 0:
        T[np.abs(T) <= zero_snap] = 0.0
    T[:, s] = 0.0
    T[t, s] = 1.0


def _pivot_object(T: np.ndarray, t: int, s: int) -> None:
    rows, cols = T.shape
    piv = T[t, s]
    zero = piv - piv
    one = piv / piv
    row_t = T[t]
    nz = [j for j in range(cols) if row_t[j]]
    for j in nz:
        row_t[j] = row_t[j] / piv
    for i in range(rows):
        if i == t:
            continue
        f = T[i, s]
        if not f:
            continue
        row_i = T[i]
        for j in nz:
            row_i[j] = row_i[j] - f * row_t[j]
        row_i[s] = zero
    row_t[s] = one


def lex_ratio_row(T: np.ndarray, s: int, d: int) -> int:
    """Row of the lexicographic minimum ratio for entering column ``s``.

    Candidates are the slack rows ``d+1 .. m`` with a positive entry in column
    ``s``. Rows are compared as ``T[i, [last, 0..m]] / T[i, s]``, column by
    column, narrowing the candidate set until one remains. Returns
    ``NO_CANDIDATE`` when there is no candidate and ``TIE`` when the minimum is
    not unique.
    """
    rows, cols = T.shape
    cand = [i for i in range(d + 1, rows) if T[i, s] > 0]
    if not cand:
        return NO_CANDIDATE
    exact = T.dtype == object
    if exact:
        scale = {i: T[i, s] for i in cand}
    else:
        scale = {i: 1.0 / T[i, s] for i in cand}
    order = [cols - 1] + list(range(rows))
    for c in order:
        if len(cand) == 1:
            break
        if exact:
            vals = {i: (T[i, c] / scale[i] if T[i, c] else T[i, c]) for i in cand}
        else:
            vals = {i: scale[i] * T[i, c] for i in cand}
        low = min(vals.values())
        cand = [i for i in cand if vals[i] == low]
    return cand[0] if len(cand) == 1 else TIE


def lexmin_violation(T: np.ndarray, basis, cobasis, v: int) -> bool:
    """True iff some pivot keeps the basic solution but lowers the basis.

    ``basis``/``cobasis`` hold 1-based variable indices (column ``j-1``). With
    ``v > 0`` the pivot must also leave the ray column ``v`` untouched.
    """
    last = T.shape[1] - 1
    for t, r in enumerate(basis):
        if T[t, last] != 0:
            continue
        if v and T[t, v - 1] != 0:
            continue
        for s in cobasis:
            if r > s and T[t, s - 1] != 0:
                return True
    return False
