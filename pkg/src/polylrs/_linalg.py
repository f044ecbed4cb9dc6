"""Small dense Gaussian elimination over Fractions or floats.

Float mode treats a pivot candidate as zero when its magnitude is at most
``policy.zero_snap`` times the largest entry of the input matrix.
"""

from __future__ import annotations

from collections.abc import Sequence

from .numerics import RATIONAL, TolerancePolicy


def _threshold(rows: list[list], policy: TolerancePolicy):
    if policy.exact:
        return 0
    scale = max((abs(x) for row in rows for x in row), default=0.0)
    return policy.zero_snap * scale


def _echelon(rows: list[list], ncols: int, policy: TolerancePolicy, limit: int | None = None):
    """Row-reduce ``rows`` in place (Gauss-Jordan); return the pivot columns."""
    tol = _threshold(rows, policy)
    pivots: list[int] = []
    r = 0
    limit = ncols if limit is None else limit
    for c in range(limit):
        if r == len(rows):
            break
        if policy.exact:
            p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        else:
            p = max(range(r, len(rows)), key=lambda i: abs(rows[i][c]))
            if abs(rows[p][c]) <= tol:
                p = None
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def rank(A: Sequence[Sequence], policy: TolerancePolicy = RATIONAL) -> int:
    rows = [list(row) for row in A]
    if not rows:
        return 0
    return len(_echelon(rows, len(rows[0]), policy))


def solve(A: Sequence[Sequence], b: Sequence, policy: TolerancePolicy = RATIONAL):
    """Unique solution of the square system ``A x = b``, or ``None`` if singular."""
    n = len(A)
    rows = [list(row) + [bi] for row, bi in zip(A, b)]
    pivots = _echelon(rows, n + 1, policy, limit=n)
    if len(pivots) < n:
        return None
    return [rows[i][n] for i in range(n)]


def inverse(A: Sequence[Sequence], policy: TolerancePolicy = RATIONAL):
    """Inverse of a square matrix as a list of rows, or ``None`` if singular."""
    n = len(A)
    one, zero = policy.one, policy.zero
    rows = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(A)]
    pivots = _echelon(rows, 2 * n, policy, limit=n)
    if len(pivots) < n:
        return None
    return [row[n:] for row in rows]


def nullspace(A: Sequence[Sequence], ncols: int, policy: TolerancePolicy = RATIONAL):
    """Basis of the right nullspace of ``A`` (one vector per free column)."""
    rows = [list(row) for row in A]
    pivots = _echelon(rows, ncols, policy) if rows else []
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [policy.zero] * ncols
        v[f] = policy.one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(v)
    return basis
