"""Lexicographic successor of k-subsets encoded as 0/1 indicator vectors."""

from __future__ import annotations

from collections.abc import Sequence


def next_subset(x: Sequence[int]) -> tuple[int, ...]:
    """Return the lexicographically next indicator with the same number of ones.

    Earlier ones are smaller, so ``[1,1,0,0]`` starts the 2-subsets of a
    4-set and ``[0,0,1,1]`` ends it. The last indicator (all ones packed
    to the right) is returned unchanged.

    >>> next_subset([1, 1, 0, 0])
    (1, 0, 1, 0)
    >>> next_subset([0, 0, 1, 1])
    (0, 0, 1, 1)
    """
    bits = tuple(int(b) for b in x)
    n = len(bits)
    if n == 0:
        raise ValueError("indicator must have length >= 1")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("indicator entries must be 0 or 1")
    zeros = [i for i, b in enumerate(bits) if b == 0]
    if not zeros:
        return bits
    last0 = zeros[-1]
    trailing_ones = n - 1 - last0
    ones_before = [i for i in range(last0) if bits[i] == 1]
    if not ones_before:
        return bits
    j = ones_before[-1]
    # bits[j:j+2] is [1, 0]; it becomes [0, 1] followed by the trailing ones, then zeros.
    head = bits[:j] + (0, 1)
    tail = (1,) * trailing_ones
    return head + tail + (0,) * (n - len(head) - len(tail))


def indicator_to_rows(x: Sequence[int]) -> tuple[int, ...]:
    """1-based indices of the ones."""
    return tuple(i + 1 for i, b in enumerate(x) if b)


def first_subset(n: int, k: int) -> tuple[int, ...]:
    return (1,) * k + (0,) * (n - k)


def is_last_subset(x: Sequence[int]) -> bool:
    k = sum(x)
    return all(x[len(x) - k:]) if k else True
