"""Young diagram primitives.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the empty diagram.  Cells are 1-based (row, col) pairs.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Iterator

Partition = tuple[int, ...]
Cell = tuple[int, int]

_DEFAULT_ENUMERATION_LIMIT = 40


class PadTooSmallError(ValueError):
    """n is too small to prepend a long first row to the partition."""


class LimitExceededError(ValueError):
    """Partition enumeration was requested beyond the configured cap."""


def enumeration_limit() -> int:
    """Largest n for which partitions_of(n) will run.

    Raised by setting the REPST_LIMITS environment variable to an integer.
    """
    raw = os.environ.get("REPST_LIMITS")
    if raw:
        try:
            return max(int(raw), _DEFAULT_ENUMERATION_LIMIT)
        except ValueError:
            pass
    return _DEFAULT_ENUMERATION_LIMIT


def check_partition(parts) -> Partition:
    """Validate and normalize an iterable of parts into a Partition."""
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated part list; the empty string is the empty diagram."""
    text = text.strip()
    if not text:
        return ()
    return check_partition(int(piece) for piece in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def cells(lam: Partition) -> Iterator[Cell]:
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield (i, j)


def hook_lengths(lam: Partition) -> dict[Cell, int]:
    """Hook length of each cell: arm + leg + 1."""
    conj = conjugate(lam)
    return {
        (i, j): (lam[i - 1] - j) + (conj[j - 1] - i) + 1
        for i, j in cells(lam)
    }


def hook_product(lam: Partition) -> int:
    prod = 1
    for h in hook_lengths(lam).values():
        prod *= h
    return prod


def content_sum(lam: Partition) -> int:
    """Sum of (col - row) over all cells.

    This is the sign convention under which the class sum of transpositions
    in S_n acts on an irreducible by exactly this number; see the oracle
    tests, which pin it down.
    """
    return sum(j - i for i, j in cells(lam))


def removable_corners(lam: Partition) -> list[int]:
    """Row indices (1-based) whose last cell can be removed."""
    return [
        i + 1
        for i in range(len(lam))
        if lam[i] > (lam[i + 1] if i + 1 < len(lam) else 0)
    ]


def addable_rows(lam: Partition) -> list[int]:
    """Row indices (1-based, possibly len+1) where a cell can be added."""
    rows = [1]
    rows.extend(i + 1 for i in range(1, len(lam)) if lam[i] < lam[i - 1])
    rows.append(len(lam) + 1)
    return sorted(set(rows))


def _with_added(lam: Partition, row: int) -> Partition:
    if row == len(lam) + 1:
        return lam + (1,)
    return lam[: row - 1] + (lam[row - 1] + 1,) + lam[row:]


def _with_removed(lam: Partition, row: int) -> Partition:
    parts = lam[: row - 1] + (lam[row - 1] - 1,) + lam[row:]
    return tuple(p for p in parts if p > 0)


class CornerMoves:
    """The diagrams reachable from lam by one corner-cell move.

    added:   one addable cell appended
    removed: one corner cell deleted
    moved:   one corner deleted, then a cell added at a different position
             (the unchanged diagram is excluded; it is counted by
             corner_count instead)
    """

    __slots__ = ("added", "removed", "moved", "corner_count")

    def __init__(self, added, removed, moved, corner_count):
        object.__setattr__(self, "added", frozenset(added))
        object.__setattr__(self, "removed", frozenset(removed))
        object.__setattr__(self, "moved", frozenset(moved))
        object.__setattr__(self, "corner_count", corner_count)

    def __setattr__(self, name, value):
        raise AttributeError("CornerMoves is immutable")

    def __eq__(self, other):
        if not isinstance(other, CornerMoves):
            return NotImplemented
        return (self.added, self.removed, self.moved, self.corner_count) == (
            other.added, other.removed, other.moved, other.corner_count)

    def __repr__(self):
        return (f"CornerMoves(added={sorted(self.added)}, removed={sorted(self.removed)}, "
                f"moved={sorted(self.moved)}, corner_count={self.corner_count})")


def corner_moves(lam: Partition) -> CornerMoves:
    corners = removable_corners(lam)
    added = {_with_added(lam, r) for r in addable_rows(lam)}
    removed = {_with_removed(lam, r) for r in corners}
    moved = set()
    for r in corners:
        shrunk = _with_removed(lam, r)
        for s in addable_rows(shrunk):
            candidate = _with_added(shrunk, s)
            if candidate != lam:
                moved.add(candidate)
    return CornerMoves(added, removed, moved, len(corners))


def pad(lam: Partition, n: int) -> Partition:
    """Prepend a first row so the result is a partition of n.

    Defined only when n - |lam| >= lam_1.
    """
    size = sum(lam)
    first = n - size
    if first < (lam[0] if lam else 0):
        raise PadTooSmallError(f"cannot pad {lam} to size {n}")
    if first == 0:
        return lam
    return (first,) + lam


def b_set(lam: Partition) -> frozenset[int]:
    """The |lam| nonnegative integers missing from the sequence
    |lam| - 1 + k - lam*_k (k >= 1)."""
    n = sum(lam)
    conj = conjugate(lam)
    width = lam[0] if lam else 0
    span = n + width + 1
    excluded = set()
    for k in range(1, span + 1):
        col = conj[k - 1] if k <= len(conj) else 0
        value = n - 1 + k - col
        if 0 <= value < span:
            excluded.add(value)
    members = [x for x in range(span) if x not in excluded][:n]
    assert len(members) == n, f"b_set size mismatch for {lam}"
    return frozenset(members)


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    result: list[Partition] = []
    # descending lexicographic generation
    current = [n]
    while True:
        result.append(tuple(current))
        # find rightmost part > 1
        idx = len(current) - 1
        while idx >= 0 and current[idx] == 1:
            idx -= 1
        if idx < 0:
            break
        current[idx] -= 1
        remainder = len(current) - idx - 1 + 1
        current = current[: idx + 1]
        cap = current[idx]
        while remainder > 0:
            piece = min(cap, remainder)
            current.append(piece)
            remainder -= piece
    return tuple(result)


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, descending lexicographically, each exactly once."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > enumeration_limit():
        raise LimitExceededError(
            f"partitions_of({n}) exceeds the enumeration cap "
            f"{enumeration_limit()}; raise REPST_LIMITS to allow it")
    return _partitions_of(n)


def partitions_up_to(n: int) -> Iterator[Partition]:
    """All partitions of every size 0..n."""
    for k in range(n + 1):
        yield from partitions_of(k)
