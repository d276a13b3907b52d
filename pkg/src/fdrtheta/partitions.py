"""Integer partitions, Young diagrams and hook shapes.

Partitions are immutable tuples of positive integers in weakly decreasing
order.  Within a fixed size they are listed in reverse-lexicographic order,
so ``partitions_of(4)`` gives (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
"""

from __future__ import annotations

from collections import namedtuple
from functools import lru_cache
from math import factorial

__all__ = [
    "Partition",
    "Cell",
    "partitions_of",
    "conjugate",
    "cells",
    "hook_shape",
    "parse_partition",
    "format_partition",
    "partition_sort_key",
    "weighted_size",
    "z_weight",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([3, 1, 1]).size
    5
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        self = super().__new__(cls, parts)
        self._size = sum(parts)
        return self

    @property
    def size(self) -> int:
        return self._size

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return format_partition(self)

    def __getnewargs__(self):
        return (tuple(self),)


Cell = namedtuple("Cell", ["row", "col"])
Cell.__doc__ = "A 1-based (row, col) position in a Young diagram."


def partition_sort_key(lam):
    """Graded reverse-lexicographic key: by size, then decreasing parts."""
    return (sum(lam), tuple(-p for p in lam))


def _gen_partitions(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen_partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition(p) for p in _gen_partitions(n, n))


def conjugate(lam) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def cells(lam) -> list:
    """Cells of the diagram of ``lam`` in row-major order."""
    return [Cell(r, c) for r, length in enumerate(lam, 1) for c in range(1, length + 1)]


def hook_shape(b: int, a: int):
    """The hook (b, 1^a), or ``None`` when the Schur function vanishes.

    Out-of-range indices (``b <= 0`` or ``a < 0``) are not errors: the
    recursions built on hooks routinely step outside the valid range and
    those terms must contribute zero.  ``None`` is the zero marker.
    """
    if b <= 0 or a < 0:
        return None
    return Partition((b,) + (1,) * a)


def parse_partition(text: str) -> Partition:
    """Parse the shared text syntax: ``"4,1,1"``; ``"-"`` is the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise ValueError(f"malformed partition: {text!r}")
    return Partition(parts)


def format_partition(lam) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"


def weighted_size(lam) -> int:
    """n(lam) = sum over rows of (row index - 1) * part."""
    return sum(i * p for i, p in enumerate(lam))


@lru_cache(maxsize=None)
def z_weight(mu) -> int:
    """Size of the centralizer of a permutation of cycle type ``mu``."""
    z = 1
    for part in set(mu):
        m = mu.count(part)
        z *= factorial(m) * part**m
    return z
