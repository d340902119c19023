"""Exactly uniform random partitions of n.

A classic dynamic-programming table counts partitions of m with largest part
at most k.  Because the row entry at k is precisely the number of partitions
whose largest part is at most k, each row is its own cumulative distribution,
and a single uniform integer rank in [0, p(n)) unranks to a partition by
exact big-integer comparisons.  No floating point and no rejection loop touch
the draw, so the distribution over partitions is exactly uniform and every
sample is a pure function of (seed, index).
"""
from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

from .partitions import EMPTY, PartitionShape

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class SamplerTable:
    """counts[m][k] = number of partitions of m with every part <= k.

    Rows are stored triangularly (k <= m) since the count is constant for
    k >= m; count() clamps.  counts[n][n] equals p(n).
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def count(self, m: int, k: int) -> int:
        row = self.rows[m]
        return row[k] if k < len(row) else row[-1]

    @property
    def total(self) -> int:
        return self.rows[self.n][-1]


@lru_cache(maxsize=None)
def build_sampler(n: int) -> SamplerTable:
    """Fill the full table for partitions of n; immutable thereafter."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    rows: list[tuple[int, ...]] = [(1,)]
    for m in range(1, n + 1):
        row = [0]
        for k in range(1, m + 1):
            below = rows[m - k]
            smaller = below[k] if k < len(below) else below[-1]
            row.append(row[k - 1] + smaller)
        rows.append(tuple(row))
    return SamplerTable(n, tuple(rows))


def unrank_partition(table: SamplerTable, rank: int) -> PartitionShape:
    """The partition at a given rank of the table's bijective ordering.

    Ranks 0 .. p(n)-1 enumerate every partition of n exactly once: at each
    step the next (largest remaining) part j is the least value whose
    cumulative count exceeds the rank.
    """
    if not 0 <= rank < table.total:
        raise ValueError(f"rank must lie in [0, {table.total}), got {rank}")
    m = table.n
    cap = m
    parts = []
    while m > 0:
        row = table.rows[m]
        hi = min(cap, m)
        j = bisect_right(row, rank, 0, hi + 1)
        parts.append(j)
        rank -= row[j - 1]
        m -= j
        cap = j
    return PartitionShape(tuple(parts)) if parts else EMPTY


def _mix64(seed: int, index: int) -> int:
    """SplitMix64 finalizer applied to seed advanced by index steps of the
    golden-ratio increment; collision-free over indices for a fixed seed."""
    z = (seed + (index + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def stream_rng(seed: int, index: int) -> random.Random:
    """Per-sample generator; state depends only on (seed, index)."""
    return random.Random(_mix64(seed, index))


def sample_partition(table: SamplerTable, seed: int, index: int) -> PartitionShape:
    """Exactly uniform partition of n, a pure function of (seed, index)."""
    rng = stream_rng(seed, index)
    return unrank_partition(table, rng.randrange(table.total))
