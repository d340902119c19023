"""Hook-length residue statistics and the symmetric-group action behind them.

The census operations count hook lengths by residue class mod t.  The
permutation action relabels the t quotient components of a partition while
fixing its core; smoothings carve out the subdiagram whose abacus bead pairs
are far apart, which is exactly the part of the diagram whose hook residues
the action shuffles uniformly.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from operator import neg
from typing import Sequence

from . import abacus, sampling
from .corequotient import compose, core, decompose, quotient
from .partitions import (
    EMPTY,
    Cell,
    PartitionShape,
    conjugate_parts,
    enumerate_partitions,
)

ENUMERATION_LIMIT = 50


def _require_t(t: int) -> None:
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")


def _require_permutation(sigma: Sequence[int], t: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(t)):
        raise ValueError(f"{sigma} is not a permutation of 0..{t-1}")
    return sigma


def _require_divisible(nu: PartitionShape, t: int) -> None:
    if core(nu, t) != EMPTY:
        raise ValueError(f"{nu.parts} does not have empty {t}-core")


@dataclass(frozen=True)
class ResidueCensus:
    """Per-residue hook counts: counts[i] = #cells with hook = i mod t."""

    t: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


def residue_census(shape: PartitionShape, t: int) -> ResidueCensus:
    _require_t(t)
    counts = [0] * t
    parts = shape.parts
    conj = conjugate_parts(parts)
    for r, width in enumerate(parts, start=1):
        base = width - r + 1
        for c in range(1, width + 1):
            counts[(base - c + conj[c - 1]) % t] += 1
    return ResidueCensus(t, tuple(counts))


def small_hook_count(shape: PartitionShape, m: int) -> int:
    """Number of cells with hook length strictly below m."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return 0
    parts = shape.parts
    conj = conjugate_parts(parts)
    count = 0
    for r, width in enumerate(parts, start=1):
        base = width - r + 1
        for c in range(1, width + 1):
            if base - c + conj[c - 1] < m:
                count += 1
    return count


def exact_residue_distribution(t: int, n: int) -> tuple[Fraction, ...]:
    """Probability that a uniform cell of a uniform partition of n has hook
    length = i mod t, for each residue i, by full enumeration.

    Exact rationals summing to 1.  Refuses n beyond ENUMERATION_LIMIT; use
    sampled_residue_distribution for larger n.
    """
    _require_t(t)
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUMERATION_LIMIT:
        raise ValueError(
            f"full enumeration is capped at n={ENUMERATION_LIMIT}; "
            f"got n={n} (switch to sampling)"
        )
    totals = [0] * t
    num_partitions = 0
    for shape in enumerate_partitions(n):
        num_partitions += 1
        for i, c in enumerate(residue_census(shape, t).counts):
            totals[i] += c
    denom = n * num_partitions
    return tuple(Fraction(c, denom) for c in totals)


def _random_cell_residue(shape: PartitionShape, t: int, cell_index: int) -> int:
    # walk to the row containing the flat cell index, then one hook length
    parts = shape.parts
    acc = 0
    for r, width in enumerate(parts, start=1):
        if cell_index < acc + width:
            c = cell_index - acc + 1
            col_len = bisect_right(parts, -c, key=neg)
            return (width - c + col_len - r + 1) % t
        acc += width
    raise AssertionError("cell index out of range")


def sampled_residue_distribution(
    t: int, n: int, samples: int, seed: int
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Monte Carlo estimate of the hook-residue law with standard errors.

    Each sample draws one uniform partition and one uniform cell of it, so
    the estimates are multinomial proportions; the result depends only on
    (seed, samples), never on scheduling.
    """
    _require_t(t)
    if n < 1:
        raise ValueError("n must be positive")
    if samples < 1:
        raise ValueError("samples must be positive")
    table = sampling.build_sampler(n)
    counts = [0] * t
    for index in range(samples):
        rng = sampling.stream_rng(seed, index)
        shape = sampling.unrank_partition(table, rng.randrange(table.total))
        counts[_random_cell_residue(shape, t, rng.randrange(n))] += 1
    estimates = tuple(c / samples for c in counts)
    errors = tuple(math.sqrt(p * (1.0 - p) / samples) for p in estimates)
    return estimates, errors


# ---------------------------------------------------------------------------
# the permutation action


def act_on_divisible(
    sigma: Sequence[int], nu: PartitionShape, t: int
) -> PartitionShape:
    """Permute the quotient components of a t-divisible partition.

    Component i of the image is component sigma[i] of the input; the size is
    preserved.
    """
    _require_t(t)
    sigma = _require_permutation(sigma, t)
    _require_divisible(nu, t)
    q = quotient(nu, t)
    return compose(EMPTY, tuple(q[sigma[i]] for i in range(t)), t)


def act_on_partition(
    sigma: Sequence[int], shape: PartitionShape, t: int
) -> PartitionShape:
    """Apply the action through the core/divisible decomposition.

    The core is untouched; the quotient components are permuted and the
    partition reassembled, so the size and the t-core are both preserved.
    """
    _require_t(t)
    sigma = _require_permutation(sigma, t)
    dc = decompose(shape, t)
    return compose(dc.core, tuple(dc.quotient[sigma[i]] for i in range(t)), t)


def act_on_partition_via_shifts(
    sigma: Sequence[int], shape: PartitionShape, t: int
) -> PartitionShape:
    """Same action computed directly on the runners.

    Runner i of the image is runner sigma[i] of the input shifted by the
    difference of the core justification positions; must agree with
    act_on_partition everywhere.
    """
    _require_t(t)
    sigma = _require_permutation(sigma, t)
    tr = abacus.split_runners(abacus.abacus_from_partition(shape), t)
    positions = [abacus.justify(r)[1] for r in tr.runners]
    moved = tuple(
        abacus.shift(tr.runners[sigma[i]], positions[sigma[i]] - positions[i])
        for i in range(t)
    )
    return abacus.partition_from_abacus(
        abacus.merge_runners(abacus.TRunner(t, moved))
    )


def compose_permutations(
    sigma: Sequence[int], tau: Sequence[int]
) -> tuple[int, ...]:
    """The permutation whose action is act(sigma) after act(tau):
    act(compose_permutations(sigma, tau), x) = act(sigma, act(tau, x))."""
    return tuple(tau[s] for s in sigma)


def permutation_from_word(word: str) -> tuple[int, ...]:
    """Translate a 1-indexed destination word into one-line notation.

    In a word like "231", quotient component i (1-indexed) is sent to slot
    word[i]; the returned 0-indexed tuple is the matching argument for the
    act_* functions, whose convention is that slot i receives component
    sigma[i].
    """
    digits = [int(ch) for ch in word]
    t = len(digits)
    if sorted(digits) != list(range(1, t + 1)):
        raise ValueError(f"{word!r} is not a word on 1..{t}")
    sigma = [0] * t
    for source, dest in enumerate(digits):
        sigma[dest - 1] = source
    return tuple(sigma)


def s_t_orbit(nu: PartitionShape, t: int) -> list[PartitionShape]:
    """Orbit of a t-divisible partition under all quotient permutations,
    sorted descending by parts for stable output."""
    orbit = {act_on_divisible(sigma, nu, t) for sigma in permutations(range(t))}
    return sorted(orbit, key=lambda s: s.parts, reverse=True)


# ---------------------------------------------------------------------------
# smoothings and the cell injection


@dataclass(frozen=True)
class SmoothedRegion:
    """Cells of a t-divisible parent whose bead pairs are over b columns
    apart; always a connected subpartition of the parent."""

    b: int
    cells: PartitionShape
    parent: PartitionShape


def _pair_positions(parts: tuple[int, ...]) -> list[int]:
    # bead position of row r in the balanced word: parts[r-1] - r
    return [width - r for r, width in enumerate(parts, start=1)]


def b_smoothing(nu: PartitionShape, t: int, b: int) -> SmoothedRegion:
    """Cells of nu whose (0,1) abacus pairs sit at least b+1 runner columns
    apart; b = -1 returns nu itself."""
    _require_t(t)
    if b < -1:
        raise ValueError("b must be at least -1")
    _require_divisible(nu, t)
    parts = nu.parts
    conj = conjugate_parts(parts)
    beads = _pair_positions(parts)
    rows = []
    for r, width in enumerate(parts, start=1):
        j_pos = beads[r - 1]
        col_j = j_pos // t
        kept = 0
        for c in range(1, width + 1):
            hook = width - c + conj[c - 1] - r + 1
            col_i = (j_pos - hook) // t
            if col_j - col_i >= b + 1:
                kept += 1
            else:
                break  # the gap only shrinks along a row
        if kept == 0:
            break
        rows.append(kept)
    cells = PartitionShape(tuple(rows)) if rows else EMPTY
    return SmoothedRegion(b, cells, nu)


def canonical_smoothing(shape: PartitionShape, t: int) -> tuple[int, PartitionShape]:
    """Smoothing at the spread of the core's justification positions.

    Returns (b, cells) where b is the largest gap |p_i - p_j| over all index
    pairs of the core's justification vector (0 for a t-divisible input) and
    cells is the b-smoothing of the divisible part.
    """
    _require_t(t)
    dc = decompose(shape, t)
    tr = abacus.split_runners(abacus.abacus_from_partition(dc.core), t)
    positions = [r.offset for r in tr.runners]
    b = max(
        (abs(positions[i] - positions[j])
         for i in range(t) for j in range(i + 1, t)),
        default=0,
    )
    return b, b_smoothing(dc.divisible, t, b).cells


def phi_map(shape: PartitionShape, t: int) -> dict[Cell, Cell]:
    """Injective map from the canonical smoothing's cells into the partition
    preserving hook residues mod t.

    A cell of the smoothing is a bead pair of the divisible word; shifting
    each end by the justification position of its runner lands on a bead
    pair of the partition's own word, whose cell is returned.
    """
    _require_t(t)
    dc = decompose(shape, t)
    tr = abacus.split_runners(abacus.abacus_from_partition(dc.core), t)
    positions = [r.offset for r in tr.runners]
    b = max(
        (abs(positions[i] - positions[j])
         for i in range(t) for j in range(i + 1, t)),
        default=0,
    )
    region = b_smoothing(dc.divisible, t, b).cells

    # pair -> cell lookup in the target partition
    target_beads = _pair_positions(shape.parts)
    target_conj = conjugate_parts(shape.parts)
    pair_to_cell: dict[tuple[int, int], Cell] = {}
    for r, width in enumerate(shape.parts, start=1):
        j_pos = target_beads[r - 1]
        for c in range(1, width + 1):
            hook = width - c + target_conj[c - 1] - r + 1
            pair_to_cell[(j_pos - hook, j_pos)] = Cell(r, c)

    nu = dc.divisible
    nu_beads = _pair_positions(nu.parts)
    nu_conj = conjugate_parts(nu.parts)
    out: dict[Cell, Cell] = {}
    for r, width in enumerate(region.parts, start=1):
        g1 = nu_beads[r - 1]
        runner_one, col_one = g1 % t, g1 // t
        for c in range(1, width + 1):
            hook = nu.parts[r - 1] - c + nu_conj[c - 1] - r + 1
            g0 = g1 - hook
            runner_zero, col_zero = g0 % t, g0 // t
            src = (
                (col_zero + positions[runner_zero]) * t + runner_zero,
                (col_one + positions[runner_one]) * t + runner_one,
            )
            out[Cell(r, c)] = pair_to_cell[src]
    return out
