"""Exact counting engines: p(n), t-core counts, t-divisible counts, their
running sums, the lattice-point reformulation, and leading-order estimates.

All integer series are computed with arbitrary precision by applying Euler
factors to a dense truncated power series in place.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence


@dataclass(frozen=True)
class SeriesTable:
    """Coefficients 0..max_n of one counting sequence.

    kind is one of "p" (partitions), "c" (t-cores), "d" (t-divisible) or
    "C" (distinct cores among partitions of n); t is None for "p".
    """

    kind: str
    t: int | None
    values: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def _require_t(t: int) -> None:
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")


@lru_cache(maxsize=None)
def partition_count_table(max_n: int) -> SeriesTable:
    """p(0..max_n) from the product of the factors 1/(1 - x^k)."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    a = [0] * (max_n + 1)
    a[0] = 1
    for k in range(1, max_n + 1):
        for n in range(k, max_n + 1):
            a[n] += a[n - k]
    return SeriesTable("p", None, tuple(a))


@lru_cache(maxsize=None)
def partition_count_pentagonal(max_n: int) -> SeriesTable:
    """p(0..max_n) again, via the pentagonal-number recurrence.

    Independent of the product expansion; the two must agree bit for bit.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    p = [0] * (max_n + 1)
    p[0] = 1
    for n in range(1, max_n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return SeriesTable("p", None, tuple(p))


@lru_cache(maxsize=None)
def core_count_table(t: int, max_n: int) -> SeriesTable:
    """c_t(0..max_n): coefficients of the product of (1-x^{tk})^t / (1-x^k).

    Numerator and denominator factors are interleaved per k to keep the
    intermediate coefficients small.
    """
    _require_t(t)
    a = [0] * (max_n + 1)
    a[0] = 1
    for k in range(1, max_n + 1):
        for n in range(k, max_n + 1):          # divide by (1 - x^k)
            a[n] += a[n - k]
        m = t * k
        if m <= max_n:
            for _ in range(t):                 # multiply by (1 - x^{tk})^t
                for n in range(max_n, m - 1, -1):
                    a[n] -= a[n - m]
    return SeriesTable("c", t, tuple(a))


@lru_cache(maxsize=None)
def divisible_count_table(t: int, max_n: int) -> SeriesTable:
    """d_t(0..max_n): coefficients of the product of 1/(1-x^{tk})^t."""
    _require_t(t)
    a = [0] * (max_n + 1)
    a[0] = 1
    k = 1
    while t * k <= max_n:
        m = t * k
        for _ in range(t):
            for n in range(m, max_n + 1):
                a[n] += a[n - m]
        k += 1
    return SeriesTable("d", t, tuple(a))


@lru_cache(maxsize=None)
def core_sum_table(t: int, max_n: int) -> SeriesTable:
    """C_t(0..max_n) where C_t(n) = C_t(n-t) + c_t(n)."""
    _require_t(t)
    c = core_count_table(t, max_n)
    out = list(c.values)
    for n in range(t, max_n + 1):
        out[n] += out[n - t]
    return SeriesTable("C", t, tuple(out))


def core_sum(t: int, n: int) -> int:
    """Number of distinct t-cores arising from partitions of n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return core_sum_table(t, n)[n]


def f_t(p: Sequence[int], t: int) -> int:
    """The quadratic form (t/2) * sum(p_i^2) + sum(i * p_i).

    On integer vectors with zero coordinate sum the value is a nonnegative
    integer, and it equals the size of the t-core whose runner justification
    positions are p.
    """
    _require_t(t)
    p = tuple(p)
    if len(p) != t:
        raise ValueError(f"expected a vector of length {t}, got {len(p)}")
    if sum(p) != 0:
        raise ValueError(f"coordinates must sum to zero, got sum {sum(p)}")
    twice = t * sum(x * x for x in p)
    assert twice % 2 == 0
    return twice // 2 + sum(i * x for i, x in enumerate(p))


def _coordinate_ranges(t: int, max_n: int) -> list[range]:
    # every solution of f_t = n <= max_n lies in the ball
    #   sum (p_i - (t-1-2i)/(2t))^2 = (2/t)(n + (t^2-1)/24)
    radius = math.sqrt(2.0 * (max_n + (t * t - 1) / 24.0) / t) + 1e-9
    ranges = []
    for i in range(t):
        center = (t - 1 - 2 * i) / (2 * t)
        ranges.append(range(math.ceil(center - radius), math.floor(center + radius) + 1))
    return ranges


def lattice_core_histogram(t: int, max_n: int) -> tuple[int, ...]:
    """Count zero-sum integer vectors with f_t = n for every n <= max_n."""
    _require_t(t)
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    ranges = _coordinate_ranges(t, max_n)
    last = ranges[-1]
    counts = [0] * (max_n + 1)
    weights = tuple(range(t))
    for head in itertools.product(*ranges[:-1]):
        tail = -sum(head)
        if tail not in last:
            continue
        p = head + (tail,)
        # doubled form stays in integers; the true value is always integral
        twice = t * sum(x * x for x in p) + 2 * sum(i * x for i, x in zip(weights, p))
        value, rem = divmod(twice, 2)
        assert rem == 0
        if 0 <= value <= max_n:
            counts[value] += 1
    return tuple(counts)


def lattice_core_count(t: int, n: int) -> int:
    """Number of zero-sum integer solutions of f_t(p) = n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return lattice_core_histogram(t, n)[n]


def mod_solution_count(t: int, n_mod: int) -> int:
    """Solutions of f_t = n mod t on the zero-sum hyperplane of (Z/tZ)^t.

    Each residue tuple with coordinate sum divisible by t is lifted to an
    honest zero-sum integer vector before evaluating f_t, so the residue of
    the value is well defined.  The count is t**(t-2) for every residue.
    """
    _require_t(t)
    target = n_mod % t
    count = 0
    for q in itertools.product(range(t), repeat=t):
        s = sum(q)
        if s % t:
            continue
        lifted = q[:-1] + (q[-1] - s,)
        if f_t(lifted, t) % t == target:
            count += 1
    return count


def ball_volume(t: int, n: int) -> float:
    """Volume of the (t-1)-ball cut out by f_t = n inside the hyperplane."""
    _require_t(t)
    if n < 0:
        raise ValueError("n must be nonnegative")
    r2 = (2.0 * math.pi / t) * (n + (t * t - 1) / 24.0)
    return r2 ** ((t - 1) / 2.0) / math.gamma((t + 1) / 2.0)


def _det_fractions(matrix: list[list[Fraction]]) -> Fraction:
    # plain Gaussian elimination over exact rationals; matrices here are tiny
    m = [row[:] for row in matrix]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] * inv
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def lattice_covolume(t: int) -> float:
    """Covolume of the zero-sum integer lattice inside its hyperplane.

    Built from the Gram determinant of the basis e_0 - e_i, not hard-coded;
    the determinant evaluates to t, so the result is sqrt(t).
    """
    _require_t(t)
    basis = []
    for i in range(1, t):
        v = [0] * t
        v[0] = 1
        v[i] = -1
        basis.append(v)
    gram = [
        [Fraction(sum(a * b for a, b in zip(u, w))) for w in basis] for u in basis
    ]
    det = _det_fractions(gram)
    return math.sqrt(float(det))


def c3_divisor_oracle(n: int) -> int:
    """Number of 3-cores of n via the divisor sum over 3n + 1.

    Each divisor contributes +1 when congruent to 1 mod 3 and -1 when
    congruent to 2 mod 3.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = 3 * n + 1
    total = 0
    d = 1
    while d * d <= m:
        if m % d == 0:
            for div in {d, m // d}:
                r = div % 3
                if r == 1:
                    total += 1
                elif r == 2:
                    total -= 1
        d += 1
    return total


@dataclass(frozen=True)
class AsymptoticEstimates:
    """Leading-order values for plot overlays; no error-term modeling.

    divisible_leading is None when t does not divide n (the count is zero
    there and the smooth formula does not apply).
    """

    t: int
    n: int
    partition_leading: float
    divisible_leading: float | None
    core_sum_leading: float


def core_sum_leading_term(t: int, n: int) -> float:
    """Leading term of the distinct-core count C_t(n)."""
    _require_t(t)
    return (
        (2.0 * math.pi) ** ((t - 1) / 2.0)
        / (t ** ((t + 2) / 2.0) * math.gamma((t + 1) / 2.0))
        * (n + (t * t - 1) / 24.0) ** ((t - 1) / 2.0)
    )


def asymptotic_estimates(t: int, n: int) -> AsymptoticEstimates:
    _require_t(t)
    if n < 1:
        raise ValueError("n must be positive")
    growth = math.exp(math.pi * math.sqrt(2.0 * n / 3.0))
    p_lead = growth / (4.0 * n * math.sqrt(3.0))
    if n % t == 0:
        d_lead = (
            t ** ((t + 2) / 2.0)
            * growth
            / (2 ** ((3 * t + 5) / 4.0) * 3 ** ((t + 1) / 4.0) * n ** ((t + 3) / 4.0))
        )
    else:
        d_lead = None
    return AsymptoticEstimates(t, n, p_lead, d_lead, core_sum_leading_term(t, n))
