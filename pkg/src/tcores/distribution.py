"""Exact distribution of the t-core size of a uniform random partition and
its comparison with the limiting gamma law.

Every probability mass is an exact rational assembled from the counting
tables; floating point enters only at the comparison boundary (gamma CDF,
scaled moments, sup distances).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import (
    core_count_table,
    divisible_count_table,
    partition_count_table,
)

_GAMMA_ABS_TOL = 1e-10
_MAX_ITER = 500


@dataclass(frozen=True)
class GammaParams:
    alpha: float  # shape
    beta: float   # rate

    def __post_init__(self):
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("shape and rate must be positive")


def gamma_params(t: int) -> GammaParams:
    """Limit law of (core size)/sqrt(n): shape (t-1)/2, rate pi/sqrt(6)."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    return GammaParams((t - 1) / 2.0, math.pi / math.sqrt(6.0))


def _lower_gamma_series(a: float, x: float) -> float:
    # P(a, x) by the ascending series; converges fast for x < a + 1
    term = 1.0 / a
    total = term
    k = a
    for _ in range(_MAX_ITER):
        k += 1.0
        term *= x / k
        total += term
        if abs(term) < abs(total) * 1e-16:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))

def _upper_gamma_cont_frac(a: float, x: float) -> float:
    # Q(a, x) by the Lentz continued fraction; preferred for x >= a + 1
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h * math.exp(-x + a * math.log(x) - math.lgamma(a))


def regularized_lower_gamma(a: float, x: float) -> float:
    """P(a, x) = (lower incomplete gamma) / Gamma(a), to 1e-10 absolute."""
    if a <= 0:
        raise ValueError("a must be positive")
    if x <= 0:
        return 0.0
    if x < a + 1.0:
        return _lower_gamma_series(a, x)
    return 1.0 - _upper_gamma_cont_frac(a, x)


def gamma_cdf(params: GammaParams, x: float) -> float:
    """CDF of the gamma law: 0 for x < 0, else P(alpha, beta * x)."""
    if x <= 0:
        return 0.0
    return regularized_lower_gamma(params.alpha, params.beta * x)


def gamma_moment(params: GammaParams, k: int) -> float:
    """k-th moment Gamma(k + alpha) / (beta^k * Gamma(alpha))."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return math.exp(
        math.lgamma(k + params.alpha) - math.lgamma(params.alpha)
    ) / params.beta**k


@dataclass(frozen=True)
class CoreSizePMF:
    """Exact law of the t-core size over uniform partitions of n.

    masses maps each achievable core size k to c_t(k) * d_t(n-k) / p(n); the
    support lies in {k <= n : k = n mod t} and the masses sum to exactly 1.
    """

    t: int
    n: int
    masses: dict[int, Fraction]

    def support(self) -> list[int]:
        return sorted(self.masses)

    def total(self) -> Fraction:
        return sum(self.masses.values(), Fraction(0))


def core_size_pmf(t: int, n: int) -> CoreSizePMF:
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    cores = core_count_table(t, n)
    divis = divisible_count_table(t, n)
    total = partition_count_table(n)[n]
    masses: dict[int, Fraction] = {}
    for k in range(n % t, n + 1, t):
        weight = cores[k] * divis[n - k]
        if weight:
            masses[k] = Fraction(weight, total)
    return CoreSizePMF(t, n, masses)


def scaled_moment(pmf: CoreSizePMF, k: int) -> float:
    """E[(Y/sqrt(n))^k]: the sum over the support is exact, then one real
    division by n^(k/2)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1.0
    raw = sum((Fraction(j) ** k) * mass for j, mass in pmf.masses.items())
    if raw == 0:
        return 0.0
    return float(raw) / pmf.n ** (k / 2.0)


def cdf_sup_distance(
    pmf: CoreSizePMF, params: GammaParams, two_sided: bool = False
) -> float:
    """Sup over the jump points of the scaled CDF against the gamma CDF.

    The scaled CDF is a step function with jumps at k/sqrt(n).  The default
    compares the left limit at every jump, i.e. sup |P(Y/sqrt(n) < x) - G(x)|
    over the jump points; two_sided=True additionally compares the
    right-continuous value (the full Kolmogorov distance), which is dominated
    by the largest single atom and is not monotone in n along arbitrary
    residue classes.  n = 0 is degenerate (unit mass at 0 against a
    continuous law) and returns 1 by convention.
    """
    if pmf.n == 0:
        return 1.0
    scale = math.sqrt(pmf.n)
    best = 0.0
    cumulative = Fraction(0)
    for j in sorted(pmf.masses):
        g = gamma_cdf(params, j / scale)
        best = max(best, abs(float(cumulative) - g))
        cumulative += pmf.masses[j]
        if two_sided:
            best = max(best, abs(float(cumulative) - g))
    return best


def expected_core_size(t: int, n: int) -> tuple[Fraction, float]:
    """Exact E[core size] and its large-n asymptote (t-1) sqrt(6n) / (2 pi)."""
    if n < 1:
        raise ValueError("n must be positive")
    pmf = core_size_pmf(t, n)
    exact = sum(Fraction(j) * mass for j, mass in pmf.masses.items())
    asymptote = (t - 1) * math.sqrt(6.0 * n) / (2.0 * math.pi)
    return exact, asymptote


def scaled_pmf_points(pmf: CoreSizePMF) -> list[tuple[int, float, Fraction, float]]:
    """Density bar data for the scaled variable: (k, k/sqrt(n), mass,
    mass * sqrt(n)); bars have width 1/sqrt(n)."""
    scale = math.sqrt(pmf.n) if pmf.n else 1.0
    return [
        (k, k / scale, mass, float(mass) * scale)
        for k, mass in sorted(pmf.masses.items())
    ]
