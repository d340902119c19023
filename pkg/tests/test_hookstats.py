import math
from fractions import Fraction
from itertools import permutations

import pytest

from tcores import hookstats as hs
from tcores.corequotient import core, decompose
from tcores.partitions import (
    EMPTY,
    Cell,
    enumerate_partitions,
    hook_length,
    make_partition,
)

NU = make_partition([7, 3, 2])
ORBIT_TABLE = {
    "123": (7, 3, 2),
    "132": (7, 4, 1),
    "213": (8, 2, 2),
    "231": (8, 4),
    "312": (9, 2, 1),
    "321": (9, 3),
}


def test_census_worked_example():
    assert hs.residue_census(make_partition([6, 4, 3, 1]), 4).counts == (3, 5, 4, 2)
    assert hs.residue_census(make_partition([6, 4]), 4).counts == (2, 3, 3, 2)
    assert hs.residue_census(EMPTY, 3).counts == (0, 0, 0)


def test_census_total_is_size():
    shape = make_partition([5, 4, 4, 2, 1])
    for t in (2, 3, 4, 5):
        assert hs.residue_census(shape, t).total == 16


def test_small_hook_count_examples():
    shape = make_partition([5, 4, 4, 2, 1])
    assert hs.small_hook_count(shape, 2) == 4
    assert hs.small_hook_count(shape, 0) == 0
    with pytest.raises(ValueError):
        hs.small_hook_count(shape, -1)


@pytest.mark.parametrize("n", range(1, 16))
def test_small_hook_bound(n):
    root = math.sqrt(2.0 * n)
    for shape in enumerate_partitions(n):
        for m in range(1, n + 1):
            assert hs.small_hook_count(shape, m) < m * root


def test_exact_distribution_hand_example():
    assert hs.exact_residue_distribution(2, 2) == (Fraction(1, 2), Fraction(1, 2))


def test_exact_distribution_normalized():
    for t, n in ((3, 9), (4, 11), (5, 7)):
        xs = hs.exact_residue_distribution(t, n)
        assert sum(xs) == 1


def test_exact_distribution_t3_n40():
    xs = hs.exact_residue_distribution(3, 40)
    assert sum(xs) == 1
    assert max(abs(x - Fraction(1, 3)) for x in xs) < Fraction(5, 100)


def test_exact_distribution_guards():
    with pytest.raises(ValueError, match="capped"):
        hs.exact_residue_distribution(3, hs.ENUMERATION_LIMIT + 1)
    with pytest.raises(ValueError):
        hs.exact_residue_distribution(3, 0)


def test_sampled_distribution_matches_exact_oracle():
    exact = hs.exact_residue_distribution(3, 40)
    estimates, errors = hs.sampled_residue_distribution(3, 40, 20000, seed=2024)
    for est, err, truth in zip(estimates, errors, exact):
        assert abs(est - float(truth)) <= 3.0 * err


def test_sampled_distribution_rejects_empty_run():
    with pytest.raises(ValueError):
        hs.sampled_residue_distribution(3, 10, 0, seed=1)


def test_sampled_distribution_deterministic():
    a = hs.sampled_residue_distribution(4, 30, 500, seed=7)
    b = hs.sampled_residue_distribution(4, 30, 500, seed=7)
    assert a == b


def test_sampled_distribution_large_n_self_consistency():
    estimates, _ = hs.sampled_residue_distribution(5, 2000, 100000, seed=31415)
    for est in estimates:
        assert abs(est - 0.2) < 0.05


def test_action_on_divisible_orbit_table():
    for word, expected in ORBIT_TABLE.items():
        sigma = hs.permutation_from_word(word)
        assert hs.act_on_divisible(sigma, NU, 3).parts == expected


def test_action_identity_and_errors():
    assert hs.act_on_divisible((0, 1, 2), NU, 3) == NU
    with pytest.raises(ValueError, match="empty 3-core"):
        hs.act_on_divisible((0, 1, 2), make_partition([1]), 3)
    with pytest.raises(ValueError, match="permutation"):
        hs.act_on_divisible((0, 0, 2), NU, 3)


def test_action_group_law_on_orbit():
    for sigma in permutations(range(3)):
        for tau in permutations(range(3)):
            combined = hs.compose_permutations(sigma, tau)
            assert hs.act_on_divisible(combined, NU, 3) == hs.act_on_divisible(
                sigma, hs.act_on_divisible(tau, NU, 3), 3
            )


def test_permutation_from_word_validation():
    with pytest.raises(ValueError):
        hs.permutation_from_word("121")
    assert hs.permutation_from_word("123") == (0, 1, 2)


def test_action_on_partition_fixes_cores():
    rho = make_partition([2, 1, 1])  # a 3-core
    for sigma in permutations(range(3)):
        assert hs.act_on_partition(sigma, rho, 3) == rho


def test_action_on_partition_preserves_size_and_core():
    lam = make_partition([10, 3])
    images = set()
    for sigma in permutations(range(3)):
        image = hs.act_on_partition(sigma, lam, 3)
        assert image.size == 13
        assert core(image, 3) == make_partition([1])
        assert image == hs.act_on_partition_via_shifts(sigma, lam, 3)
        images.add(image)
    assert len(images) == 6


@pytest.mark.parametrize("n", range(11))
@pytest.mark.parametrize("t", [2, 3])
def test_action_routes_agree_exhaustively(n, t):
    for shape in enumerate_partitions(n):
        for sigma in permutations(range(t)):
            assert hs.act_on_partition(sigma, shape, t) == (
                hs.act_on_partition_via_shifts(sigma, shape, t)
            )


def test_orbit_listing():
    orbit = hs.s_t_orbit(NU, 3)
    assert {o.parts for o in orbit} == set(ORBIT_TABLE.values())


def test_smoothing_worked_example():
    assert hs.b_smoothing(NU, 3, 0).cells.parts == (7, 2)
    assert hs.b_smoothing(NU, 3, 1).cells.parts == (4,)
    assert hs.b_smoothing(NU, 3, 2).cells.parts == (2,)
    assert hs.b_smoothing(NU, 3, -1).cells == NU


def test_smoothing_invariant_on_orbit():
    for member in hs.s_t_orbit(NU, 3):
        for b in (0, 1, 2):
            assert hs.b_smoothing(member, 3, b).cells == hs.b_smoothing(NU, 3, b).cells


def test_smoothing_rejects_bad_input():
    with pytest.raises(ValueError):
        hs.b_smoothing(make_partition([1]), 3, 0)
    with pytest.raises(ValueError):
        hs.b_smoothing(NU, 3, -2)


def test_smoothing_is_subpartition():
    for m in (6, 9, 12):
        for nu in enumerate_partitions(m):
            if core(nu, 3) != EMPTY:
                continue
            for b in range(-1, 6):
                cells = hs.b_smoothing(nu, 3, b).cells
                assert all(
                    cells.parts[i] <= nu.parts[i] for i in range(len(cells.parts))
                )


def test_canonical_smoothing_example():
    b, cells = hs.canonical_smoothing(make_partition([10, 3]), 3)
    assert b == 2
    assert cells.parts == (2,)


def test_canonical_smoothing_divisible_input():
    b, cells = hs.canonical_smoothing(NU, 3)
    assert b == 0
    assert cells == hs.b_smoothing(NU, 3, 0).cells


@pytest.mark.parametrize("n", range(15))
@pytest.mark.parametrize("t", [2, 3, 4])
def test_canonical_smoothing_bound(n, t):
    for shape in enumerate_partitions(n):
        rho = core(shape, t)
        b, _ = hs.canonical_smoothing(shape, t)
        assert b <= 2.0 * math.sqrt(rho.size) + 1e-12


def test_phi_worked_example():
    lam = make_partition([10, 3])
    mapping = hs.phi_map(lam, 3)
    assert set(mapping) == {Cell(1, 1), Cell(1, 2)}
    hooks = sorted(hook_length(lam, mapping[c]) for c in mapping)
    assert hooks == [9, 11]
    nu = decompose(lam, 3).divisible
    for src, dst in mapping.items():
        assert hook_length(nu, src) % 3 == hook_length(lam, dst) % 3


def test_phi_empty_for_cores():
    assert hs.phi_map(make_partition([2, 1, 1]), 3) == {}


@pytest.mark.parametrize("n", range(12))
@pytest.mark.parametrize("t", [2, 3, 4])
def test_phi_injective_residue_preserving(n, t):
    for shape in enumerate_partitions(n):
        dc = decompose(shape, t)
        mapping = hs.phi_map(shape, t)
        assert len(set(mapping.values())) == len(mapping)
        for src, dst in mapping.items():
            assert hook_length(dc.divisible, src) % t == hook_length(shape, dst) % t


@pytest.mark.parametrize("n", range(15))
@pytest.mark.parametrize("t", [2, 3])
def test_coverage_bound_weak_form(n, t):
    # equality can occur (for instance the single-column ribbon shapes), so
    # only the non-strict form holds in general
    for shape in enumerate_partitions(n):
        dc = decompose(shape, t)
        b, cells = hs.canonical_smoothing(shape, t)
        uncovered = dc.divisible.size - cells.size
        assert uncovered <= hs.small_hook_count(dc.divisible, t * (b + 1))


def test_coverage_bound_equality_case():
    # lambda = (3) with t = 3: nu = (3), C = (1), both sides equal 2
    lam = make_partition([3])
    dc = decompose(lam, 3)
    b, cells = hs.canonical_smoothing(lam, 3)
    assert dc.divisible == lam and b == 0 and cells.parts == (1,)
    assert dc.divisible.size - cells.size == hs.small_hook_count(lam, 3) == 2


@pytest.mark.parametrize("n", range(13))
@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_residue_identities_exhaustive(n, t):
    for shape in enumerate_partitions(n):
        rho = core(shape, t)
        counts = hs.residue_census(shape, t).counts
        core_counts = hs.residue_census(rho, t).counts
        moved = (n - rho.size) // t
        assert counts[0] == moved
        for r in range(1, t):
            if 2 * r == t:
                assert counts[r] == moved + core_counts[r]
            else:
                assert counts[r] + counts[t - r] == (
                    2 * moved + core_counts[r] + core_counts[t - r]
                )


def test_orbit_equidistribution_hand_check():
    # over the (7,3,2) orbit at b=2 the two smoothing cells contribute the
    # nonzero residues 1 and 2 three times each
    totals = [0, 0, 0]
    for member in hs.s_t_orbit(NU, 3):
        region = hs.b_smoothing(member, 3, 2).cells
        for cell in region.cells():
            totals[hook_length(member, cell) % 3] += 1
    assert totals[1] == totals[2] == 3
