from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_stripping_results, is_core_by_hooks, quotient_by_contents
from tcores.corequotient import (
    CoreQuotient,
    compose,
    core,
    core_by_rim_stripping,
    decompose,
    is_core,
    quotient,
)
from tcores.counting import core_count_table, divisible_count_table
from tcores.partitions import EMPTY, enumerate_partitions, make_partition

RUNNING = make_partition([5, 4, 4, 2, 1])


@st.composite
def partitions(draw, max_n=24):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return EMPTY
    bins = draw(st.integers(min_value=1, max_value=n))
    counts = Counter(
        draw(st.lists(st.integers(0, bins - 1), min_size=n, max_size=n))
    )
    return make_partition(sorted(counts.values(), reverse=True))


def test_core_running_examples():
    assert core(RUNNING, 3) == make_partition([2, 1, 1])
    assert core(RUNNING, 8) == RUNNING
    assert all(not is_core(RUNNING, t) for t in range(2, 8))
    assert core(EMPTY, 4) == EMPTY


def test_core_rejects_small_t():
    with pytest.raises(ValueError):
        core(RUNNING, 1)
    with pytest.raises(ValueError):
        quotient(RUNNING, 0)


def test_quotient_running_examples():
    assert quotient(RUNNING, 3) == (EMPTY, make_partition([1, 1, 1]), make_partition([1]))
    assert quotient(make_partition([2, 1, 1]), 3) == (EMPTY,) * 3
    q = quotient(make_partition([7, 3, 2]), 3)
    assert sum(part.size for part in q) == 4


@pytest.mark.parametrize("n", range(15))
@pytest.mark.parametrize("t", [2, 3, 4])
def test_quotient_matches_content_definition(n, t):
    for shape in enumerate_partitions(n):
        assert quotient(shape, t) == quotient_by_contents(shape, t)


def test_decompose_examples():
    dc = decompose(make_partition([10, 3]), 3)
    assert dc.core == make_partition([1])
    assert dc.divisible == make_partition([7, 3, 2])

    rho = make_partition([2, 1, 1])
    assert decompose(rho, 3) == CoreQuotient(3, rho, (EMPTY,) * 3, EMPTY)

    dc = decompose(RUNNING, 3)
    assert dc.core == make_partition([2, 1, 1])
    assert dc.divisible.size == 12
    assert dc.core.size + dc.divisible.size == RUNNING.size


def test_compose_examples():
    q = quotient(make_partition([7, 3, 2]), 3)
    assert compose(make_partition([1]), q, 3) == make_partition([10, 3])
    rho = make_partition([3, 1])
    assert compose(rho, (EMPTY,) * 3, 3) == rho


def test_compose_rejects_non_core():
    with pytest.raises(ValueError, match="not a 3-core"):
        compose(make_partition([3]), (EMPTY,) * 3, 3)
    with pytest.raises(ValueError, match="components"):
        compose(EMPTY, (EMPTY,) * 2, 3)


@given(partitions(), st.integers(2, 5))
@settings(max_examples=150)
def test_division_round_trip(shape, t):
    dc = decompose(shape, t)
    assert dc.core.size + dc.divisible.size == shape.size
    assert dc.divisible.size == t * sum(q.size for q in dc.quotient)
    assert is_core(dc.core, t)
    assert core(dc.divisible, t) == EMPTY
    assert compose(dc.core, dc.quotient, t) == shape


@pytest.mark.parametrize("n", range(13))
@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_decompose_injective(n, t):
    images = {
        (decompose(s, t).core, decompose(s, t).divisible)
        for s in enumerate_partitions(n)
    }
    assert len(images) == sum(1 for _ in enumerate_partitions(n))


@pytest.mark.parametrize("n", range(16))
def test_core_properties_exhaustive(n):
    for shape in enumerate_partitions(n):
        for t in (2, 3, 4, 5):
            rho = core(shape, t)
            assert core(rho, t) == rho
            assert rho.size % t == n % t
            assert is_core(shape, t) == is_core_by_hooks(shape, t)


@pytest.mark.parametrize("n", range(13))
@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_greedy_strip_matches_abacus(n, t):
    for shape in enumerate_partitions(n):
        assert core_by_rim_stripping(shape, t) == core(shape, t)


@pytest.mark.parametrize("n", range(10))
@pytest.mark.parametrize("t", [2, 3])
def test_stripping_order_is_irrelevant(n, t):
    for shape in enumerate_partitions(n):
        assert all_stripping_results(shape, t) == {core(shape, t)}


@pytest.mark.parametrize("n", range(19))
@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_fixed_core_size_counts(n, t):
    hist = Counter(core(s, t).size for s in enumerate_partitions(n))
    cores = core_count_table(t, n)
    divis = divisible_count_table(t, n)
    for i in range(n + 1):
        assert hist.get(i, 0) == divis[n - i] * cores[i]
