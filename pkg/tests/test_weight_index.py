import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphsampling import ExhaustedDistributionError, WeightIndex
from oracles import prefix_scan_draw


def test_build_totals():
    assert WeightIndex([1, 1, 1, 1]).total == 4
    idx = WeightIndex([0, 0, 5])
    assert idx.total == 5
    assert {idx.draw(u) for u in np.linspace(0, 0.999, 50)} == {2}


def test_build_random_vector_total():
    w = np.random.default_rng(0).integers(0, 100, size=1000)
    assert WeightIndex(w).total == sum(int(x) for x in w)


@pytest.mark.parametrize("bad", [[], [1, -1], [0.5, 1]])
def test_build_rejects(bad):
    with pytest.raises(ValueError):
        WeightIndex(bad)


def test_add_increment_fig1():
    idx = WeightIndex([1, 1, 1])
    idx.add(0, 1)
    assert idx.weights.tolist() == [2, 1, 1]
    assert idx.total == 4


def test_add_zero_is_identity():
    idx = WeightIndex([3, 1, 2])
    before = (idx.weights.tolist(), idx.total, [idx.prefix_sum(i) for i in range(4)])
    idx.add(1, 0)
    assert (idx.weights.tolist(), idx.total, [idx.prefix_sum(i) for i in range(4)]) == before


def test_add_negative_result_rejected():
    idx = WeightIndex([1, 2])
    with pytest.raises(ValueError):
        idx.add(0, -2)
    with pytest.raises(ValueError):
        idx.add_many([0, 0], -1)
    assert idx.weights.tolist() == [1, 2] and idx.total == 3
    with pytest.raises(IndexError):
        idx.add(2, 1)


@pytest.mark.parametrize("weights,u,expected", [
    ([1, 1, 1, 1], 0.30, 1),
    ([2, 1, 1], 0.45, 0),
    ([0, 3, 0, 1], 0.80, 3),
])
def test_draw_examples(weights, u, expected):
    assert prefix_scan_draw(weights, u) == expected
    assert WeightIndex(weights).draw(u) == expected


def test_draw_exhausted():
    idx = WeightIndex([1])
    idx.zero(0)
    with pytest.raises(ExhaustedDistributionError):
        idx.draw(0.5)


def test_draw_rejects_u_outside_unit_interval():
    with pytest.raises(ValueError):
        WeightIndex([1]).draw(1.0)


def test_draw_near_one_stays_on_last_positive():
    idx = WeightIndex([3, 5, 0, 0])
    assert idx.draw(np.nextafter(1.0, 0.0)) == 1


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 20), min_size=1, max_size=300).filter(lambda w: sum(w) > 0),
       st.lists(st.floats(0, 1, exclude_max=True), min_size=1, max_size=20))
def test_draw_matches_prefix_scan(weights, us):
    idx = WeightIndex(weights)
    for u in us:
        assert idx.draw(u) == prefix_scan_draw(weights, u)


def test_zeroed_element_never_drawn():
    w = [4, 1, 7, 2]
    idx = WeightIndex(w)
    idx.zero(2)
    for u in np.linspace(0, 1, 2001, endpoint=False):
        assert idx.draw(u) != 2


def test_random_updates_match_flat_array():
    rng = np.random.default_rng(1)
    m = 512
    oracle = [int(x) for x in rng.integers(1, 5, size=m)]
    idx = WeightIndex(oracle)
    for _ in range(10_000):
        i = int(rng.integers(m))
        d = 1 if oracle[i] == 0 or rng.random() < 0.5 else -1
        oracle[i] += d
        idx.add(i, d)
    assert idx.weights.tolist() == oracle
    assert idx.total == sum(oracle)
    assert [idx.prefix_sum(i) for i in range(0, m + 1, 37)] == [sum(oracle[:i]) for i in range(0, m + 1, 37)]


def test_add_many_matches_flat_array():
    rng = np.random.default_rng(2)
    m = 300
    oracle = [1] * m
    idx = WeightIndex(oracle)
    for _ in range(200):
        ids = rng.integers(m, size=int(rng.integers(0, 40)))
        for i in ids:
            oracle[int(i)] += 1
        idx.add_many(ids, 1)
    assert idx.weights.tolist() == oracle
    assert idx.total == sum(oracle)
    for u in rng.random(200):
        assert idx.draw(float(u)) == prefix_scan_draw(oracle, float(u))


def test_chi_square_frequencies():
    w = [3, 1, 1, 1, 2]
    idx = WeightIndex(w)
    rng = np.random.default_rng(12345)
    n = 100_000
    counts = np.bincount([idx.draw(u) for u in rng.random(n)], minlength=5)
    expected = n * np.array(w) / sum(w)
    chi2 = float(((counts - expected) ** 2 / expected).sum())
    assert chi2 < 18.47


def test_op_counter_is_logarithmic():
    m = 1 << 16
    idx = WeightIndex(np.ones(m, dtype=np.int64))
    idx.draw(0.5)
    assert idx.ops <= m.bit_length()
    idx.ops = 0
    idx.add(12345, 3)
    assert idx.ops <= m.bit_length()
    idx.ops = 0
    idx.add_many(np.arange(100), 1)
    assert idx.ops <= 100 * m.bit_length()
