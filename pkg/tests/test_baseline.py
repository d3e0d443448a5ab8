import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from impactdisc import DataSeries, equal_frequency, equal_width, series_from_arrays
from impactdisc.baseline import equal_frequency_cuts
from impactdisc.errors import KTooLarge, KZero


def flat(x):
    return DataSeries(x, np.zeros(len(x)))


def test_equal_width_examples():
    assert equal_width(flat([0, 10]), 2).edges == (5.0,)
    assert equal_width(flat([0, 4, 9]), 3).edges == (3.0, 6.0)
    assert equal_width(flat([0, 9]), 1).edges == ()
    with pytest.raises(KZero):
        equal_width(flat([0, 9]), 0)


def test_equal_frequency_examples():
    assert equal_frequency(flat(np.arange(1, 7)), 3).edges == (2.0, 4.0)
    assert equal_frequency(flat(np.arange(1, 6)), 2).edges == (2.0,)
    assert equal_frequency(flat(np.arange(1, 6)), 1).edges == ()
    with pytest.raises(KTooLarge):
        equal_frequency(flat(np.arange(1, 6)), 6)


def test_equal_frequency_flags_tie_split():
    spec = equal_frequency(flat([1, 2, 2, 3]), 2)
    assert spec.cut_indices == (2,)
    assert spec.tie_split == (True,)


@given(st.integers(1, 200).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_equal_frequency_sizes_balanced(args):
    n, k = args
    b = [0, *equal_frequency_cuts(n, k), n]
    sizes = [hi - lo for lo, hi in zip(b, b[1:])]
    assert sum(sizes) == n
    assert max(sizes) - min(sizes) <= 1


@settings(max_examples=50)
@given(st.lists(st.floats(-1e3, 1e3), min_size=2, max_size=30, unique=True),
       st.integers(1, 6), st.floats(0.1, 10), st.floats(-100, 100))
def test_equal_width_affine_equivariant(xs, k, s, c):
    base = equal_width(series_from_arrays(xs, np.zeros(len(xs))), k).edges
    moved = equal_width(series_from_arrays([s * v + c for v in xs], np.zeros(len(xs))), k).edges
    assert moved == pytest.approx([s * e + c for e in base], rel=1e-9, abs=1e-9)


@settings(max_examples=50)
@given(st.integers(2, 40), st.integers(0, 2**32 - 1))
def test_baselines_ignore_y(n, seed):
    rng = np.random.default_rng(seed)
    x = np.sort(rng.uniform(0, 50, n))
    y = rng.uniform(0, 50, n)
    a = series_from_arrays(x, y)
    b = series_from_arrays(x, rng.permutation(y))
    k = int(rng.integers(1, n + 1))
    assert equal_width(a, k) == equal_width(b, k)
    assert equal_frequency(a, k).edges == equal_frequency(b, k).edges
