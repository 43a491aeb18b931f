import math
from itertools import product

import pytest
from hypothesis import given, strategies as st

from utsw.torus import (
    label_add,
    label_distance,
    label_sub,
    max_distance,
    normalizing_factor,
    position,
    ring_members,
    ring_size,
    ring_sizes,
    torus_distance,
    vertex_id,
)


def brute_rings(n):
    """Distance histogram from (0,0) by direct enumeration of all n*n cells."""
    counts = {}
    for x, y in product(range(n), repeat=2):
        if (x, y) != (0, 0):
            d = min(x, n - x) + min(y, n - y)
            counts[d] = counts.get(d, 0) + 1
    return counts


def positions(n):
    return st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))


@pytest.mark.parametrize("n,u,v,d", [
    (5, (0, 0), (3, 4), 3),
    (7, (0, 0), (0, 0), 0),
    (3, (0, 0), (2, 2), 2),
])
def test_torus_distance_examples(n, u, v, d):
    assert torus_distance(n, u, v) == d


@pytest.mark.parametrize("n,p,q,d", [
    (5, (0, 0), (3, 4), 3),
    (9, (1, 1), (1, 1), 0),
    (6, (0, 0), (3, 3), 6),
])
def test_label_distance_examples(n, p, q, d):
    assert label_distance(n, p, q) == d


@pytest.mark.parametrize("n", range(3, 10))
def test_metric_axioms_exhaustive(n):
    pts = list(product(range(n), repeat=2))
    for u in pts:
        for v in pts:
            d = torus_distance(n, u, v)
            assert d == torus_distance(n, v, u) == label_distance(n, u, v)
            assert (d == 0) == (u == v)
            assert d <= max_distance(n)
    # triangle inequality on a sparser grid of triples
    for u, v, w in product(pts[::3], pts[::2], pts[::5]):
        assert torus_distance(n, u, w) <= torus_distance(n, u, v) + torus_distance(n, v, w)


@pytest.mark.parametrize("n,i,size", [(7, 3, 12), (5, 4, 4), (3, 2, 4)])
def test_ring_size_examples(n, i, size):
    assert ring_size(n, i) == size


@pytest.mark.parametrize("n", list(range(3, 30)) + [64, 101])
def test_ring_sizes_match_enumeration(n):
    counts = brute_rings(n)
    for i in range(1, n + 1):
        assert ring_size(n, i) == counts.get(i, 0)
        assert ring_size(n, i) <= 4 * i
        if i < n / 2:
            assert ring_size(n, i) == 4 * i
    assert sum(ring_sizes(n)) == n * n - 1


@pytest.mark.parametrize("i", [0, -1, 6])
def test_ring_size_rejects_out_of_range(i):
    with pytest.raises(ValueError):
        ring_size(5, i)


def test_ring_members_examples():
    assert ring_members(5, (0, 0), 1) == {(0, 1), (1, 0), (0, 4), (4, 0)}
    assert ring_members(3, (1, 1), 2) == {(0, 0), (0, 2), (2, 0), (2, 2)}
    assert len(ring_members(7, (2, 5), 3)) == 12
    assert ring_members(5, (0, 0), 5) == set()


@given(st.integers(3, 16).flatmap(lambda n: st.tuples(st.just(n), positions(n), st.integers(1, 20))))
def test_ring_members_are_exact_ring(args):
    n, u, i = args
    members = ring_members(n, u, i)
    expect = {v for v in product(range(n), repeat=2) if torus_distance(n, u, v) == i}
    assert members == expect
    if i <= n:
        assert len(members) == ring_size(n, i)


def test_normalizing_factor_small():
    assert normalizing_factor(3) == pytest.approx(0.2, abs=1e-15)
    with pytest.raises(ValueError):
        normalizing_factor(2)


@pytest.mark.parametrize("n", [3, 4, 5, 8, 13])
def test_normalizing_factor_reconstructs_distribution(n):
    total = sum(
        torus_distance(n, (0, 0), v) ** -2.0
        for v in product(range(n), repeat=2) if v != (0, 0)
    )
    assert normalizing_factor(n) * total == pytest.approx(1.0, abs=1e-12)


def test_normalizing_factor_inside_bounds_at_100():
    z = normalizing_factor(100)
    assert 1 / (4 * (math.log(100) + 1)) < z < 1 / (4 * math.log(50))


def test_label_arithmetic_examples():
    assert label_add(5, (4, 4), (2, 3)) == (1, 2)
    assert label_sub(5, (0, 0), (0, 1)) == (0, 4)


@given(st.integers(3, 40).flatmap(lambda n: st.tuples(st.just(n), positions(n), positions(n), positions(n))))
def test_label_arithmetic_is_a_group(args):
    n, a, b, c = args
    assert label_add(n, a, label_sub(n, b, b)) == a
    assert label_add(n, a, b) == label_add(n, b, a)
    assert label_add(n, label_add(n, a, b), c) == label_add(n, a, label_add(n, b, c))
    assert label_sub(n, label_add(n, a, b), b) == a
    s = label_add(n, a, b)
    assert 0 <= s[0] < n and 0 <= s[1] < n


@given(st.integers(3, 50).flatmap(lambda n: st.tuples(st.just(n), positions(n))))
def test_vertex_id_roundtrip(args):
    n, p = args
    assert position(n, vertex_id(n, p)) == p
