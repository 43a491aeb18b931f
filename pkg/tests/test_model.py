from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import stats

from utsw.model import (
    EdgeKind,
    degree,
    draw_offsets,
    from_edges,
    generate_torus,
    generate_utsw,
    make_rng,
    sample_long_range_target,
)
from utsw.torus import normalizing_factor, torus_distance


def check_invariants(g):
    n = g.n
    pos = g.truth_positions
    local = 0
    for u, nbrs in enumerate(g.adj):
        assert u not in nbrs
        assert len(set(nbrs)) == len(nbrs)
        assert len(nbrs) >= 4
        for v in nbrs:
            assert u in g.adj[v]
            d = torus_distance(n, pos[u], pos[v])
            if g.kind(u, v) is EdgeKind.LOCAL:
                assert d == 1
                local += 1
            else:
                assert d >= 2
    assert local == 2 * 2 * n * n
    assert len(g.long_range_edges()) <= n * n


def test_torus_has_only_local_edges():
    g = generate_torus(5)
    check_invariants(g)
    assert g.num_edges == 50
    assert all(degree(g, u) == 4 for u in range(25))


def test_torus_rejects_small():
    with pytest.raises(ValueError):
        generate_torus(2)
    with pytest.raises(ValueError):
        generate_utsw(2, 0)


@given(st.integers(3, 14), st.integers(0, 2**64 - 1))
@settings(max_examples=30, deadline=None)
def test_generated_graph_invariants(n, seed):
    check_invariants(generate_utsw(n, seed))


def test_same_seed_same_graph():
    a = generate_utsw(20, 12345)
    b = generate_utsw(20, 12345)
    assert a.adj == b.adj and a.kinds == b.kinds
    assert generate_utsw(20, 12346).adj != a.adj


def test_degree_out_of_range():
    g = generate_utsw(5, 1)
    with pytest.raises(IndexError):
        degree(g, 25)


def test_view_hides_ground_truth():
    v = generate_utsw(6, 3).view()
    assert not hasattr(v, "truth_positions")
    assert not hasattr(v, "kinds")


def test_from_edges_rejects_loops_and_parallels():
    with pytest.raises(ValueError):
        from_edges(3, 0, [(1, 1, EdgeKind.LOCAL)])
    with pytest.raises(ValueError):
        from_edges(3, 0, [(0, 1, EdgeKind.LOCAL), (1, 0, EdgeKind.LONG_RANGE)])


def test_mean_degree_is_at_most_six():
    g = generate_utsw(60, 4)
    assert 5.5 < np.mean([g.degree(u) for u in range(g.num_vertices)]) <= 6.0


def test_sampler_matches_inverse_square_law():
    # chi-square goodness of fit over every non-root cell of the 5x5 torus
    n = 5
    draws = 10**6
    offs = draw_offsets(n, make_rng(2024), draws)
    cells = Counter(map(tuple, (offs % n).tolist()))
    z = normalizing_factor(n)
    keys = [(x, y) for x in range(n) for y in range(n) if (x, y) != (0, 0)]
    expected = np.array([draws * z / torus_distance(n, (0, 0), k) ** 2 for k in keys])
    observed = np.array([cells.get(k, 0) for k in keys])
    assert observed.sum() == draws
    _, p = stats.chisquare(observed, expected)
    assert p > 1e-3


def test_sampler_ring_frequencies_larger_torus():
    n = 31
    draws = 400_000
    offs = draw_offsets(n, make_rng(7), draws)
    m = offs % n
    d = np.minimum(m, n - m).sum(axis=1)
    assert d.min() >= 1
    z = normalizing_factor(n)
    p1 = np.mean(d == 1)
    # ring 1 carries probability 4 * Z
    assert p1 == pytest.approx(4 * z, abs=5 * np.sqrt(4 * z / draws))


def test_single_target_draw_is_not_self():
    rng = make_rng(0)
    for u in range(49):
        assert sample_long_range_target(7, u, rng) != u
