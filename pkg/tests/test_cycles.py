from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from oracles import adjacency_matrix, brute_four_cycles, cycle_edges, definition_lattice_check
from utsw.cycles import (
    four_cycles_search,
    is_lattice_pattern,
    lattice_patterns,
    raw_four_cycles,
    remove_duplicates,
)
from utsw.model import generate_torus, generate_utsw


def test_torus_root_has_four_cycles():
    g = generate_torus(5)
    cycles = four_cycles_search(g, 12)
    assert len(cycles) == 4
    assert is_lattice_pattern(cycles)
    assert all(c[0] == 12 for c in cycles)


def test_torus_four_has_wraparound_cycles():
    # on the 4x4 torus the two axis neighbours at distance 2 coincide
    assert len(four_cycles_search(generate_torus(4), 0)) > 4


def test_raw_search_reports_both_directions():
    g = generate_torus(6)
    raw = raw_four_cycles(g, 0)
    assert len(raw) == 8
    kept = remove_duplicates(raw)
    assert len(kept) == 4
    assert all(c[1] < c[3] for c in kept)


def test_remove_duplicates_keeps_first_direction():
    cs = [(0, 3, 2, 1), (0, 1, 2, 3), (0, 5, 6, 7)]
    assert remove_duplicates(cs) == [(0, 3, 2, 1), (0, 5, 6, 7)]


@given(st.integers(5, 8), st.integers(0, 10**6))
@settings(max_examples=15, deadline=None)
def test_search_matches_brute_force(n, seed):
    g = generate_utsw(n, seed)
    a = adjacency_matrix(g)
    for u in range(n * n):
        found = four_cycles_search(g, u)
        assert len({cycle_edges(c) for c in found}) == len(found)
        assert {cycle_edges(c) for c in found} == brute_four_cycles(a, u)


def test_lattice_pattern_rejects_bad_input():
    with pytest.raises(ValueError):
        is_lattice_pattern([(0, 1, 2, 3)] * 3)
    with pytest.raises(ValueError):
        is_lattice_pattern([(0, 1, 2, 3), (0, 3, 4, 5), (0, 5, 6, 7), (1, 7, 8, 0)])


def test_lattice_pattern_examples():
    ring = [(0, 1, 2, 3), (0, 3, 4, 5), (0, 5, 6, 7), (0, 7, 8, 1)]
    assert is_lattice_pattern(ring)
    assert is_lattice_pattern(list(reversed(ring)))
    assert is_lattice_pattern([(0, 3, 2, 1), (0, 5, 4, 3), (0, 5, 6, 7), (0, 1, 8, 7)])
    # shared opposite vertex breaks distinctness
    assert not is_lattice_pattern([(0, 1, 2, 3), (0, 3, 2, 5), (0, 5, 6, 7), (0, 7, 8, 1)])
    # two disjoint pairs do not chain
    assert not is_lattice_pattern([(0, 1, 2, 3), (0, 3, 4, 1), (0, 5, 6, 7), (0, 7, 8, 5)])


def test_lattice_patterns_cap():
    cycles = [(0, i, 100 + i, i + 1) for i in range(1, 70)]
    with pytest.raises(OverflowError):
        list(lattice_patterns(cycles, cap=64))


cycle_quads = st.lists(
    st.tuples(st.integers(1, 9), st.integers(1, 9), st.integers(1, 9)).filter(lambda t: len(set(t)) == 3),
    min_size=4, max_size=4,
).map(lambda ts: [(0, *t) for t in ts])


@given(cycle_quads)
@settings(max_examples=300, deadline=None)
def test_lattice_check_matches_definition(quad):
    assert is_lattice_pattern(quad) == definition_lattice_check(quad)


def test_lattice_check_matches_definition_on_graph_cycles():
    hits = 0
    for seed in range(40):
        g = generate_utsw(6, seed)
        for u in range(0, 36, 5):
            cs = four_cycles_search(g, u)
            for quad in combinations(cs, 4):
                got = is_lattice_pattern(quad)
                assert got == definition_lattice_check(list(quad))
                hits += got
    assert hits > 0
