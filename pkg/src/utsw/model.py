"""Seeded generation of undirected toroidal small-world (UTSW) graphs.

Vertex ``(x, y)`` has id ``x * n + y``. The generator first builds the n x n
torus (local edges), then every vertex, in ascending id order, draws one
long-range target from the inverse-square distribution. A draw that lands on
an existing edge (a torus neighbour, or a vertex that already chose us) is
dropped without resampling.

Randomness comes from numpy's PCG64 bit generator seeded with the 64-bit
graph seed, which is reproducible across platforms. Distance rings are chosen
by inverting a double-precision CDF (``searchsorted`` with ``side="right"``,
i.e. ties round down to the lower ring), then a ring member is drawn uniformly
with an integer draw.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from utsw.torus import Position, normalizing_factor, ring_offsets, ring_sizes


class EdgeKind(str, Enum):
    LOCAL = "L"
    LONG_RANGE = "R"


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class GraphView:
    """Adjacency-only view handed to the labeling pipeline.

    Carries no generator coordinates and no edge kinds.
    """

    n: int
    adj: Tuple[Tuple[int, ...], ...]

    @cached_property
    def nbr_sets(self) -> Tuple[frozenset, ...]:
        return tuple(frozenset(a) for a in self.adj)

    @property
    def num_vertices(self) -> int:
        return len(self.adj)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adj) for v in nbrs if u < v]


@dataclass(frozen=True)
class UtswGraph:
    n: int
    seed: Optional[int]
    adj: Tuple[Tuple[int, ...], ...]
    kinds: Dict[Tuple[int, int], EdgeKind] = field(repr=False)

    @property
    def num_vertices(self) -> int:
        return self.n * self.n

    @property
    def num_edges(self) -> int:
        return len(self.kinds)

    @cached_property
    def truth_positions(self) -> Tuple[Position, ...]:
        """Generator coordinates. Verification only."""
        return tuple(divmod(v, self.n) for v in range(self.n * self.n))

    @cached_property
    def _view(self) -> GraphView:
        return GraphView(self.n, self.adj)

    def view(self) -> GraphView:
        return self._view

    @property
    def nbr_sets(self) -> Tuple[frozenset, ...]:
        return self._view.nbr_sets

    def kind(self, u: int, v: int) -> EdgeKind:
        return self.kinds[(u, v) if u < v else (v, u)]

    def edges(self) -> List[Tuple[int, int, EdgeKind]]:
        """Edges ``(u, v, kind)`` with ``u < v``, sorted."""
        return [(u, v, k) for (u, v), k in sorted(self.kinds.items())]

    def long_range_edges(self) -> List[Tuple[int, int]]:
        return [e for e, k in sorted(self.kinds.items()) if k is EdgeKind.LONG_RANGE]

    def degree(self, u: int) -> int:
        return degree(self, u)


def degree(g, u: int) -> int:
    if not 0 <= u < len(g.adj):
        raise IndexError(f"vertex {u} out of range [0, {len(g.adj)})")
    return len(g.adj[u])


def _check_size(n: int) -> None:
    if n < 3:
        raise ValueError(f"torus size must be >= 3, got {n}")


def torus_edges(n: int) -> List[Tuple[int, int]]:
    edges = []
    for i in range(n):
        for j in range(n):
            u = i * n + j
            for v in (i * n + (j + 1) % n, ((i + 1) % n) * n + j):
                edges.append((u, v) if u < v else (v, u))
    return edges


def from_edges(n: int, seed: Optional[int], edges: Sequence[Tuple[int, int, EdgeKind]]) -> UtswGraph:
    """Build a graph from ``(u, v, kind)`` triples; rejects loops and duplicates."""
    nbrs: List[List[int]] = [[] for _ in range(n * n)]
    kinds: Dict[Tuple[int, int], EdgeKind] = {}
    for u, v, k in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in kinds:
            raise ValueError(f"parallel edge {key}")
        kinds[key] = EdgeKind(k)
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in nbrs)
    return UtswGraph(n=n, seed=seed, adj=adj, kinds=kinds)


def generate_torus(n: int) -> UtswGraph:
    _check_size(n)
    return from_edges(n, None, [(u, v, EdgeKind.LOCAL) for u, v in torus_edges(n)])


@lru_cache(maxsize=16)
def _ring_cdf(n: int) -> np.ndarray:
    sizes = ring_sizes(n)[1:].astype(np.float64)
    dist = np.arange(1, len(sizes) + 1, dtype=np.float64)
    cdf = np.cumsum(normalizing_factor(n) * sizes / dist**2)
    cdf[-1] = 1.0
    return cdf


def draw_offsets(n: int, rng: np.random.Generator, size: int) -> np.ndarray:
    """Draw ``size`` offsets from the inverse-square law, shape ``(size, 2)``.

    Two stages: a ring ``i`` with probability ``Z * |ring_i| / i**2``, then a
    uniform member of that ring, which gives each vertex at distance ``d`` the
    exact probability ``Z / d**2``.
    """
    cdf = _ring_cdf(n)
    offsets, starts = ring_offsets(n)
    ring = np.searchsorted(cdf, rng.random(size), side="right")
    lo = starts[ring]
    width = starts[ring + 1] - lo
    pick = lo + rng.integers(0, width)
    return offsets[pick]


def sample_long_range_target(n: int, u: int, rng: np.random.Generator) -> int:
    _check_size(n)
    dx, dy = draw_offsets(n, rng, 1)[0]
    x, y = divmod(u, n)
    return int(((x + dx) % n) * n + (y + dy) % n)


def sample_targets(n: int, rng: np.random.Generator) -> np.ndarray:
    """One long-range target per vertex, indexed by vertex id."""
    offs = draw_offsets(n, rng, n * n)
    ids = np.arange(n * n)
    x = (ids // n + offs[:, 0]) % n
    y = (ids % n + offs[:, 1]) % n
    return x * n + y


def generate_utsw(n: int, seed: int) -> UtswGraph:
    _check_size(n)
    rng = make_rng(seed)
    targets = sample_targets(n, rng).tolist()
    nbrs: List[set] = [set() for _ in range(n * n)]
    kinds: Dict[Tuple[int, int], EdgeKind] = {}
    for u, v in torus_edges(n):
        nbrs[u].add(v)
        nbrs[v].add(u)
        kinds[(u, v)] = EdgeKind.LOCAL
    for u, v in enumerate(targets):
        if v in nbrs[u]:
            continue
        nbrs[u].add(v)
        nbrs[v].add(u)
        kinds[(u, v) if u < v else (v, u)] = EdgeKind.LONG_RANGE
    adj = tuple(tuple(sorted(a)) for a in nbrs)
    return UtswGraph(n=n, seed=seed, adj=adj, kinds=kinds)
