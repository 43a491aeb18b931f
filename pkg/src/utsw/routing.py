"""Compact routing over recovered labels.

Every vertex keeps one row per incident edge: the neighbour's label (``None``
when the neighbour is unlabeled) and the local port of that edge. Forwarding
is greedy: go to the labeled neighbour whose label is closest to the target's
label, provided that strictly shortens the label distance; ties go to the
lowest port.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from utsw.torus import Position, label_distance


class Row(NamedTuple):
    label: Optional[Position]
    port: int


class RouteStatus(str, Enum):
    DELIVERED = "delivered"
    STUCK = "stuck"
    HOP_LIMIT = "hop_limit"
    UNROUTABLE = "unroutable"


@dataclass
class RouteResult:
    status: RouteStatus
    hops: int
    path: List[int]
    ports: List[int]

    @property
    def delivered(self) -> bool:
        return self.status is RouteStatus.DELIVERED


@dataclass
class RoutingTables:
    """Per-vertex routing rows plus the port wiring used to forward."""

    n: int
    rows: List[List[Row]]
    links: Tuple[Tuple[int, ...], ...]

    def neighbor(self, u: int, port: int) -> int:
        return self.links[u][port]


def label_bits(n: int) -> int:
    return 2 * max(1, math.ceil(math.log2(n)))


def port_bits(degree: int) -> int:
    return max(1, math.ceil(math.log2(degree))) if degree > 1 else 1


def build_routing_tables(g, labeling) -> RoutingTables:
    labels = labeling.labels
    rows = [[Row(labels[v], p) for p, v in enumerate(nbrs)] for nbrs in g.adj]
    return RoutingTables(n=g.n, rows=rows, links=tuple(g.adj))


def storage_bits(tables: RoutingTables, u: int) -> int:
    """Bits vertex ``u`` stores: its own label plus one (label, port) per row."""
    deg = len(tables.rows[u])
    lb = label_bits(tables.n)
    return (1 + deg) * lb + deg * port_bits(deg)


def myopic_route(tables: RoutingTables, labeling, s: int, t: int, hop_limit: Optional[int] = None) -> RouteResult:
    labels = labeling.labels
    n = tables.n
    if hop_limit is None:
        hop_limit = 4 * n
    if hop_limit < 1:
        raise ValueError("hop_limit must be >= 1")
    target = labels[t]
    if labels[s] is None or target is None:
        return RouteResult(RouteStatus.UNROUTABLE, 0, [s], [])
    path = [s]
    ports: List[int] = []
    u = s
    here = label_distance(n, labels[s], target)
    while u != t:
        if len(ports) >= hop_limit:
            return RouteResult(RouteStatus.HOP_LIMIT, len(ports), path, ports)
        best_port = -1
        best = here
        for label, port in tables.rows[u]:
            if label is None:
                continue
            d = label_distance(n, label, target)
            if d < best:
                best = d
                best_port = port
        if best_port < 0:
            return RouteResult(RouteStatus.STUCK, len(ports), path, ports)
        u = tables.links[u][best_port]
        here = best
        path.append(u)
        ports.append(best_port)
    return RouteResult(RouteStatus.DELIVERED, len(ports), path, ports)


@dataclass
class RoutingSummary:
    pairs: int
    delivery_rate: float
    mean_hops: float
    p50_hops: float
    p90_hops: float
    p99_hops: float
    mean_distance: float
    mean_stretch: float
    stuck: int
    hop_limited: int


def sample_labeled_pairs(labeling, count: int, rng: np.random.Generator) -> List[Tuple[int, int]]:
    labeled = np.array([v for v, p in enumerate(labeling.labels) if p is not None])
    if len(labeled) < 2:
        raise ValueError("need at least two labeled vertices")
    pairs = []
    while len(pairs) < count:
        s, t = rng.choice(labeled, 2, replace=False)
        pairs.append((int(s), int(t)))
    return pairs


def routing_stats(g, tables: RoutingTables, labeling, pairs: int, rng: np.random.Generator,
                  hop_limit: Optional[int] = None) -> RoutingSummary:
    """Route ``pairs`` random labeled pairs and summarise the outcome.

    Hop statistics and stretch (hops over label distance) cover delivered
    routes only.
    """
    n = g.n
    hops, dists, stretch = [], [], []
    stuck = limited = 0
    for s, t in sample_labeled_pairs(labeling, pairs, rng):
        res = myopic_route(tables, labeling, s, t, hop_limit)
        d = label_distance(n, labeling.labels[s], labeling.labels[t])
        dists.append(d)
        if res.delivered:
            hops.append(res.hops)
            stretch.append(res.hops / d)
        elif res.status is RouteStatus.STUCK:
            stuck += 1
        else:
            limited += 1
    h = np.array(hops, dtype=float) if hops else np.array([np.nan])
    return RoutingSummary(
        pairs=pairs,
        delivery_rate=len(hops) / pairs,
        mean_hops=float(np.mean(h)),
        p50_hops=float(np.percentile(h, 50)),
        p90_hops=float(np.percentile(h, 90)),
        p99_hops=float(np.percentile(h, 99)),
        mean_distance=float(np.mean(dists)),
        mean_stretch=float(np.mean(stretch)) if stretch else float("nan"),
        stuck=stuck,
        hop_limited=limited,
    )
