"""Recovering torus coordinates from the bare adjacency of a UTSW graph.

Pipeline:

1. :func:`remove_long_range_edges` marks a vertex *detected* when the union of
   its root edges over all lattice patterns has exactly four edges, and drops
   its other incident edges.
2. :func:`label_reference_system` picks a random origin whose closed
   neighbourhood is detected and labels its cross ``(0,0)``, ``(0,1)``,
   ``(1,0)``, ``(0,n-1)``, ``(n-1,0)``.
3. :func:`label_graph` runs a breadth-first search over detected vertices,
   calling :func:`label_cross` on each dequeued vertex.

Labels are only defined up to a torus automorphism (translation, reflection,
axis swap): the origin is random and the first cycle fixes handedness.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Deque, List, Optional, Sequence, Tuple

import numpy as np

from utsw.cycles import FourCycle, four_cycles_search, lattice_patterns
from utsw.errors import (
    LabelConflictError,
    NoOriginError,
    UnlabelableCrossError,
    UnsupportedSizeError,
)
from utsw.model import make_rng
from utsw.torus import Position

CYCLE_CAP = 64


@dataclass
class AlmostTorus:
    """Graph left after long-range edge removal, with per-vertex flags."""

    n: int
    adj: Tuple[Tuple[int, ...], ...]
    detected: List[bool]
    enqueued: List[bool] = field(default_factory=list)
    dropped: List[Tuple[int, int]] = field(default_factory=list, repr=False)
    cycle_counts: List[int] = field(default_factory=list, repr=False)

    def __post_init__(self):
        if not self.enqueued:
            self.enqueued = [False] * len(self.adj)

    @cached_property
    def nbr_sets(self):
        return tuple(frozenset(a) for a in self.adj)

    @property
    def num_vertices(self) -> int:
        return len(self.adj)

    @property
    def detected_fraction(self) -> float:
        return sum(self.detected) / len(self.detected)


@dataclass
class Labeling:
    n: int
    labels: List[Optional[Position]]
    origin: int
    conflicts: int = 0
    torus: Optional[AlmostTorus] = field(default=None, repr=False, compare=False)
    deferred: List[int] = field(default_factory=list, repr=False, compare=False)

    def __getitem__(self, v: int) -> Optional[Position]:
        return self.labels[v]

    @property
    def labeled_count(self) -> int:
        return sum(p is not None for p in self.labels)

    @property
    def labeled_fraction(self) -> float:
        return self.labeled_count / len(self.labels)

    def is_complete(self) -> bool:
        return all(p is not None for p in self.labels)


def _check_size(n: int) -> None:
    if n < 5:
        raise UnsupportedSizeError(
            f"labeling needs n >= 5 (got {n}); wraparound four-cycles break it for n = 4"
        )


def _detected_ends(cycles: Sequence[FourCycle], cap: int) -> Optional[frozenset]:
    if len(cycles) < 4 or len(cycles) > cap:
        return None
    ends = set()
    for combo in lattice_patterns(cycles, cap):
        for c in combo:
            ends.add(c[1])
            ends.add(c[3])
        if len(ends) > 4:
            return None
    return frozenset(ends) if len(ends) == 4 else None


def detect_vertex(g, u: int, cap: int = CYCLE_CAP) -> Optional[frozenset]:
    """Root-edge endpoints of ``u`` over all lattice patterns, if exactly four.

    Returns ``None`` when ``u`` is not detected. Roots with more than ``cap``
    four-cycles are treated as undetected.
    """
    return _detected_ends(four_cycles_search(g, u), cap)


def remove_long_range_edges(g, cap: int = CYCLE_CAP) -> AlmostTorus:
    """Detect vertices and drop every edge flagged by either endpoint."""
    _check_size(g.n)
    size = len(g.adj)
    detected = [False] * size
    counts = [0] * size
    drop = set()
    for u in range(size):
        cycles = four_cycles_search(g, u)
        counts[u] = len(cycles)
        keep = _detected_ends(cycles, cap)
        if keep is None:
            continue
        detected[u] = True
        for w in g.adj[u]:
            if w not in keep:
                drop.add((u, w) if u < w else (w, u))
    adj = tuple(
        tuple(w for w in nbrs if ((u, w) if u < w else (w, u)) not in drop)
        for u, nbrs in enumerate(g.adj)
    )
    return AlmostTorus(n=g.n, adj=adj, detected=detected, dropped=sorted(drop), cycle_counts=counts)


def _next_around(cycles: Sequence[FourCycle], prev: int, before: int) -> Optional[int]:
    # root neighbour adjacent (in the pattern) to ``prev`` other than ``before``
    for c in cycles:
        if c[1] == prev and c[3] != before:
            return c[3]
        if c[3] == prev and c[1] != before:
            return c[1]
    return None


def _cross_order(cycles: Sequence[FourCycle], first: int, second: int) -> Tuple[int, int, int, int]:
    third = _next_around(cycles, second, first)
    fourth = _next_around(cycles, third, second) if third is not None else None
    if third is None or fourth is None:
        raise UnlabelableCrossError(f"cannot order cross around {cycles[0][0]}")
    return first, second, third, fourth


def label_reference_system(
    t: AlmostTorus,
    rng: np.random.Generator,
    max_attempts: Optional[int] = None,
) -> Tuple[Deque[int], Labeling]:
    """Choose an origin at random and label its cross.

    The origin must be detected and have only detected neighbours in ``t``.
    Gives up with :class:`NoOriginError` after ``max_attempts`` draws
    (default ``64 * n**2``).
    """
    n = t.n
    _check_size(n)
    size = t.num_vertices
    labels: List[Optional[Position]] = [None] * size
    t.enqueued = [False] * size
    if max_attempts is None:
        max_attempts = 64 * size
    det = t.detected
    for _ in range(max_attempts):
        o = int(rng.integers(size))
        if det[o] and all(det[w] for w in t.adj[o]):
            break
    else:
        raise NoOriginError(f"no origin found after {max_attempts} attempts")

    cycles = four_cycles_search(t, o)
    if not cycles:
        raise NoOriginError(f"origin {o} has no four-cycles")
    c = cycles[0]
    cross = _cross_order(cycles, c[1], c[3])
    labels[o] = (0, 0)
    for v, p in zip(cross, ((0, 1), (1, 0), (0, n - 1), (n - 1, 0))):
        labels[v] = p
    queue = deque(cross)
    t.enqueued[o] = True
    for v in cross:
        t.enqueued[v] = True
    return queue, Labeling(n=n, labels=labels, origin=o, torus=t)


def _step_axis(n: int, p: Position, q: Position) -> int:
    """Axis (0 or 1) of a unit step from ``p`` to ``q``, or -1 if not a unit step."""
    dx = (q[0] - p[0]) % n
    dy = (q[1] - p[1]) % n
    if dy == 0 and (dx == 1 or dx == n - 1):
        return 0
    if dx == 0 and (dy == 1 or dy == n - 1):
        return 1
    return -1


def _perpendicular(n: int, a: Position, b: Position, c: Position, d: Position) -> bool:
    # unit steps a->b and c->d along different axes
    s = _step_axis(n, a, b)
    return s >= 0 and _step_axis(n, c, d) == 1 - s


def _find_reference(t: AlmostTorus, u: int, labels, cycles: Sequence[FourCycle], cap: int):
    """Lattice pattern at ``u`` holding a reference, and the first cross pair.

    A reference is a pair of consecutive cycle edges with labeled endpoints
    whose labels form two perpendicular unit steps. When the reference
    assigns a label across a third edge, that edge needs a detected endpoint,
    which makes it a torus edge. Returns
    ``(pattern, u1, u2, assign)`` where ``assign`` is either ``None`` or a
    ``(vertex, label)`` computed from the reference.
    """
    n = t.n
    det = t.detected
    lu = labels[u]
    if len(cycles) > cap:
        return None
    for pattern in lattice_patterns(cycles, cap):
        for _, c2, c3, c4 in pattern:
            l2, l3, l4 = labels[c2], labels[c3], labels[c4]
            if l2 is not None and l4 is not None:
                if _perpendicular(n, lu, l2, lu, l4):
                    return pattern, c2, c4, None
            elif (det[c2] or det[c3]) and l2 is not None and l3 is not None:
                # the new label crosses c3-c4, so that edge must be certified too
                if (det[c3] or det[c4]) and _perpendicular(n, lu, l2, l2, l3):
                    p = ((lu[0] + l3[0] - l2[0]) % n, (lu[1] + l3[1] - l2[1]) % n)
                    return pattern, c2, c4, (c4, p)
            elif (det[c3] or det[c4]) and l3 is not None and l4 is not None:
                if (det[c2] or det[c3]) and _perpendicular(n, lu, l4, l4, l3):
                    p = ((lu[0] + l3[0] - l4[0]) % n, (lu[1] + l3[1] - l4[1]) % n)
                    return pattern, c2, c4, (c2, p)
    return None


def _certified(t: AlmostTorus, c: FourCycle) -> bool:
    # every edge has a detected endpoint, so every edge is a torus edge
    det = t.detected
    return all(det[c[i]] or det[c[(i + 1) % 4]] for i in range(4))


def _orient_cross(t, cycles, pattern, u1, u2, labels, opp1, opp2) -> Optional[Tuple[int, int, int, int]]:
    """Order the cross of a vertex given its adjacent pair ``(u1, u2)``.

    Returns ``(u1, u2, u3, u4)`` with ``u3`` opposite ``u1``, or ``None`` if
    the order is ambiguous. Chaining inside ``pattern`` can be fooled by a
    pattern that closes through retained long-range edges, so the order is
    taken from the first decisive source: existing labels of the two
    remaining neighbours, then certified cycles (all four edges known to be
    torus edges), then all cycles at the root. The true squares are always
    present, so a one-sided answer from any source is correct.
    """
    u = pattern[0][0]
    w1, w2 = [w for w in t.adj[u] if w != u1 and w != u2]
    for w, other in ((w1, w2), (w2, w1)):
        if labels[w] == opp1:
            return u1, u2, w, other
        if labels[w] == opp2:
            return u1, u2, other, w

    def decide(pool) -> Optional[Tuple[int, int, int, int]]:
        pairs = {frozenset((c[1], c[3])) for c in pool}
        a = frozenset((u2, w1)) in pairs or frozenset((u1, w2)) in pairs
        b = frozenset((u2, w2)) in pairs or frozenset((u1, w1)) in pairs
        if a and not b:
            return u1, u2, w1, w2
        if b and not a:
            return u1, u2, w2, w1
        return None

    return decide([c for c in cycles if _certified(t, c)]) or decide(cycles)


def label_cross(
    t: AlmostTorus,
    u: int,
    queue: Deque[int],
    labeling: Labeling,
    strict: bool = False,
    cap: int = CYCLE_CAP,
) -> Tuple[Deque[int], Labeling]:
    """Label the four neighbours of a detected, labeled vertex ``u``.

    An entry that is already labeled keeps its first value; a differing
    recomputed value counts as a conflict, or raises
    :class:`LabelConflictError` when ``strict``. When the two neighbours
    opposite the reference cannot be told apart yet, they are left alone and
    ``u`` is appended to ``labeling.deferred``.
    """
    n = t.n
    labels = labeling.labels
    lu = labels[u]
    if lu is None:
        raise UnlabelableCrossError(f"vertex {u} is not labeled")
    cycles = four_cycles_search(t, u)
    found = _find_reference(t, u, labels, cycles, cap)
    if found is None:
        raise UnlabelableCrossError(f"no lattice pattern with a reference at vertex {u}")
    pattern, u1, u2, assign = found

    def put(v: int, p: Position) -> None:
        old = labels[v]
        if old is None:
            labels[v] = p
        elif old != p:
            labeling.conflicts += 1
            if strict:
                raise LabelConflictError(f"vertex {v}: {old} != {p} (cross of {u})")

    if assign is not None:
        put(*assign)
    l1, l2 = labels[u1], labels[u2]
    opp1 = ((2 * lu[0] - l1[0]) % n, (2 * lu[1] - l1[1]) % n)
    opp2 = ((2 * lu[0] - l2[0]) % n, (2 * lu[1] - l2[1]) % n)
    cross = _orient_cross(t, cycles, pattern, u1, u2, labels, opp1, opp2)
    if cross is None:
        labeling.deferred.append(u)
        cross = (u1, u2)
    else:
        put(cross[2], opp1)
        put(cross[3], opp2)
    for v in cross:
        if not t.enqueued[v] and t.detected[v] and labels[v] is not None:
            queue.append(v)
            t.enqueued[v] = True
    return queue, labeling


def label_graph(g, seed: int, strict: bool = False, t: Optional[AlmostTorus] = None) -> Labeling:
    """Label as much of ``g`` as the breadth-first search reaches.

    ``t`` may carry a precomputed :func:`remove_long_range_edges` result for
    ``g``; its ``enqueued`` flags are reset. Crosses with no usable reference
    or an ambiguous orientation are retried once the queue drains, until a round makes no
    progress; whatever is still ambiguous stays in ``deferred``, unlabeled.
    """
    _check_size(g.n)
    if t is None:
        t = remove_long_range_edges(g)
    rng = make_rng(seed)
    queue, labeling = label_reference_system(t, rng)

    def visit(u: int) -> None:
        try:
            label_cross(t, u, queue, labeling, strict=strict)
        except UnlabelableCrossError:
            labeling.deferred.append(u)

    while True:
        while queue:
            visit(queue.popleft())
        pending, labeling.deferred = labeling.deferred, []
        if not pending:
            break
        before = labeling.labeled_count
        for u in pending:
            visit(u)
        if labeling.labeled_count == before and not queue:
            break
    return labeling


def labeling_from_positions(g) -> Labeling:
    """Labeling that copies the generator coordinates. Verification only."""
    labels: List[Optional[Position]] = list(g.truth_positions)
    return Labeling(n=g.n, labels=labels, origin=0)
