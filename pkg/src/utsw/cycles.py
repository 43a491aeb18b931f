"""Rooted four-cycle search and lattice-pattern recognition.

A four-cycle rooted at ``u`` is a tuple ``(u, a, b, c)`` of distinct vertices
with edges ``ua, ab, bc, cu``. ``a`` and ``c`` are its root neighbours and
``b`` is the vertex opposite the root.
"""

from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

FourCycle = Tuple[int, int, int, int]


def raw_four_cycles(g, u: int) -> List[FourCycle]:
    """Depth-4 search from ``u``: every closed walk on distinct vertices.

    Each undirected cycle is reported twice, once per direction. Neighbours are
    visited in ascending id order.
    """
    adj = g.adj
    back = g.nbr_sets[u]
    out = []
    for a in adj[u]:
        for b in adj[a]:
            if b == u:
                continue
            for c in adj[b]:
                if c != a and c != u and c in back:
                    out.append((u, a, b, c))
    return out


def remove_duplicates(cycles: Iterable[FourCycle]) -> List[FourCycle]:
    """Drop the reversed copy of every cycle, keeping the first direction seen."""
    kept = []
    seen = set()
    for c in cycles:
        if (c[0], c[3], c[2], c[1]) not in seen:
            seen.add(c)
            kept.append(c)
    return kept


def four_cycles_search(g, u: int) -> List[FourCycle]:
    """All four-cycles through ``u`` on distinct vertices, one direction each.

    Every tuple starts at ``u``. Since neighbours are scanned in ascending
    order, the kept direction is the one whose second vertex is the smaller
    root neighbour.
    """
    return remove_duplicates(raw_four_cycles(g, u))


def _chain(cycles: Sequence[FourCycle], first: int, start_at_c4: bool) -> bool:
    c0 = cycles[first]
    rest = [c for i, c in enumerate(cycles) if i != first]
    if start_at_c4:
        a, closing = c0[3], c0[1]
    else:
        a, closing = c0[1], c0[3]
    seen = {c0[0], c0[2], a}
    for _ in range(3):
        for idx, c in enumerate(rest):
            if c[1] == a or c[3] == a:
                break
        else:
            return False
        nxt = c[3] if c[1] == a else c[1]
        if nxt in seen or c[2] in seen:
            return False
        del rest[idx]
        seen.add(nxt)
        seen.add(c[2])
        a = nxt
    return a == closing


def is_lattice_pattern(cycles: Sequence[FourCycle]) -> bool:
    """Whether four rooted four-cycles chain into a lattice pattern.

    Chains from the first cycle through shared root edges, checking that all
    nine vertices stay distinct and that the chain closes on the first cycle.
    Both orientations of the first cycle are tried.
    """
    if len(cycles) != 4:
        raise ValueError(f"expected exactly 4 cycles, got {len(cycles)}")
    root = cycles[0][0]
    if any(c[0] != root for c in cycles):
        raise ValueError("cycles do not share a root")
    return _chain(cycles, 0, True) or _chain(cycles, 0, False)


def lattice_patterns(cycles: Sequence[FourCycle], cap: int = 64):
    """Yield every 4-subset of ``cycles`` that forms a lattice pattern."""
    if len(cycles) > cap:
        raise OverflowError(f"{len(cycles)} cycles exceeds cap {cap}")
    for combo in combinations(cycles, 4):
        if is_lattice_pattern(combo):
            yield combo
