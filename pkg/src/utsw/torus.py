"""Geometry of the n x n torus.

Positions are ``(x, y)`` tuples with both coordinates in ``[0, n)``. They are
used both for generator coordinates and for labels produced by the labeling
pipeline.
"""

from functools import lru_cache
from typing import Set, Tuple

import numpy as np

Position = Tuple[int, int]


def _axis(n: int, a: int, b: int) -> int:
    d = abs(a - b) % n
    return min(d, n - d)


def torus_distance(n: int, u: Position, v: Position) -> int:
    """Manhattan distance on the torus with wraparound in both axes."""
    return _axis(n, u[0], v[0]) + _axis(n, u[1], v[1])


def label_distance(n: int, p: Position, q: Position) -> int:
    """Torus metric evaluated on two labels.

    Numerically the same as :func:`torus_distance`; kept separate because it
    acts on labels computed by the labeling pipeline rather than on generator
    coordinates.
    """
    dx = abs(p[0] - q[0])
    dy = abs(p[1] - q[1])
    return min(dx, n - dx) + min(dy, n - dy)


def max_distance(n: int) -> int:
    return 2 * (n // 2)


@lru_cache(maxsize=64)
def _ring_sizes(n: int) -> Tuple[int, ...]:
    # per-axis multiplicity of each circular offset, then 1-D convolution
    half = n // 2
    axis = np.full(half + 1, 2, dtype=np.int64)
    axis[0] = 1
    if n % 2 == 0:
        axis[half] = 1
    sizes = np.convolve(axis, axis)
    sizes[0] = 0
    return tuple(int(s) for s in sizes)


def ring_size(n: int, i: int) -> int:
    """Number of vertices at torus distance exactly ``i`` from any vertex."""
    if i < 1 or i > n:
        raise ValueError(f"ring index must be in [1, {n}], got {i}")
    sizes = _ring_sizes(n)
    return sizes[i] if i < len(sizes) else 0


def ring_sizes(n: int) -> np.ndarray:
    """Ring sizes indexed by distance, ``out[0] == 0``, up to the max distance."""
    return np.array(_ring_sizes(n), dtype=np.int64)


@lru_cache(maxsize=16)
def ring_offsets(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """All nonzero offsets ``(dx, dy)`` grouped by ring.

    Returns ``(offsets, starts)`` where ``offsets`` is an ``(n*n - 1, 2)`` array
    sorted by torus distance and ring ``i`` occupies
    ``offsets[starts[i - 1]:starts[i]]``. Every offset in ``[0, n)^2`` appears
    exactly once, so positions that coincide under wraparound are never
    double-counted.
    """
    dx, dy = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    dx = dx.ravel()
    dy = dy.ravel()
    dist = np.minimum(dx, n - dx) + np.minimum(dy, n - dy)
    order = np.argsort(dist, kind="stable")[1:]
    offsets = np.stack([dx[order], dy[order]], axis=1)
    sizes = ring_sizes(n)
    starts = np.cumsum(sizes)
    offsets.setflags(write=False)
    starts.setflags(write=False)
    return offsets, starts


def ring_members(n: int, u: Position, i: int) -> Set[Position]:
    if i < 1:
        raise ValueError(f"ring index must be >= 1, got {i}")
    if i > max_distance(n):
        return set()
    offsets, starts = ring_offsets(n)
    lo = starts[i - 1]
    hi = starts[i]
    x, y = u
    return {((x + int(a)) % n, (y + int(b)) % n) for a, b in offsets[lo:hi]}


@lru_cache(maxsize=1024)
def normalizing_factor(n: int) -> float:
    """Exact normalizing factor of the inverse-square distribution.

    Computed by summing ring sizes over distances, so the cost is linear in
    ``n`` after the ring-size convolution.
    """
    if n < 3:
        raise ValueError(f"torus size must be >= 3, got {n}")
    sizes = ring_sizes(n)[1:].astype(np.float64)
    dist = np.arange(1, len(sizes) + 1, dtype=np.float64)
    return float(1.0 / np.sum(sizes / dist**2))


def label_add(n: int, a: Position, b: Position) -> Position:
    return ((a[0] + b[0]) % n, (a[1] + b[1]) % n)


def label_sub(n: int, a: Position, b: Position) -> Position:
    return ((a[0] - b[0]) % n, (a[1] - b[1]) % n)


def vertex_id(n: int, p: Position) -> int:
    return p[0] * n + p[1]


def position(n: int, v: int) -> Position:
    return divmod(v, n)
