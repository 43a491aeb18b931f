"""Flat-file formats.

Graph file::

    utsw <n> <seed>
    <u> <v> <L|R>        one line per edge, u < v, sorted by (u, v)

Label file: CSV with header ``vertex,x,y``, one row per vertex in id order,
empty ``x,y`` for unlabeled vertices.
"""

import csv
import io
from typing import List, Optional

from utsw.errors import GraphFormatError
from utsw.labeling import Labeling
from utsw.model import EdgeKind, UtswGraph, from_edges


def format_graph(g: UtswGraph) -> str:
    seed = -1 if g.seed is None else g.seed
    lines = [f"utsw {g.n} {seed}"]
    lines.extend(f"{u} {v} {k.value}" for u, v, k in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> UtswGraph:
    lines = text.splitlines()
    if not lines:
        raise GraphFormatError("empty file", 1)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "utsw":
        raise GraphFormatError("expected header 'utsw <n> <seed>'", 1)
    try:
        n, seed = int(head[1]), int(head[2])
    except ValueError:
        raise GraphFormatError("header fields must be integers", 1) from None
    if n < 3:
        raise GraphFormatError(f"torus size must be >= 3, got {n}", 1)
    size = n * n
    edges = []
    seen = set()
    prev = None
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 3:
            raise GraphFormatError("expected '<u> <v> <L|R>'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("vertex ids must be integers", lineno) from None
        if parts[2] not in ("L", "R"):
            raise GraphFormatError(f"edge kind must be L or R, got {parts[2]!r}", lineno)
        if not (0 <= u < v < size):
            raise GraphFormatError(f"need 0 <= u < v < {size}, got {u} {v}", lineno)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        if prev is not None and (u, v) < prev:
            raise GraphFormatError("edges must be sorted by (u, v)", lineno)
        seen.add((u, v))
        prev = (u, v)
        edges.append((u, v, EdgeKind(parts[2])))
    return from_edges(n, None if seed == -1 else seed, edges)


def write_graph(g: UtswGraph, path: str) -> None:
    with open(path, "w", newline="\n") as f:
        f.write(format_graph(g))


def read_graph(path: str) -> UtswGraph:
    with open(path) as f:
        return parse_graph(f.read())


def format_labels(labeling: Labeling) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["vertex", "x", "y"])
    for v, p in enumerate(labeling.labels):
        w.writerow([v, "", ""] if p is None else [v, p[0], p[1]])
    return buf.getvalue()


def parse_labels(text: str, n: Optional[int] = None) -> Labeling:
    """Parse a label file. ``n`` defaults to the square root of the row count."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["vertex", "x", "y"]:
        raise GraphFormatError("expected header 'vertex,x,y'", 1)
    body = rows[1:]
    if n is None:
        n = int(round(len(body) ** 0.5))
    if n < 3:
        raise GraphFormatError(f"torus size must be >= 3, got {n}", 1)
    if n * n != len(body):
        raise GraphFormatError(f"expected {n * n} rows, got {len(body)}", len(rows))
    labels: List = [None] * (n * n)
    origin = -1
    for lineno, row in enumerate(body, start=2):
        if len(row) != 3:
            raise GraphFormatError("expected 3 fields", lineno)
        try:
            v = int(row[0])
        except ValueError:
            raise GraphFormatError("vertex id must be an integer", lineno) from None
        if v != lineno - 2:
            raise GraphFormatError(f"rows must be in vertex order, got {v}", lineno)
        if row[1] == "" and row[2] == "":
            continue
        try:
            x, y = int(row[1]), int(row[2])
        except ValueError:
            raise GraphFormatError("label coordinates must be integers or both empty", lineno) from None
        if not (0 <= x < n and 0 <= y < n):
            raise GraphFormatError(f"label ({x}, {y}) outside [0, {n})", lineno)
        labels[v] = (x, y)
        if (x, y) == (0, 0):
            origin = v
    return Labeling(n=n, labels=labels, origin=origin)


def write_labels(labeling: Labeling, path: str) -> None:
    with open(path, "w", newline="\n") as f:
        f.write(format_labels(labeling))


def read_labels(path: str, n: Optional[int] = None) -> Labeling:
    with open(path, newline="") as f:
        return parse_labels(f.read(), n)
