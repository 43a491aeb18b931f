"""Undirected toroidal small-world graphs: generation, torus labeling, greedy routing."""

from utsw.torus import (
    label_add,
    label_distance,
    label_sub,
    normalizing_factor,
    ring_members,
    ring_size,
    torus_distance,
)
from utsw.model import UtswGraph, GraphView, EdgeKind, generate_torus, generate_utsw
from utsw.cycles import four_cycles_search, is_lattice_pattern, remove_duplicates
from utsw.labeling import (
    AlmostTorus,
    Labeling,
    label_cross,
    label_graph,
    label_reference_system,
    remove_long_range_edges,
)
from utsw.routing import RouteResult, RouteStatus, build_routing_tables, myopic_route

__version__ = "0.1.0"
