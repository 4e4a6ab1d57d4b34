"""Deterministic synthetic road networks for benchmarking.

`grid` is a plain square lattice (traffic-spreading layout); `grid-radial`
and `grid-star` are lattice sectors pooled through hub-and-spoke trunk
edges (traffic-pooling layouts, with and without a connecting ring);
`tree` is a seeded random tree.
"""

from __future__ import annotations

import math
import random

from .graph import RoadGraph, from_edges

KINDS = ("grid", "grid-radial", "grid-star", "tree")

RADIAL_SECTORS = 6
STAR_SECTORS = 4


def _lattice(size, node_id, origin=(0.0, 0.0)):
    ox, oy = origin
    nodes = {}
    edges = []
    coords = {}
    for r in range(size):
        for c in range(size):
            nid = node_id(r, c)
            nodes[(r, c)] = nid
            coords[nid] = (ox + c, oy + r)
    for r in range(size):
        for c in range(size):
            if c + 1 < size:
                edges.append((nodes[(r, c)], nodes[(r, c + 1)]))
            if r + 1 < size:
                edges.append((nodes[(r, c)], nodes[(r + 1, c)]))
    return nodes, edges, coords


def _grid(size) -> RoadGraph:
    _, edges, coords = _lattice(size, lambda r, c: f"{r:03d}-{c:03d}")
    return from_edges(edges, coords)


def _sectored(size, sectors, with_ring) -> RoadGraph:
    edges = []
    coords = {"hub": (0.0, 0.0)}
    corners = []
    radius = 3.0 * size
    for k in range(sectors):
        theta = 2.0 * math.pi * k / sectors
        cx = radius * math.cos(theta) - (size - 1) / 2.0
        cy = radius * math.sin(theta) - (size - 1) / 2.0
        nodes, sec_edges, sec_coords = _lattice(
            size, lambda r, c, k=k: f"s{k}-{r:03d}-{c:03d}", origin=(cx, cy)
        )
        edges.extend(sec_edges)
        coords.update(sec_coords)
        corners.append((nodes[(0, 0)], nodes[(0, size - 1)]))
    for spoke_corner, _ in corners:
        edges.append(("hub", spoke_corner))
    if with_ring:
        for k in range(sectors):
            edges.append((corners[k][1], corners[(k + 1) % sectors][0]))
    return from_edges(edges, coords)


def _tree(size, seed) -> RoadGraph:
    rng = random.Random(seed)
    ids = [f"t{i:05d}" for i in range(size)]
    edges = [(ids[rng.randrange(i)], ids[i]) for i in range(1, size)]
    coords = {
        ids[i]: (
            10.0 * math.cos(2.0 * math.pi * i / size),
            10.0 * math.sin(2.0 * math.pi * i / size),
        )
        for i in range(size)
    }
    return from_edges(edges, coords)


def generate_benchmark(kind: str, size: int, seed: int = 42) -> RoadGraph:
    """Build one synthetic network; identical inputs give identical graphs."""
    if kind not in KINDS:
        raise ValueError(f"unknown benchmark kind {kind!r} (choose from {KINDS})")
    if size < 3:
        raise ValueError("size must be >= 3")
    if kind == "grid":
        return _grid(size)
    if kind == "grid-radial":
        return _sectored(size, RADIAL_SECTORS, with_ring=True)
    if kind == "grid-star":
        return _sectored(size, STAR_SECTORS, with_ring=False)
    return _tree(size, seed)


def trunk_edges(kind: str, size: int) -> tuple[tuple[str, str], ...]:
    """Canonical trunk (spoke + ring) edges of the sectored benchmarks."""
    if kind not in ("grid-radial", "grid-star"):
        raise ValueError("trunk edges exist only for sectored benchmarks")
    sectors = RADIAL_SECTORS if kind == "grid-radial" else STAR_SECTORS
    edges = [("hub", f"s{k}-000-000") for k in range(sectors)]
    if kind == "grid-radial":
        for k in range(sectors):
            a = f"s{k}-000-{size - 1:03d}"
            b = f"s{(k + 1) % sectors}-000-000"
            edges.append((a, b) if a < b else (b, a))
    return tuple(sorted(edges))
