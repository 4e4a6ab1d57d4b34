"""Undirected road-network graph: ingestion, connectivity, global statistics."""

from __future__ import annotations

import csv
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

logger = logging.getLogger(__name__)

Edge = tuple[str, str]


class GraphFormatError(ValueError):
    """Malformed node/edge input, with the offending file and line."""

    def __init__(self, message: str, path=None, line: int | None = None):
        loc = ""
        if path is not None:
            loc = f" [{path}" + (f":{line}" if line is not None else "") + "]"
        super().__init__(message + loc)
        self.path = path
        self.line = line


def canonical_edge(u: str, v: str) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class IngestReport:
    """Warning counters collected while building a graph from raw rows."""

    duplicate_edges: int = 0
    isolated_nodes: int = 0


@dataclass(frozen=True)
class RoadGraph:
    """Immutable simple undirected graph over string node ids.

    Edges are stored once, canonicalized with u < v; adjacency lists are
    sorted so every traversal order is deterministic.
    """

    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]
    adjacency: dict[str, tuple[str, ...]]
    coords: dict[str, tuple[float, float]]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def degree(self, u: str) -> int:
        return len(self.adjacency[u])

    def neighbors(self, u: str) -> tuple[str, ...]:
        return self.adjacency[u]

    def has_edge(self, u: str, v: str) -> bool:
        return canonical_edge(u, v) in self.edge_set


def build_graph(nodes, edges, coords=None) -> tuple[RoadGraph, IngestReport]:
    """Canonicalize raw node/edge collections into a RoadGraph.

    Self-loops are rejected, parallel edges merged (counted), and
    degree-0 nodes dropped (counted).
    """
    node_set = set(nodes)
    seen: set[Edge] = set()
    duplicates = 0
    for u, v in edges:
        if u == v:
            raise GraphFormatError(f"self-loop edge ({u},{v}) is not allowed")
        if u not in node_set or v not in node_set:
            missing = u if u not in node_set else v
            raise GraphFormatError(f"edge ({u},{v}) references unknown node {missing!r}")
        e = canonical_edge(u, v)
        if e in seen:
            duplicates += 1
        else:
            seen.add(e)
    if not seen:
        raise GraphFormatError("graph has no edges")

    adj: dict[str, list[str]] = {n: [] for n in node_set}
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    isolated = sorted(n for n in node_set if not adj[n])
    if isolated:
        logger.warning("dropping %d isolated node(s)", len(isolated))
        for n in isolated:
            del adj[n]
    if duplicates:
        logger.warning("merged %d duplicate edge(s)", duplicates)

    kept = tuple(sorted(adj))
    coords = coords or {}
    graph = RoadGraph(
        nodes=kept,
        edges=tuple(sorted(seen)),
        adjacency={n: tuple(sorted(adj[n])) for n in kept},
        coords={n: coords[n] for n in kept if n in coords},
    )
    return graph, IngestReport(duplicate_edges=duplicates, isolated_nodes=len(isolated))


def from_edges(edges, coords=None) -> RoadGraph:
    """Build a graph whose node set is exactly the edge endpoints."""
    nodes = {n for e in edges for n in e}
    graph, _ = build_graph(nodes, edges, coords)
    return graph


def _parse_nodes(node_file) -> tuple[list[str], dict[str, tuple[float, float]]]:
    node_file = Path(node_file)
    nodes: list[str] = []
    coords: dict[str, tuple[float, float]] = {}
    with open(node_file, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:3]] != ["id", "x", "y"]:
            raise GraphFormatError("node file must start with header 'id,x,y'", node_file, 1)
        for lineno, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 3:
                raise GraphFormatError(f"expected 3 fields, got {len(row)}", node_file, lineno)
            nid, xs, ys = (f.strip() for f in row)
            if not nid:
                raise GraphFormatError("empty node id", node_file, lineno)
            if nid in coords or nid in nodes:
                raise GraphFormatError(f"duplicate node id {nid!r}", node_file, lineno)
            nodes.append(nid)
            if xs == "" and ys == "":
                continue
            if xs == "" or ys == "":
                raise GraphFormatError("coordinates must be both present or both empty", node_file, lineno)
            try:
                coords[nid] = (float(xs), float(ys))
            except ValueError:
                raise GraphFormatError(f"non-numeric coordinate {xs!r},{ys!r}", node_file, lineno) from None
    return nodes, coords


def _parse_edges(edge_file) -> list[Edge]:
    edge_file = Path(edge_file)
    edges: list[Edge] = []
    with open(edge_file, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:2]] != ["u", "v"]:
            raise GraphFormatError("edge file must start with header 'u,v'", edge_file, 1)
        for lineno, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2:
                raise GraphFormatError(f"expected 2 fields, got {len(row)}", edge_file, lineno)
            u, v = (f.strip() for f in row)
            if not u or not v:
                raise GraphFormatError("empty edge endpoint", edge_file, lineno)
            edges.append((u, v))
    return edges


def load_graph_with_report(node_file, edge_file) -> tuple[RoadGraph, IngestReport]:
    """Load node/edge CSV files, returning the graph plus warning counters."""
    nodes, coords = _parse_nodes(node_file)
    edges = _parse_edges(edge_file)
    return build_graph(nodes, edges, coords)


def load_graph(node_file, edge_file) -> RoadGraph:
    graph, _ = load_graph_with_report(node_file, edge_file)
    return graph


def save_graph(g: RoadGraph, node_file, edge_file) -> None:
    """Write the two-CSV representation; re-loading reproduces g exactly."""
    with open(node_file, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["id", "x", "y"])
        for n in g.nodes:
            if n in g.coords:
                x, y = g.coords[n]
                writer.writerow([n, repr(x), repr(y)])
            else:
                writer.writerow([n, "", ""])
    with open(edge_file, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["u", "v"])
        for u, v in g.edges:
            writer.writerow([u, v])


def bfs_distances(
    g: RoadGraph,
    source: str,
    max_depth: int | None = None,
    removed: frozenset[Edge] | None = None,
) -> dict[str, int]:
    """Hop distances from source to every node reachable (within max_depth)."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if max_depth is not None and du >= max_depth:
            continue
        for v in g.adjacency[u]:
            if removed is not None and canonical_edge(u, v) in removed:
                continue
            if v not in dist:
                dist[v] = du + 1
                queue.append(v)
    return dist


def connected_components(g: RoadGraph, removed: frozenset[Edge] | None = None) -> list[list[str]]:
    """Components as sorted node lists, largest first (ties by smallest id)."""
    seen: set[str] = set()
    comps: list[list[str]] = []
    for start in g.nodes:
        if start in seen:
            continue
        comp = sorted(bfs_distances(g, start, removed=removed))
        seen.update(comp)
        comps.append(comp)
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


def largest_connected_component(g: RoadGraph, removed: frozenset[Edge] | None = None) -> int:
    """Node count of the largest connected component."""
    seen: set[str] = set()
    best = 0
    for start in g.nodes:
        if start in seen:
            continue
        comp = bfs_distances(g, start, removed=removed)
        seen.update(comp)
        best = max(best, len(comp))
    return best


@dataclass(frozen=True)
class NetworkStats:
    """Global summary: size, degrees, diameter D, mean path L, clustering C."""

    node_count: int
    edge_count: int
    max_degree: int
    avg_degree: float
    diameter: int
    avg_path_length: float
    avg_clustering: float
    restricted_to_lcc: bool


def clustering_coefficient(g: RoadGraph, node: str) -> float:
    nbrs = g.adjacency[node]
    k = len(nbrs)
    if k < 2:
        return 0.0
    links = 0
    for i in range(k):
        for j in range(i + 1, k):
            if canonical_edge(nbrs[i], nbrs[j]) in g.edge_set:
                links += 1
    return 2.0 * links / (k * (k - 1))


def network_stats(g: RoadGraph) -> NetworkStats:
    """Compute size, degree, path-length and clustering statistics.

    On disconnected input the diameter and mean path length are taken
    over the largest component and the result is flagged.
    """
    if g.node_count < 2:
        raise ValueError("network statistics are undefined for a single-node graph")
    comps = connected_components(g)
    lcc = comps[0]
    restricted = len(comps) > 1
    if len(lcc) < 2:
        raise ValueError("largest component has fewer than 2 nodes")

    lcc_set = set(lcc)
    diameter = 0
    total = 0
    for s in lcc:
        dist = bfs_distances(g, s)
        for t, d in dist.items():
            if t in lcc_set:
                diameter = max(diameter, d)
                total += d
    n = len(lcc)
    avg_path = total / (n * (n - 1))

    degrees = [g.degree(u) for u in g.nodes]
    avg_clustering = sum(clustering_coefficient(g, u) for u in g.nodes) / g.node_count
    return NetworkStats(
        node_count=g.node_count,
        edge_count=g.edge_count,
        max_degree=max(degrees),
        avg_degree=2.0 * g.edge_count / g.node_count,
        diameter=diameter,
        avg_path_length=avg_path,
        avg_clustering=avg_clustering,
        restricted_to_lcc=restricted,
    )
