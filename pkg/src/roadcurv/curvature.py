"""Per-edge coarse Ricci curvature from optimal transport of neighbor measures."""

from __future__ import annotations

from dataclasses import dataclass

from sklearn.base import BaseEstimator

from .graph import Edge, RoadGraph, canonical_edge
from .scores import EdgeScoreTable
from .transport import DiscreteMeasure, UnreachableError, hop_cost, wasserstein

# Supports sit within one hop of the edge endpoints, so every ground
# distance is at most 3 and BFS can be truncated there.
_SUPPORT_RADIUS = 3

KAPPA_MIN = -2.0
KAPPA_MAX = 1.0


@dataclass(frozen=True)
class EdgeCurvature:
    edge: Edge
    kappa: float


def neighbor_measure(g: RoadGraph, x: str) -> DiscreteMeasure:
    """Uniform measure of mass 1/deg(x) on each neighbor of x (none on x)."""
    if x not in g.adjacency:
        raise ValueError(f"unknown node {x!r}")
    nbrs = g.adjacency[x]
    d = len(nbrs)
    return DiscreteMeasure(support=nbrs, masses=(1.0 / d,) * d)


def _kappa(g: RoadGraph, e: Edge, cost) -> float:
    u, v = e
    try:
        plan = wasserstein(neighbor_measure(g, u), neighbor_measure(g, v), cost)
    except UnreachableError as exc:
        raise UnreachableError(f"edge ({u},{v}): {exc}") from exc
    kappa = 1.0 - plan.total_cost
    if not (KAPPA_MIN - 1e-9 <= kappa <= KAPPA_MAX + 1e-9):
        raise RuntimeError(f"curvature {kappa} out of [-2, 1] on edge ({u},{v}); solver bug")
    return kappa


def edge_curvature(g: RoadGraph, e: Edge) -> EdgeCurvature:
    """Curvature of one edge: 1 minus the transport cost between the
    endpoint neighbor measures, with hop costs on the full graph."""
    e = canonical_edge(*e)
    if e not in g.edge_set:
        raise ValueError(f"edge {e} not in graph")
    sources = set(g.adjacency[e[0]]) | set(g.adjacency[e[1]])
    cost = hop_cost(g, sources, max_depth=_SUPPORT_RADIUS)
    return EdgeCurvature(edge=e, kappa=_kappa(g, e, cost))


def curvature_table(g: RoadGraph) -> EdgeScoreTable:
    """Curvature for every edge; the BFS cache is shared across edges."""
    cost = hop_cost(g, g.nodes, max_depth=_SUPPORT_RADIUS)
    return EdgeScoreTable(
        scores={e: _kappa(g, e, cost) for e in g.edges},
        kind="curvature",
    )


class RicciCurvature(BaseEstimator):
    """Estimator wrapper: fit(graph) computes the per-edge curvature table.

    After fit, `scores_` holds the EdgeScoreTable and `kappa_` the values
    in canonical edge order.
    """

    def fit(self, G: RoadGraph, y=None):
        self.scores_ = curvature_table(G)
        self.edges_ = tuple(sorted(self.scores_.scores))
        self.kappa_ = tuple(self.scores_.scores[e] for e in self.edges_)
        return self
