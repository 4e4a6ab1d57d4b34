"""Exact edge betweenness centrality (per-source BFS with dependency
back-propagation), the baseline ranking the curvature attack is compared to."""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from sklearn.base import BaseEstimator

from .graph import Edge, RoadGraph, canonical_edge
from .scores import EdgeScoreTable


def _accumulate(g: RoadGraph, one):
    """Brandes accumulation; `one` selects the arithmetic (1.0 or Fraction(1))."""
    scores = {e: one - one for e in g.edges}
    for s in g.nodes:
        dist = {s: 0}
        sigma = {s: 1}
        preds: dict[str, list[str]] = {s: []}
        order: list[str] = []
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in g.adjacency[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    sigma[v] = 0
                    preds[v] = []
                    queue.append(v)
                if dist[v] == dist[u] + 1:
                    sigma[v] += sigma[u]
                    preds[v].append(u)
        delta = dict.fromkeys(order, one - one)
        for w in reversed(order):
            coeff = (one + delta[w]) / sigma[w]
            for v in preds[w]:
                c = sigma[v] * coeff
                scores[canonical_edge(v, w)] += c
                delta[v] += c
    # each unordered pair was seen from both endpoints
    return {e: v / 2 for e, v in scores.items()}


def edge_betweenness(g: RoadGraph, normalized: bool = False) -> EdgeScoreTable:
    """Shortest-path edge betweenness with fractional credit.

    Equal-length shortest paths split credit equally; each unordered
    source-target pair is counted once. Normalization divides by
    n(n-1)/2 over the full graph node count.
    """
    scores = _accumulate(g, 1.0)
    if normalized:
        n = g.node_count
        norm = n * (n - 1) / 2.0
        scores = {e: v / norm for e, v in scores.items()}
    return EdgeScoreTable(scores=scores, kind="betweenness")


def edge_betweenness_exact(g: RoadGraph) -> dict[Edge, Fraction]:
    """Unnormalized scores as exact rationals.

    Slower than the float path; intended for identity checks such as the
    conservation law (score sum equals the pairwise hop-distance sum).
    """
    return _accumulate(g, Fraction(1))


class EdgeBetweenness(BaseEstimator):
    """Estimator wrapper: fit(graph) computes the betweenness table."""

    def __init__(self, normalized: bool = False):
        self.normalized = normalized

    def fit(self, G: RoadGraph, y=None):
        self.scores_ = edge_betweenness(G, normalized=self.normalized)
        self.edges_ = tuple(sorted(self.scores_.scores))
        return self
