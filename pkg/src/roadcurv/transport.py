"""Exact discrete optimal transport between finitely supported measures.

Masses are lifted to exact rationals and the transportation problem is
solved as a min-cost flow on the bipartite supply/demand network via
successive shortest paths, so reported optima carry no LP tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import RoadGraph, bfs_distances

MASS_TOL = 1e-12


class UnreachableError(ValueError):
    """A support pair has no finite ground distance."""


@dataclass(frozen=True)
class DiscreteMeasure:
    """Probability measure with finite support over node ids."""

    support: tuple[str, ...]
    masses: tuple[float, ...]

    def __post_init__(self):
        if len(self.support) != len(self.masses):
            raise ValueError("support and masses must have equal length")
        if not self.support:
            raise ValueError("measure must have non-empty support")
        if len(set(self.support)) != len(self.support):
            raise ValueError("support ids must be distinct")
        if any(m <= 0 for m in self.masses):
            raise ValueError("masses must be strictly positive")
        if abs(sum(self.masses) - 1.0) > MASS_TOL:
            raise ValueError(f"masses must sum to 1, got {sum(self.masses)!r}")


@dataclass(frozen=True)
class TransportPlan:
    """Feasible coupling between two measures with its total cost."""

    flows: dict[tuple[str, str], float]
    total_cost: float


def hop_cost(g: RoadGraph, sources, max_depth: int | None = None):
    """Memoized hop-distance evaluator backed by one BFS per source.

    max_depth truncates each BFS; pairs farther apart than the cap (or
    genuinely disconnected) raise UnreachableError when queried.
    """
    sources = set(sources)
    unknown = sources - set(g.nodes)
    if unknown:
        raise ValueError(f"sources not in graph: {sorted(unknown)}")
    memo: dict[str, dict[str, int]] = {}

    def cost(x: str, y: str) -> int:
        if x not in sources:
            raise ValueError(f"{x!r} was not declared as a cost source")
        dist = memo.get(x)
        if dist is None:
            dist = memo[x] = bfs_distances(g, x, max_depth=max_depth)
        d = dist.get(y)
        if d is None:
            raise UnreachableError(f"no path from {x!r} to {y!r}")
        return d

    return cost


def _rationalize(masses) -> list[Fraction]:
    # Fraction(float) is exact; renormalize so both sides sum to exactly 1.
    fracs = [Fraction(m) for m in masses]
    total = sum(fracs)
    return [f / total for f in fracs]


def _min_cost_transport(supplies, demands, cost):
    """Successive-shortest-path min-cost flow; exact Fraction flows."""
    m, n = len(supplies), len(demands)
    source, sink = 0, m + n + 1
    flow: dict[tuple[int, int], Fraction] = {}
    rem_s = list(supplies)
    rem_d = list(demands)
    zero = Fraction(0)

    while any(r > zero for r in rem_s):
        arcs = []
        for i in range(m):
            if rem_s[i] > zero:
                arcs.append((source, 1 + i, 0.0))
        for i in range(m):
            for j in range(n):
                arcs.append((1 + i, 1 + m + j, cost[i][j]))
                if flow.get((i, j), zero) > zero:
                    arcs.append((1 + m + j, 1 + i, -cost[i][j]))
        for j in range(n):
            if rem_d[j] > zero:
                arcs.append((1 + m + j, sink, 0.0))

        dist = [math.inf] * (m + n + 2)
        dist[source] = 0.0
        pred: list[int | None] = [None] * (m + n + 2)
        for _ in range(m + n + 1):
            changed = False
            for a, b, c in arcs:
                if dist[a] + c < dist[b]:
                    dist[b] = dist[a] + c
                    pred[b] = a
                    changed = True
            if not changed:
                break
        if pred[sink] is None:
            raise RuntimeError("transportation network infeasible")

        path = []
        node = sink
        while node != source:
            path.append((pred[node], node))
            node = pred[node]
        path.reverse()

        bottleneck = None
        for a, b in path:
            if a == source:
                cap = rem_s[b - 1]
            elif b == sink:
                cap = rem_d[a - 1 - m]
            elif a <= m:  # forward supply -> demand
                cap = None
            else:  # reverse demand -> supply
                cap = flow[(b - 1, a - 1 - m)]
            if cap is not None and (bottleneck is None or cap < bottleneck):
                bottleneck = cap
        assert bottleneck is not None and bottleneck > zero

        for a, b in path:
            if a == source:
                rem_s[b - 1] -= bottleneck
            elif b == sink:
                rem_d[a - 1 - m] -= bottleneck
            elif a <= m:
                key = (a - 1, b - 1 - m)
                flow[key] = flow.get(key, zero) + bottleneck
            else:
                flow[(b - 1, a - 1 - m)] -= bottleneck
    return flow


def wasserstein(mu: DiscreteMeasure, nu: DiscreteMeasure, cost) -> TransportPlan:
    """Minimum-cost coupling of mu onto nu under the given ground cost.

    cost is a callable (supply-id, demand-id) -> non-negative finite real;
    a non-finite evaluation raises UnreachableError.
    """
    matrix: list[list[float]] = []
    for x in mu.support:
        row = []
        for y in nu.support:
            c = cost(x, y)
            if not math.isfinite(c):
                raise UnreachableError(f"non-finite cost between {x!r} and {y!r}")
            if c < 0:
                raise ValueError(f"negative cost between {x!r} and {y!r}")
            row.append(float(c))
        matrix.append(row)

    flow = _min_cost_transport(_rationalize(mu.masses), _rationalize(nu.masses), matrix)

    flows: dict[tuple[str, str], float] = {}
    total = 0.0
    for i, x in enumerate(mu.support):
        for j, y in enumerate(nu.support):
            f = flow.get((i, j))
            if f:
                flows[(x, y)] = float(f)
                total += float(f) * matrix[i][j]
    return TransportPlan(flows=flows, total_cost=total)
