"""Edge-removal attack simulation and connectivity degradation curves.

TVR (topology vulnerability ratio) is the node count of the largest
connected component after removal divided by the node count of the
original network.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from sklearn.base import BaseEstimator

from .graph import Edge, RoadGraph, largest_connected_component
from .scores import EdgeScoreTable

STRATEGIES = ("random", "curvature-ascending", "betweenness-descending")


@dataclass(frozen=True)
class AttackSchedule:
    strategy: str
    order: tuple[Edge, ...]
    seed: int | None = None


@dataclass(frozen=True)
class TVRSample:
    fraction_removed: float
    tvr_mean: float
    tvr_std: float
    trials: int


@dataclass(frozen=True)
class TVRCurve:
    strategy: str
    samples: tuple[TVRSample, ...]


def default_sample_points(step: float = 0.01) -> tuple[float, ...]:
    count = round(1.0 / step)
    return tuple(i * step for i in range(count + 1))


def build_schedule(
    g: RoadGraph,
    scores: EdgeScoreTable | None,
    strategy: str,
    seed: int = 0,
) -> AttackSchedule:
    """Full removal order for one strategy.

    Targeted strategies sort by score (curvature ascending, betweenness
    descending) with lexicographic (u,v) tie-breaks; the random strategy
    is a seeded uniform shuffle of the sorted edge list.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    edges = sorted(g.edges)
    if strategy == "random":
        rng = random.Random(seed)
        rng.shuffle(edges)
        return AttackSchedule(strategy=strategy, order=tuple(edges), seed=seed)
    if scores is None:
        raise ValueError(f"strategy {strategy!r} requires a score table")
    if not scores.matches(g):
        raise ValueError("score table does not cover the graph's edge set")
    if strategy == "curvature-ascending":
        edges.sort(key=lambda e: (scores.scores[e], e))
    else:
        edges.sort(key=lambda e: (-scores.scores[e], e))
    return AttackSchedule(strategy=strategy, order=tuple(edges))


def _removal_count(fraction: float, edge_count: int) -> int:
    # floor, nudged so fractions like 0.29*100 do not round down spuriously
    return math.floor(fraction * edge_count + 1e-9)


def _check_sample_points(sample_points) -> tuple[float, ...]:
    pts = tuple(sample_points)
    if not pts or pts[0] != 0.0:
        raise ValueError("sample points must start at 0")
    if any(b <= a for a, b in zip(pts, pts[1:])):
        raise ValueError("sample points must be strictly increasing")
    if pts[-1] > 1.0:
        raise ValueError("sample points must lie in [0, 1]")
    return pts


def _tvr_trajectory(g: RoadGraph, order, sample_points) -> list[float]:
    n = g.node_count
    removed: set[Edge] = set()
    taken = 0
    out = []
    for f in sample_points:
        k = _removal_count(f, g.edge_count)
        while taken < k:
            removed.add(order[taken])
            taken += 1
        out.append(largest_connected_component(g, removed=frozenset(removed)) / n)
    return out


def run_attack(g: RoadGraph, schedule: AttackSchedule, sample_points=None) -> TVRCurve:
    """Single deterministic run of one schedule, sampled at the given fractions."""
    pts = _check_sample_points(sample_points if sample_points is not None else default_sample_points())
    if set(schedule.order) != set(g.edges) or len(schedule.order) != g.edge_count:
        raise ValueError("schedule is not a permutation of the graph's edges")
    tvr = _tvr_trajectory(g, schedule.order, pts)
    return TVRCurve(
        strategy=schedule.strategy,
        samples=tuple(TVRSample(f, t, 0.0, 1) for f, t in zip(pts, tvr)),
    )


def run_random_attack(
    g: RoadGraph,
    trials: int = 10,
    seed: int = 0,
    sample_points=None,
) -> TVRCurve:
    """Average TVR over independent seeded shuffles (seeds seed, seed+1, ...)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    pts = _check_sample_points(sample_points if sample_points is not None else default_sample_points())
    runs = []
    for t in range(trials):
        schedule = build_schedule(g, None, "random", seed=seed + t)
        runs.append(_tvr_trajectory(g, schedule.order, pts))
    samples = []
    for i, f in enumerate(pts):
        vals = [r[i] for r in runs]
        mean = sum(vals) / trials
        if trials > 1:
            var = sum((v - mean) ** 2 for v in vals) / (trials - 1)
            std = math.sqrt(var)
        else:
            std = 0.0
        samples.append(TVRSample(f, mean, std, trials))
    return TVRCurve(strategy="random", samples=tuple(samples))


def write_tvr_csv(curves, path) -> None:
    """One CSV for any number of strategies, one row per sample point."""
    import csv

    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["strategy", "fraction_removed", "tvr_mean", "tvr_std", "trials"])
        for curve in curves:
            for s in curve.samples:
                writer.writerow([
                    curve.strategy,
                    format(s.fraction_removed, ".9g"),
                    format(s.tvr_mean, ".9g"),
                    format(s.tvr_std, ".9g"),
                    s.trials,
                ])


class AttackSimulator(BaseEstimator):
    """Estimator wrapper: fit(graph, y=score_table) runs one attack strategy.

    For targeted strategies pass the matching score table as y. After fit,
    `curve_` holds the TVRCurve.
    """

    def __init__(self, strategy: str = "random", seed: int = 42, trials: int = 10, sample_step: float = 0.01):
        self.strategy = strategy
        self.seed = seed
        self.trials = trials
        self.sample_step = sample_step

    def fit(self, G: RoadGraph, y: EdgeScoreTable | None = None):
        pts = default_sample_points(self.sample_step)
        if self.strategy == "random":
            self.curve_ = run_random_attack(G, trials=self.trials, seed=self.seed, sample_points=pts)
        else:
            schedule = build_schedule(G, y, self.strategy, seed=self.seed)
            self.curve_ = run_attack(G, schedule, sample_points=pts)
        return self
