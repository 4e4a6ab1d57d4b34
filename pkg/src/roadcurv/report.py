"""Score distribution histograms, curvature/betweenness correlation, and
GeoJSON export for map visualization."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass

from .graph import RoadGraph
from .scores import EdgeScoreTable

CURVATURE_RANGE = (-2.0, 1.0)
DEFAULT_BINS = 40


@dataclass(frozen=True)
class Histogram:
    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]
    frequencies: tuple[float, ...]
    out_of_range: int


@dataclass(frozen=True)
class CorrelationReport:
    pearson_r: float
    n: int
    mean_x: float
    mean_y: float
    std_x: float
    std_y: float


def histogram(scores: EdgeScoreTable, bins: int = DEFAULT_BINS, value_range=CURVATURE_RANGE) -> Histogram:
    """Uniform-width binning; values at the upper bound fall in the last
    bin, values outside the range are clamped into the end bins."""
    if not scores.scores:
        raise ValueError("cannot histogram an empty score table")
    if bins < 1:
        raise ValueError("bins must be >= 1")
    lo, hi = value_range
    if not lo < hi:
        raise ValueError("range must satisfy lo < hi")
    width = (hi - lo) / bins
    counts = [0] * bins
    out_of_range = 0
    for v in scores.scores.values():
        if v < lo or v > hi:
            out_of_range += 1
        idx = int((v - lo) / width)
        idx = min(max(idx, 0), bins - 1)
        counts[idx] += 1
    total = len(scores.scores)
    return Histogram(
        bin_edges=tuple(lo + i * width for i in range(bins)) + (hi,),
        counts=tuple(counts),
        frequencies=tuple(c / total for c in counts),
        out_of_range=out_of_range,
    )


def correlate(a: EdgeScoreTable, b: EdgeScoreTable) -> CorrelationReport:
    """Sample Pearson correlation over edge-aligned score pairs."""
    if set(a.scores) != set(b.scores):
        raise ValueError("score tables cover different edge sets")
    edges = sorted(a.scores)
    n = len(edges)
    if n < 3:
        raise ValueError("correlation requires at least 3 edges")
    xs = [a.scores[e] for e in edges]
    ys = [b.scores[e] for e in edges]
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    sxx = sum((x - mean_x) ** 2 for x in xs)
    syy = sum((y - mean_y) ** 2 for y in ys)
    if sxx == 0.0:
        raise ValueError(f"zero variance in {a.kind} scores")
    if syy == 0.0:
        raise ValueError(f"zero variance in {b.kind} scores")
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    return CorrelationReport(
        pearson_r=sxy / math.sqrt(sxx * syy),
        n=n,
        mean_x=mean_x,
        mean_y=mean_y,
        std_x=math.sqrt(sxx / (n - 1)),
        std_y=math.sqrt(syy / (n - 1)),
    )


def export_geojson(g: RoadGraph, tables) -> dict:
    """RFC 7946 FeatureCollection: one LineString per edge, carrying the
    endpoint ids plus one numeric property per supplied score table."""
    missing = [n for n in g.nodes if n not in g.coords]
    if missing:
        raise ValueError(f"nodes without coordinates: {missing}")
    tables = list(tables)
    for t in tables:
        if not t.matches(g):
            raise ValueError(f"{t.kind} table does not cover the graph's edge set")
    features = []
    for u, v in g.edges:
        props = {"u": u, "v": v}
        for t in tables:
            props[t.value_column] = t.scores[(u, v)]
        features.append({
            "type": "Feature",
            "geometry": {
                "type": "LineString",
                "coordinates": [list(g.coords[u]), list(g.coords[v])],
            },
            "properties": props,
        })
    return {"type": "FeatureCollection", "features": features}


def write_histogram_csv(hist: Histogram, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["bin_lo", "bin_hi", "count", "frequency"])
        for i, count in enumerate(hist.counts):
            writer.writerow([
                format(hist.bin_edges[i], ".9g"),
                format(hist.bin_edges[i + 1], ".9g"),
                count,
                format(hist.frequencies[i], ".9g"),
            ])


def correlation_to_json(report: CorrelationReport, extra: dict | None = None) -> str:
    payload = {
        "pearson_r": report.pearson_r,
        "n": report.n,
        "mean_x": report.mean_x,
        "mean_y": report.mean_y,
        "std_x": report.std_x,
        "std_y": report.std_y,
    }
    if extra:
        payload.update(extra)
    return json.dumps(payload, indent=2) + "\n"
