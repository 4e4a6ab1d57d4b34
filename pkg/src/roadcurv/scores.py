"""Per-edge score tables shared by the curvature and centrality rankers."""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .graph import Edge, RoadGraph


@dataclass(frozen=True)
class EdgeScoreTable:
    """One real score per canonical edge, labelled by what the score is."""

    scores: dict[Edge, float]
    kind: str  # "curvature" | "betweenness"

    def __post_init__(self):
        if self.kind not in ("curvature", "betweenness"):
            raise ValueError(f"unknown score kind {self.kind!r}")

    def __len__(self) -> int:
        return len(self.scores)

    def matches(self, g: RoadGraph) -> bool:
        return set(self.scores) == set(g.edges)

    @property
    def value_column(self) -> str:
        return "kappa" if self.kind == "curvature" else "betweenness"


def write_score_csv(table: EdgeScoreTable, path) -> None:
    """CSV export sorted by (u,v), values with 9 significant digits."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["u", "v", table.value_column])
        for (u, v) in sorted(table.scores):
            writer.writerow([u, v, format(table.scores[(u, v)], ".9g")])


def read_score_csv(path, kind: str) -> EdgeScoreTable:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        next(reader)  # header
        scores = {(u, v): float(s) for u, v, s in reader}
    return EdgeScoreTable(scores=scores, kind=kind)
