"""Road-network topology vulnerability analysis via discrete Ricci curvature."""

from .attack import (
    AttackSchedule,
    AttackSimulator,
    TVRCurve,
    TVRSample,
    build_schedule,
    run_attack,
    run_random_attack,
)
from .benchmark import generate_benchmark
from .centrality import EdgeBetweenness, edge_betweenness, edge_betweenness_exact
from .curvature import EdgeCurvature, RicciCurvature, curvature_table, edge_curvature, neighbor_measure
from .graph import (
    GraphFormatError,
    NetworkStats,
    RoadGraph,
    from_edges,
    largest_connected_component,
    load_graph,
    load_graph_with_report,
    network_stats,
    save_graph,
)
from .report import CorrelationReport, Histogram, correlate, export_geojson, histogram
from .scores import EdgeScoreTable
from .transport import DiscreteMeasure, TransportPlan, UnreachableError, hop_cost, wasserstein

__version__ = "0.1.0"

__all__ = [
    "AttackSchedule",
    "AttackSimulator",
    "CorrelationReport",
    "DiscreteMeasure",
    "EdgeBetweenness",
    "EdgeCurvature",
    "EdgeScoreTable",
    "GraphFormatError",
    "Histogram",
    "NetworkStats",
    "RicciCurvature",
    "RoadGraph",
    "TVRCurve",
    "TVRSample",
    "TransportPlan",
    "UnreachableError",
    "build_schedule",
    "correlate",
    "curvature_table",
    "edge_betweenness",
    "edge_betweenness_exact",
    "edge_curvature",
    "export_geojson",
    "from_edges",
    "generate_benchmark",
    "histogram",
    "hop_cost",
    "largest_connected_component",
    "load_graph",
    "load_graph_with_report",
    "neighbor_measure",
    "network_stats",
    "run_attack",
    "run_random_attack",
    "save_graph",
    "wasserstein",
]
