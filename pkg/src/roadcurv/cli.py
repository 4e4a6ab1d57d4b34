"""Command-line front end: one subcommand per analysis stage, all outputs
written atomically into --out-dir together with a manifest.json echoing
the effective configuration."""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import tempfile
from pathlib import Path

from . import attack, benchmark, report
from .centrality import edge_betweenness
from .curvature import curvature_table
from .graph import load_graph, network_stats, save_graph
from .scores import write_score_csv

STRATEGY_LABELS = {
    "random": "random",
    "curvature": "curvature-ascending",
    "betweenness": "betweenness-descending",
}


def _atomic(path: Path, write_fn) -> None:
    """Run write_fn against a temp file, then rename over the target."""
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    os.close(fd)
    try:
        write_fn(tmp)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_text(path: Path, text: str) -> None:
    _atomic(path, lambda tmp: Path(tmp).write_text(text, encoding="utf-8"))


def _write_manifest(args, out_dir: Path) -> None:
    config = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    text = json.dumps({"command": args.command, "config": config}, indent=2, sort_keys=True) + "\n"
    _write_text(out_dir / "manifest.json", text)


def _load(args):
    return load_graph(args.nodes, args.edges)


def cmd_stats(args, out_dir: Path) -> None:
    stats = network_stats(_load(args))
    _write_text(out_dir / "stats.json", json.dumps(dataclasses.asdict(stats), indent=2) + "\n")


def cmd_curvature(args, out_dir: Path) -> None:
    table = curvature_table(_load(args))
    _atomic(out_dir / "curvature.csv", lambda tmp: write_score_csv(table, tmp))
    hist = report.histogram(table, bins=args.bins)
    _atomic(out_dir / "curvature_histogram.csv", lambda tmp: report.write_histogram_csv(hist, tmp))


def cmd_betweenness(args, out_dir: Path) -> None:
    table = edge_betweenness(_load(args), normalized=args.normalized)
    _atomic(out_dir / "betweenness.csv", lambda tmp: write_score_csv(table, tmp))


def cmd_attack(args, out_dir: Path) -> None:
    g = _load(args)
    names = [s.strip() for s in args.strategies.split(",") if s.strip()]
    unknown = [s for s in names if s not in STRATEGY_LABELS]
    if unknown:
        raise ValueError(f"unknown strategies: {unknown} (choose from {sorted(STRATEGY_LABELS)})")
    pts = attack.default_sample_points(args.grid_step)
    curves = []
    for name in names:
        if name == "random":
            curves.append(attack.run_random_attack(g, trials=args.trials, seed=args.seed, sample_points=pts))
        else:
            table = curvature_table(g) if name == "curvature" else edge_betweenness(g)
            schedule = attack.build_schedule(g, table, STRATEGY_LABELS[name])
            curves.append(attack.run_attack(g, schedule, sample_points=pts))
    _atomic(out_dir / "tvr_curves.csv", lambda tmp: attack.write_tvr_csv(curves, tmp))


def cmd_correlate(args, out_dir: Path) -> None:
    g = _load(args)
    rep = report.correlate(curvature_table(g), edge_betweenness(g))
    text = report.correlation_to_json(rep, extra={"abs_r_below_0.1": abs(rep.pearson_r) < 0.1})
    _write_text(out_dir / "correlation.json", text)


def cmd_export_geojson(args, out_dir: Path) -> None:
    g = _load(args)
    doc = report.export_geojson(g, [curvature_table(g), edge_betweenness(g)])
    _write_text(out_dir / "network.geojson", json.dumps(doc, indent=2) + "\n")


def cmd_gen_benchmark(args, out_dir: Path) -> None:
    g = benchmark.generate_benchmark(args.kind, args.size, seed=args.seed)
    tmp_nodes = out_dir / "nodes.csv.tmp"
    tmp_edges = out_dir / "edges.csv.tmp"
    try:
        save_graph(g, tmp_nodes, tmp_edges)
        os.replace(tmp_nodes, out_dir / "nodes.csv")
        os.replace(tmp_edges, out_dir / "edges.csv")
    finally:
        for tmp in (tmp_nodes, tmp_edges):
            if tmp.exists():
                tmp.unlink()


def _add_io_args(p):
    p.add_argument("--nodes", required=True, help="node CSV file (header id,x,y)")
    p.add_argument("--edges", required=True, help="edge CSV file (header u,v)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roadcurv",
        description="Road-network topology vulnerability analysis via Ricci curvature",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        p.add_argument("--out-dir", default=".", help="output directory")
        p.set_defaults(func=func)
        return p

    p = add("stats", cmd_stats, "global network statistics as JSON")
    _add_io_args(p)

    p = add("curvature", cmd_curvature, "per-edge curvature CSV plus histogram CSV")
    _add_io_args(p)
    p.add_argument("--bins", type=int, default=40, help="histogram bin count")

    p = add("betweenness", cmd_betweenness, "per-edge betweenness CSV")
    _add_io_args(p)
    p.add_argument("--normalized", action="store_true", help="divide scores by n(n-1)/2")

    p = add("attack", cmd_attack, "TVR degradation curves for selected strategies")
    _add_io_args(p)
    p.add_argument("--strategies", default="random,curvature,betweenness",
                   help="comma-separated subset of random,curvature,betweenness")
    p.add_argument("--seed", type=int, default=42, help="base RNG seed for random attacks")
    p.add_argument("--trials", type=int, default=10, help="random-attack trials to average")
    p.add_argument("--grid-step", type=float, default=0.01, help="spacing of removal-fraction samples")

    p = add("correlate", cmd_correlate, "Pearson correlation between curvature and betweenness")
    _add_io_args(p)

    p = add("export-geojson", cmd_export_geojson, "GeoJSON with curvature and betweenness per edge")
    _add_io_args(p)

    p = add("gen-benchmark", cmd_gen_benchmark, "write a synthetic benchmark network")
    p.add_argument("--kind", required=True, choices=benchmark.KINDS, help="benchmark family")
    p.add_argument("--size", type=int, default=15, help="lattice side length / tree node count")
    p.add_argument("--seed", type=int, default=42, help="seed for randomized kinds")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    try:
        args.func(args, out_dir)
        _write_manifest(args, out_dir)
    except Exception as exc:
        print(f"roadcurv {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
