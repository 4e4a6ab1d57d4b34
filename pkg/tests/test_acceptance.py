"""Acceptance gate: one test per criterion, each printing a pass line.

Expected values marked as derived were computed with the independent
brute-force oracles in oracles.py.
"""

import itertools
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from roadcurv.attack import build_schedule, default_sample_points, run_attack, run_random_attack
from roadcurv.benchmark import generate_benchmark
from roadcurv.centrality import edge_betweenness, edge_betweenness_exact
from roadcurv.cli import main as cli_main
from roadcurv.curvature import curvature_table, edge_curvature
from roadcurv.graph import from_edges, save_graph
from roadcurv.report import correlate
from nets import complete, cycle, lattice, star, tree_bridge, two_triangles_bridge
from oracles import brute_wasserstein_on_graph, pairwise_distance_sum, random_connected_graph

TOL = 1e-9


def passed(criterion, detail):
    print(f"[PASS] criterion {criterion}: {detail}")


def test_criterion_1_transport_oracle_equivalence():
    start = time.monotonic()
    rng = random.Random(1001)
    checked = 0
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(4, 12), rng.randint(0, 6), max_degree=4)
        tab = curvature_table(g)
        for (u, v), kappa in tab.scores.items():
            expected = 1.0 - brute_wasserstein_on_graph(g, u, v)
            assert kappa == pytest.approx(float(expected), abs=TOL)
            checked += 1
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    passed(1, f"{checked} edges on 200 random graphs match the exhaustive-search oracle in {elapsed:.1f}s")


def test_criterion_2_closed_form_curvatures():
    for n in range(3, 8):
        g = complete(n)
        for e in g.edges:
            assert edge_curvature(g, e).kappa == pytest.approx((n - 2) / (n - 1), abs=TOL)
    for n in range(4, 11):
        g = cycle(n)
        for e in g.edges:
            assert edge_curvature(g, e).kappa == pytest.approx(0.0, abs=TOL)
    assert edge_curvature(tree_bridge(), ("X", "Y")).kappa == pytest.approx(-2 / 3, abs=TOL)
    g = lattice(7, 7)
    assert edge_curvature(g, ("03-03", "03-04")).kappa == pytest.approx(0.0, abs=TOL)
    passed(2, "K_n, C_n, tree-bridge and lattice-interior curvatures match closed forms")


def test_criterion_3_bounds_and_symmetry():
    families = [complete(n) for n in range(3, 7)]
    families += [cycle(n) for n in range(4, 9)]
    families += [star(k) for k in (3, 5, 8)]
    families += [lattice(5, 5)]
    for g in families:
        tab = curvature_table(g)
        assert all(-2.0 - TOL <= v <= 1.0 + TOL for v in tab.scores.values())
    for g in [complete(5), cycle(8), star(6)]:
        vals = list(curvature_table(g).scores.values())
        assert max(vals) - min(vals) < TOL
    lat = curvature_table(lattice(6, 6)).scores
    # the four corner-adjacent orbits of the lattice are symmetric
    assert abs(lat[("00-00", "00-01")] - lat[("00-00", "01-00")]) < TOL
    assert abs(lat[("00-04", "00-05")] - lat[("04-00", "05-00")]) < TOL
    passed(3, "all curvatures within [-2, 1]; automorphic edges agree within 1e-9")


def test_criterion_4_betweenness_conservation():
    rng = random.Random(4004)
    for _ in range(100):
        g = random_connected_graph(rng, rng.randint(4, 60), rng.randint(0, 30))
        total = sum(edge_betweenness_exact(g).values())
        assert total == Fraction(pairwise_distance_sum(g))
    passed(4, "edge-betweenness sum equals the pairwise hop-distance sum exactly on 100 graphs")


def test_criterion_5_tvr_mechanics():
    rng = random.Random(55)
    for _ in range(5):
        g = random_connected_graph(rng, rng.randint(6, 30), rng.randint(0, 15))
        sched = build_schedule(g, None, "random", seed=rng.randrange(2 ** 32))
        curve = run_attack(g, sched, default_sample_points(0.1))
        values = [s.tvr_mean for s in curve.samples]
        assert values[0] == 1.0
        assert values[-1] == pytest.approx(1 / g.node_count, abs=TOL)
        assert all(a >= b for a, b in zip(values, values[1:]))

    g = two_triangles_bridge()
    scores = curvature_table(g)
    assert min(scores.scores, key=scores.scores.get) == ("a1", "b1")  # the bridge
    sched = build_schedule(g, scores, "curvature-ascending")
    curve = run_attack(g, sched, (0.0, 1 / 7))
    assert curve.samples[1].tvr_mean == pytest.approx(0.5, abs=TOL)
    passed(5, "TVR is 1 at f=0, 1/|V| at f=1, monotone per trial; bridge removal halves the two-K3 graph")


def test_criterion_6_attack_dominance_on_grid_radial():
    g = generate_benchmark("grid-radial", 15)
    pts = default_sample_points(0.01)
    targeted = run_attack(g, build_schedule(g, curvature_table(g), "curvature-ascending"), pts)
    rand = run_random_attack(g, trials=10, seed=42, sample_points=pts)
    i = pts.index(0.2)
    margin = rand.samples[i].tvr_mean - targeted.samples[i].tvr_mean
    assert margin >= 0.15
    passed(6, f"curvature attack beats random at f=0.2 by {margin:.3f} (>= 0.15)")


def test_criterion_7_indicator_divergence():
    flags = []
    for kind in ("grid-radial", "grid-star"):
        g = generate_benchmark(kind, 15)
        kappa = curvature_table(g)
        bt = edge_betweenness(g)
        rep = correlate(kappa, bt)
        edges = sorted(kappa.scores)
        brute = np.corrcoef(
            [kappa.scores[e] for e in edges], [bt.scores[e] for e in edges]
        )[0, 1]
        assert rep.pearson_r == pytest.approx(brute, abs=1e-12)
        flags.append((kind, rep.pearson_r, abs(rep.pearson_r) < 0.1))
    detail = "; ".join(f"{k}: r={r:+.4f}, |r|<0.1={flag}" for k, r, flag in flags)
    passed(7, f"Pearson r matches definitional brute force within 1e-12 ({detail})")


def test_criterion_8_cli_determinism(tmp_path):
    g = generate_benchmark("grid-star", 4)
    nf, ef = tmp_path / "n.csv", tmp_path / "e.csv"
    save_graph(g, nf, ef)
    outputs = {
        "stats": ["stats.json"],
        "curvature": ["curvature.csv", "curvature_histogram.csv"],
        "betweenness": ["betweenness.csv"],
        "attack": ["tvr_curves.csv"],
        "correlate": ["correlation.json"],
        "export-geojson": ["network.geojson"],
    }
    for command, files in outputs.items():
        runs = []
        for tag in ("a", "b"):
            out = tmp_path / f"{command}-{tag}"
            args = [command, "--nodes", str(nf), "--edges", str(ef), "--out-dir", str(out)]
            if command == "attack":
                args += ["--grid-step", "0.1", "--trials", "3"]
            assert cli_main(args) == 0
            manifest = (out / "manifest.json").read_bytes().replace(str(out).encode(), b"OUT")
            runs.append([manifest] + [(out / f).read_bytes() for f in files])
        assert runs[0] == runs[1]
    for tag in ("a", "b"):
        out = tmp_path / f"gen-{tag}"
        assert cli_main(["gen-benchmark", "--kind", "grid-radial", "--size", "4", "--out-dir", str(out)]) == 0
    assert (tmp_path / "gen-a" / "nodes.csv").read_bytes() == (tmp_path / "gen-b" / "nodes.csv").read_bytes()
    assert (tmp_path / "gen-a" / "edges.csv").read_bytes() == (tmp_path / "gen-b" / "edges.csv").read_bytes()
    passed(8, "every command rerun with identical config produced byte-identical outputs")


def test_criterion_9_desk_scale_performance():
    g = generate_benchmark("grid", 71)  # 9940 edges
    assert g.edge_count >= 10_000 - 100
    start = time.monotonic()
    tab = curvature_table(g)
    elapsed = time.monotonic() - start
    assert len(tab) == g.edge_count
    assert elapsed < 120.0
    passed(9, f"curvature table for a {g.edge_count}-edge lattice in {elapsed:.1f}s (< 120s)")
