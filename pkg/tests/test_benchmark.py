import pytest

from roadcurv.benchmark import KINDS, generate_benchmark, trunk_edges
from roadcurv.curvature import curvature_table
from roadcurv.graph import largest_connected_component


def test_grid_counts():
    g = generate_benchmark("grid", 3)
    assert g.node_count == 9
    assert g.edge_count == 12


def test_tree_counts():
    g = generate_benchmark("tree", 40, seed=5)
    assert g.node_count == 40
    assert g.edge_count == 39


def test_all_kinds_connected_with_coords():
    for kind in KINDS:
        g = generate_benchmark(kind, 5, seed=1)
        assert largest_connected_component(g) == g.node_count
        assert set(g.coords) == set(g.nodes)


def test_deterministic():
    for kind in KINDS:
        assert generate_benchmark(kind, 4, seed=9) == generate_benchmark(kind, 4, seed=9)


def test_tree_seed_changes_topology():
    assert generate_benchmark("tree", 30, seed=1) != generate_benchmark("tree", 30, seed=2)


def test_unknown_kind():
    with pytest.raises(ValueError, match="unknown benchmark kind"):
        generate_benchmark("moebius", 5)


def test_size_validation():
    with pytest.raises(ValueError):
        generate_benchmark("grid", 2)


def test_sectored_trunks_present():
    g = generate_benchmark("grid-radial", 4)
    for e in trunk_edges("grid-radial", 4):
        assert e in g.edge_set
    star = generate_benchmark("grid-star", 4)
    assert len(trunk_edges("grid-star", 4)) == 4
    assert all(e in star.edge_set for e in trunk_edges("grid-star", 4))


def test_grid_star_trunks_in_lowest_curvature_decile():
    size = 15  # default benchmark size
    g = generate_benchmark("grid-star", size)
    tab = curvature_table(g)
    ordered = sorted(tab.scores, key=lambda e: (tab.scores[e], e))
    decile = ordered[: g.edge_count // 10]
    assert set(trunk_edges("grid-star", size)) <= set(decile)
