import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from scripts.generators.generators import GenSpec, generate
from scripts.geometry.boxes import boxes_intersect, make_box, normalize
from scripts.graphs.graph_core import Coloring, degeneracy_coloring, intersection_graph, underlying


def test_intersection_graph_small():
    boxes = normalize([
        make_box(0, [(0, 4), (0, 4)]),
        make_box(1, [(1, 2), (1, 2)]),
        make_box(2, [(5, 6), (0, 4)]),
    ])
    g = intersection_graph(boxes)
    assert sorted(g.nodes) == [0, 1, 2]
    assert sorted(map(sorted, g.edges())) == [[0, 1]]


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 15), st.integers(1, 3), st.integers(0, 2 ** 32))
def test_intersection_graph_matches_direct_comparison(n, d, seed):
    boxes = generate(GenSpec(n=n, d=d, seed=seed))
    g = intersection_graph(boxes)
    for i, a in enumerate(boxes):
        for b in boxes[i + 1:]:
            assert g.has_edge(a.id, b.id) == boxes_intersect(a, b)


def test_coloring_conflicts_and_properness():
    g = nx.path_graph(3)
    good = Coloring({0: 0, 1: 1, 2: 0}, 2)
    bad = Coloring({0: 0, 1: 0, 2: 1}, 2)
    assert good.is_proper(g)
    assert bad.conflicts(g) == [(0, 1)]
    assert not bad.is_proper(g)
    assert not Coloring({0: 0, 1: 1}, 2).is_proper(g)
    assert not Coloring({0: 0, 1: 5, 2: 0}, 2).is_proper(g)


def test_degeneracy_coloring_bound():
    cycle = nx.cycle_graph(6)
    coloring = degeneracy_coloring(cycle, 3)
    assert coloring.is_proper(cycle)
    assert coloring.palette_size <= 3
    assert degeneracy_coloring(cycle, 2) is None
    assert degeneracy_coloring(nx.Graph(), 1) == Coloring({}, 0)


def test_degeneracy_coloring_accepts_digraph():
    dg = nx.DiGraph([(0, 1), (1, 2), (0, 2)])
    coloring = degeneracy_coloring(dg, 3)
    assert coloring.is_proper(underlying(dg))


@pytest.mark.parametrize("seed", range(10))
def test_degeneracy_coloring_random(seed):
    g = nx.gnp_random_graph(20, 0.3, seed=seed)
    bound = max(nx.core_number(g).values()) + 1
    coloring = degeneracy_coloring(g, bound)
    assert coloring.is_proper(g)
    assert coloring.palette_size <= bound
