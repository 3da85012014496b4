from __future__ import annotations

import random

import pytest

from helpers import brute_force_min_vertex_cover, random_graph
from simdel.graph import Graph, edge
from simdel.instance import ProblemKind, make_instance
from simdel.preprocess import preprocess_es
from simdel.vertex_cover import VcInstance, approx_vc_2, build_conflict_graph, min_vc, solve_vc


def _conflict_graph_of(graph, targets, budget=3):
    inst = make_instance(graph, targets, None, budget, ProblemKind.ELIMINATING)
    return build_conflict_graph(inst)


def test_conflict_graph_single_wedge():
    vc = _conflict_graph_of(Graph(3, [(0, 1), (1, 2)]), [(0, 2)])
    assert vc.graph.n == 2 and vc.graph.m == 1
    assert vc.edge_of_vertex == ((0, 1), (1, 2))
    assert vc.budget == 3


def test_conflict_graph_two_disjoint_wedges():
    g = Graph(4, [(0, 1), (1, 2), (0, 3), (3, 2)])
    vc = _conflict_graph_of(g, [(0, 2)])
    assert vc.graph.n == 4 and vc.graph.m == 2
    degrees = sorted(vc.graph.degree(v) for v in range(4))
    assert degrees == [1, 1, 1, 1]


def test_conflict_graph_no_targets_is_edgeless():
    vc = _conflict_graph_of(Graph(3, [(0, 1), (1, 2)]), [])
    assert vc.graph.n == 2 and vc.graph.m == 0


def test_conflict_graph_rejects_unpreprocessed():
    g = Graph(3, [(0, 1), (1, 2)])
    inst = make_instance(g, [(0, 2)], [(0, 1)], 1, ProblemKind.ELIMINATING)
    with pytest.raises(ValueError, match="preprocess"):
        build_conflict_graph(inst)
    out = preprocess_es(inst)
    assert out.solvable
    build_conflict_graph(out.instance)  # fine after preprocessing


def test_min_vc_triangle():
    result = min_vc(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert result.optimal_size == 2


def test_min_vc_star():
    result = min_vc(Graph(5, [(0, i) for i in range(1, 5)]))
    assert result.cover == {0} and result.optimal_size == 1


def test_min_vc_matches_brute_force():
    rng = random.Random(47)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 10), rng.randint(0, 18))
        assert min_vc(g).optimal_size == brute_force_min_vertex_cover(g)


def test_decide_consistent_with_minimize():
    rng = random.Random(53)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10), rng.randint(0, 16))
        best = min_vc(g).optimal_size
        edges = tuple(g.sorted_edges())
        for budget in (0, 1, best - 1, best, best + 1, g.n):
            if budget < 0:
                continue
            result = solve_vc(VcInstance(g, budget, edges))
            assert (result.cover is not None) == (best <= budget)
            if result.cover is not None:
                assert len(result.cover) <= budget


def test_decide_counts_nodes():
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    result = solve_vc(VcInstance(g, 3, tuple(g.sorted_edges())))
    assert result.cover is not None and result.nodes_explored >= 1


def test_approx_on_single_edge_conflict_graph():
    cover = approx_vc_2(Graph(2, [(0, 1)]))
    assert cover == {0, 1}


def test_approx_on_edgeless_graph():
    assert approx_vc_2(Graph(4, [])) == frozenset()


def test_approx_within_factor_two():
    rng = random.Random(59)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 10), rng.randint(0, 18))
        cover = approx_vc_2(g)
        for u, v in g.edges:
            assert u in cover or v in cover
        best = min_vc(g).optimal_size
        if best:
            assert len(cover) <= 2 * best


def test_kernel_rules_preserve_optimum():
    # shapes that specifically hit degree-1 chains and the high-degree rule
    fixtures = [
        Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),  # path: degree-1 on both ends
        Graph(7, [(0, i) for i in range(1, 7)]),  # star: high-degree center at small budgets
        Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]),
    ]
    for g in fixtures:
        assert min_vc(g).optimal_size == brute_force_min_vertex_cover(g)
