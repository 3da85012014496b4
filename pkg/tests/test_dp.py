from __future__ import annotations

import random

import pytest

from helpers import random_graph_max_degree, random_targets, wedge_instance
from simdel.dp import solve_es_dp, solve_rts_dp
from simdel.exact import solve_es
from simdel.graph import Graph
from simdel.instance import ProblemKind, check_solution, make_instance
from simdel.oracle import oracle_decide


def _star_instance(budget, threshold):
    # center 1 with leaves 0, 2, 3; deleting (1,0) kills both conflicts
    g = Graph(4, [(1, 0), (1, 2), (1, 3)])
    return make_instance(g, [(0, 2), (0, 3)], None, budget, ProblemKind.REDUCING_TOTAL, threshold)


def test_star_one_deletion_covers_both_pairs():
    sol = solve_rts_dp(_star_instance(budget=1, threshold=0))
    assert sol.feasible and len(sol.deleted) == 1
    assert oracle_decide(_star_instance(budget=1, threshold=0)).feasible


def test_star_no_budget_misses_threshold():
    inst = _star_instance(budget=0, threshold=1)
    assert not solve_rts_dp(inst).feasible
    assert not oracle_decide(inst).feasible


def test_wedge_lift_decisions():
    assert solve_es_dp(wedge_instance(budget=1)).feasible
    assert not solve_es_dp(wedge_instance(budget=0)).feasible


def test_rejects_wrong_kinds():
    with pytest.raises(ValueError):
        solve_rts_dp(wedge_instance())
    rts = _star_instance(1, 0)
    with pytest.raises(ValueError):
        solve_es_dp(rts)


def _random_rts_instance(rng):
    n = rng.randint(3, 8)
    g = random_graph_max_degree(rng, n, 4)
    targets = random_targets(rng, n, rng.randint(1, 3))
    candidates = None if rng.random() < 0.3 else [e for e in g.sorted_edges() if rng.random() < 0.7]
    return make_instance(
        g, targets, candidates, rng.randint(0, 4), ProblemKind.REDUCING_TOTAL, rng.randint(0, 3)
    )


def test_oracle_certification_bounded_degree():
    rng = random.Random(107)
    for _ in range(100):
        inst = _random_rts_instance(rng)
        sol = solve_rts_dp(inst)
        assert sol.feasible == oracle_decide(inst).feasible
        if sol.feasible:
            checked = check_solution(inst, sol.deleted)
            assert checked.feasible


def test_agreement_with_vertex_cover_pipeline():
    rng = random.Random(109)
    for _ in range(100):
        inst = _random_rts_instance(rng)
        es = make_instance(
            inst.graph, inst.targets, inst.candidates, inst.budget, ProblemKind.ELIMINATING
        )
        assert solve_es_dp(es).feasible == solve_es(es).feasible


def test_decision_monotone_in_budget_and_threshold():
    rng = random.Random(113)
    for _ in range(20):
        base = _random_rts_instance(rng)
        results = {}
        for k in range(0, 4):
            for t in range(0, 4):
                inst = make_instance(
                    base.graph, base.targets, base.candidates, k, ProblemKind.REDUCING_TOTAL, t
                )
                results[(k, t)] = solve_rts_dp(inst).feasible
        for k in range(0, 3):
            for t in range(0, 3):
                assert not results[(k, t)] or results[(k + 1, t)]
                assert not results[(k, t)] or results[(k, t + 1)]


def test_witness_respects_budget_and_threshold():
    rng = random.Random(127)
    found = 0
    for _ in range(60):
        inst = _random_rts_instance(rng)
        sol = solve_rts_dp(inst)
        if not sol.feasible:
            continue
        assert len(sol.deleted) <= inst.budget
        assert sum(sol.residual_per_pair.values()) <= inst.threshold
        found += 1
    assert found >= 10
