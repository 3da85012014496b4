from __future__ import annotations

import random

import pytest

from helpers import double_wedge_instance, random_graph, random_instance, wedge_instance
from simdel.exact import (
    SolveMode,
    SpecialCaseInput,
    all_pairs_instance,
    approx_es,
    solve_es,
    solve_es_all_pairs,
)
from simdel.graph import Graph, edge
from simdel.instance import ProblemKind, check_solution, make_instance
from simdel.oracle import oracle_decide, oracle_optimum


def test_wedge_decide_feasible():
    sol = solve_es(wedge_instance(budget=1))
    assert sol.feasible and len(sol.deleted) == 1


def test_wedge_zero_budget_infeasible():
    assert not solve_es(wedge_instance(budget=0)).feasible


def test_double_wedge_minimize():
    sol = solve_es(double_wedge_instance(), SolveMode.MINIMIZE)
    assert len(sol.deleted) == 2 == oracle_optimum(double_wedge_instance()).optimum


def test_rejects_threshold_instances():
    rts = make_instance(Graph(3, [(0, 1), (1, 2)]), [(0, 2)], None, 1, ProblemKind.REDUCING_TOTAL, threshold=0)
    with pytest.raises(ValueError):
        solve_es(rts)


def test_oracle_equivalence_suite():
    rng = random.Random(71)
    for _ in range(200):
        inst = random_instance(rng, ProblemKind.ELIMINATING, max_n=10, max_m=18, max_budget=6)
        truth = oracle_decide(inst)
        assert solve_es(inst).feasible == truth.feasible
        best = oracle_optimum(inst)
        minimized = solve_es(inst, SolveMode.MINIMIZE)
        if best.optimum is None:
            assert not minimized.feasible
        else:
            assert minimized.feasible and len(minimized.deleted) == best.optimum


def test_decide_minimize_consistency():
    rng = random.Random(73)
    for _ in range(60):
        inst = random_instance(rng, ProblemKind.ELIMINATING, candidate_rate=0.8)
        minimized = solve_es(inst, SolveMode.MINIMIZE)
        if not minimized.feasible:
            continue
        k_star = len(minimized.deleted)
        assert solve_es(inst.with_budget(k_star)).feasible
        if k_star > 0:
            assert not solve_es(inst.with_budget(k_star - 1)).feasible


def test_approx_feasible_and_within_factor_two():
    rng = random.Random(79)
    for _ in range(150):
        inst = random_instance(rng, ProblemKind.ELIMINATING)
        best = oracle_optimum(inst)
        approx = approx_es(inst)
        if best.optimum is None:
            assert not approx.feasible
            continue
        assert approx.feasible
        assert all(c == 0 for c in approx.residual_per_pair.values())
        if best.optimum:
            assert len(approx.deleted) <= 2 * best.optimum
        else:
            assert len(approx.deleted) == 0
    # the single-wedge family always lands exactly on the bound
    wedge = approx_es(wedge_instance())
    assert len(wedge.deleted) == 2 and oracle_optimum(wedge_instance()).optimum == 1


# --- all-pairs special case ---


def test_special_case_triangle_with_external():
    # triangle on the important set plus an external vertex seeing two of them
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1)])
    sol = solve_es_all_pairs(SpecialCaseInput(g, frozenset({0, 1, 2}), budget=3))
    assert sol.feasible and len(sol.deleted) == 3
    inst = all_pairs_instance(SpecialCaseInput(g, frozenset({0, 1, 2}), budget=3))
    assert oracle_optimum(inst).optimum == 3


def test_special_case_independent_important_set():
    g = Graph(5, [(0, 4), (1, 4)])
    sol = solve_es_all_pairs(SpecialCaseInput(g, frozenset({2, 3}), budget=0))
    assert sol.feasible and sol.deleted == frozenset()


def test_special_case_keep_one_rule():
    # external vertex 3 adjacent to all of the independent important set
    g = Graph(4, [(3, 0), (3, 1), (3, 2)])
    sol = solve_es_all_pairs(SpecialCaseInput(g, frozenset({0, 1, 2}), budget=5))
    assert len(sol.deleted) == 2
    assert edge(3, 0) not in sol.deleted  # keeps the edge to the lowest id


def test_special_case_budget_flag():
    g = Graph(4, [(3, 0), (3, 1), (3, 2)])
    assert not solve_es_all_pairs(SpecialCaseInput(g, frozenset({0, 1, 2}), budget=1)).feasible


def test_special_case_matches_oracle():
    rng = random.Random(83)
    for _ in range(100):
        n = rng.randint(2, 10)
        g = random_graph(rng, n, rng.randint(1, 16))
        size = rng.randint(2, min(5, n))
        important = frozenset(rng.sample(range(n), size))
        case = SpecialCaseInput(g, important, budget=g.m)
        sol = solve_es_all_pairs(case)
        assert sol.feasible
        best = oracle_optimum(all_pairs_instance(case))
        assert best.optimum == len(sol.deleted)
        again = check_solution(all_pairs_instance(case).with_budget(len(sol.deleted)), sol.deleted)
        assert again.feasible and all(c == 0 for c in again.residual_per_pair.values())


def test_special_case_needs_two_vertices():
    with pytest.raises(ValueError):
        solve_es_all_pairs(SpecialCaseInput(Graph(3, [(0, 1)]), frozenset({0}), budget=1))
