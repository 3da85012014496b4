from __future__ import annotations

import random

import pytest

from helpers import path_graph, random_instance, wedge_instance
from simdel.graph import Graph, edge
from simdel.ilp import (
    build_ilp,
    decode_assignment,
    dump_model,
    enumerate_patterns,
    partition_types,
    solve_ilp,
    solve_rms_ilp,
    solve_rts_ilp,
)
from simdel.instance import ProblemKind, check_solution, lift_es, make_instance
from simdel.oracle import oracle_decide


def _type_of(types, vertex):
    for t in types:
        if vertex in t.members:
            return t
    raise AssertionError(f"vertex {vertex} not in any type")


def test_partition_star_center_covers_everything():
    g = Graph(5, [(0, i) for i in range(1, 5)])
    pairs = [(1, 2), (3, 4)]
    inst = make_instance(g, pairs, None, 1, ProblemKind.REDUCING_TOTAL, threshold=0)
    types = partition_types(inst)
    assert _type_of(types, 0).covered_pairs == frozenset(pairs)
    for leaf in range(1, 5):
        assert _type_of(types, leaf).covered_pairs == frozenset()
    assert sum(t.count for t in types) == g.n


def test_partition_empty_target_set():
    inst = make_instance(path_graph(4), [], None, 1, ProblemKind.REDUCING_TOTAL, threshold=0)
    types = partition_types(inst)
    assert len(types) == 1 and types[0].count == 4


def test_partition_wedge():
    inst = make_instance(path_graph(3), [(0, 2)], None, 1, ProblemKind.REDUCING_TOTAL, threshold=0)
    types = partition_types(inst)
    assert _type_of(types, 1).covered_pairs == frozenset({(0, 2)})
    assert _type_of(types, 0).covered_pairs == frozenset()


def test_enumerate_patterns_single_pair():
    inst = make_instance(path_graph(3), [(0, 2)], None, 1, ProblemKind.REDUCING_TOTAL, threshold=0)
    vtype = _type_of(partition_types(inst), 1)
    patterns = enumerate_patterns(vtype, inst.candidates, witness=1)
    assert [set(p.deleted_endpoints) for p in patterns] == [set(), {0}, {2}, {0, 2}]
    assert [p.cost for p in patterns] == [0, 1, 1, 2]


def test_enumerate_patterns_shared_endpoint():
    # star center 4 witnesses pairs (0,1) and (0,2): endpoints {0,1,2}
    g = Graph(5, [(4, 0), (4, 1), (4, 2)])
    inst = make_instance(g, [(0, 1), (0, 2)], None, 2, ProblemKind.REDUCING_TOTAL, threshold=0)
    vtype = _type_of(partition_types(inst), 4)
    patterns = enumerate_patterns(vtype, inst.candidates, witness=4)
    assert len(patterns) == 8  # subsets of three endpoints, not 4 x 4 per-pair choices


def test_enumerate_patterns_nothing_deletable():
    g = Graph(3, [(0, 1), (1, 2)])
    inst = make_instance(g, [(0, 2)], [], 1, ProblemKind.REDUCING_TOTAL, threshold=1)
    vtype = _type_of(partition_types(inst), 1)
    patterns = enumerate_patterns(vtype, inst.candidates, witness=1)
    assert len(patterns) == 1 and patterns[0].deleted_endpoints == frozenset()


def test_pattern_covering_matches_endpoint_membership():
    g = Graph(5, [(4, 0), (4, 1), (4, 2), (4, 3)])
    inst = make_instance(g, [(0, 1), (2, 3)], None, 2, ProblemKind.REDUCING_TOTAL, threshold=0)
    model = build_ilp(inst)
    for tp in model.types:
        for pat in tp.patterns:
            for pi in tp.pair_idx:
                x, y = model.pairs[pi]
                covered = x in pat.endpoints or y in pat.endpoints
                assert (pi in pat.covers) == covered


def test_slack_threshold_feasible_without_deletions():
    g = Graph(5, [(4, 0), (4, 1), (4, 2), (4, 3)])
    inst = make_instance(g, [(0, 1), (2, 3)], None, 0, ProblemKind.REDUCING_TOTAL, threshold=5)
    model = build_ilp(inst)
    assignment = solve_ilp(model)
    assert assignment is not None
    assert decode_assignment(model, assignment) == frozenset()


def test_lifted_wedge_feasible():
    inst = lift_es(wedge_instance(budget=1), ProblemKind.REDUCING_TOTAL)
    assert solve_rts_ilp(inst).feasible


def test_zero_budget_with_mandatory_deletion_infeasible():
    inst = lift_es(wedge_instance(budget=0), ProblemKind.REDUCING_TOTAL)
    assert solve_ilp(build_ilp(inst)) is None


def test_build_rejects_eliminating():
    with pytest.raises(ValueError):
        build_ilp(wedge_instance())


def test_rts_oracle_certification():
    rng = random.Random(89)
    for _ in range(100):
        inst = random_instance(rng, ProblemKind.REDUCING_TOTAL)
        sol = solve_rts_ilp(inst)
        assert sol.feasible == oracle_decide(inst).feasible
        if sol.feasible:
            assert check_solution(inst, sol.deleted).feasible


def test_rms_oracle_certification():
    rng = random.Random(97)
    for _ in range(100):
        inst = random_instance(rng, ProblemKind.REDUCING_MAX)
        sol = solve_rms_ilp(inst)
        assert sol.feasible == oracle_decide(inst).feasible
        if sol.feasible:
            assert check_solution(inst, sol.deleted).feasible


def test_same_type_vertices_are_interchangeable():
    rng = random.Random(101)
    swaps = 0
    for _ in range(80):
        inst = random_instance(rng, ProblemKind.REDUCING_TOTAL, max_n=7)
        types = partition_types(inst)
        fat = [t for t in types if t.count >= 2 and t.covered_pairs]
        if not fat:
            continue
        a, b = fat[0].members[0], fat[0].members[1]
        swap = {a: b, b: a}
        relabel = lambda v: swap.get(v, v)  # noqa: E731
        g2 = Graph(inst.graph.n, [(relabel(u), relabel(v)) for u, v in inst.graph.edges])
        inst2 = make_instance(
            g2,
            [(relabel(x), relabel(y)) for x, y in inst.targets],
            [edge(relabel(u), relabel(v)) for u, v in inst.candidates],
            inst.budget,
            inst.kind,
            inst.threshold,
        )
        assert solve_rts_ilp(inst).feasible == solve_rts_ilp(inst2).feasible
        swaps += 1
    assert swaps >= 10


def test_dump_model_mentions_all_blocks():
    inst = lift_es(wedge_instance(budget=1), ProblemKind.REDUCING_TOTAL)
    text = dump_model(build_ilp(inst))
    for token in ("pairs", "edge variables", "types", "constraints", "(2)", "(3)", "(4)"):
        assert token in text
    rms = lift_es(wedge_instance(budget=1), ProblemKind.REDUCING_MAX)
    assert "Gamma" in dump_model(build_ilp(rms))


def test_y_bounds_equal_initial_common_neighbor_counts():
    rng = random.Random(103)
    for _ in range(30):
        inst = random_instance(rng, ProblemKind.REDUCING_MAX)
        model = build_ilp(inst)
        for pi, (x, y) in enumerate(model.pairs):
            assert model.y_bounds[pi] == len(inst.graph.common_neighbors(x, y))
