"""Exact solving for the eliminating problem.

The pipeline is: forced-edge preprocessing, conflict-graph construction,
then exact vertex cover in decision or minimize mode.  The deletion set is
the union of forced edges and the edges named by the cover.

There is also the polynomial special case where the target pairs are all
pairs over a set of important vertices: keep at most one edge from each
outside vertex into the set, and keep only a maximum matching inside it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Edge, Graph, edge
from .instance import (
    ProblemInstance,
    ProblemKind,
    Solution,
    check_solution,
    make_instance,
    require_valid,
    residual_counts,
)
from .matching import max_matching
from .preprocess import preprocess_es
from .vertex_cover import approx_vc_2, build_conflict_graph, min_vc, solve_vc


class SolveMode(enum.Enum):
    DECIDE = "decide"
    MINIMIZE = "minimize"


def _infeasible_solution(inst: ProblemInstance) -> Solution:
    return Solution(
        deleted=frozenset(),
        residual_per_pair=residual_counts(inst.graph, inst.targets, frozenset()),
        feasible=False,
    )


def solve_es(inst: ProblemInstance, mode: SolveMode = SolveMode.DECIDE) -> Solution:
    """Exact decision or minimization for an eliminating instance.

    Decide mode answers within the instance budget.  Minimize mode ignores
    the budget and returns a minimum feasible deletion set (feasible=True
    means such a set exists at all); it reports infeasible only when
    deleting every candidate still leaves some pair a common neighbor.
    """
    if inst.kind is not ProblemKind.ELIMINATING:
        raise ValueError("solve_es requires an eliminating instance")
    require_valid(inst)

    if mode is SolveMode.MINIMIZE:
        # Forced deletions are contained in every feasible solution, so the
        # optimum is |forced| plus a minimum cover of the conflict graph.
        relaxed = inst.with_budget(len(inst.candidates))
        outcome = preprocess_es(relaxed)
        if not outcome.solvable:
            return _infeasible_solution(inst)
        reduced = outcome.instance
        assert reduced is not None
        vc = build_conflict_graph(reduced)
        result = min_vc(vc.graph)
        assert result.cover is not None
        deleted = frozenset(outcome.forced | {vc.edge_of_vertex[v] for v in result.cover})
        checked = check_solution(inst.with_budget(len(deleted)), deleted)
        assert checked.feasible, "minimize-mode output failed the feasibility check"
        return checked

    outcome = preprocess_es(inst)
    if not outcome.solvable:
        return _infeasible_solution(inst)
    reduced = outcome.instance
    assert reduced is not None
    vc = build_conflict_graph(reduced)
    result = solve_vc(vc)
    if result.cover is None:
        return _infeasible_solution(inst)
    deleted = frozenset(outcome.forced | {vc.edge_of_vertex[v] for v in result.cover})
    checked = check_solution(inst, deleted)
    assert checked.feasible, "decision-mode output failed the feasibility check"
    return checked


def approx_es(inst: ProblemInstance) -> Solution:
    """Polynomial 2-approximation of the minimum deletion count.

    Forced edges belong to every feasible solution, and both endpoints of a
    maximal matching in the conflict graph form a cover within twice the
    minimum, so the combined set is within twice the optimum overall.
    """
    if inst.kind is not ProblemKind.ELIMINATING:
        raise ValueError("approx_es requires an eliminating instance")
    require_valid(inst)
    relaxed = inst.with_budget(len(inst.candidates))
    outcome = preprocess_es(relaxed)
    if not outcome.solvable:
        return _infeasible_solution(inst)
    reduced = outcome.instance
    assert reduced is not None
    vc = build_conflict_graph(reduced)
    cover = approx_vc_2(vc.graph)
    deleted = frozenset(outcome.forced | {vc.edge_of_vertex[v] for v in cover})
    checked = check_solution(inst.with_budget(len(deleted)), deleted)
    assert checked.feasible, "approximation output failed the feasibility check"
    return checked


@dataclass(frozen=True)
class SpecialCaseInput:
    """All-pairs variant: eliminate similarity among every pair of ``important``.

    Every edge is deletable here.  The structural algorithm below has no
    sound reading under a restricted candidate set, so callers with one
    should use the general solver instead.
    """

    graph: Graph
    important: frozenset[int]
    budget: int


def all_pairs_instance(input: SpecialCaseInput) -> ProblemInstance:
    members = sorted(input.important)
    targets = [(u, v) for i, u in enumerate(members) for v in members[i + 1:]]
    return make_instance(
        graph=input.graph,
        targets=targets,
        candidates=None,
        budget=input.budget,
        kind=ProblemKind.ELIMINATING,
    )


def solve_es_all_pairs(input: SpecialCaseInput) -> Solution:
    """Minimum deletion set for the all-pairs special case.

    Outside vertices adjacent to two or more important vertices keep only
    their edge to the lowest-id one.  Inside the important set, only a
    maximum matching of the induced subgraph survives.  Any feasible
    solution must delete at least that many edges from each of the two
    disjoint groups, so the set is optimal; the instance is then feasible
    exactly when the set fits the budget.
    """
    g = input.graph
    important = input.important
    if len(important) < 2:
        raise ValueError("the all-pairs case needs at least two important vertices")
    for v in important:
        g._check_vertex(v)

    deleted: set[Edge] = set()
    for u in range(g.n):
        if u in important:
            continue
        inside = [w for w in g.neighbors(u) if w in important]
        if len(inside) >= 2:
            for w in inside[1:]:
                deleted.add(edge(u, w))

    members = sorted(important)
    index = {v: i for i, v in enumerate(members)}
    induced_edges = [
        (index[u], index[v]) for u, v in g.edges if u in important and v in important
    ]
    induced = Graph(len(members), induced_edges)
    kept = {edge(members[u], members[v]) for u, v in max_matching(induced)}
    for u, v in induced_edges:
        e = edge(members[u], members[v])
        if e not in kept:
            deleted.add(e)

    inst = all_pairs_instance(input)
    checked = check_solution(inst.with_budget(len(deleted)), deleted)
    assert all(c == 0 for c in checked.residual_per_pair.values())
    return Solution(
        deleted=checked.deleted,
        residual_per_pair=checked.residual_per_pair,
        feasible=len(deleted) <= input.budget,
    )
