"""Dynamic program over vertices for the reducing-total problem.

Witnesses are processed one at a time; the table is Boolean over (prefix
length, budget left, allowed residual left).  At each witness the choice
is a subset of its deletable wedge endpoints, enumerated in Gray-code
order so the hit-pair bookkeeping updates incrementally.  A witness whose
chosen subset misses some of its pairs keeps contributing to those pairs,
so the threshold is charged its residual contribution, the number of
witnessed pairs not hit.

Wedge edges between two target-pair endpoints may serve two witnesses at
once and cannot be attributed to either side alone; those few edges are
decided by direct enumeration, and the table handles the remaining
witnesses, whose wedge edges are provably private.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Edge, edge
from .instance import (
    ProblemInstance,
    ProblemKind,
    Solution,
    check_solution,
    lift_es,
    require_valid,
    residual_counts,
)

MAX_SHARED_EDGES = 25


@dataclass(frozen=True)
class _Witness:
    vertex: int
    pair_idx: tuple[int, ...]
    # Deletable endpoints, each with the indices of witnessed pairs it hits.
    endpoints: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def conflict_count(self) -> int:
        return len(self.pair_idx)


def _infeasible(inst: ProblemInstance) -> Solution:
    return Solution(
        deleted=frozenset(),
        residual_per_pair=residual_counts(inst.graph, inst.targets, frozenset()),
        feasible=False,
    )


def solve_rts_dp(inst: ProblemInstance) -> Solution:
    """Exact decision for reducing-total; recovers a witness edge set."""
    if inst.kind is not ProblemKind.REDUCING_TOTAL:
        raise ValueError("solve_rts_dp expects a reducing-total instance")
    require_valid(inst)
    g = inst.graph
    pairs = inst.targets
    threshold = int(inst.threshold or 0)
    endpoint_set = {v for p in pairs for v in p}

    shared_conflicts: list[tuple[Edge | None, Edge | None]] = []
    shared_edges: set[Edge] = set()
    outside: dict[int, list[int]] = {}

    for pi, (x, y) in enumerate(pairs):
        for u in g.common_neighbors(x, y):
            if u in endpoint_set:
                e1, e2 = edge(u, x), edge(u, y)
                c1 = e1 if e1 in inst.candidates else None
                c2 = e2 if e2 in inst.candidates else None
                shared_conflicts.append((c1, c2))
                shared_edges.update(e for e in (c1, c2) if e is not None)
            else:
                outside.setdefault(u, []).append(pi)

    witnesses: list[_Witness] = []
    max_deg = max((g.degree(v) for v in range(g.n)), default=0)
    for v in sorted(outside):
        cover = tuple(sorted(outside[v]))
        hit_map: dict[int, list[int]] = {}
        for pi in cover:
            for d in pairs[pi]:
                if edge(v, d) in inst.candidates:
                    hit_map.setdefault(d, []).append(pi)
        endpoints = tuple((d, tuple(hits)) for d, hits in sorted(hit_map.items()))
        assert len(endpoints) <= max_deg
        witnesses.append(_Witness(vertex=v, pair_idx=cover, endpoints=endpoints))

    shared_list = sorted(shared_edges)
    if len(shared_list) > MAX_SHARED_EDGES:
        raise ValueError(
            f"{len(shared_list)} shared wedge edges exceed the enumeration limit of {MAX_SHARED_EDGES}"
        )

    total_outside = sum(w.conflict_count for w in witnesses)

    # One table filled at the caps answers every shared-edge branch: truth is
    # monotone in both remaining budget and remaining threshold, so each
    # branch just reads its own cell.
    budget_cap = min(inst.budget, sum(len(w.endpoints) for w in witnesses))
    allowed_cap = min(threshold, total_outside)
    table, back = _fill_table(witnesses, budget_cap, allowed_cap)

    for size in range(min(inst.budget, len(shared_list)) + 1):
        for combo in combinations(shared_list, size):
            chosen = frozenset(combo)
            survivors = 0
            for e1, e2 in shared_conflicts:
                if e1 not in chosen and e2 not in chosen:
                    survivors += 1
            budget_left = inst.budget - size
            allowed = threshold - survivors
            if allowed < 0:
                continue
            if total_outside <= allowed:
                recovered: frozenset[Edge] = frozenset()
            else:
                cell_budget = min(budget_left, budget_cap)
                if not table[cell_budget][allowed]:
                    continue
                recovered = _reconstruct(witnesses, back, cell_budget, allowed)
            deleted = frozenset(chosen | recovered)
            checked = check_solution(inst, deleted)
            assert checked.feasible, "dp witness failed the feasibility check"
            return checked

    return _infeasible(inst)


def _fill_table(
    witnesses: list[_Witness], budget: int, allowed: int
) -> tuple[list[list[bool]], dict[tuple[int, int, int], tuple[int, ...]]]:
    """Boolean table over (witness prefix, budget left, residual allowance),
    with a back-pointer per cell recording the first subset that set it."""
    prev = [[True] * (allowed + 1) for _ in range(budget + 1)]
    back: dict[tuple[int, int, int], tuple[int, ...]] = {}

    for i, w in enumerate(witnesses, start=1):
        cur = [[False] * (allowed + 1) for _ in range(budget + 1)]
        r = len(w.endpoints)
        c = w.conflict_count
        pair_hits = {pi: 0 for pi in w.pair_idx}
        gamma = 0
        in_x = [False] * r
        members: list[int] = []
        previous_code = 0
        for step in range(1 << r):
            code = step ^ (step >> 1)
            flip = code ^ previous_code
            previous_code = code
            if flip:
                bit = flip.bit_length() - 1
                d, hits = w.endpoints[bit]
                if in_x[bit]:
                    in_x[bit] = False
                    members.remove(d)
                    for pi in hits:
                        pair_hits[pi] -= 1
                        if pair_hits[pi] == 0:
                            gamma -= 1
                else:
                    in_x[bit] = True
                    members.append(d)
                    for pi in hits:
                        if pair_hits[pi] == 0:
                            gamma += 1
                        pair_hits[pi] += 1
            cost = len(members)
            residual = c - gamma
            if cost > budget or residual > allowed:
                continue
            snapshot: tuple[int, ...] | None = None
            for kk in range(cost, budget + 1):
                row_prev = prev[kk - cost]
                row_cur = cur[kk]
                for tt in range(residual, allowed + 1):
                    if not row_cur[tt] and row_prev[tt - residual]:
                        row_cur[tt] = True
                        if snapshot is None:
                            snapshot = tuple(sorted(members))
                        back[(i, kk, tt)] = snapshot
        prev = cur

    return prev, back


def _reconstruct(
    witnesses: list[_Witness],
    back: dict[tuple[int, int, int], tuple[int, ...]],
    budget: int,
    allowed: int,
) -> frozenset[Edge]:
    deleted: set[Edge] = set()
    kk, tt = budget, allowed
    for i in range(len(witnesses), 0, -1):
        w = witnesses[i - 1]
        chosen = back[(i, kk, tt)]
        hit: set[int] = set()
        for d in chosen:
            deleted.add(edge(w.vertex, d))
            for dd, hits in w.endpoints:
                if dd == d:
                    hit.update(hits)
        residual = w.conflict_count - len(hit)
        kk -= len(chosen)
        tt -= residual
    return frozenset(deleted)


def solve_es_dp(inst: ProblemInstance) -> Solution:
    """Eliminating instances restate as reducing-total with threshold zero."""
    if inst.kind is not ProblemKind.ELIMINATING:
        raise ValueError("solve_es_dp expects an eliminating instance")
    lifted = lift_es(inst, ProblemKind.REDUCING_TOTAL)
    solution = solve_rts_dp(lifted)
    if not solution.feasible:
        return _infeasible(inst)
    return check_solution(inst, solution.deleted)
