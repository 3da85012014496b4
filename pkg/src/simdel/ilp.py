"""Feasibility models parameterized by the number of target pairs.

Vertices are partitioned into types by the set of target pairs they are a
common neighbor of; vertices of the same type are interchangeable, so an
integer count per (type, participation pattern) describes a solution.  A
participation pattern is a consistent subset of the type's deletable pair
endpoints: pairs that share an endpoint share an edge, so per-pair
independent choices would overcount.

One further wrinkle: an edge whose endpoints are both target-pair
endpoints can serve two witnesses at once (each side a common neighbor of
a pair containing the other), and per-witness pattern costs would charge
it twice.  Such edges get explicit 0/1 deletion variables instead; only
witnesses outside the target endpoint set go through the type variables,
where their wedge edges are provably unshared.

Feasibility is decided by an exact depth-first search over the edge
variables and the per-type count distributions, pruning with the remaining
budget and with residual-similarity lower bounds.  The contract is
exactness; a witness assignment decodes to an edge set that passes
``check_solution``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Edge, edge
from .instance import (
    Pair,
    ProblemInstance,
    ProblemKind,
    Solution,
    check_solution,
    require_valid,
)

MAX_EDGE_VARS = 25


@dataclass(frozen=True)
class VertexType:
    covered_pairs: frozenset[Pair]
    count: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class ParticipationPattern:
    deleted_endpoints: frozenset[int]
    cost: int


def partition_types(inst: ProblemInstance) -> list[VertexType]:
    """Group all vertices by the set of target pairs they witness."""
    require_valid(inst)
    g = inst.graph
    covered: list[set[Pair]] = [set() for _ in range(g.n)]
    for p in inst.targets:
        x, y = p
        for u in g.common_neighbors(x, y):
            covered[u].add(p)
    groups: dict[frozenset[Pair], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(frozenset(covered[v]), []).append(v)
    types = [VertexType(key, len(vs), tuple(vs)) for key, vs in groups.items()]
    types.sort(key=lambda t: t.members[0])
    return types


def enumerate_patterns(
    vtype: VertexType, candidates: frozenset[Edge], witness: int
) -> list[ParticipationPattern]:
    """All endpoint subsets whose wedge edges at ``witness`` are deletable.

    The empty pattern is always present.  Ordered by size then endpoints,
    so enumeration is reproducible.
    """
    if witness not in vtype.members:
        raise ValueError(f"witness {witness} is not a member of the type")
    endpoints = sorted({v for pair in vtype.covered_pairs for v in pair})
    deletable = [d for d in endpoints if edge(witness, d) in candidates]
    patterns: list[ParticipationPattern] = []
    for size in range(len(deletable) + 1):
        for combo in combinations(deletable, size):
            patterns.append(ParticipationPattern(frozenset(combo), size))
    return patterns


@dataclass(frozen=True)
class _Pattern:
    endpoints: tuple[int, ...]
    cost: int
    covers: frozenset[int]  # indices into the model's pair tuple
    residual: int  # pairs of the type left witnessed


@dataclass(frozen=True)
class _RefinedType:
    pair_idx: tuple[int, ...]
    members: tuple[int, ...]
    patterns: tuple[_Pattern, ...]

    @property
    def count(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class IlpModel:
    instance: ProblemInstance
    pairs: tuple[Pair, ...]
    kind: ProblemKind
    budget: int
    threshold: int
    # Deletable wedge edges with both endpoints in the target endpoint set.
    edge_vars: tuple[Edge, ...]
    # Per pair: wedge edges of each witness inside the endpoint set
    # (None marks a non-candidate side, which can never be deleted).
    endpoint_witnesses: tuple[tuple[tuple[Edge | None, Edge | None], ...], ...]
    types: tuple[_RefinedType, ...]
    y_bounds: tuple[int, ...]
    gamma_bound: int


@dataclass(frozen=True)
class IlpAssignment:
    edge_deletions: frozenset[Edge]
    # (type index, pattern index, count) for patterns with positive count/cost.
    pattern_counts: tuple[tuple[int, int, int], ...]


def build_ilp(inst: ProblemInstance) -> IlpModel:
    if inst.kind is ProblemKind.ELIMINATING:
        raise ValueError("build_ilp expects a reducing-total or reducing-max instance; lift first")
    require_valid(inst)
    g = inst.graph
    pairs = tuple(inst.targets)
    pair_index = {p: i for i, p in enumerate(pairs)}
    endpoint_set = {v for p in pairs for v in p}

    endpoint_witnesses: list[list[tuple[Edge | None, Edge | None]]] = [[] for _ in pairs]
    edge_vars: set[Edge] = set()
    outside_cover: dict[int, set[int]] = {}

    for p in pairs:
        x, y = p
        pi = pair_index[p]
        for u in g.common_neighbors(x, y):
            if u in endpoint_set:
                e1, e2 = edge(u, x), edge(u, y)
                c1 = e1 if e1 in inst.candidates else None
                c2 = e2 if e2 in inst.candidates else None
                endpoint_witnesses[pi].append((c1, c2))
                if c1 is not None:
                    edge_vars.add(c1)
                if c2 is not None:
                    edge_vars.add(c2)
            else:
                outside_cover.setdefault(u, set()).add(pi)

    # Refine outside witnesses by covered pairs and by which pair endpoints
    # their wedge edges may delete; members of a refined type are then fully
    # interchangeable.
    grouped: dict[tuple[tuple[int, ...], tuple[int, ...]], list[int]] = {}
    for u, cover in outside_cover.items():
        endpoints = {v for pi in cover for v in pairs[pi]}
        deletable = tuple(sorted(d for d in endpoints if edge(u, d) in inst.candidates))
        key = (tuple(sorted(cover)), deletable)
        grouped.setdefault(key, []).append(u)

    types: list[_RefinedType] = []
    for (cover_idx, deletable), members in sorted(grouped.items(), key=lambda kv: kv[1][0]):
        patterns: list[_Pattern] = []
        for size in range(len(deletable) + 1):
            for combo in combinations(deletable, size):
                chosen = set(combo)
                covers = frozenset(
                    pi for pi in cover_idx if pairs[pi][0] in chosen or pairs[pi][1] in chosen
                )
                patterns.append(
                    _Pattern(
                        endpoints=combo,
                        cost=size,
                        covers=covers,
                        residual=len(cover_idx) - len(covers),
                    )
                )
        types.append(
            _RefinedType(pair_idx=cover_idx, members=tuple(sorted(members)), patterns=tuple(patterns))
        )

    y_bounds = []
    for pi, p in enumerate(pairs):
        total = len(endpoint_witnesses[pi]) + sum(t.count for t in types if pi in t.pair_idx)
        assert total == len(g.common_neighbors(*p))
        y_bounds.append(total)

    return IlpModel(
        instance=inst,
        pairs=pairs,
        kind=inst.kind,
        budget=inst.budget,
        threshold=int(inst.threshold or 0),
        edge_vars=tuple(sorted(edge_vars)),
        endpoint_witnesses=tuple(tuple(w) for w in endpoint_witnesses),
        types=tuple(types),
        y_bounds=tuple(y_bounds),
        gamma_bound=max(y_bounds, default=0),
    )


def solve_ilp(model: IlpModel) -> IlpAssignment | None:
    """Exact feasibility; returns a witness assignment or None."""
    if len(model.edge_vars) > MAX_EDGE_VARS:
        raise ValueError(
            f"{len(model.edge_vars)} edge variables exceed the exact-search limit of {MAX_EDGE_VARS}"
        )
    npairs = len(model.pairs)
    k = model.budget
    t = model.threshold
    total_mode = model.kind is ProblemKind.REDUCING_TOTAL
    types = model.types

    # unavoidable[j][p]: residual that types j.. must contribute to pair p no
    # matter the budget (members whose patterns can never cover p).
    unavoidable = [[0] * npairs for _ in range(len(types) + 1)]
    for j in range(len(types) - 1, -1, -1):
        row = unavoidable[j]
        row[:] = unavoidable[j + 1]
        tp = types[j]
        coverable: set[int] = set()
        for pat in tp.patterns:
            coverable |= pat.covers
        for pi in tp.pair_idx:
            if pi not in coverable:
                row[pi] += tp.count

    chosen_edges: list[Edge] = []
    counts: list[tuple[int, int, int]] = []
    found: IlpAssignment | None = None

    def violates(resid: list[int], j: int) -> bool:
        if total_mode:
            return sum(resid) + sum(unavoidable[j]) > t
        return any(resid[pi] + unavoidable[j][pi] > t for pi in range(npairs))

    def finish(resid: list[int]) -> bool:
        nonlocal found
        if total_mode:
            ok = sum(resid) <= t
        else:
            ok = all(r <= t for r in resid)
        if ok:
            found = IlpAssignment(frozenset(chosen_edges), tuple(counts))
        return ok

    def types_dfs(j: int, budget_left: int, resid: list[int]) -> bool:
        if violates(resid, j):
            return False
        if j == len(types):
            return finish(resid)
        tp = types[j]
        if budget_left == 0:
            # No deletions possible: every remaining vertex keeps all wedges.
            extra = resid.copy()
            for jj in range(j, len(types)):
                for pi in types[jj].pair_idx:
                    extra[pi] += types[jj].count
            if violates(extra, len(types)):
                return False
            return finish(extra)
        nonempty = [(idx, pat) for idx, pat in enumerate(tp.patterns) if pat.cost > 0]

        def distribute(pos: int, left: int, budget: int, resid_now: list[int]) -> bool:
            if pos == len(nonempty) or budget == 0:
                rest = resid_now.copy()
                for pi in tp.pair_idx:
                    rest[pi] += left
                return types_dfs(j + 1, budget, rest)
            idx, pat = nonempty[pos]
            limit = min(left, budget // pat.cost)
            for c in range(limit + 1):
                nxt = resid_now.copy()
                for pi in tp.pair_idx:
                    if pi not in pat.covers:
                        nxt[pi] += c
                if c > 0:
                    counts.append((j, idx, c))
                if distribute(pos + 1, left - c, budget - c * pat.cost, nxt):
                    return True
                if c > 0:
                    counts.pop()
            return False

        return distribute(0, tp.count, budget_left, resid)

    def eval_leaf(spent: int) -> bool:
        deleted = set(chosen_edges)
        resid = []
        for pi in range(npairs):
            survivors = 0
            for e1, e2 in model.endpoint_witnesses[pi]:
                if e1 not in deleted and e2 not in deleted:
                    survivors += 1
            resid.append(survivors)
        return types_dfs(0, k - spent, resid)

    def edges_dfs(idx: int, spent: int) -> bool:
        if idx == len(model.edge_vars) or spent == k:
            return eval_leaf(spent)
        if edges_dfs(idx + 1, spent):
            return True
        chosen_edges.append(model.edge_vars[idx])
        ok = edges_dfs(idx + 1, spent + 1)
        chosen_edges.pop()
        return ok

    edges_dfs(0, 0)
    return found


def decode_assignment(model: IlpModel, assignment: IlpAssignment) -> frozenset[Edge]:
    """Edge set named by an assignment: the chosen edge variables plus, per
    type, pattern edges applied to the first unassigned members in order."""
    edges: set[Edge] = set(assignment.edge_deletions)
    used: dict[int, int] = {}
    for j, idx, count in assignment.pattern_counts:
        tp = model.types[j]
        pat = tp.patterns[idx]
        start = used.get(j, 0)
        for member in tp.members[start:start + count]:
            for d in pat.endpoints:
                edges.add(edge(member, d))
        used[j] = start + count
    return frozenset(edges)


def dump_model(model: IlpModel) -> str:
    """Human-readable rendering of the constraint system, for debugging."""
    out: list[str] = []
    kind = model.kind.value
    out.append(f"feasibility model ({kind}): k={model.budget}, t={model.threshold}")
    out.append(f"pairs ({len(model.pairs)}):")
    for pi, p in enumerate(model.pairs):
        out.append(f"  p{pi} = {p}   Y(p{pi}) in [0, {model.y_bounds[pi]}]")
    out.append(f"edge variables W(e) in {{0,1}} (wedge edges inside the endpoint set): {len(model.edge_vars)}")
    for e in model.edge_vars:
        out.append(f"  W{e}")
    out.append(f"types over outside witnesses: {len(model.types)}")
    for j, tp in enumerate(model.types):
        pair_names = ",".join(f"p{pi}" for pi in tp.pair_idx)
        out.append(f"  type {j}: covers {{{pair_names}}}, n={tp.count}, members {list(tp.members)}")
        for idx, pat in enumerate(tp.patterns):
            covers = ",".join(f"p{pi}" for pi in sorted(pat.covers))
            out.append(
                f"    Z({j};{idx}) endpoints {set(pat.endpoints) or '{}'} cost {pat.cost} covers {{{covers}}}"
            )
    out.append("constraints:")
    if model.kind is ProblemKind.REDUCING_TOTAL:
        out.append(f"  (1) sum_p Y(p) <= {model.threshold}")
    else:
        out.append(f"  (1a) Gamma <= {model.threshold}   with Gamma in [0, {model.gamma_bound}]")
        out.append("  (1b) Y(p) <= Gamma for every pair")
    out.append(f"  (2) sum_e W(e) + sum_XP cost(X,P)*Z(X;P) <= {model.budget}")
    out.append("  (3) sum_P Z(X;P) = n(X) for every type X")
    out.append(
        "  (4) Y(p) = surviving endpoint-set witnesses of p under W"
        " + sum over types covering p of (n(X) - covering Z counts)"
    )
    return "\n".join(out) + "\n"


def _solve_threshold(inst: ProblemInstance) -> Solution:
    model = build_ilp(inst)
    assignment = solve_ilp(model)
    if assignment is None:
        from .instance import residual_counts

        return Solution(
            deleted=frozenset(),
            residual_per_pair=residual_counts(inst.graph, inst.targets, frozenset()),
            feasible=False,
        )
    deleted = decode_assignment(model, assignment)
    checked = check_solution(inst, deleted)
    assert checked.feasible, "ilp witness failed the feasibility check"
    return checked


def solve_rts_ilp(inst: ProblemInstance) -> Solution:
    if inst.kind is not ProblemKind.REDUCING_TOTAL:
        raise ValueError("solve_rts_ilp expects a reducing-total instance")
    return _solve_threshold(inst)


def solve_rms_ilp(inst: ProblemInstance) -> Solution:
    if inst.kind is not ProblemKind.REDUCING_MAX:
        raise ValueError("solve_rms_ilp expects a reducing-max instance")
    return _solve_threshold(inst)
