"""Brute-force ground truth for small instances.

Enumerates candidate-edge subsets in increasing cardinality, so the first
feasible subset found has minimum size.  The oracle works on common
neighbor counts only, which covers every local similarity measure at once.
It exists to certify the real solvers, not to compete with them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Edge, edge
from .instance import Pair, ProblemInstance, ProblemKind, require_valid

# Enumeration guard: refuse rather than silently approximate.
SUBSET_CAP = 1 << 24


@dataclass(frozen=True)
class OracleResult:
    feasible: bool
    optimum: int | None
    witness: frozenset[Edge] | None


def _pair_witness_edges(inst: ProblemInstance) -> list[list[tuple[Edge, Edge]]]:
    """For each target pair, the wedge edges of each of its common neighbors."""
    g = inst.graph
    table = []
    for x, y in inst.targets:
        table.append([(edge(u, x), edge(u, y)) for u in g.common_neighbors(x, y)])
    return table


def _residuals_ok(
    kind: ProblemKind,
    threshold: int,
    witness_edges: list[list[tuple[Edge, Edge]]],
    deleted: frozenset[Edge],
) -> bool:
    if kind is ProblemKind.REDUCING_TOTAL:
        total = 0
        for per_pair in witness_edges:
            for e1, e2 in per_pair:
                if e1 not in deleted and e2 not in deleted:
                    total += 1
                    if total > threshold:
                        return False
        return True
    # eliminating is reducing-max with t=0
    for per_pair in witness_edges:
        count = 0
        for e1, e2 in per_pair:
            if e1 not in deleted and e2 not in deleted:
                count += 1
                if count > threshold:
                    return False
    return True


def _enumeration_work(m: int, max_size: int) -> int:
    return sum(comb(m, s) for s in range(0, min(m, max_size) + 1))


def oracle_decide(inst: ProblemInstance, *, optimize: bool = False) -> OracleResult:
    """Exact decision for the instance; with ``optimize`` also the minimum
    deletion-set size over an unbounded budget.

    Decision mode enumerates subsets up to the budget; optimize mode may
    need every cardinality.  Either way the planned work is capped at 2^24
    subsets and the oracle refuses louder instances.
    """
    require_valid(inst)
    cand = sorted(inst.candidates)
    m = len(cand)
    threshold = 0 if inst.kind is ProblemKind.ELIMINATING else int(inst.threshold or 0)
    kind = ProblemKind.REDUCING_TOTAL if inst.kind is ProblemKind.REDUCING_TOTAL else ProblemKind.REDUCING_MAX

    witness_edges = _pair_witness_edges(inst)

    # Deleting more candidate edges never increases a count, so the full
    # candidate set is the best possible deletion.  If it fails, nothing works.
    if not _residuals_ok(kind, threshold, witness_edges, frozenset(cand)):
        return OracleResult(feasible=False, optimum=None, witness=None)

    max_size = m if optimize else min(inst.budget, m)
    if _enumeration_work(m, max_size) > SUBSET_CAP:
        raise ValueError(
            f"oracle refuses: enumerating subsets of {m} candidates up to size {max_size} exceeds the 2^24 cap"
        )

    for size in range(0, max_size + 1):
        for combo in combinations(cand, size):
            deleted = frozenset(combo)
            if _residuals_ok(kind, threshold, witness_edges, deleted):
                return OracleResult(feasible=size <= inst.budget, optimum=size, witness=deleted)

    # Reachable only in decision mode with a budget below the optimum.
    return OracleResult(feasible=False, optimum=None, witness=None)


def oracle_optimum(inst: ProblemInstance) -> OracleResult:
    return oracle_decide(inst, optimize=True)
