"""Forced-edge preprocessing for the eliminating problem.

Every (target pair, common neighbor) conflict must lose one of its two
wedge edges.  A conflict with no candidate wedge edge can never be fixed;
a conflict with exactly one has its deletion forced.  Iterating to a fixed
point is enough because deletions only ever destroy conflicts, never
create them.

The rule is restricted to the eliminating problem: with a positive
threshold a permanent conflict merely contributes irreducibly and a forced
deletion may waste budget, so threshold variants constrain their solvers
to the candidate set instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .graph import Edge, edge
from .instance import ProblemInstance, ProblemKind, require_valid


class PreprocessStatus(enum.Enum):
    REDUCED = "reduced"
    NO_INSTANCE = "no-instance"


@dataclass(frozen=True)
class PreprocessOutcome:
    status: PreprocessStatus
    instance: ProblemInstance | None
    forced: frozenset[Edge]
    budget_spent: int

    @property
    def solvable(self) -> bool:
        return self.status is PreprocessStatus.REDUCED


def _no_instance(forced: set[Edge]) -> PreprocessOutcome:
    return PreprocessOutcome(
        status=PreprocessStatus.NO_INSTANCE,
        instance=None,
        forced=frozenset(forced),
        budget_spent=len(forced),
    )


def preprocess_es(inst: ProblemInstance) -> PreprocessOutcome:
    """Apply the forced-deletion rule until nothing changes.

    Scans pairs in input order and common neighbors in ascending id, so the
    forced set is reproducible.  On success, every remaining conflict has
    both wedge edges among the candidates of the reduced instance.
    """
    if inst.kind is not ProblemKind.ELIMINATING:
        raise ValueError("preprocess_es applies to eliminating instances only")
    require_valid(inst)

    adj = inst.graph.adjacency_copy()
    candidates = set(inst.candidates)
    forced: set[Edge] = set()
    budget = inst.budget

    changed = True
    while changed:
        changed = False
        for x, y in inst.targets:
            for u in sorted(adj[x] & adj[y]):
                e1, e2 = edge(u, x), edge(u, y)
                present = [e for e in (e1, e2) if e in candidates]
                if not present:
                    return _no_instance(forced)
                if len(present) == 1:
                    if budget == 0:
                        return _no_instance(forced)
                    (doomed,) = present
                    a, b = doomed
                    adj[a].discard(b)
                    adj[b].discard(a)
                    candidates.discard(doomed)
                    forced.add(doomed)
                    budget -= 1
                    changed = True

    reduced_graph = inst.graph.without_edges(forced)
    reduced = replace(
        inst,
        graph=reduced_graph,
        candidates=frozenset(candidates),
        budget=budget,
    )
    return PreprocessOutcome(
        status=PreprocessStatus.REDUCED,
        instance=reduced,
        forced=frozenset(forced),
        budget_spent=len(forced),
    )
