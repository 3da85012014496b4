"""Heuristic baselines: greedy, high-Jaccard, and random edge deletion.

All three run the optimization flavor: the budget is ignored and the run
reports how many deletions it took to make every target pair's common
neighborhood empty (or that it stalled).  Ties break on the canonical edge
order and the random baseline carries an explicit seed, so runs reproduce.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .graph import Edge, edge
from .instance import ProblemInstance, ProblemKind, require_valid
from .similarity import Measure, similarity


class BaselineTimeout(Exception):
    """Raised when a run exceeds its wall-clock allowance."""


@dataclass(frozen=True)
class BaselineRun:
    algorithm: str
    deleted: tuple[Edge, ...]
    succeeded: bool
    iterations: int
    seed: int | None = None


class _WorkingState:
    """Mutable adjacency plus per-pair common-neighbor sets."""

    def __init__(self, inst: ProblemInstance):
        require_valid(inst)
        if inst.kind is not ProblemKind.ELIMINATING:
            raise ValueError("baselines run on eliminating instances")
        self.adj = inst.graph.adjacency_copy()
        self.pairs = list(inst.targets)
        self.common: list[set[int]] = [set(inst.graph.common_neighbors(x, y)) for x, y in self.pairs]
        self.pairs_at: dict[int, list[int]] = {}
        for pi, (x, y) in enumerate(self.pairs):
            self.pairs_at.setdefault(x, []).append(pi)
            self.pairs_at.setdefault(y, []).append(pi)
        self.candidates = sorted(inst.candidates)

    def total(self) -> int:
        return sum(len(s) for s in self.common)

    def total_without(self, e: Edge) -> int:
        """Total common-neighbor count if ``e`` were deleted, recomputed from
        the adjacency.  Deliberately not incremental: the greedy baseline
        pays this full evaluation for every candidate edge it considers."""
        u, v = e
        adj = self.adj
        adj[u].discard(v)
        adj[v].discard(u)
        total = sum(len(adj[x] & adj[y]) for x, y in self.pairs)
        adj[u].add(v)
        adj[v].add(u)
        return total

    def delete(self, e: Edge) -> None:
        u, v = e
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        for pi in self.pairs_at.get(u, ()):
            self.common[pi].discard(v)
        for pi in self.pairs_at.get(v, ()):
            self.common[pi].discard(u)


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.perf_counter() > deadline:
        raise BaselineTimeout


def greedy_es(inst: ProblemInstance, *, time_limit_s: float | None = None) -> BaselineRun:
    """Delete the candidate edge that removes the most common-neighbor
    memberships, until the total is zero or no edge helps."""
    state = _WorkingState(inst)
    deadline = time.perf_counter() + time_limit_s if time_limit_s else None
    remaining = list(state.candidates)
    deleted: list[Edge] = []
    iterations = 0
    current = state.total()
    while current > 0:
        _check_deadline(deadline)
        best_edge: Edge | None = None
        best_total = current
        for e in remaining:
            total = state.total_without(e)
            if total < best_total:
                best_total, best_edge = total, e
        if best_edge is None:
            break
        state.delete(best_edge)
        remaining.remove(best_edge)
        deleted.append(best_edge)
        current = best_total
        iterations += 1
    return BaselineRun(
        algorithm="greedy",
        deleted=tuple(deleted),
        succeeded=state.total() == 0,
        iterations=iterations,
    )


def hj_es(inst: ProblemInstance, *, time_limit_s: float | None = None) -> BaselineRun:
    """Delete candidates in descending Jaccard similarity of their endpoints,
    ranked once on the original graph, until the pairs are disjoint."""
    state = _WorkingState(inst)
    deadline = time.perf_counter() + time_limit_s if time_limit_s else None
    g = inst.graph
    ranked = sorted(
        state.candidates,
        key=lambda e: (-similarity(g, Measure.JACCARD, e[0], e[1]), e),
    )
    deleted: list[Edge] = []
    iterations = 0
    for e in ranked:
        if state.total() == 0:
            break
        _check_deadline(deadline)
        state.delete(e)
        deleted.append(e)
        iterations += 1
    return BaselineRun(
        algorithm="hj",
        deleted=tuple(deleted),
        succeeded=state.total() == 0,
        iterations=iterations,
    )


def random_es(inst: ProblemInstance, seed: int, *, time_limit_s: float | None = None) -> BaselineRun:
    """Delete uniformly random candidates without replacement until the
    total similarity reaches zero or the candidates run out."""
    state = _WorkingState(inst)
    deadline = time.perf_counter() + time_limit_s if time_limit_s else None
    rng = random.Random(seed)
    pool = list(state.candidates)
    deleted: list[Edge] = []
    iterations = 0
    while state.total() > 0 and pool:
        _check_deadline(deadline)
        e = pool.pop(rng.randrange(len(pool)))
        state.delete(e)
        deleted.append(e)
        iterations += 1
    return BaselineRun(
        algorithm="random",
        deleted=tuple(deleted),
        succeeded=state.total() == 0,
        iterations=iterations,
        seed=seed,
    )
