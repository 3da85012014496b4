"""Conflict-graph construction and exact parameterized vertex cover.

The eliminating problem reduces to vertex cover on a graph with one vertex
per original edge: two edge-vertices are adjacent when their edges form a
wedge over some target pair.  Deleting the edges named by a cover removes
every such wedge.

The exact solver kernelizes (isolated vertices, degree-1 resolution, the
high-degree rule that forces any vertex with degree above the remaining
budget into the cover) and then branches on a maximum-degree vertex,
pruning with a greedy-matching lower bound.  That meets the contract the
package needs: exactness plus fixed-parameter scaling in the budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, Graph, edge
from .instance import ProblemInstance, ProblemKind, require_valid


@dataclass(frozen=True)
class VcInstance:
    graph: Graph
    budget: int
    edge_of_vertex: tuple[Edge, ...]


@dataclass(frozen=True)
class VcResult:
    cover: frozenset[int] | None
    optimal_size: int | None
    nodes_explored: int


def build_conflict_graph(inst: ProblemInstance) -> VcInstance:
    """Conflict graph of a preprocessed eliminating instance.

    There is one vertex per edge of the instance graph.  A conflict whose
    wedge edge lies outside the candidate set means the instance was not
    preprocessed, which is an input error here.
    """
    if inst.kind is not ProblemKind.ELIMINATING:
        raise ValueError("conflict graphs are defined for eliminating instances")
    require_valid(inst)
    g = inst.graph
    edge_list = g.sorted_edges()
    index = {e: i for i, e in enumerate(edge_list)}
    conflict_edges: list[tuple[int, int]] = []
    for x, y in inst.targets:
        for u in g.common_neighbors(x, y):
            e1, e2 = edge(u, x), edge(u, y)
            if e1 not in inst.candidates or e2 not in inst.candidates:
                raise ValueError(
                    f"conflict ({x},{y}) via {u} has a non-candidate wedge edge; preprocess the instance first"
                )
            conflict_edges.append((index[e1], index[e2]))
    return VcInstance(
        graph=Graph(len(edge_list), conflict_edges),
        budget=inst.budget,
        edge_of_vertex=tuple(edge_list),
    )


class _Searcher:
    """Branch-and-bound state over a mutable adjacency copy."""

    def __init__(self, g: Graph):
        self.adj: list[set[int]] = g.adjacency_copy()
        self.n = g.n
        self.nodes = 0

    # Trail entries are (vertex, saved neighbor set); undo restores them in
    # reverse order.
    def _remove(self, v: int, trail: list[tuple[int, set[int]]]) -> None:
        saved = self.adj[v]
        trail.append((v, saved))
        for u in saved:
            self.adj[u].discard(v)
        self.adj[v] = set()

    def _undo(self, trail: list[tuple[int, set[int]]]) -> None:
        for v, saved in reversed(trail):
            self.adj[v] = saved
            for u in saved:
                self.adj[u].add(v)

    def _matching_lower_bound(self) -> int:
        matched: set[int] = set()
        size = 0
        for v in range(self.n):
            if v in matched or not self.adj[v]:
                continue
            for u in sorted(self.adj[v]):
                if u not in matched:
                    matched.add(v)
                    matched.add(u)
                    size += 1
                    break
        return size

    def _kernelize(self, budget: int, trail: list[tuple[int, set[int]]], cover: list[int]) -> int | None:
        """Apply reduction rules exhaustively; returns the remaining budget
        or None when the budget is provably insufficient."""
        changed = True
        while changed:
            changed = False
            for v in range(self.n):
                deg = len(self.adj[v])
                if deg == 1:
                    (u,) = self.adj[v]
                    cover.append(u)
                    self._remove(u, trail)
                    budget -= 1
                    changed = True
                elif deg > budget:
                    cover.append(v)
                    self._remove(v, trail)
                    budget -= 1
                    changed = True
                if budget < 0:
                    return None
        return budget

    def _has_edges(self) -> bool:
        return any(self.adj[v] for v in range(self.n))

    def _max_degree_vertex(self) -> int:
        best, best_deg = -1, -1
        for v in range(self.n):
            deg = len(self.adj[v])
            if deg > best_deg:
                best, best_deg = v, deg
        return best

    def decide(self, budget: int, cover: list[int]) -> list[int] | None:
        self.nodes += 1
        if budget < 0:
            return None
        trail: list[tuple[int, set[int]]] = []
        picked = len(cover)
        remaining = self._kernelize(budget, trail, cover)
        if remaining is None:
            self._undo(trail)
            del cover[picked:]
            return None
        if not self._has_edges():
            result = list(cover)
            self._undo(trail)
            del cover[picked:]
            return result
        if remaining == 0 or self._matching_lower_bound() > remaining:
            self._undo(trail)
            del cover[picked:]
            return None

        v = self._max_degree_vertex()
        neighbors = sorted(self.adj[v])

        branch_trail: list[tuple[int, set[int]]] = []
        cover.append(v)
        self._remove(v, branch_trail)
        result = self.decide(remaining - 1, cover)
        self._undo(branch_trail)
        cover.pop()
        if result is None:
            branch_trail = []
            cover.extend(neighbors)
            for u in neighbors:
                self._remove(u, branch_trail)
            self._remove(v, branch_trail)
            result = self.decide(remaining - len(neighbors), cover)
            self._undo(branch_trail)
            del cover[len(cover) - len(neighbors):]

        self._undo(trail)
        del cover[picked:]
        return result

    def minimize(self) -> list[int]:
        best: list[int] = [v for v in range(self.n) if self.adj[v]]

        def search(cover: list[int]) -> None:
            nonlocal best
            self.nodes += 1
            budget = len(best) - len(cover) - 1
            if budget < 0:
                return
            trail: list[tuple[int, set[int]]] = []
            picked = len(cover)
            remaining = self._kernelize(budget, trail, cover)
            if remaining is not None:
                if not self._has_edges():
                    if len(cover) < len(best):
                        best = list(cover)
                elif self._matching_lower_bound() <= remaining:
                    v = self._max_degree_vertex()
                    neighbors = sorted(self.adj[v])

                    branch_trail: list[tuple[int, set[int]]] = []
                    cover.append(v)
                    self._remove(v, branch_trail)
                    search(cover)
                    self._undo(branch_trail)
                    cover.pop()

                    branch_trail = []
                    cover.extend(neighbors)
                    for u in neighbors:
                        self._remove(u, branch_trail)
                    self._remove(v, branch_trail)
                    search(cover)
                    self._undo(branch_trail)
                    del cover[len(cover) - len(neighbors):]
            self._undo(trail)
            del cover[picked:]

        search([])
        return best


def _check_cover(g: Graph, cover: frozenset[int]) -> None:
    for u, v in g.edges:
        if u not in cover and v not in cover:
            raise AssertionError(f"cover misses edge ({u},{v})")


def solve_vc(vc: VcInstance) -> VcResult:
    """Decision mode: a cover of size at most the budget, or none, exactly."""
    if vc.budget < 0:
        raise ValueError("budget must be nonnegative")
    searcher = _Searcher(vc.graph)
    found = searcher.decide(vc.budget, [])
    if found is None:
        return VcResult(cover=None, optimal_size=None, nodes_explored=searcher.nodes)
    cover = frozenset(found)
    _check_cover(vc.graph, cover)
    return VcResult(cover=cover, optimal_size=None, nodes_explored=searcher.nodes)


def min_vc(graph: Graph) -> VcResult:
    """Minimum vertex cover by branch and bound."""
    searcher = _Searcher(graph)
    best = searcher.minimize()
    cover = frozenset(best)
    _check_cover(graph, cover)
    return VcResult(cover=cover, optimal_size=len(cover), nodes_explored=searcher.nodes)


def approx_vc_2(graph: Graph) -> frozenset[int]:
    """Both endpoints of a greedy maximal matching: a cover within twice optimal."""
    matched: set[int] = set()
    for u, v in sorted(graph.edges):
        if u not in matched and v not in matched:
            matched.add(u)
            matched.add(v)
    return frozenset(matched)
