"""Immutable undirected simple graphs with dense 0-based vertex ids.

All solvers in this package index arrays by vertex, so graphs store
vertices as ``0..n-1``.  Edge-list files with arbitrary integer labels are
remapped to dense ids at parse time; the remap table is kept so graphs can
be written back with their original labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Edge = tuple[int, int]


class ParseError(ValueError):
    """Raised for malformed edge-list or instance text."""


def edge(u: int, v: int) -> Edge:
    """Canonical form of an undirected edge: (min, max)."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph, immutable after construction.

    Neighbor lists are kept sorted so that intersections are linear in the
    degrees and every query has a deterministic result.  Instances are safe
    to share across threads.
    """

    __slots__ = ("n", "edges", "_adj", "_adj_sets")

    n: int
    edges: frozenset[Edge]
    _adj: tuple[tuple[int, ...], ...]
    _adj_sets: tuple[frozenset[int], ...]

    def __init__(self, n: int, edges: Iterable[Edge], *, strict: bool = False):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        canon: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                if strict:
                    raise ValueError(f"self-loop at vertex {u}")
                continue
            e = edge(u, v)
            if e in canon:
                if strict:
                    raise ValueError(f"duplicate edge {e}")
                continue
            canon.add(e)
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))
        object.__setattr__(self, "_adj", tuple(tuple(sorted(s)) for s in adj))
        object.__setattr__(self, "_adj_sets", tuple(frozenset(s) for s in adj))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex id {v} out of range for n={self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbors of ``v``."""
        self._check_vertex(v)
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj_sets[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj_sets[u]

    def common_neighbors(self, x: int, y: int) -> tuple[int, ...]:
        """Sorted vertices adjacent to both ``x`` and ``y``.

        Asking for a vertex's common neighborhood with itself is rejected;
        similarity of a vertex with itself is zero by convention.
        """
        self._check_vertex(x)
        self._check_vertex(y)
        if x == y:
            raise ValueError("common_neighbors requires two distinct vertices")
        a, b = self._adj_sets[x], self._adj_sets[y]
        if len(a) > len(b):
            a, b = b, a
        return tuple(sorted(a & b))

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        """New graph with the given edges deleted.  Unknown edges are an error."""
        removed_set = {edge(u, v) for u, v in removed}
        missing = removed_set - self.edges
        if missing:
            raise ValueError(f"cannot delete non-edges: {sorted(missing)}")
        return Graph(self.n, self.edges - removed_set)

    def adjacency_copy(self) -> list[set[int]]:
        """Mutable adjacency-set copy, for algorithms that simulate deletions."""
        return [set(s) for s in self._adj_sets]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    max_degree: int
    avg_degree: float


def stats(g: Graph) -> GraphStats:
    max_deg = max((g.degree(v) for v in range(g.n)), default=0)
    avg = 2.0 * g.m / g.n if g.n else 0.0
    return GraphStats(n=g.n, m=g.m, max_degree=max_deg, avg_degree=avg)


def parse_edge_list(text: str) -> tuple[Graph, list[int]]:
    """Parse whitespace-separated integer pairs into a dense graph.

    Lines starting with ``#`` or ``%`` and blank lines are skipped.  Labels
    are remapped to ``0..n-1`` in first-appearance order; the returned list
    maps each dense id back to its original label.  Self-loops and repeated
    edges are dropped silently since public edge-list corpora are dirty.
    Extra columns after the first two (weights, timestamps) are ignored.
    """
    ids: dict[int, int] = {}
    labels: list[int] = []
    edges: list[Edge] = []

    def dense(label: int) -> int:
        got = ids.get(label)
        if got is None:
            got = len(labels)
            ids[label] = got
            labels.append(label)
        return got

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ParseError(f"line {lineno}: expected two vertex labels, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex label in {line!r}") from None
        if a < 0 or b < 0:
            raise ParseError(f"line {lineno}: negative vertex label in {line!r}")
        edges.append((dense(a), dense(b)))

    return Graph(len(labels), edges), labels


def write_edge_list(g: Graph, labels: list[int] | None = None) -> str:
    """Serialize to edge-list text, optionally with original labels.

    A parse round trip reproduces the structure up to the remap table it
    returns; vertices with no edges are not represented in this format.
    """
    if labels is None:
        labels = list(range(g.n))
    if len(labels) != g.n:
        raise ValueError("label table length must equal vertex count")
    lines = [f"{labels[u]} {labels[v]}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + ("\n" if lines else "")
