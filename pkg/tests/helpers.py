"""Shared randomized-instance builders and small brute-force references."""

from __future__ import annotations

import random
from itertools import combinations

from simdel.graph import Graph, edge
from simdel.instance import ProblemInstance, ProblemKind, make_instance


def random_graph(rng: random.Random, n: int, m: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph(n, rng.sample(pairs, min(m, len(pairs))))


def random_graph_max_degree(rng: random.Random, n: int, max_degree: int, tries: int = 200) -> Graph:
    degrees = [0] * n
    edges: set[tuple[int, int]] = set()
    for _ in range(tries):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        e = edge(u, v)
        if e in edges or degrees[u] >= max_degree or degrees[v] >= max_degree:
            continue
        edges.add(e)
        degrees[u] += 1
        degrees[v] += 1
    return Graph(n, edges)


def random_targets(rng: random.Random, n: int, count: int) -> list[tuple[int, int]]:
    pairs: set[tuple[int, int]] = set()
    while len(pairs) < count:
        a, b = rng.sample(range(n), 2)
        pairs.add(edge(a, b))
    return sorted(pairs)


def random_instance(
    rng: random.Random,
    kind: ProblemKind,
    *,
    max_n: int = 8,
    max_m: int = 14,
    max_pairs: int = 3,
    max_budget: int = 4,
    max_threshold: int = 3,
    candidate_rate: float = 0.75,
) -> ProblemInstance:
    n = rng.randint(3, max_n)
    g = random_graph(rng, n, rng.randint(2, max_m))
    targets = random_targets(rng, n, rng.randint(1, max_pairs))
    if rng.random() < 0.3:
        candidates = None
    else:
        candidates = [e for e in g.sorted_edges() if rng.random() < candidate_rate]
    threshold = rng.randint(0, max_threshold) if kind is not ProblemKind.ELIMINATING else None
    return make_instance(g, targets, candidates, rng.randint(0, max_budget), kind, threshold)


def brute_force_min_vertex_cover(g: Graph) -> int:
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            chosen = set(combo)
            if all(u in chosen or v in chosen for u, v in g.edges):
                return k
    return g.n


def brute_force_max_matching(g: Graph) -> int:
    edges = g.sorted_edges()
    best = 0

    def grow(i: int, used: frozenset[int], size: int) -> None:
        nonlocal best
        best = max(best, size)
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u not in used and v not in used:
                grow(j + 1, used | {u, v}, size + 1)

    grow(0, frozenset(), 0)
    return best


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def wedge_instance(budget: int = 1) -> ProblemInstance:
    """P3 a-b-c with the single conflict (a,c) via b."""
    return make_instance(path_graph(3), [(0, 2)], None, budget, ProblemKind.ELIMINATING)


def double_wedge_instance(budget: int = 2) -> ProblemInstance:
    """Two internally disjoint wedges between the target endpoints."""
    g = Graph(4, [(0, 1), (1, 2), (0, 3), (3, 2)])
    return make_instance(g, [(0, 2)], None, budget, ProblemKind.ELIMINATING)


def k33() -> Graph:
    return Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def cube_graph() -> Graph:
    corners = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    index = {c: i for i, c in enumerate(corners)}
    edges = []
    for c in corners:
        for axis in range(3):
            d = list(c)
            d[axis] ^= 1
            edges.append((index[c], index[tuple(d)]))
    return Graph(8, edges)


def random_bipartite_cubic(rng: random.Random, side: int, tries: int = 500) -> Graph | None:
    """3-regular bipartite (hence triangle-free) graph as a union of three
    perfect matchings between the sides; None when the draws keep colliding."""
    for _ in range(tries):
        perms = [list(range(side)) for _ in range(3)]
        for p in perms:
            rng.shuffle(p)
        edges = {(a, side + p[a]) for p in perms for a in range(side)}
        if len(edges) == 3 * side:
            return Graph(2 * side, edges)
    return None
