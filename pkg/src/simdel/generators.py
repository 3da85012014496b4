"""Instance generators: reduction gadgets and random graph models.

The gadgets turn instances of classic hard problems into instances of the
similarity problems with the same yes/no answer, which makes them handy
cross-validation fixtures: solve the source by exhaustion, solve the
gadget with any solver, and the answers must agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from itertools import combinations

from .graph import Edge, Graph, edge
from .instance import ProblemInstance, ProblemKind, make_instance, require_valid


@dataclass(frozen=True)
class PvcInstance:
    """Partial vertex cover: k vertices should cover at least s edges."""

    graph: Graph
    budget: int
    coverage_target: int

    def __post_init__(self) -> None:
        if not (0 <= self.coverage_target <= self.graph.m):
            raise ValueError("coverage target must be between 0 and the edge count")
        if self.budget < 0:
            raise ValueError("budget must be nonnegative")


@dataclass(frozen=True)
class SetCoverFamily:
    """Set cover with uniform element frequency.

    ``universe_size`` elements are 0..size-1; every element must occur in
    exactly ``frequency`` member sets.
    """

    universe_size: int
    sets: tuple[frozenset[int], ...]
    budget: int

    @property
    def frequency(self) -> int:
        freq = self._frequencies()
        return freq[0]

    def _frequencies(self) -> list[int]:
        if self.universe_size <= 0:
            raise ValueError("universe must be nonempty")
        if not self.sets:
            raise ValueError("frequency is undefined for an empty family")
        counts = [0] * self.universe_size
        for s in self.sets:
            for u in s:
                if not (0 <= u < self.universe_size):
                    raise ValueError(f"element {u} outside universe of size {self.universe_size}")
                counts[u] += 1
        return counts

    def validate_uniform(self) -> int:
        counts = self._frequencies()
        if min(counts) == 0:
            raise ValueError("every element must belong to at least one set")
        if min(counts) != max(counts):
            raise ValueError(f"family is not uniform: frequencies range {min(counts)}..{max(counts)}")
        return counts[0]


def uniformize_family(universe_size: int, sets: list[frozenset[int]], budget: int) -> SetCoverFamily:
    """Pad a family with singleton copies until every element has the same
    frequency.  Singletons never change the cover answer because any one of
    them can be swapped for an original set containing its element."""
    if universe_size <= 0:
        raise ValueError("universe must be nonempty")
    counts = [0] * universe_size
    for s in sets:
        for u in s:
            counts[u] += 1
    if min(counts) == 0:
        raise ValueError("every element must belong to at least one set")
    target = len(sets)
    padded = list(sets)
    for u in range(universe_size):
        padded.extend(frozenset([u]) for _ in range(target - counts[u]))
    family = SetCoverFamily(universe_size=universe_size, sets=tuple(padded), budget=budget)
    family.validate_uniform()
    return family


def gadget_pvc_to_rts(p: PvcInstance) -> ProblemInstance:
    """Star gadget: one leaf per source vertex, the center the only possible
    common neighbor.  Covering s source edges maps to killing s of the m
    unit contributions, hence threshold m - s."""
    g = p.graph
    center = g.n
    star_edges = {edge(center, v) for e in g.edges for v in e}
    targets = [(x, y) for x, y in sorted(g.edges)]
    return make_instance(
        graph=Graph(g.n + 1, star_edges),
        targets=targets,
        candidates=None,
        budget=p.budget,
        kind=ProblemKind.REDUCING_TOTAL,
        threshold=g.m - p.coverage_target,
    )


def gadget_usc_to_rms(f: SetCoverFamily) -> ProblemInstance:
    """Root-plus-bipartite gadget for uniform set cover.

    Vertex ids: root 0, elements 1..u, sets u+1..u+len.  Every target pair
    (root, element) starts with exactly ``frequency`` common neighbors, so
    threshold frequency-1 forces each element to lose a covering set.
    """
    freq = f.validate_uniform()
    root = 0
    element_id = {u: 1 + u for u in range(f.universe_size)}
    set_id = {i: 1 + f.universe_size + i for i in range(len(f.sets))}
    edges: set[Edge] = set()
    for i, s in enumerate(f.sets):
        edges.add(edge(root, set_id[i]))
        for u in s:
            edges.add(edge(element_id[u], set_id[i]))
    targets = [(root, element_id[u]) for u in range(f.universe_size)]
    return make_instance(
        graph=Graph(1 + f.universe_size + len(f.sets), edges),
        targets=targets,
        candidates=None,
        budget=f.budget,
        kind=ProblemKind.REDUCING_MAX,
        threshold=freq - 1,
    )


def _has_triangle(g: Graph) -> bool:
    for u, v in g.edges:
        if g.neighbor_set(u) & g.neighbor_set(v):
            return True
    return False


def gadget_vc3_to_rms(g: Graph, budget: int) -> ProblemInstance:
    """Doubled-vertex gadget mapping vertex cover on cubic graphs to the
    reducing-max problem with threshold 1.

    Requires the input to be 3-regular and triangle-free.  With a triangle
    u,v,w the pair (y_u, y_v) picks up x_w as an extra common neighbor that
    no vertex-side deletion removes, and the answers come apart (checked
    against the brute-force oracle on K4), so such inputs are rejected.
    Vertex ids: x_u = 2u, y_u = 2u + 1.  Output max degree is at most 7.
    """
    for v in range(g.n):
        if g.degree(v) != 3:
            raise ValueError(f"vertex {v} has degree {g.degree(v)}; the input must be 3-regular")
    if _has_triangle(g):
        raise ValueError("the doubling gadget is only answer-preserving on triangle-free inputs")

    def x(u: int) -> int:
        return 2 * u

    def y(u: int) -> int:
        return 2 * u + 1

    edges: set[Edge] = set()
    for u in range(g.n):
        edges.add(edge(x(u), y(u)))
    for u, v in g.edges:
        edges.add(edge(x(u), x(v)))
        edges.add(edge(x(u), y(v)))
        edges.add(edge(x(v), y(u)))
    targets = [(y(u), y(v)) for u, v in sorted(g.edges)]
    out = make_instance(
        graph=Graph(2 * g.n, edges),
        targets=targets,
        candidates=None,
        budget=budget,
        kind=ProblemKind.REDUCING_MAX,
        threshold=1,
    )
    assert max(out.graph.degree(v) for v in range(out.graph.n)) <= 7
    return out


def gadget_pad_avg_degree(inst: ProblemInstance) -> ProblemInstance:
    """Append an n^2-vertex path attached at vertex 0.

    Targets, candidates and budget are unchanged; path vertices are never
    common neighbors of original pairs, so the answer is preserved.  For
    inputs with m <= n the padded average degree is at most 2.
    """
    require_valid(inst)
    g = inst.graph
    if g.n < 1:
        raise ValueError("padding needs at least one vertex to attach to")
    pad = g.n * g.n
    edges = set(g.edges)
    edges.add(edge(0, g.n))
    for i in range(pad - 1):
        edges.add(edge(g.n + i, g.n + i + 1))
    return replace(inst, graph=Graph(g.n + pad, edges))


def gen_ba(n: int, attach: int, seed: int) -> Graph:
    """Preferential attachment graph, seeded with a clique on attach+1
    vertices; each later vertex attaches ``attach`` distinct edges."""
    if attach < 1:
        raise ValueError("attach must be at least 1")
    if n < attach + 1:
        raise ValueError("need at least attach+1 vertices")
    rng = random.Random(seed)
    edges: list[Edge] = list(combinations(range(attach + 1), 2))
    # One entry per edge endpoint: sampling from it is degree-proportional.
    endpoint_pool: list[int] = [v for e in edges for v in e]
    for v in range(attach + 1, n):
        chosen: set[int] = set()
        while len(chosen) < attach:
            chosen.add(rng.choice(endpoint_pool))
        for u in sorted(chosen):
            edges.append(edge(u, v))
            endpoint_pool.extend((u, v))
    return Graph(n, edges)


def gen_er(n: int, m: int, seed: int) -> Graph:
    """Uniform random graph with exactly m edges."""
    max_edges = n * (n - 1) // 2
    if not (0 <= m <= max_edges):
        raise ValueError(f"m must be between 0 and {max_edges}")
    rng = random.Random(seed)
    picks = rng.sample(range(max_edges), m)
    edges = []
    for code in picks:
        # Decode a linear index into the (u < v) pair it names.
        v = int((1 + (1 + 8 * code) ** 0.5) / 2)
        while v * (v - 1) // 2 > code:
            v -= 1
        while (v + 1) * v // 2 <= code:
            v += 1
        u = code - v * (v - 1) // 2
        edges.append((u, v))
    return Graph(n, edges)
