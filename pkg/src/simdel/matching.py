"""Maximum-cardinality matching in general graphs.

Augmenting-path search with blossom contraction.  Odd cycles found during
the alternating BFS are contracted to their base vertex, which keeps the
search correct on non-bipartite graphs.  Runs in O(V^3); vertices and
neighbors are scanned in ascending order so the matching is deterministic.
"""

from __future__ import annotations

from collections import deque

from .graph import Edge, Graph, edge


def max_matching(g: Graph) -> frozenset[Edge]:
    n = g.n
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        v = a
        while True:
            v = base[v]
            seen[v] = True
            if match[v] == -1:
                break
            v = parent[match[v]]
        v = b
        while True:
            v = base[v]
            if seen[v]:
                return v
            v = parent[match[v]]

    def mark_path(v: int, stem: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != stem:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(root: int) -> bool:
        used = [False] * n
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in g.neighbors(v):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # Even-even edge closes an odd cycle: contract the blossom.
                    stem = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, stem, to, in_blossom)
                    mark_path(to, stem, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = stem
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # Exposed vertex reached: flip the alternating path.
                        w = to
                        while w != -1:
                            pw = parent[w]
                            next_w = match[pw]
                            match[w] = pw
                            match[pw] = w
                            w = next_w
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting_path(v)

    return frozenset(edge(v, match[v]) for v in range(n) if match[v] > v)
