"""Local node-similarity measures.

A measure is local when the value for a pair depends only on the two
neighborhoods and is zero exactly when the common neighborhood is empty.
Reducing any such measure by deleting edges reduces to reducing common
neighbors, which is why the solvers in this package work on counts.
"""

from __future__ import annotations

import enum
import math

from .graph import Graph


class Measure(enum.Enum):
    COMMON_NEIGHBORS = "common-neighbor-count"
    JACCARD = "jaccard"
    ADAMIC_ADAR = "adamic-adar"


def similarity(g: Graph, measure: Measure, x: int, y: int) -> float:
    """Similarity of the pair under the given measure.

    A vertex compared with itself scores 0 by convention.  The Adamic/Adar
    index uses the natural logarithm; a common neighbor of degree <= 1
    would contribute 1/log(1), but such a vertex cannot be adjacent to two
    distinct vertices at once, so those terms are skipped defensively.
    """
    if x == y:
        g._check_vertex(x)
        return 0.0
    common = g.common_neighbors(x, y)
    if measure is Measure.COMMON_NEIGHBORS:
        return float(len(common))
    if measure is Measure.JACCARD:
        union = len(g.neighbor_set(x) | g.neighbor_set(y))
        return len(common) / union if union else 0.0
    if measure is Measure.ADAMIC_ADAR:
        return sum(1.0 / math.log(g.degree(w)) for w in common if g.degree(w) > 1)
    raise ValueError(f"unknown measure {measure!r}")


def total_similarity(g: Graph, measure: Measure, pairs: list[tuple[int, int]]) -> float:
    return sum(similarity(g, measure, x, y) for x, y in pairs)
