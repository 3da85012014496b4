"""Problem instances, feasibility checking, and the instance file format.

Three decision problems share one instance shape: a graph, target vertex
pairs whose common neighborhoods should shrink, a candidate set of
deletable edges, a deletion budget, and (except for the eliminating
variant) a residual threshold.

``check_solution`` is the single source of truth for feasibility; every
solver's output is expected to pass it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Mapping

from .graph import Edge, Graph, ParseError, edge, parse_edge_list

Pair = tuple[int, int]


class ProblemKind(enum.Enum):
    ELIMINATING = "eliminating"
    REDUCING_TOTAL = "reducing-total"
    REDUCING_MAX = "reducing-max"


@dataclass(frozen=True)
class ProblemInstance:
    graph: Graph
    targets: tuple[Pair, ...]
    candidates: frozenset[Edge]
    budget: int
    kind: ProblemKind
    threshold: int | None = None

    def with_budget(self, budget: int) -> "ProblemInstance":
        return replace(self, budget=budget)


@dataclass(frozen=True)
class Solution:
    deleted: frozenset[Edge]
    residual_per_pair: Mapping[Pair, int]
    feasible: bool

    @property
    def size(self) -> int:
        return len(self.deleted)


def make_instance(
    graph: Graph,
    targets: Iterable[Pair],
    candidates: Iterable[Edge] | None,
    budget: int,
    kind: ProblemKind,
    threshold: int | None = None,
) -> ProblemInstance:
    """Build an instance with canonical pair/edge forms.

    ``candidates=None`` means every edge is deletable.  Duplicate target
    pairs are dropped (keeping first occurrence) so that totals are not
    double counted.
    """
    canon_targets: list[Pair] = []
    seen: set[Pair] = set()
    for x, y in targets:
        p = edge(x, y) if x != y else (x, y)
        if p not in seen:
            seen.add(p)
            canon_targets.append(p)
    cand = graph.edges if candidates is None else frozenset(edge(u, v) for u, v in candidates)
    return ProblemInstance(
        graph=graph,
        targets=tuple(canon_targets),
        candidates=cand,
        budget=budget,
        kind=kind,
        threshold=threshold,
    )


def validate(inst: ProblemInstance) -> list[str]:
    """Return all invariant violations; an empty list means the instance is ok."""
    errors: list[str] = []
    g = inst.graph
    for x, y in inst.targets:
        if x == y:
            errors.append(f"degenerate pair ({x},{y})")
            continue
        if not (0 <= x < g.n and 0 <= y < g.n):
            errors.append(f"target pair ({x},{y}) out of vertex range")
    for e in sorted(inst.candidates - g.edges):
        errors.append(f"candidate {e} not an edge of the graph")
    if inst.budget < 0:
        errors.append(f"negative budget {inst.budget}")
    if inst.kind is ProblemKind.ELIMINATING:
        if inst.threshold is not None:
            errors.append("eliminating instances carry no threshold")
    else:
        if inst.threshold is None:
            errors.append(f"{inst.kind.value} instances require a threshold")
        elif inst.threshold < 0:
            errors.append(f"negative threshold {inst.threshold}")
    return errors


def require_valid(inst: ProblemInstance) -> None:
    errors = validate(inst)
    if errors:
        raise ValueError("invalid instance: " + "; ".join(errors))


def residual_counts(graph: Graph, targets: Iterable[Pair], deleted: frozenset[Edge]) -> dict[Pair, int]:
    """Common-neighbor count per target pair after deleting the given edges."""
    out: dict[Pair, int] = {}
    for x, y in targets:
        count = 0
        for u in graph.common_neighbors(x, y):
            if edge(u, x) not in deleted and edge(u, y) not in deleted:
                count += 1
        out[(x, y)] = count
    return out


def check_solution(inst: ProblemInstance, sol: Iterable[Edge]) -> Solution:
    """Evaluate a deletion set against the instance's feasibility condition.

    Raises if the set is not contained in the candidate edges.
    """
    deleted = frozenset(edge(u, v) for u, v in sol)
    outside = deleted - inst.candidates
    if outside:
        if outside - inst.graph.edges:
            raise ValueError(f"solution contains non-edges: {sorted(outside - inst.graph.edges)}")
        raise ValueError(f"solution deletes non-candidate edges: {sorted(outside)}")
    residuals = residual_counts(inst.graph, inst.targets, deleted)
    if len(deleted) > inst.budget:
        feasible = False
    elif inst.kind is ProblemKind.ELIMINATING:
        feasible = all(c == 0 for c in residuals.values())
    elif inst.kind is ProblemKind.REDUCING_TOTAL:
        feasible = sum(residuals.values()) <= (inst.threshold or 0)
    else:
        feasible = all(c <= (inst.threshold or 0) for c in residuals.values())
    return Solution(deleted=deleted, residual_per_pair=residuals, feasible=feasible)


def lift_es(inst: ProblemInstance, target_kind: ProblemKind) -> ProblemInstance:
    """Restate an eliminating instance as a threshold problem with t=0.

    Zero total and zero maximum both force every pair's common neighborhood
    empty, so the answer is unchanged.
    """
    if inst.kind is not ProblemKind.ELIMINATING:
        raise ValueError("lift_es requires an eliminating instance")
    if target_kind is ProblemKind.ELIMINATING:
        raise ValueError("target kind must be reducing-total or reducing-max")
    return replace(inst, kind=target_kind, threshold=0)


# Instance file format: line-oriented text with '#'/'%' comments.
#
#   kind eliminating|reducing-total|reducing-max
#   n <vertices>
#   k <budget>
#   t <threshold>              (required iff kind is not eliminating)
#   edges <count> | graph file <path>
#   <u> <v>                    (dense ids, <count> lines)
#   targets <count>
#   <x> <y>
#   candidates all | candidates <count>
#   <u> <v>
#
# "candidates all" round-trips exactly: it is written back whenever the
# candidate set equals the edge set.

_KIND_BY_NAME = {k.value: k for k in ProblemKind}
_KIND_ALIASES = {"es": ProblemKind.ELIMINATING, "rts": ProblemKind.REDUCING_TOTAL, "rms": ProblemKind.REDUCING_MAX}


def kind_from_name(name: str) -> ProblemKind:
    key = name.strip().lower()
    if key in _KIND_BY_NAME:
        return _KIND_BY_NAME[key]
    if key in _KIND_ALIASES:
        return _KIND_ALIASES[key]
    raise ValueError(f"unknown problem kind {name!r}")


def write_instance(inst: ProblemInstance) -> str:
    lines = [f"kind {inst.kind.value}", f"n {inst.graph.n}", f"k {inst.budget}"]
    if inst.threshold is not None:
        lines.append(f"t {inst.threshold}")
    sorted_edges = inst.graph.sorted_edges()
    lines.append(f"edges {len(sorted_edges)}")
    lines.extend(f"{u} {v}" for u, v in sorted_edges)
    lines.append(f"targets {len(inst.targets)}")
    lines.extend(f"{x} {y}" for x, y in inst.targets)
    if inst.candidates == inst.graph.edges:
        lines.append("candidates all")
    else:
        cand = sorted(inst.candidates)
        lines.append(f"candidates {len(cand)}")
        lines.extend(f"{u} {v}" for u, v in cand)
    return "\n".join(lines) + "\n"


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and line[0] not in "#%":
            out.append((lineno, line))
    return out


def read_instance(text: str, *, base_dir: Path | None = None) -> ProblemInstance:
    """Parse the instance format above.  Paths in ``graph file`` lines are
    resolved against ``base_dir`` (defaults to the working directory)."""
    lines = _data_lines(text)
    pos = 0

    def fail(msg: str, lineno: int | None = None) -> ParseError:
        where = f"line {lineno}: " if lineno else ""
        return ParseError(f"{where}{msg}")

    def next_line() -> tuple[int, str]:
        nonlocal pos
        if pos >= len(lines):
            raise fail("unexpected end of instance file")
        item = lines[pos]
        pos += 1
        return item

    def read_pairs(count: int, what: str) -> list[tuple[int, int]]:
        pairs = []
        for _ in range(count):
            lineno, line = next_line()
            parts = line.split()
            if len(parts) != 2:
                raise fail(f"expected '{what}' pair, got {line!r}", lineno)
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise fail(f"non-integer {what} entry in {line!r}", lineno) from None
        return pairs

    header: dict[str, str] = {}
    graph: Graph | None = None
    edges_list: list[tuple[int, int]] | None = None
    targets: list[tuple[int, int]] | None = None
    candidates: list[tuple[int, int]] | None = None
    candidates_all = False

    while pos < len(lines):
        lineno, line = next_line()
        parts = line.split()
        key = parts[0].lower()
        if key in ("kind", "n", "k", "t"):
            if len(parts) != 2:
                raise fail(f"malformed header line {line!r}", lineno)
            header[key] = parts[1]
        elif key == "graph":
            if len(parts) != 3 or parts[1] != "file":
                raise fail(f"expected 'graph file <path>', got {line!r}", lineno)
            path = Path(parts[2])
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            graph, _ = parse_edge_list(path.read_text())
        elif key == "edges":
            try:
                count = int(parts[1])
            except (IndexError, ValueError):
                raise fail(f"expected 'edges <count>', got {line!r}", lineno) from None
            edges_list = read_pairs(count, "edge")
        elif key == "targets":
            try:
                count = int(parts[1])
            except (IndexError, ValueError):
                raise fail(f"expected 'targets <count>', got {line!r}", lineno) from None
            targets = read_pairs(count, "target")
        elif key == "candidates":
            if len(parts) != 2:
                raise fail(f"expected 'candidates all' or 'candidates <count>', got {line!r}", lineno)
            if parts[1].lower() == "all":
                candidates_all = True
            else:
                try:
                    count = int(parts[1])
                except ValueError:
                    raise fail(f"bad candidate count in {line!r}", lineno) from None
                candidates = read_pairs(count, "candidate")
        else:
            raise fail(f"unknown section {parts[0]!r}", lineno)

    if "kind" not in header:
        raise ParseError("instance file missing 'kind'")
    kind = kind_from_name(header["kind"])
    if "k" not in header:
        raise ParseError("instance file missing budget 'k'")
    budget = int(header["k"])
    threshold = int(header["t"]) if "t" in header else None

    if graph is None:
        if edges_list is None:
            raise ParseError("instance file needs an 'edges' section or a 'graph file' reference")
        if "n" not in header:
            raise ParseError("inline edges require an 'n' header")
        graph = Graph(int(header["n"]), edges_list)
    if targets is None:
        raise ParseError("instance file missing 'targets' section")
    if not candidates_all and candidates is None:
        raise ParseError("instance file missing 'candidates' section")

    return make_instance(
        graph=graph,
        targets=targets,
        candidates=None if candidates_all else candidates,
        budget=budget,
        kind=kind,
        threshold=threshold,
    )


def load_instance(path: str | Path) -> ProblemInstance:
    p = Path(path)
    return read_instance(p.read_text(), base_dir=p.parent)


def save_instance(inst: ProblemInstance, path: str | Path) -> None:
    Path(path).write_text(write_instance(inst))
