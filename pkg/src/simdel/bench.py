"""Benchmark harness: run solvers and baselines on one instance, emit CSV.

Target pairs are sampled uniformly without replacement from all vertex
pairs with a fixed seed, every algorithm sees the identical instance, and
records are ordered by (algorithm, repetition), so a configuration fully
determines the CSV apart from wall times.  ``record_times=False`` zeroes
the timing column for byte-identical reruns.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .baselines import BaselineTimeout, greedy_es, hj_es, random_es
from .exact import SolveMode, approx_es, solve_es
from .graph import Graph
from .instance import ProblemInstance, ProblemKind, make_instance

KNOWN_ALGORITHMS = ("fpta", "greedy", "hj", "random", "approx")

CSV_HEADER = "dataset,s_size,algorithm,edges_deleted,succeeded,time_ms,seed"


@dataclass(frozen=True)
class BenchConfig:
    dataset: str
    graph: Graph
    s_size: int
    seed: int
    algorithms: tuple[str, ...]
    repetitions: int = 1
    timeout_s: float = 300.0
    record_times: bool = True

    def validate(self) -> None:
        max_pairs = self.graph.n * (self.graph.n - 1) // 2
        if not (0 < self.s_size <= max_pairs):
            raise ValueError(f"s_size must be between 1 and {max_pairs}")
        for name in self.algorithms:
            if name not in KNOWN_ALGORITHMS:
                raise ValueError(f"unknown algorithm {name!r}; known: {', '.join(KNOWN_ALGORITHMS)}")
        if self.repetitions < 1:
            raise ValueError("repetitions must be positive")


@dataclass(frozen=True)
class BenchRecord:
    dataset: str
    s_size: int
    algorithm: str
    edges_deleted: int
    succeeded: str  # "true", "false", or "timeout"
    time_ms: float
    seed: int


def sample_targets(graph: Graph, count: int, seed: int) -> list[tuple[int, int]]:
    """Uniform distinct vertex pairs, without replacement.  Pairs with no
    initial common neighbor are kept; they simply cost nothing."""
    rng = random.Random(seed)
    chosen: set[tuple[int, int]] = set()
    order: list[tuple[int, int]] = []
    while len(order) < count:
        u = rng.randrange(graph.n)
        v = rng.randrange(graph.n)
        if u == v:
            continue
        pair = (u, v) if u < v else (v, u)
        if pair not in chosen:
            chosen.add(pair)
            order.append(pair)
    return order


def bench_instance(cfg: BenchConfig) -> ProblemInstance:
    targets = sample_targets(cfg.graph, cfg.s_size, cfg.seed)
    return make_instance(
        graph=cfg.graph,
        targets=targets,
        candidates=None,
        budget=cfg.graph.m,
        kind=ProblemKind.ELIMINATING,
    )


def _run_one(name: str, inst: ProblemInstance, cfg: BenchConfig, rep: int) -> BenchRecord:
    seed = cfg.seed if name != "random" else cfg.seed + rep
    start = time.perf_counter()
    try:
        if name == "fpta":
            solution = solve_es(inst, SolveMode.MINIMIZE)
            deleted, succeeded = len(solution.deleted), solution.feasible
        elif name == "approx":
            solution = approx_es(inst)
            deleted, succeeded = len(solution.deleted), solution.feasible
        elif name == "greedy":
            run = greedy_es(inst, time_limit_s=cfg.timeout_s)
            deleted, succeeded = len(run.deleted), run.succeeded
        elif name == "hj":
            run = hj_es(inst, time_limit_s=cfg.timeout_s)
            deleted, succeeded = len(run.deleted), run.succeeded
        else:
            run = random_es(inst, seed, time_limit_s=cfg.timeout_s)
            deleted, succeeded = len(run.deleted), run.succeeded
        elapsed_ms = (time.perf_counter() - start) * 1000.0
        status = "true" if succeeded else "false"
    except BaselineTimeout:
        elapsed_ms = (time.perf_counter() - start) * 1000.0
        deleted, status = -1, "timeout"
    return BenchRecord(
        dataset=cfg.dataset,
        s_size=cfg.s_size,
        algorithm=name,
        edges_deleted=deleted,
        succeeded=status,
        time_ms=elapsed_ms if cfg.record_times else 0.0,
        seed=seed,
    )


def run_bench(cfg: BenchConfig) -> list[BenchRecord]:
    cfg.validate()
    inst = bench_instance(cfg)
    records: list[BenchRecord] = []
    for name in cfg.algorithms:
        for rep in range(cfg.repetitions):
            records.append(_run_one(name, inst, cfg, rep))

    fpta_counts = [r.edges_deleted for r in records if r.algorithm == "fpta" and r.succeeded == "true"]
    if fpta_counts:
        best = min(fpta_counts)
        for r in records:
            if r.algorithm != "fpta" and r.succeeded == "true":
                assert best <= r.edges_deleted, (
                    f"optimal solver deleted {best} edges but {r.algorithm} deleted {r.edges_deleted}"
                )
    return records


def emit_csv(records: list[BenchRecord]) -> str:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            f"{r.dataset},{r.s_size},{r.algorithm},{r.edges_deleted},{r.succeeded},{r.time_ms:.3f},{r.seed}"
        )
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[BenchRecord]:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("unrecognized CSV header")
    records = []
    for line in lines[1:]:
        dataset, s_size, algorithm, deleted, succeeded, time_ms, seed = line.split(",")
        records.append(
            BenchRecord(
                dataset=dataset,
                s_size=int(s_size),
                algorithm=algorithm,
                edges_deleted=int(deleted),
                succeeded=succeeded,
                time_ms=float(time_ms),
                seed=int(seed),
            )
        )
    return records
