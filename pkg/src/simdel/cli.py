"""Command-line interface.

Subcommands: solve, baseline, oracle, approx, gen, bench, report.  Result
records are emitted as JSON (stdout or --out); bench writes CSV and can
render figures next to it.  Exit status is 0 on success and 1 on
validation or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .baselines import greedy_es, hj_es, random_es
from .bench import BenchConfig, emit_csv, parse_csv, run_bench
from .dp import solve_es_dp, solve_rts_dp
from .exact import SolveMode, approx_es, solve_es
from .generators import (
    PvcInstance,
    SetCoverFamily,
    gadget_pad_avg_degree,
    gadget_pvc_to_rts,
    gadget_usc_to_rms,
    gadget_vc3_to_rms,
    gen_ba,
    gen_er,
    uniformize_family,
)
from .graph import Graph, parse_edge_list, write_edge_list
from .ilp import build_ilp, dump_model, solve_rms_ilp, solve_rts_ilp
from .instance import (
    ProblemKind,
    Solution,
    kind_from_name,
    load_instance,
    save_instance,
    write_instance,
)
from .oracle import oracle_decide


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _solution_payload(solution: Solution, time_ms: float) -> dict:
    return {
        "feasible": solution.feasible,
        "deleted": [list(e) for e in sorted(solution.deleted)],
        "size": len(solution.deleted),
        "residual_per_pair": {f"{x},{y}": c for (x, y), c in sorted(solution.residual_per_pair.items())},
        "time_ms": round(time_ms, 3),
    }


def _load_graph(path: str) -> Graph:
    graph, _ = parse_edge_list(Path(path).read_text())
    return graph


def _cmd_solve(args: argparse.Namespace) -> None:
    inst = load_instance(args.instance)
    kind = kind_from_name(args.problem)
    if inst.kind is not kind:
        raise ValueError(f"instance file is {inst.kind.value!r} but --problem says {kind.value!r}")
    algo = args.algo
    if algo is None:
        algo = "vc" if kind is ProblemKind.ELIMINATING else "ilp"

    if args.dump_model:
        if kind is ProblemKind.ELIMINATING:
            raise ValueError("--dump-model applies to reducing-total and reducing-max instances")
        sys.stderr.write(dump_model(build_ilp(inst)))

    start = time.perf_counter()
    if kind is ProblemKind.ELIMINATING:
        if algo == "vc":
            solution = solve_es(inst, SolveMode(args.mode))
        elif algo == "dp":
            if args.mode != "decide":
                raise ValueError("the dp solver answers the decision problem only")
            solution = solve_es_dp(inst)
        else:
            raise ValueError(f"unknown eliminating-problem algorithm {algo!r}")
    elif kind is ProblemKind.REDUCING_TOTAL:
        if args.mode != "decide":
            raise ValueError("threshold problems are decision problems; use --mode decide")
        if algo == "ilp":
            solution = solve_rts_ilp(inst)
        elif algo == "dp":
            solution = solve_rts_dp(inst)
        else:
            raise ValueError(f"unknown reducing-total algorithm {algo!r}")
    else:
        if args.mode != "decide":
            raise ValueError("threshold problems are decision problems; use --mode decide")
        if algo != "ilp":
            raise ValueError("reducing-max is solved by the ilp engine only")
        solution = solve_rms_ilp(inst)
    elapsed = (time.perf_counter() - start) * 1000.0

    payload = {"problem": kind.value, "algo": algo, "mode": args.mode}
    payload.update(_solution_payload(solution, elapsed))
    _emit(payload, args.out)


def _cmd_baseline(args: argparse.Namespace) -> None:
    inst = load_instance(args.instance)
    start = time.perf_counter()
    if args.algo == "greedy":
        run = greedy_es(inst, time_limit_s=args.timeout)
    elif args.algo == "hj":
        run = hj_es(inst, time_limit_s=args.timeout)
    else:
        run = random_es(inst, args.seed, time_limit_s=args.timeout)
    elapsed = (time.perf_counter() - start) * 1000.0
    _emit(
        {
            "algorithm": run.algorithm,
            "deleted": [list(e) for e in run.deleted],
            "size": len(run.deleted),
            "succeeded": run.succeeded,
            "iterations": run.iterations,
            "seed": run.seed,
            "time_ms": round(elapsed, 3),
        },
        args.out,
    )


def _cmd_oracle(args: argparse.Namespace) -> None:
    inst = load_instance(args.instance)
    start = time.perf_counter()
    result = oracle_decide(inst, optimize=args.optimum)
    elapsed = (time.perf_counter() - start) * 1000.0
    _emit(
        {
            "feasible": result.feasible,
            "optimum": result.optimum,
            "witness": [list(e) for e in sorted(result.witness)] if result.witness is not None else None,
            "time_ms": round(elapsed, 3),
        },
        args.out,
    )


def _cmd_approx(args: argparse.Namespace) -> None:
    inst = load_instance(args.instance)
    start = time.perf_counter()
    solution = approx_es(inst)
    elapsed = (time.perf_counter() - start) * 1000.0
    _emit(_solution_payload(solution, elapsed), args.out)


def _parse_sets(text: str) -> list[frozenset[int]]:
    sets = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sets.append(frozenset(int(tok) for tok in chunk.replace(",", " ").split()))
    return sets


def _cmd_gen(args: argparse.Namespace) -> None:
    model = args.model
    if model == "ba":
        graph = gen_ba(args.n, args.attach, args.seed)
        Path(args.out).write_text(write_edge_list(graph))
        return
    if model == "er":
        graph = gen_er(args.n, args.edges, args.seed)
        Path(args.out).write_text(write_edge_list(graph))
        return
    if model == "star-pvc":
        source = _load_graph(args.source_graph)
        inst = gadget_pvc_to_rts(PvcInstance(source, args.budget, args.cover_target))
    elif model == "usc":
        sets = _parse_sets(args.sets)
        if args.uniformize:
            family = uniformize_family(args.universe, sets, args.budget)
        else:
            family = SetCoverFamily(args.universe, tuple(sets), args.budget)
        inst = gadget_usc_to_rms(family)
    elif model == "vc3reg":
        source = _load_graph(args.source_graph)
        inst = gadget_vc3_to_rms(source, args.budget)
    elif model == "pad":
        inst = gadget_pad_avg_degree(load_instance(args.instance))
    else:
        raise ValueError(f"unknown model {model!r}")
    save_instance(inst, args.out)


def _cmd_bench(args: argparse.Namespace) -> None:
    if args.graph:
        graph = _load_graph(args.graph)
        dataset = Path(args.graph).stem
    elif args.model == "er":
        graph = gen_er(args.n, args.edges, args.graph_seed)
        dataset = f"er-n{args.n}-m{args.edges}-s{args.graph_seed}"
    elif args.model == "ba":
        graph = gen_ba(args.n, args.attach, args.graph_seed)
        dataset = f"ba-n{args.n}-a{args.attach}-s{args.graph_seed}"
    else:
        raise ValueError("bench needs --graph FILE or --model er|ba with parameters")
    if args.dataset:
        dataset = args.dataset

    cfg = BenchConfig(
        dataset=dataset,
        graph=graph,
        s_size=args.s_size,
        seed=args.seed,
        algorithms=tuple(name.strip() for name in args.algos.split(",") if name.strip()),
        repetitions=args.reps,
        timeout_s=args.timeout,
        record_times=not args.no_times,
    )
    records = run_bench(cfg)
    csv_text = emit_csv(records)
    if args.out:
        Path(args.out).write_text(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.figures:
        from .plots import render_figures

        out_dir = Path(args.out).parent if args.out else Path(".")
        stem = Path(args.out).stem if args.out else "bench"
        for path in render_figures(records, out_dir, stem):
            sys.stderr.write(f"wrote {path}\n")


def _cmd_report(args: argparse.Namespace) -> None:
    from .plots import render_figures

    records = parse_csv(Path(args.csv).read_text())
    for path in render_figures(records, args.out_dir, args.stem):
        sys.stdout.write(f"{path}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simdel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact solvers")
    p.add_argument("--problem", required=True, choices=["es", "rts", "rms"])
    p.add_argument("--mode", default="decide", choices=["decide", "minimize"])
    p.add_argument("--algo", choices=["vc", "ilp", "dp"])
    p.add_argument("--instance", required=True)
    p.add_argument("--dump-model", action="store_true", help="print the feasibility model to stderr")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("baseline", help="heuristic baselines")
    p.add_argument("--algo", required=True, choices=["greedy", "hj", "random"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timeout", type=float, default=None)
    p.add_argument("--instance", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_baseline)

    p = sub.add_parser("oracle", help="brute-force ground truth on small instances")
    p.add_argument("--instance", required=True)
    p.add_argument("--optimum", action="store_true", help="also search beyond the budget for the minimum")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("approx", help="factor-2 approximation for eliminating instances")
    p.add_argument("--instance", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("gen", help="graph models and reduction gadgets")
    p.add_argument("--model", required=True, choices=["ba", "er", "star-pvc", "usc", "vc3reg", "pad"])
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--attach", type=int, default=2)
    p.add_argument("--edges", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--source-graph")
    p.add_argument("--instance")
    p.add_argument("--budget", type=int, default=0)
    p.add_argument("--cover-target", type=int, default=0)
    p.add_argument("--universe", type=int, default=0)
    p.add_argument("--sets", default="")
    p.add_argument("--uniformize", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="benchmark harness; writes CSV")
    p.add_argument("--graph", help="edge-list file")
    p.add_argument("--model", choices=["er", "ba"])
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--edges", type=int, default=2000)
    p.add_argument("--attach", type=int, default=2)
    p.add_argument("--graph-seed", type=int, default=0)
    p.add_argument("--dataset", help="display name override")
    p.add_argument("--s-size", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algos", default="fpta,greedy,hj,random")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--timeout", type=float, default=300.0)
    p.add_argument("--no-times", action="store_true", help="zero the time column for reproducible CSV")
    p.add_argument("--figures", action="store_true", help="render charts next to the CSV")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("report", help="render figures from an existing bench CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--stem", default="bench")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
