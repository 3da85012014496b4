"""Figure rendering for benchmark results.

The CSV is the primary product; these helpers turn it into the two
standard comparison charts (edges deleted and wall time per algorithm,
log-scaled like the usual benchmark plots) saved next to it.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import BenchRecord


def _group_means(records: list[BenchRecord], field: str) -> tuple[list[str], list[float]]:
    order: list[str] = []
    sums: dict[str, float] = {}
    counts: dict[str, int] = {}
    for r in records:
        if r.succeeded == "timeout":
            continue
        if r.algorithm not in sums:
            order.append(r.algorithm)
            sums[r.algorithm] = 0.0
            counts[r.algorithm] = 0
        sums[r.algorithm] += float(getattr(r, field))
        counts[r.algorithm] += 1
    return order, [sums[a] / counts[a] for a in order]


def _bar_chart(names: list[str], values: list[float], ylabel: str, title: str, path: Path) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(names, [max(v, 0.0) for v in values], color="#4878a8")
    if any(v > 0 for v in values):
        ax.set_yscale("symlog")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_figures(records: list[BenchRecord], out_dir: str | Path, stem: str = "bench") -> list[Path]:
    """Write quality and timing charts; returns the created paths."""
    if not records:
        raise ValueError("no records to plot")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    dataset = records[0].dataset
    s_size = records[0].s_size

    paths = []
    names, deleted = _group_means(records, "edges_deleted")
    quality_path = out / f"{stem}_edges_deleted.png"
    _bar_chart(names, deleted, "edges deleted (mean)", f"{dataset}, |S|={s_size}: deletions", quality_path)
    paths.append(quality_path)

    names, times = _group_means(records, "time_ms")
    timing_path = out / f"{stem}_time_ms.png"
    _bar_chart(names, times, "wall time, ms (mean)", f"{dataset}, |S|={s_size}: solver time", timing_path)
    paths.append(timing_path)
    return paths
