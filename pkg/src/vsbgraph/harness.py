"""Experiment harness: generate instances, run both extractors, tabulate.

Each row of an experiment is one generated instance (size n, seed) on
which both extraction strategies run from identical inputs.  Timing
uses a monotonic high-resolution CPU clock (process time) around the
extraction call only, excluding generation and any verification done by
callers; CPU time keeps per-row comparisons stable under scheduler
noise, and the algorithms are single-threaded so it tracks wall time.
Times are reported in milliseconds and are the only non-reproducible
columns.  Rows run sequentially by default ("one core" comparability);
opt-in process parallelism distributes whole rows, never the inside of
an algorithm, and output keeps plan order regardless of completion
order.
"""
from __future__ import annotations

import csv
import gc
import io
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .digraph import Digraph
from .errors import GraphError
from .extraction import ExtractionResult, minimal_k_vsb, two_phase_3vsb
from .generator import InstanceSpec, generate

CSV_COLUMNS = (
    "n",
    "m_input",
    "seed",
    "algo1_time_ms",
    "algo1_edges",
    "algo2_time_ms",
    "algo2_edges",
)

_MD_HEADER = (
    "| Input (V, E) | Algorithm 1 Time | Algorithm 1 Edges "
    "| Algorithm 2 Time | Algorithm 2 Edges |"
)


@dataclass(frozen=True)
class ExperimentRow:
    """One instance: input size plus per-algorithm time and edge count.

    Algorithm 1 is the full greedy minimal extraction, algorithm 2 the
    two-phase variant with a protected backbone.
    """

    n: int
    m_input: int
    seed: int
    algo1_time_ms: float
    algo1_edges: int
    algo2_time_ms: float
    algo2_edges: int

    def __post_init__(self) -> None:
        for count in (self.algo1_edges, self.algo2_edges):
            if count > self.m_input:
                raise ValueError("output edge count exceeds input edge count")
            if count < 3 * self.n:
                raise ValueError("output edge count below the 3n degree bound")


@dataclass(frozen=True)
class ExperimentPlan:
    """Sizes to run, seeds per size (1..seeds_per_size), m0 = multiplier*n."""

    sizes: tuple[int, ...]
    seeds_per_size: int = 3
    multiplier: int = 8
    fmt: str = "csv"

    def __post_init__(self) -> None:
        if not self.sizes:
            raise ValueError("plan needs at least one instance size")
        if any(n < 4 for n in self.sizes):
            raise ValueError("instance sizes must be at least 4")
        if self.seeds_per_size < 1:
            raise ValueError("seeds_per_size must be at least 1")
        if self.multiplier < 1:
            raise ValueError("multiplier must be at least 1")
        if self.fmt not in ("csv", "md", "markdown"):
            raise ValueError(f"unknown output format: {self.fmt!r}")


def _timed_extractions(
    g: Digraph,
) -> tuple[ExtractionResult, float, ExtractionResult, float]:
    """Both extractors on g; per-call CPU milliseconds, GC paused (as timeit
    does).  Nothing here builds reference cycles, so refcounting reclaims
    the working copies even while collection is off."""
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.process_time()
        full = minimal_k_vsb(g, 3)
        t1 = time.process_time()
        two_phase = two_phase_3vsb(g)
        t2 = time.process_time()
    finally:
        if was_enabled:
            gc.enable()
    return full, (t1 - t0) * 1e3, two_phase, (t2 - t1) * 1e3


def _run_row(task: tuple[int, int, int]) -> ExperimentRow:
    n, initial_edges, seed = task
    instance = generate(InstanceSpec(n, initial_edges, seed))
    g = instance.graph
    full, full_ms, two_phase, two_phase_ms = _timed_extractions(g)
    return ExperimentRow(
        n=n,
        m_input=g.m,
        seed=seed,
        algo1_time_ms=full_ms,
        algo1_edges=full.subgraph.m,
        algo2_time_ms=two_phase_ms,
        algo2_edges=two_phase.subgraph.m,
    )


def run_experiment(plan: ExperimentPlan, workers: int = 1) -> list[ExperimentRow]:
    """Run every (size, seed) cell; a failing row is reported and skipped."""
    tasks = [
        (n, plan.multiplier * n, seed)
        for n in plan.sizes
        for seed in range(1, plan.seeds_per_size + 1)
    ]
    rows: list[ExperimentRow] = []
    if workers <= 1:
        for task in tasks:
            try:
                rows.append(_run_row(task))
            except GraphError as exc:
                _report_row_failure(task, exc)
        return rows
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_row, task) for task in tasks]
        for task, future in zip(tasks, futures):
            try:
                rows.append(future.result())
            except GraphError as exc:
                _report_row_failure(task, exc)
    return rows


def _report_row_failure(task: tuple[int, int, int], exc: GraphError) -> None:
    n, initial_edges, seed = task
    print(
        f"row (n={n}, m0={initial_edges}, seed={seed}) failed: {exc}",
        file=sys.stderr,
    )


def format_duration(ms: float) -> str:
    """Human-readable duration, e.g. 73000 ms -> '1 m 13 s'."""
    total = round(ms / 1000)
    if total == 0:
        return f"{ms:.0f} ms"
    hours, rest = divmod(total, 3600)
    minutes, seconds = divmod(rest, 60)
    parts = []
    if hours:
        parts.append(f"{hours} h")
    if minutes or hours:
        parts.append(f"{minutes} m")
    parts.append(f"{seconds} s")
    return " ".join(parts)


def emit_table(rows: list[ExperimentRow], fmt: str = "csv") -> str:
    """Render rows as CSV (machine columns) or a markdown table."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow(
                [
                    r.n,
                    r.m_input,
                    r.seed,
                    f"{r.algo1_time_ms:.0f}",
                    r.algo1_edges,
                    f"{r.algo2_time_ms:.0f}",
                    r.algo2_edges,
                ]
            )
        return buf.getvalue()
    if fmt in ("md", "markdown"):
        lines = [_MD_HEADER, "|---|---|---|---|---|"]
        for r in rows:
            lines.append(
                f"| ({r.n}, {r.m_input}) "
                f"| {format_duration(r.algo1_time_ms)} | {r.algo1_edges} "
                f"| {format_duration(r.algo2_time_ms)} | {r.algo2_edges} |"
            )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown output format: {fmt!r}")
