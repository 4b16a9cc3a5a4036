"""Timing harness for the tree-graph solver's n^1.5 * |R| growth."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .dispersal import satisfies
from .generate import generate_instance
from .treegraph import solve_treegraph

DEFAULT_SIZES = ((1000, 1000), (4000, 4000))
DEFAULT_SEED = 20240601


@dataclass
class BenchRow:
    n: int
    requests: int
    median: float
    times: list[float]
    cost: int
    measured_ratio: Optional[float] = None
    predicted_ratio: Optional[float] = None

    def model(self) -> float:
        return self.n ** 1.5 * self.requests


def time_treegraph(n: int, requests: int, seed: int = DEFAULT_SEED, runs: int = 5,
                   check: bool = True) -> BenchRow:
    inst = generate_instance("tree-graph", n, seed, requests=requests)
    g, r = inst.graph, inst.requests
    d = solve_treegraph(g, r)  # warm-up
    if check and not satisfies(g, d, r):
        raise AssertionError(f"infeasible tree-graph solution at n={n}")
    times = []
    for _ in range(runs):
        start = time.perf_counter()
        solve_treegraph(g, r, check=False)
        times.append(time.perf_counter() - start)
    return BenchRow(n, requests, statistics.median(times), times, d.cost())


def sweep(sizes: Iterable[Sequence[int]] = DEFAULT_SIZES, seed: int = DEFAULT_SEED,
          runs: int = 5) -> list[BenchRow]:
    rows: list[BenchRow] = []
    for n, k in sizes:
        row = time_treegraph(n, k, seed, runs)
        if rows:
            base = rows[0]
            row.measured_ratio = row.median / base.median
            row.predicted_ratio = row.model() / base.model()
        rows.append(row)
    return rows


def format_table(rows: list[BenchRow]) -> str:
    out = [f"{'n':>8} {'|R|':>8} {'median_s':>10} {'cost':>8} {'ratio':>8} {'model':>8}"]
    for row in rows:
        ratio = "-" if row.measured_ratio is None else f"{row.measured_ratio:.2f}"
        model = "-" if row.predicted_ratio is None else f"{row.predicted_ratio:.2f}"
        out.append(f"{row.n:>8} {row.requests:>8} {row.median:>10.4f} {row.cost:>8} {ratio:>8} {model:>8}")
    return "\n".join(out)
