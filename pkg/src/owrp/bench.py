"""Runtime scaling of the monotone routing pipeline."""
from __future__ import annotations

import gc
import statistics
import time
from typing import NamedTuple, Sequence

import numpy as np

from .decomposition import vertical_decompose
from .generator import GenSpec, gen_monotone
from .geometry import OrthoPolygon
from .route import solve_decomposition

BENCH_HEIGHT = 64


class BenchRow(NamedTuple):
    size: int  # vertex count of the instances
    median_ns: int
    ns_per_vertex: float


def instance(size: int, seed: int) -> OrthoPolygon:
    """Monotone polygon with ``size`` vertices (rounded to an even count >= 4)."""
    columns = max(1, (size - 2) // 2)
    return gen_monotone(GenSpec(columns=columns, max_height=BENCH_HEIGHT, seed=seed))


def time_pipeline(poly: OrthoPolygon) -> int:
    """Nanoseconds for decompose, partition, aligns, build and trim.

    The cyclic garbage collector is paused while timing, as ``timeit`` does;
    the pipeline creates no reference cycles.
    """
    enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter_ns()
        solve_decomposition(vertical_decompose(poly), trim=True)
        return time.perf_counter_ns() - start
    finally:
        if enabled:
            gc.enable()


def loglog_slope(sizes: Sequence[int], times: Sequence[float]) -> float:
    if len(sizes) < 2:
        return float("nan")
    slope, _ = np.polyfit(np.log(sizes), np.log(times), 1)
    return float(slope)


def run_bench(sizes: Sequence[int], seed: int, repeats: int = 3) -> tuple[list[BenchRow], float]:
    """Median pipeline time per size; instance ``r`` of a size uses ``seed + r``."""
    rows = []
    for size in sizes:
        samples = []
        n = size
        for r in range(repeats):
            poly = instance(size, seed + r)
            n = poly.n
            samples.append(time_pipeline(poly))
        med = int(statistics.median(samples))
        rows.append(BenchRow(n, med, med / n))
    return rows, loglog_slope([r.size for r in rows], [r.median_ns for r in rows])


def to_csv(rows: Sequence[BenchRow], slope: float) -> str:
    lines = ["size,median_ns,ns_per_vertex,loglog_slope"]
    lines += [f"{r.size},{r.median_ns},{r.ns_per_vertex:.2f},{slope:.4f}" for r in rows]
    return "\n".join(lines) + "\n"
