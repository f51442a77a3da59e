"""Benchmark harness: seeded random inputs, wall-clock timing of the
algorithm call only (generation and serialization excluded), CSV output.
"""

import math
import time
from dataclasses import dataclass

from bicliques.decomposer import decompose
from bicliques.errors import InvalidCounts
from bicliques.finder import find_biclique
from bicliques.gen import gnm
from bicliques.params import general_params

__all__ = ["BenchRecord", "CSV_HEADER", "edges_from_expr", "run_bench", "records_to_csv"]

CSV_HEADER = "n,m,seed,q_target,r,q_achieved,fallback_used,subsets_scanned,runtime_ms,complexity,ratio"


@dataclass
class BenchRecord:
    n: int
    m: int
    seed: int
    runtime_ms: float
    q_target: int = None
    r: int = None
    q_achieved: int = None
    fallback_used: bool = None
    subsets_scanned: int = None
    complexity: int = None
    ratio: float = None

    def csv_row(self):
        def cell(x):
            if x is None:
                return ""
            if isinstance(x, bool):
                return "true" if x else "false"
            if isinstance(x, float):
                return f"{x:.12g}"
            return str(x)

        return ",".join([
            cell(self.n), cell(self.m), cell(self.seed), cell(self.q_target),
            cell(self.r), cell(self.q_achieved), cell(self.fallback_used),
            cell(self.subsets_scanned), f"{self.runtime_ms:.3f}",
            cell(self.complexity), cell(self.ratio),
        ])


def edges_from_expr(expr, n):
    """Edge count for one of the supported density expressions."""
    expr = expr.strip()
    if expr == "3n^1.5":
        m = math.isqrt(9 * n ** 3)
        return m if m * m >= 9 * n ** 3 else m + 1
    if expr == "8n^1.5":
        return math.isqrt(64 * n ** 3) + 1
    if expr == "n^2/4":
        return n * n // 4
    try:
        return int(expr)
    except ValueError:
        raise InvalidCounts(f"unsupported edge expression {expr!r}") from None


def run_bench(suite, sizes, edges_expr, seeds, threads=None):
    """One record per (n, seed) cell, in deterministic (n, m, seed) order."""
    if suite not in ("find", "decompose"):
        raise InvalidCounts(f"unknown bench suite {suite!r}")
    records = []
    warmed = False
    for n in sorted(set(sizes)):
        m = edges_from_expr(edges_expr, n)
        for seed in sorted(set(seeds)):
            g = gnm(n, m, seed)
            if not warmed:
                find_biclique(g, threads)  # settle lazy module state
                warmed = True
            if suite == "find":
                t0 = time.perf_counter_ns()
                rep = find_biclique(g, threads)
                dt = (time.perf_counter_ns() - t0) / 1e6
                ps = general_params(n, m)
                records.append(BenchRecord(
                    n, m, seed, dt, q_target=rep.q_target, r=ps.r,
                    q_achieved=rep.q_achieved, fallback_used=rep.fallback_used,
                    subsets_scanned=rep.subsets_scanned,
                ))
            else:
                t0 = time.perf_counter_ns()
                d = decompose(g, threads)
                dt = (time.perf_counter_ns() - t0) / 1e6
                ratio = d.complexity * math.log(n) / (n * n)
                records.append(BenchRecord(
                    n, m, seed, dt, complexity=d.complexity, ratio=ratio,
                ))
    return records


def records_to_csv(records):
    return "\n".join([CSV_HEADER] + [r.csv_row() for r in records]) + "\n"
