#!/usr/bin/env python3
"""Compare the compiled kernel backend against the pure-Python fallback.

Re-executes itself once per backend with BICLIQUES_BACKEND set so each run
goes through the real import-time selection, then prints a side-by-side
table. Timings cover the algorithm calls only.

Usage:
    python benchmarks/compare_backends.py
    python benchmarks/compare_backends.py --find-sizes 512,1024 --decompose-sizes 128,256
"""

import argparse
import json
import math
import os
import subprocess
import sys
import time


def parse_sizes(text):
    return [int(t) for t in text.split(",") if t]


def measure(find_sizes, decompose_sizes, seeds):
    from bicliques.decomposer import decompose
    from bicliques.finder import find_biclique
    from bicliques.gen import gnm
    from bicliques.kernels import BACKEND

    rows = []
    for n in find_sizes:
        graphs = [gnm(n, n * n // 4, s) for s in range(seeds)]
        find_biclique(graphs[0])  # warm up lazy state
        times = []
        for g in graphs:
            t0 = time.perf_counter_ns()
            find_biclique(g)
            times.append((time.perf_counter_ns() - t0) / 1e6)
        rows.append((f"find G(n,n^2/4) n={n}", sorted(times)[len(times) // 2]))
    for n in decompose_sizes:
        g = gnm(n, n * n // 4, 1)
        t0 = time.perf_counter_ns()
        decompose(g)
        rows.append((f"decompose G(n,n^2/4) n={n}",
                     (time.perf_counter_ns() - t0) / 1e6))
    return {"backend": BACKEND, "rows": rows}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--find-sizes", default="512,1024,2048")
    ap.add_argument("--decompose-sizes", default="128,256,512")
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.child:
        result = measure(parse_sizes(args.find_sizes),
                         parse_sizes(args.decompose_sizes), args.seeds)
        print(json.dumps(result))
        return

    results = {}
    for backend in ("c", "py"):
        env = dict(os.environ, BICLIQUES_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--child",
             "--find-sizes", args.find_sizes,
             "--decompose-sizes", args.decompose_sizes,
             "--seeds", str(args.seeds)],
            env=env, capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"backend {backend} failed:\n{proc.stderr}", file=sys.stderr)
            if backend == "py":
                sys.exit(1)
            continue
        data = json.loads(proc.stdout.strip().split("\n")[-1])
        assert data["backend"] == backend, "backend selection did not take effect"
        results[backend] = dict((k, v) for k, v in data["rows"])

    labels = list(results.get("c", results["py"]).keys())
    width = max(len(s) for s in labels)
    print(f"{'case':<{width}}  {'compiled ms':>12}  {'python ms':>12}  {'speedup':>8}")
    for label in labels:
        c = results.get("c", {}).get(label, math.nan)
        p = results.get("py", {}).get(label, math.nan)
        speed = p / c if c and not math.isnan(c) else math.nan
        print(f"{label:<{width}}  {c:>12.2f}  {p:>12.2f}  {speed:>7.1f}x")


if __name__ == "__main__":
    main()
