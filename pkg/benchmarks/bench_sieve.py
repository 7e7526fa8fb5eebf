"""Benchmark the two sieve backends against each other.

Runs the compiled extension (when built) and the NumPy fallback over a range
of limits, checks that outputs match bitwise, and prints a small JSON report.

Usage:
    python benchmarks/bench_sieve.py --limits 1e5,1e6,1e7 --repeats 3
"""

import argparse
import json
import time

import numpy as np

from edgebounds import _spf_fallback
from edgebounds._kernel import BACKEND, spf_array


def _best_of(fn, limit, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(limit)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limits", default="1e5,1e6,1e7",
                        help="comma-separated sieve limits")
    parser.add_argument("--repeats", type=int, default=3,
                        help="timing repeats per limit (best-of)")
    args = parser.parse_args()

    limits = [int(float(s)) for s in args.limits.split(",")]
    rows = []
    for limit in limits:
        fast_s, fast = _best_of(spf_array, limit, args.repeats)
        slow_s, slow = _best_of(_spf_fallback.spf_array, limit, args.repeats)
        rows.append({
            "limit": limit,
            "dispatch_backend": BACKEND,
            "dispatch_seconds": round(fast_s, 6),
            "fallback_seconds": round(slow_s, 6),
            "speedup": round(slow_s / fast_s, 3) if fast_s > 0 else None,
            "bitwise_equal": bool(np.array_equal(fast, slow)),
        })
    print(json.dumps({"backend": BACKEND, "rows": rows}, indent=2))


if __name__ == "__main__":
    main()
