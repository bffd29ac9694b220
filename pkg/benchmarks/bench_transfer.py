"""Timing comparison of the row-sweep DP backends.

Runs every available backend (python, numpy, and numba when installed) on a
range of sizes, checks that they produce identical polynomials, and prints a
wall-clock table.  The numba backend is warmed up once before timing so that
JIT compilation is not charged to the measurement.

    python3 benchmarks/bench_transfer.py [--sizes 8,10,12,13] [--repeats 3]
"""

import argparse
import time

from asmice.transfer import INT64_SAFE_N, available_backends, transfer_count


def time_backend(backend, n, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = transfer_count(n, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="8,10,12,13",
                        help="comma-separated n values")
    parser.add_argument("--repeats", type=int, default=3,
                        help="timed runs per cell (best is reported)")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = available_backends()
    if "numba" in backends:
        transfer_count(5, backend="numba")      # JIT warm-up
    print(f"backends: {', '.join(backends)}   "
          f"(int64 backends are exact up to n={INT64_SAFE_N})")

    header = f"{'n':>4} " + "".join(f"{b:>12}" for b in backends)
    print(header)
    print("-" * len(header))
    for n in sizes:
        cells = []
        polys = {}
        for b in backends:
            if b != "python" and n > INT64_SAFE_N:
                cells.append(f"{'-':>12}")
                continue
            dt, poly = time_backend(b, n, args.repeats)
            polys[b] = poly
            cells.append(f"{dt * 1000:>10.1f}ms")
        if len(set(map(str, polys.values()))) != 1:
            raise SystemExit(f"backend disagreement at n={n}")
        print(f"{n:>4} " + "".join(cells))
    print("all timed backends agree exactly")


if __name__ == "__main__":
    main()
