"""Compare the compiled search kernel against the pure-Python fallback.

Runs the same branch-set searches through kernels.search_numba and
kernels.search_python and prints per-case and total timings.  The
dispatcher honors MINORKIT_NO_NUMBA=1; here both kernels are timed
directly so one run shows the speedup.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from minorkit import kernels
from minorkit.cockade import random_mp1_cockade, realize
from minorkit.minor import _decision_order, _is_complete
from minorkit.named import complete, icosahedron, petersen_complement
from minorkit.verifier import sample_constrained


def run_kernel(kernel, g, h):
    return kernel(
        tuple(g.rows),
        g.order,
        h.order,
        tuple(h.rows[i] for i in range(h.order)),
        _is_complete(h),
        tuple(_decision_order(g)),
        0,
    )


def cases():
    k6 = complete(6)
    yield "icosahedron / K6 (absent)", icosahedron(), k6
    yield "petersen complement / K6 (present)", petersen_complement(), k6
    for i in range(3):
        g = realize(random_mp1_cockade((1, i), 12))
        yield f"order-12 cockade #{i} / K6 (absent)", g, k6
    for i, g in enumerate(sample_constrained(12, 6, (36, 36), 5, 3)):
        yield f"order-12 6-regular #{i} / K6 (present)", g, k6
    yield "order-13 cockade / K6 (absent)", realize(random_mp1_cockade(2, 13)), k6


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    # trigger jit compilation outside the timed region
    run_kernel(kernels.search_numba, complete(7), complete(6))

    totals = {"numba": 0.0, "python": 0.0}
    print(f"{'case':45s} {'numba':>10s} {'python':>10s} {'speedup':>8s}")
    for label, g, h in cases():
        times = {}
        for name, kernel in (("numba", kernels.search_numba), ("python", kernels.search_python)):
            best = min(
                time_one(kernel, g, h) for _ in range(args.repeat)
            )
            times[name] = best
            totals[name] += best
        speedup = times["python"] / times["numba"] if times["numba"] else float("inf")
        print(f"{label:45s} {times['numba']:9.4f}s {times['python']:9.4f}s {speedup:7.1f}x")
    speedup = totals["python"] / totals["numba"]
    print(f"{'total':45s} {totals['numba']:9.4f}s {totals['python']:9.4f}s {speedup:7.1f}x")


def time_one(kernel, g, h):
    t0 = time.perf_counter()
    run_kernel(kernel, g, h)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
