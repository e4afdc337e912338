#!/usr/bin/env python3
"""Compare the compiled and pure kernel backends: same results, different speed.

Runs each kernel on seeded instances with both backends, checks the outputs
are identical, and prints a timing table. Optionally writes the table as TSV.

Usage:
    python benchmarks/compare_backends.py [--out table.tsv]
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

import numpy as np

from tspkit import kernels
from tspkit.data import GeneratorConfig, generate_random
from tspkit.solvers.base import make_rng
from tspkit.solvers.greedy import _sorted_edges


def timed(fn, reps: int = 5) -> float:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def cases():
    """(label, callable-factory, identity-check) per kernel and size."""
    out = []
    for n in (50, 120, 250):
        inst = generate_random(GeneratorConfig(n=n, extent=4000.0, seed=n))
        D = inst.distance_matrix()
        coords = inst.coords
        order = make_rng(n).permutation(n).astype(np.int64)
        orders = np.stack([make_rng(1000 + n + i).permutation(n).astype(np.int64) for i in range(64)])

        out.append((
            f"two_opt n={n}",
            lambda b, c=coords, o=order, d=D: b.two_opt(c, o, d, first_improvement=True),
            lambda r: (r[0].tolist(), r[1]),
        ))
        out.append((
            f"batch_lengths n={n} m=64",
            lambda b, c=coords, os_=orders, d=D: b.batch_tour_lengths(c, os_, d),
            lambda r: r.tolist(),
        ))
        u, v = _sorted_edges(coords)
        out.append((
            f"greedy_scan n={n}",
            lambda b, uu=u, vv=v, nn=n: b.greedy_scan(uu, vv, nn),
            lambda r: r.tolist(),
        ))
    for n in (9, 10, 11):
        inst = generate_random(GeneratorConfig(n=n, extent=4000.0, seed=n))
        D = inst.distance_matrix()
        out.append((
            f"exact_search n={n}",
            lambda b, c=inst.coords, d=D: b.exact_search(c, d),
            lambda r: (r[0].tolist(), r[1]),
        ))
    return out


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", help="also write the table as TSV")
    args = parser.parse_args(argv)

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled kernels not built; nothing to compare", file=sys.stderr)
        return 1
    pure, compiled = backends["pure"], backends["compiled"]

    rows = []
    mismatches = 0
    for label, make_call, canon in cases():
        result_pure = canon(make_call(pure))
        result_compiled = canon(make_call(compiled))
        same = result_pure == result_compiled
        mismatches += 0 if same else 1
        t_pure = timed(lambda: make_call(pure))
        t_compiled = timed(lambda: make_call(compiled))
        rows.append((label, t_pure, t_compiled, t_pure / t_compiled, same))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel / size'.ljust(width)}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}  identical")
    for label, tp, tc, speedup, same in rows:
        print(f"{label.ljust(width)}  {tp * 1e3:>8.3f}ms  {tc * 1e3:>8.3f}ms  {speedup:>7.1f}x  {same}")
    print(f"\nactive backend at import: {kernels.BACKEND}")

    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write("kernel\tpure_s\tcompiled_s\tspeedup\tidentical\n")
            for label, tp, tc, speedup, same in rows:
                f.write(f"{label}\t{tp:.9f}\t{tc:.9f}\t{speedup:.3f}\t{same}\n")
        print(f"wrote {args.out}")

    if mismatches:
        print(f"error: {mismatches} kernel(s) disagreed between backends", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
