"""Acceptance criteria, one test per criterion.

Each test prints a single `ACCEPTANCE C<k> <slug>: PASS|FAIL` line (visible
with `pytest -s` or on failure) and then asserts. Expensive r200 solver runs
are shared between criteria through module-scoped fixtures.
"""

import statistics
import time

import numpy as np
import pytest
from conftest import rand_instance

from tspkit.bench import BenchConfig, emit, parse_records_csv, run_benchmark, summarize
from tspkit.bench import _baseline_length
from tspkit.core import Instance, tour_length
from tspkit.data import GeneratorConfig, fixture, generate_random, parse_instance, write_instance
from tspkit.solvers import GaParams, exact_tour, genetic, greedy_tour, random_tour, two_opt

REL = 1e-9


def report(criterion: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{criterion}: {detail}"


@pytest.fixture(scope="module")
def r200() -> Instance:
    inst = fixture("r200")
    inst.distance_matrix()
    return inst


@pytest.fixture(scope="module")
def att48() -> Instance:
    inst = fixture("att48")
    inst.distance_matrix()
    return inst


@pytest.fixture(scope="module")
def r200_runs(r200):
    """Five warm repeats of (greedy, two_opt-from-random, genetic) on r200."""
    greedy_tour(r200)
    two_opt(r200, random_tour(r200, 99).tour)
    genetic(r200, seed=99)
    repeats = []
    for i in range(5):
        g = greedy_tour(r200)
        t = two_opt(r200, random_tour(r200, i).tour)
        ga = genetic(r200, seed=i)
        repeats.append({"greedy": g, "two_opt": t, "genetic": ga})
    return repeats


def test_c1_oracle_dominance():
    violations = 0
    checked = 0
    for i in range(200):
        n = 5 + i % 5
        inst = rand_instance(n, 10_000 + i)
        optimum = exact_tour(inst).length
        lengths = [
            greedy_tour(inst).length,
            two_opt(inst, random_tour(inst, i).tour).length,
            genetic(inst, seed=i).length,
        ]
        checked += 1
        violations += sum(1 for ln in lengths if optimum > ln * (1 + REL))
    report("C1 oracle-dominance", violations == 0, f"{checked} instances, {violations} violations")


def test_c2_two_opt_certificate():
    sizes = [10] * 17 + [30] * 17 + [64] * 16
    worst = 0.0
    for i, n in enumerate(sizes):
        inst = rand_instance(n, 11_000 + i)
        order = two_opt(inst, random_tour(inst, i).tour).tour.order
        D = inst.distance_matrix()
        for a_pos in range(1, n - 1):
            a, b = order[a_pos - 1], order[a_pos]
            ks = np.arange(a_pos + 1, n)
            c = order[ks]
            d = order[(ks + 1) % n]
            delta = (D[a, c] + D[b, d]) - (D[a, b] + D[c, d])
            worst = min(worst, float(delta.min()))
    report("C2 two-opt-certificate", worst >= -1e-9, f"50 instances, worst delta {worst:.3e}")


def test_c3_greedy_plus_two_opt_near_exact():
    hits = 0
    for trial in range(100):
        n = 5 + trial % 4
        inst = rand_instance(n, 30_000 + trial)
        optimum = exact_tour(inst).length
        improved = two_opt(inst, greedy_tour(inst).tour).length
        if improved <= optimum * (1 + REL):
            hits += 1
    # Measured rate on this frozen seed set: 91/100 (recorded in README).
    report("C3 greedy+2opt-exactness", hits >= 90, f"{hits}/100 matched the optimum")


def test_c4_runtime_ordering(r200_runs):
    ordered = sum(
        1
        for rep in r200_runs
        if rep["greedy"].wall_time < rep["two_opt"].wall_time < rep["genetic"].wall_time
    )
    times = r200_runs[0]
    detail = (
        f"{ordered}/5 repeats ordered; sample ms: greedy={times['greedy'].wall_time * 1e3:.2f} "
        f"two_opt={times['two_opt'].wall_time * 1e3:.2f} genetic={times['genetic'].wall_time * 1e3:.0f}"
    )
    report("C4 runtime-ordering", ordered >= 3, detail)


def test_c5_ga_quality_on_r200(r200, r200_runs):
    baseline = _baseline_length(r200, 0, 32)
    greedy_len = r200_runs[0]["greedy"].length
    ga_mean = statistics.fmean(rep["genetic"].length for rep in r200_runs)
    ga_ratio = ga_mean / baseline
    greedy_ratio = greedy_len / baseline
    ok = ga_mean <= greedy_len and ga_ratio < greedy_ratio
    report(
        "C5 ga-beats-greedy",
        ok,
        f"GA mean {ga_mean:.0f} vs greedy {greedy_len:.0f}; ratios {ga_ratio:.4f} < {greedy_ratio:.4f}",
    )


def test_c6_att48_near_optimality(att48):
    restarts = [two_opt(att48, random_tour(att48, 1000 + i).tour).length for i in range(20)]
    best_known_local = min(two_opt(att48, greedy_tour(att48).tour).length, min(restarts))
    ga_best = min(genetic(att48, seed=s).length for s in range(5))
    # Measured on this frozen setup: best_known_local=33639.3, ga_best=33555.0
    # (GA beats the 2-opt reference; both recorded in README).
    ok = ga_best <= best_known_local * 1.02
    report(
        "C6 att48-near-optimal",
        ok,
        f"GA best-of-5 {ga_best:.1f} vs 1.02 x best-known-local {best_known_local:.1f}",
    )


def test_c7_baseline_sanity():
    worst = 0.0
    for name in ("p15", "att48", "r200"):
        inst = fixture(name)
        inst.distance_matrix()
        baseline = _baseline_length(inst, 0, 32)
        for res in (
            greedy_tour(inst),
            two_opt(inst, random_tour(inst, 0).tour),
            genetic(inst, seed=0),
        ):
            worst = max(worst, res.length / baseline)
    report("C7 baseline-sanity", worst <= 1.0, f"worst heuristic/baseline ratio {worst:.4f}")


def _median_time(fn, reps: int) -> float:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def test_c8_scaling_shape():
    # Allocator warm-up: freeing one large touched block raises glibc's
    # dynamic mmap threshold, so the timed allocations below reuse heap pages
    # on every call instead of paying fresh page faults only on the larger
    # size. We are timing the algorithms, not malloc's first-touch policy.
    scratch = np.ones(2_000_000)
    del scratch

    def gen(n, seed_base):
        def run():
            generate_random(GeneratorConfig(n=n, extent=4000.0, seed=seed_base))
        return run

    gen_ratio = _median_time(gen(40_000, 1), 15) / _median_time(gen(10_000, 2), 15)

    i200 = rand_instance(200, 12_000)
    i400 = rand_instance(400, 12_001)
    greedy_tour(i200), greedy_tour(i400)  # warm
    greedy_ratio = _median_time(lambda: greedy_tour(i400), 15) / _median_time(
        lambda: greedy_tour(i200), 15
    )
    ok = gen_ratio <= 6.0 and 3.0 <= greedy_ratio <= 7.0
    report(
        "C8 scaling-shape",
        ok,
        f"generator 1e4->4e4 ratio {gen_ratio:.2f} (<=6); greedy 200->400 ratio {greedy_ratio:.2f} (in [3,7])",
    )


def _records_csv_without_wall_time(config) -> list[list[str]]:
    records = run_benchmark(config)
    text = emit(records, summarize(records), "csv")["records.csv"]
    rows = [line.split(",") for line in text.splitlines()]
    col = rows[0].index("wall_time_s")
    return [row[:col] + row[col + 1 :] for row in rows]


def test_c9_determinism(tmp_path):
    inst_file = tmp_path / "d30.txt"
    inst_file.write_text(write_instance(rand_instance(30, 13_000)))
    config = BenchConfig(
        algorithms=("random", "greedy", "two_opt", "genetic"),
        instances=("p15", str(inst_file)),
        trials=2,
        seed=21,
        baseline_trials=8,
        ga_params=GaParams(population_size=30, max_generations=60, stagnation_limit=20),
    )
    bench_same = _records_csv_without_wall_time(config) == _records_csv_without_wall_time(config)

    cfg = GeneratorConfig(n=500, extent=4000.0, seed=77)
    gen_same = write_instance(generate_random(cfg)) == write_instance(generate_random(cfg))
    report("C9 determinism", bench_same and gen_same, f"bench={bench_same} generator={gen_same}")


def test_c10_format_round_trips(tmp_path):
    coords_ok = True
    for trial in range(100):
        inst = rand_instance(2 + trial % 50, 20_000 + trial)
        again = parse_instance(write_instance(inst), inst.name)
        coords_ok = coords_ok and np.array_equal(inst.coords, again.coords)

    inst_file = tmp_path / "rt.txt"
    inst_file.write_text(write_instance(rand_instance(12, 21_000)))
    config = BenchConfig(
        algorithms=("random", "greedy"),
        instances=(str(inst_file),),
        trials=3,
        seed=2,
        baseline_trials=4,
    )
    records = run_benchmark(config)
    text = emit(records, summarize(records), "csv")["records.csv"]
    csv_ok = parse_records_csv(text) == records
    report("C10 round-trips", coords_ok and csv_ok, f"instances={coords_ok} csv={csv_ok}")
