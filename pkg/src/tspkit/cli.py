"""Command-line interface: gen, solve, exact, validate, bench.

Exit codes: 0 success, 1 runtime/data failure (unreadable or malformed
input, tour violations), 2 usage/configuration errors (bad flags, bad
parameter values, refused instance sizes). Diagnostics go to stderr as a
single line; regular output goes to stdout.
"""

from __future__ import annotations

import argparse
import os
import sys

from tspkit.bench import (
    ALGORITHMS,
    BenchConfig,
    emit,
    format_summary_table,
    resolve_instance,
    run_benchmark,
    summarize,
)
from tspkit.core import Instance, Tour, tour_length
from tspkit.data import GeneratorConfig, generate_random, write_instance
from tspkit.errors import (
    ConfigurationError,
    DomainError,
    InstanceTooLargeError,
    ParseError,
    TspkitError,
)
from tspkit.solvers import (
    GaParams,
    TwoOptParams,
    exact_tour,
    genetic,
    greedy_tour,
    random_tour,
    two_opt,
)


def _fail(exc: object, code: int) -> int:
    message = str(exc).splitlines()[0] if str(exc) else exc.__class__.__name__
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_instance(path_or_name: str) -> Instance:
    return resolve_instance(path_or_name)


def _read_tour(path: str) -> Tour:
    with open(path, encoding="utf-8") as f:
        lines = f.read().splitlines()
    indices: list[int] = []
    for lineno, raw in enumerate(lines, 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        try:
            indices.append(int(s))
        except ValueError:
            raise ParseError(f"expected one integer index, got {s!r}", lineno) from None
    if not indices:
        raise ParseError("tour file contains no indices", len(lines) or 1)
    return Tour(indices)


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        config = GeneratorConfig(n=args.n, extent=args.extent, seed=args.seed)
        inst = generate_random(config)
    except TspkitError as exc:
        return _fail(exc, 2)
    try:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(write_instance(inst))
    except OSError as exc:
        return _fail(exc, 1)
    print(f"generated {inst.name}: n={inst.n} extent={args.extent:g} seed={args.seed} -> {args.out}")
    return 0


def _two_opt_params(args: argparse.Namespace) -> TwoOptParams:
    kwargs = {}
    if args.strategy is not None:
        kwargs["strategy"] = args.strategy
    if args.max_passes is not None:
        kwargs["max_passes"] = args.max_passes
    return TwoOptParams(**kwargs)


def _ga_params(args: argparse.Namespace) -> GaParams:
    kwargs = {}
    for flag, field in (
        ("population_size", "population_size"),
        ("elite_count", "elite_count"),
        ("tournament_size", "tournament_size"),
        ("crossover_rate", "crossover_rate"),
        ("mutation_rate", "mutation_rate"),
        ("max_generations", "max_generations"),
        ("stagnation_limit", "stagnation_limit"),
    ):
        value = getattr(args, flag)
        if value is not None:
            kwargs[field] = value
    return GaParams(**kwargs)


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        inst = _load_instance(args.infile)
    except TspkitError as exc:
        return _fail(exc, 1)
    except OSError as exc:
        return _fail(exc, 1)
    try:
        if args.algo == "random":
            result = random_tour(inst, args.seed)
        elif args.algo == "greedy":
            result = greedy_tour(inst)
        elif args.algo == "two_opt":
            initial = greedy_tour(inst).tour if args.init == "greedy" else random_tour(inst, args.seed).tour
            result = two_opt(inst, initial, _two_opt_params(args))
        else:
            result = genetic(inst, _ga_params(args), args.seed)
    except (ConfigurationError, DomainError) as exc:
        return _fail(exc, 2)
    print(f"algorithm: {result.algorithm}")
    print(f"n: {inst.n}")
    print(f"length: {result.length!r}")
    print(f"wall_time_s: {result.wall_time:.6f}")
    print(f"iterations: {result.iterations}")
    if args.tour_out:
        try:
            with open(args.tour_out, "w", encoding="utf-8") as f:
                f.write("\n".join(str(i) for i in result.tour) + "\n")
        except OSError as exc:
            return _fail(exc, 1)
    return 0


def cmd_exact(args: argparse.Namespace) -> int:
    try:
        inst = _load_instance(args.infile)
    except (TspkitError, OSError) as exc:
        return _fail(exc, 1)
    try:
        result = exact_tour(inst)
    except (InstanceTooLargeError, DomainError) as exc:
        return _fail(exc, 2)
    print(f"length: {result.length!r}")
    print("tour: " + " ".join(str(i) for i in result.tour))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        inst = _load_instance(args.infile)
        tour = _read_tour(args.tour)
    except (TspkitError, OSError) as exc:
        return _fail(exc, 1)
    from tspkit.core import validate_tour as _validate

    violation = _validate(inst, tour)
    if violation is not None:
        return _fail(violation, 1)
    print(repr(tour_length(inst, tour)))
    return 0


_BENCH_KEYS = {
    "instances", "algorithms", "trials", "seed", "baseline_trials", "workers",
    "two_opt_strategy", "two_opt_max_passes",
    "ga_population_size", "ga_elite_count", "ga_tournament_size", "ga_crossover_rate",
    "ga_mutation_rate", "ga_max_generations", "ga_stagnation_limit",
}


def parse_bench_config_text(text: str) -> dict[str, str]:
    """Flat `key = value` format; # comments and blank lines ignored."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if "=" not in s:
            raise ConfigurationError(f"config line {lineno}: expected 'key = value', got {s!r}")
        key, _, value = s.partition("=")
        key = key.strip().lower()
        if key not in _BENCH_KEYS:
            raise ConfigurationError(f"config line {lineno}: unknown key {key!r}")
        out[key] = value.strip()
    return out


def _split_list(value: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in value.split(",") if part.strip())


def _build_bench_config(args: argparse.Namespace) -> BenchConfig:
    raw: dict[str, str] = {}
    if args.config:
        with open(args.config, encoding="utf-8") as f:
            raw = parse_bench_config_text(f.read())

    def pick(flag_value, key: str, converter):
        if flag_value is not None:
            return flag_value
        if key in raw:
            return converter(raw[key])
        return None

    instances = pick(_split_list(args.instances) if args.instances else None, "instances", _split_list)
    algorithms = pick(_split_list(args.algorithms) if args.algorithms else None, "algorithms", _split_list)
    if instances is None:
        raise ConfigurationError("no instances given (use --instances or a config file)")
    if algorithms is None:
        algorithms = ALGORITHMS

    def as_int(text: str) -> int:
        try:
            return int(text)
        except ValueError:
            raise ConfigurationError(f"expected an integer, got {text!r}") from None

    def as_float(text: str) -> float:
        try:
            return float(text)
        except ValueError:
            raise ConfigurationError(f"expected a number, got {text!r}") from None

    two_kwargs = {}
    if "two_opt_strategy" in raw:
        two_kwargs["strategy"] = raw["two_opt_strategy"]
    if "two_opt_max_passes" in raw:
        two_kwargs["max_passes"] = as_int(raw["two_opt_max_passes"])
    ga_kwargs = {}
    for key, conv in (
        ("ga_population_size", as_int), ("ga_elite_count", as_int),
        ("ga_tournament_size", as_int), ("ga_crossover_rate", as_float),
        ("ga_mutation_rate", as_float), ("ga_max_generations", as_int),
        ("ga_stagnation_limit", as_int),
    ):
        if key in raw:
            ga_kwargs[key.removeprefix("ga_")] = conv(raw[key])

    def with_default(value, default):
        return default if value is None else value

    config = BenchConfig(
        algorithms=tuple(algorithms),
        instances=tuple(instances),
        trials=with_default(pick(args.trials, "trials", as_int), 3),
        seed=with_default(pick(args.seed, "seed", as_int), 0),
        baseline_trials=with_default(pick(args.baseline_trials, "baseline_trials", as_int), 32),
        two_opt_params=TwoOptParams(**two_kwargs),
        ga_params=GaParams(**ga_kwargs),
        workers=with_default(pick(args.workers, "workers", as_int), 1),
    )
    config.validate()
    return config


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        config = _build_bench_config(args)
    except (TspkitError, OSError) as exc:
        return _fail(exc, 2)
    try:
        records = run_benchmark(config)
    except DomainError as exc:  # unresolvable instance, before any run
        return _fail(exc, 2)
    summary = summarize(records)
    files = emit(records, summary, args.format)
    files.update(emit(records, summary, "plot-data"))
    try:
        os.makedirs(args.out_dir, exist_ok=True)
        for name, content in files.items():
            with open(os.path.join(args.out_dir, name), "w", encoding="utf-8") as f:
                f.write(content)
    except OSError as exc:
        return _fail(exc, 1)
    print(format_summary_table(summary))
    print(f"wrote {len(files)} files to {args.out_dir}")
    if not any(r.status == "ok" for r in records):
        print("error: every benchmark cell failed", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tspkit",
        description="Euclidean TSP toolkit: generate, solve, verify, benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a uniform random instance file")
    p_gen.add_argument("--n", type=int, required=True, help="number of cities (>= 2)")
    p_gen.add_argument("--extent", type=float, default=4000.0, help="coordinate upper bound")
    p_gen.add_argument("--seed", type=int, default=0, help="generator seed")
    p_gen.add_argument("--out", required=True, help="output file (plain point list)")
    p_gen.set_defaults(func=cmd_gen)

    p_solve = sub.add_parser("solve", help="run one solver on an instance")
    p_solve.add_argument("--algo", required=True, choices=["random", "greedy", "two_opt", "genetic"])
    p_solve.add_argument("--in", dest="infile", required=True, help="instance file or fixture name")
    p_solve.add_argument("--seed", type=int, default=0)
    p_solve.add_argument("--tour-out", help="write the tour, one 0-based index per line")
    p_solve.add_argument("--init", choices=["random", "greedy"], default="greedy",
                         help="two_opt starting tour (default greedy)")
    p_solve.add_argument("--strategy", choices=["first-improvement", "best-improvement"])
    p_solve.add_argument("--max-passes", type=int)
    p_solve.add_argument("--population-size", type=int)
    p_solve.add_argument("--elite-count", type=int)
    p_solve.add_argument("--tournament-size", type=int)
    p_solve.add_argument("--crossover-rate", type=float)
    p_solve.add_argument("--mutation-rate", type=float)
    p_solve.add_argument("--max-generations", type=int)
    p_solve.add_argument("--stagnation-limit", type=int)
    p_solve.set_defaults(func=cmd_solve)

    p_exact = sub.add_parser("exact", help="exhaustive optimum (n <= 12)")
    p_exact.add_argument("--in", dest="infile", required=True, help="instance file or fixture name")
    p_exact.set_defaults(func=cmd_exact)

    p_val = sub.add_parser("validate", help="check a tour file against an instance")
    p_val.add_argument("--in", dest="infile", required=True, help="instance file or fixture name")
    p_val.add_argument("--tour", required=True, help="tour file, one 0-based index per line")
    p_val.set_defaults(func=cmd_validate)

    p_bench = sub.add_parser("bench", help="run the benchmark harness")
    p_bench.add_argument("--config", help="flat key=value config file")
    p_bench.add_argument("--instances", help="comma-separated instance files/fixture names")
    p_bench.add_argument("--algorithms", help="comma-separated subset of: " + ", ".join(ALGORITHMS))
    p_bench.add_argument("--trials", type=int)
    p_bench.add_argument("--seed", type=int)
    p_bench.add_argument("--baseline-trials", type=int)
    p_bench.add_argument("--workers", type=int)
    p_bench.add_argument("--out-dir", default="bench_out")
    p_bench.add_argument("--format", choices=["csv", "json-lines"], default="csv")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    return args.func(args)


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
