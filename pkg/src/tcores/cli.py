"""Command-line front end: exact tables, distribution comparisons, hook
censuses, orbit displays, sampling runs, and the verification suite.

Numbers are emitted losslessly: integers verbatim, rationals as num/den,
reals with 17 significant digits.  Identical arguments and seed produce
byte-identical output for the data subcommands.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import IO, Sequence

from . import counting, distribution, hookstats, sampling, verify

SCHEMA_VERSION = 1


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _json_value(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return float(format(value, ".17g"))
    return value


def _emit(out: IO[str], fmt: str, command: str, columns: list[str], rows) -> None:
    if fmt == "csv":
        out.write(",".join(columns) + "\n")
        for row in rows:
            out.write(",".join(_fmt(v) for v in row) + "\n")
    else:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "columns": columns,
            "rows": [[_json_value(v) for v in row] for row in rows],
        }
        out.write(json.dumps(payload, indent=2) + "\n")


def _parse_int_list(text: str) -> list[int]:
    items = sorted({int(x) for x in text.split(",") if x.strip() != ""})
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated integer list")
    return items


def _parse_parts(text: str) -> list[int]:
    if text.strip() in ("", "-"):
        return []
    return [int(x) for x in text.split(",")]


def _render_parts(parts: tuple[int, ...]) -> str:
    return " ".join(str(p) for p in parts) if parts else "-"


def _check_t(t: int) -> int:
    if t < 2:
        raise SystemExit2(f"t must be at least 2, got {t}")
    return t


class SystemExit2(Exception):
    """Usage error distinct from argparse's own SystemExit."""


def _cmd_counts(args, out) -> int:
    series = [s.strip() for s in args.series.split(",") if s.strip()]
    valid = {"p", "c", "d", "C"}
    if not series or any(s not in valid for s in series):
        raise SystemExit2(f"--series takes a subset of p,c,d,C, got {args.series!r}")
    if any(s != "p" for s in series):
        if args.t is None:
            raise SystemExit2("--t is required for the c, d and C series")
        _check_t(args.t)
    columns = ["n"]
    tables = {}
    for s in series:
        if s == "p":
            tables[s] = counting.partition_count_table(args.max_n)
            columns.append("p")
        elif s == "c":
            tables[s] = counting.core_count_table(args.t, args.max_n)
            columns.append("c_t")
        elif s == "d":
            tables[s] = counting.divisible_count_table(args.t, args.max_n)
            columns.append("d_t")
        else:
            tables[s] = counting.core_sum_table(args.t, args.max_n)
            columns.append("C_t")
    rows = [[n, *(tables[s][n] for s in series)] for n in range(args.max_n + 1)]
    _emit(out, args.format, "counts", columns, rows)
    return 0


def _cmd_pmf(args, out) -> int:
    _check_t(args.t)
    pmf = distribution.core_size_pmf(args.t, args.n)
    cores = counting.core_count_table(args.t, args.n)
    divis = counting.divisible_count_table(args.t, args.n)
    rows = [
        [k, cores[k], divis[args.n - k], mass, float(mass)]
        for k, mass in sorted(pmf.masses.items())
    ]
    _emit(out, args.format, "pmf",
          ["k", "c_t", "d_t_rest", "mass", "mass_float"], rows)
    return 0


def _cmd_moments(args, out) -> int:
    _check_t(args.t)
    params = distribution.gamma_params(args.t)
    rows = []
    for n in args.n:
        pmf = distribution.core_size_pmf(args.t, n)
        for k in range(1, args.max_k + 1):
            rows.append([
                n, k,
                distribution.scaled_moment(pmf, k),
                distribution.gamma_moment(params, k),
            ])
    _emit(out, args.format, "moments",
          ["n", "k", "scaled_moment", "gamma_moment"], rows)
    return 0


def _cmd_figure1(args, out) -> int:
    _check_t(args.t)
    params = distribution.gamma_params(args.t)
    if args.view == "cdf":
        pmfs = {n: distribution.core_size_pmf(args.t, n) for n in args.n}
        steps = int(round(args.grid_max / args.grid_step))
        columns = ["x", *(f"cdf_n{n}" for n in args.n), "gamma_cdf"]
        rows = []
        for s in range(steps + 1):
            x = s * args.grid_step
            row = [x]
            for n in args.n:
                scale = math.sqrt(n) if n else 1.0
                cum = sum(
                    (m for k, m in pmfs[n].masses.items() if k <= x * scale),
                    Fraction(0),
                )
                row.append(float(cum))
            row.append(distribution.gamma_cdf(params, x))
            rows.append(row)
        _emit(out, args.format, "figure1", columns, rows)
    else:
        rows = []
        for n in args.n:
            pmf = distribution.core_size_pmf(args.t, n)
            for k, x, mass, density in distribution.scaled_pmf_points(pmf):
                rows.append([n, k, x, mass, density])
        _emit(out, args.format, "figure1",
              ["n", "k", "x", "mass", "density"], rows)
    return 0


def _cmd_figure2(args, out) -> int:
    _check_t(args.t)
    rows = []
    for n in range(1, args.max_n + 1):
        exact, asym = distribution.expected_core_size(args.t, n)
        rows.append([n, exact, asym])
    _emit(out, args.format, "figure2", ["n", "expected_exact", "asymptote"], rows)
    return 0


def _cmd_hooks(args, out) -> int:
    _check_t(args.t)
    if args.mode == "exact":
        xs = hookstats.exact_residue_distribution(args.t, args.n)
        rows = [[i, x, float(x)] for i, x in enumerate(xs)]
        _emit(out, args.format, "hooks",
              ["residue", "probability", "probability_float"], rows)
    else:
        estimates, errors = hookstats.sampled_residue_distribution(
            args.t, args.n, args.samples, args.seed
        )
        rows = [
            [i, est, err, args.samples, args.seed]
            for i, (est, err) in enumerate(zip(estimates, errors))
        ]
        _emit(out, args.format, "hooks",
              ["residue", "estimate", "standard_error", "samples", "seed"], rows)
    return 0


def _cmd_orbit(args, out) -> int:
    _check_t(args.t)
    from .partitions import make_partition

    nu = make_partition(args.nu)
    max_b = args.max_b if args.max_b is not None else args.t - 1
    words = []

    def all_words(prefix, remaining):
        if not remaining:
            words.append("".join(str(d) for d in prefix))
            return
        for d in sorted(remaining):
            all_words(prefix + [d], remaining - {d})

    all_words([], set(range(1, args.t + 1)))
    columns = ["sigma", "sigma_nu", *(f"C^{b}" for b in range(max_b + 1))]
    rows = []
    for word in words:
        sigma = hookstats.permutation_from_word(word)
        image = hookstats.act_on_divisible(sigma, nu, args.t)
        row = [word, _render_parts(image.parts)]
        for b in range(max_b + 1):
            row.append(_render_parts(hookstats.b_smoothing(image, args.t, b).cells.parts))
        rows.append(row)
    _emit(out, args.format, "orbit", columns, rows)
    return 0


def _cmd_sample(args, out) -> int:
    table = sampling.build_sampler(args.n)
    rows = [
        [i, _render_parts(sampling.sample_partition(table, args.seed, i).parts)]
        for i in range(args.count)
    ]
    _emit(out, args.format, "sample", ["index", "partition"], rows)
    return 0


def _cmd_verify(args, out) -> int:
    report = verify.run_suite(
        args.suite, max_n=args.max_n, seed=args.seed, samples=args.samples
    )
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        _emit(out, "csv", "verify",
              ["case", "passed", "detail"],
              [[c.name, c.passed, c.detail] for c in report.cases])
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tcores",
        description="Exact t-core combinatorics: tables, distributions, "
        "hook statistics, sampling, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", default=None, help="path; default stdout")

    p = sub.add_parser("counts", help="emit count tables")
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--series", default="p,c,d,C")
    add_common(p)
    p.set_defaults(fn=_cmd_counts)

    p = sub.add_parser("pmf", help="exact core-size law for one n")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(fn=_cmd_pmf)

    p = sub.add_parser("moments", help="scaled moments against the gamma limit")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=_parse_int_list, required=True)
    p.add_argument("--max-k", type=int, default=3)
    add_common(p)
    p.set_defaults(fn=_cmd_moments)

    p = sub.add_parser("figure1", help="CDF comparison grid / density bars")
    p.add_argument("--t", type=int, default=5)
    p.add_argument("--n", type=_parse_int_list, default=[20, 62, 103])
    p.add_argument("--view", choices=("cdf", "density"), default="cdf")
    p.add_argument("--grid-max", type=float, default=4.0)
    p.add_argument("--grid-step", type=float, default=0.05)
    add_common(p)
    p.set_defaults(fn=_cmd_figure1)

    p = sub.add_parser("figure2", help="average core size against its asymptote")
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--max-n", type=int, default=100)
    add_common(p)
    p.set_defaults(fn=_cmd_figure2)

    p = sub.add_parser("hooks", help="hook-residue distribution, exact or sampled")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "sample"), default="exact")
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--seed", type=int, default=12345)
    add_common(p)
    p.set_defaults(fn=_cmd_hooks)

    p = sub.add_parser("orbit", help="quotient-permutation orbit and smoothings")
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--nu", type=_parse_parts, required=True,
                   help="comma-separated parts of a t-divisible partition")
    p.add_argument("--max-b", type=int, default=None)
    add_common(p)
    p.set_defaults(fn=_cmd_orbit)

    p = sub.add_parser("sample", help="deterministic uniform random partitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=12345)
    add_common(p)
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("verify", help="run the brute-force verification suite")
    p.add_argument("--suite", choices=verify.suite_names(), default="all")
    p.add_argument("--max-n", type=int, default=22)
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--samples", type=int, default=20000)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(fn=_cmd_verify)

    return parser


def run(argv: Sequence[str]) -> int:
    """Dispatch a command line; exit code 0 on success, 1 on verification
    failure, 2 on usage errors."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as handle:
                return args.fn(args, handle)
        return args.fn(args, sys.stdout)
    except (SystemExit2, ValueError) as exc:
        print(f"tcores: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
