"""Command-line front end.

Every subcommand is a thin adapter over the library: identical results to
calling the corresponding function directly with the same parameters and
seed.  Results go to stdout (or the --output file); diagnostics go to
stderr.  Exit codes: 0 success, 1 computation or verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from .chdc import MAX_ENUM_LEN, census, census_to_json_obj, validate_word, words_of_length
from .growth import (
    DEFAULT_SEED,
    NonConvergenceError,
    count_chdc,
    lyapunov_estimate,
    mean_growth,
    spectrum,
)
from .linrep import blue_start_rep, census_rep, red_start_rep
from .series import solve_rational, solve_recursive
from .transfer import MAX_LEVEL, SingularWordError, TransferParams, damped_partial_sums, level_sum


class _UsageError(Exception):
    """Raised by handlers for argument problems found after parsing."""


def _check_word(word: str) -> str:
    try:
        return validate_word(word)
    except (TypeError, ValueError) as exc:
        raise _UsageError(str(exc)) from exc


def _parse_point(text: str, exact: bool):
    """A coordinate flag value: Fraction in exact mode ('1/3', '0.2'), float otherwise."""
    try:
        return Fraction(text) if exact else float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"invalid numeric value {text!r}: {exc}") from exc


def _format_value(x) -> str:
    """CSV cell: 17 significant digits for floats, exact text otherwise."""
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def emit_csv(table, destination) -> None:
    """Write a rectangular table (first row = header) as RFC-4180 CSV.

    LF line endings, '.' decimal separator, floats at 17 significant
    digits so values round-trip.  `destination` is a path or a stream.
    """
    rows = [list(row) for row in table]
    if rows:
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("CSV table must be rectangular")
    if hasattr(destination, "write"):
        _write_csv(rows, destination)
    else:
        with open(destination, "w", newline="") as stream:
            _write_csv(rows, stream)


def _write_csv(rows, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    for row in rows:
        writer.writerow([_format_value(x) for x in row])


def _emit_json(obj, stream) -> None:
    json.dump(obj, stream, sort_keys=True, indent=2)
    stream.write("\n")


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    return x


# -- subcommand handlers ------------------------------------------------------


def _cmd_count(args, out) -> int:
    word = _check_word(args.word)
    print(count_chdc(word), file=out)
    return 0


def _cmd_census(args, out) -> int:
    word = _check_word(args.word)
    poly = census(word)
    if args.json:
        _emit_json(census_to_json_obj(poly), out)
    else:
        print(poly, file=out)
    return 0


_REPS = {
    "sb": blue_start_rep,
    "sr": red_start_rep,
    "sum": census_rep,
}


def _cmd_coeff(args, out) -> int:
    word = _check_word(args.word)
    if not word:
        raise _UsageError("word must be nonempty (the representation starts at length 1)")
    rep = _REPS[args.rep]()
    poly = rep.coefficient(word)
    if args.dump_rep:
        _emit_json(
            {
                "coefficient": poly.to_json_obj(),
                "rep": args.rep,
                "representation": rep.to_json_obj(),
                "word": word,
            },
            out,
        )
    else:
        print(poly, file=out)
    return 0


def _cmd_series(args, out) -> int:
    if args.len < 1:
        raise _UsageError("--len must be at least 1")
    solver = solve_recursive if args.mode == "recursive" else solve_rational
    system = solver(args.len)
    part = {
        "sum": system.total,
        "blue": system.closed_blue,
        "red": system.closed_red,
    }[args.part]
    _emit_json({"mode": args.mode, "part": args.part, "series": part.to_json_obj()}, out)
    return 0


def _cmd_zn(args, out) -> int:
    if not (1 <= args.n <= MAX_LEVEL):
        raise _UsageError(f"--n must be between 1 and {MAX_LEVEL}")
    u = _parse_point(args.u, args.exact)
    v = _parse_point(args.v, args.exact)
    w = _parse_point(args.w, args.exact)
    entry = level_sum(args.n, u, v, w, skip_singular=args.skip_singular, exact=args.exact or None)
    _emit_json(
        {
            "max_reciprocal": entry.max_reciprocal,
            "mode": "exact" if args.exact else "float",
            "n": entry.n,
            "singular_words": entry.singular_words,
            "u": _jsonable(u),
            "v": _jsonable(v),
            "value": _jsonable(entry.value),
            "w": _jsonable(w),
        },
        out,
    )
    return 0


def _cmd_zpartial(args, out) -> int:
    if not (1 <= args.nmax <= MAX_LEVEL):
        raise _UsageError(f"--nmax must be between 1 and {MAX_LEVEL}")
    u = _parse_point(args.u, args.exact)
    v = _parse_point(args.v, args.exact)
    w = _parse_point(args.w, args.exact)
    params = TransferParams(u=u, v=v, w=w, gamma=args.gamma, n_max=args.nmax)
    report = damped_partial_sums(params, skip_singular=args.skip_singular, exact=args.exact or None)
    table = [["n", "z_n", "partial_sum"]]
    for entry, partial in zip(report.levels, report.partial_sums):
        table.append([entry.n, float(entry.value), partial])
    emit_csv(table, out)
    skipped = sum(len(e.singular_words) for e in report.levels)
    print(
        f"mode={report.mode} remainder_bound={report.remainder_bound:.6g} "
        f"converged={report.converged} singular_skipped={skipped}",
        file=sys.stderr,
    )
    return 0


def _cmd_lyapunov(args, out) -> int:
    if args.n < 1 or args.trials < 1:
        raise _UsageError("--n and --trials must be positive")
    est = lyapunov_estimate(args.n, args.trials, args.seed, batch_means=args.batch_means)
    _emit_json(
        {
            "alpha_hat": est.alpha_hat,
            "n": est.n,
            "per_trial": est.per_trial,
            "seed": est.seed,
            "stderr": est.stderr,
            "trials": est.trials,
        },
        out,
    )
    return 0


def _cmd_spectrum(args, out) -> int:
    if args.tol <= 0:
        raise _UsageError("--tol must be positive")
    report = spectrum(tolerance=args.tol)
    _emit_json(
        {
            "dominant": report.dominant,
            "gap": report.gap,
            "iterations": report.iterations,
            "residual": report.residual,
            "second_modulus": report.second_modulus,
            "tolerance": report.tolerance,
        },
        out,
    )
    return 0


def _cmd_growthcurve(args, out) -> int:
    if args.nmax < 1:
        raise _UsageError("--nmax must be at least 1")
    if not (1 <= args.step <= args.nmax):
        raise _UsageError("--step must be between 1 and --nmax")
    table = [["n", "mean_growth"]]
    for n in range(args.step, args.nmax + 1, args.step):
        table.append([n, mean_growth(n)])
    emit_csv(table, out)
    return 0


def _cmd_verify(args, out) -> int:
    if not (1 <= args.max_len <= MAX_ENUM_LEN):
        raise _UsageError(f"--max-len must be between 1 and {MAX_ENUM_LEN}")
    length = args.max_len
    recursive = solve_recursive(length).total
    rational = solve_rational(length).total
    rep = census_rep()

    print(f"{'len':>4} {'words':>6} {'recursive':>12} {'rational':>12} {'matrices':>12}", file=out)
    ok = True
    checked = 0
    for n in range(1, length + 1):
        cols = {"recursive": "ok", "rational": "ok", "matrices": "ok"}
        count = 0
        for word in words_of_length(n):
            count += 1
            truth = census(word)
            if cols["recursive"] == "ok" and recursive.coefficient(word) != truth:
                cols["recursive"] = f"FAIL {word}"
            if cols["rational"] == "ok" and rational.coefficient(word) != truth:
                cols["rational"] = f"FAIL {word}"
            if cols["matrices"] == "ok" and rep.coefficient(word) != truth:
                cols["matrices"] = f"FAIL {word}"
        checked += count
        if any(v != "ok" for v in cols.values()):
            ok = False
        print(
            f"{n:>4} {count:>6} {cols['recursive']:>12} {cols['rational']:>12} {cols['matrices']:>12}",
            file=out,
        )
    print(f"verify: {'PASS' if ok else 'FAIL'} ({checked} words, lengths 1..{length})", file=out)
    return 0 if ok else 1


# -- parser ---------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output", metavar="PATH", help="write results to PATH instead of stdout")
    sub.add_argument(
        "--threads",
        type=int,
        default=None,
        metavar="N",
        help="worker hint (env HARDIMER_THREADS as fallback); results never depend on it "
        "(all reductions are order-independent), and the current build runs serial",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardimer",
        description="Exact enumeration of coloured hard-dimer configurations on b/r words.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("count", help="number of configurations on a word")
    p.add_argument("word", help="word over the letters b and r")
    p.set_defaults(func=_cmd_count)
    _add_common(p)

    p = sub.add_parser("census", help="census polynomial of a word")
    p.add_argument("word", help="word over the letters b and r")
    p.add_argument("--json", action="store_true", help="emit canonical JSON instead of text")
    p.set_defaults(func=_cmd_census)
    _add_common(p)

    p = sub.add_parser("coeff", help="series coefficient of a word via the letter matrices")
    p.add_argument("word", help="nonempty word over the letters b and r")
    p.add_argument(
        "--rep",
        choices=sorted(_REPS),
        default="sum",
        help="which representation: sb = blue-start block, sr = red-start block, "
        "sum = both blocks (the full census); default sum",
    )
    p.add_argument(
        "--dump-rep",
        action="store_true",
        help="emit the full representation (dense row-major matrices) as JSON "
        "alongside the coefficient, for external verification",
    )
    p.set_defaults(func=_cmd_coeff)
    _add_common(p)

    p = sub.add_parser("series", help="census series up to a truncation length")
    p.add_argument("--mode", choices=("recursive", "rational"), required=True)
    p.add_argument("--len", type=int, required=True, metavar="L", help="truncation length")
    p.add_argument(
        "--part",
        choices=("sum", "blue", "red"),
        default="sum",
        help="sum = all words, blue/red = words starting with that letter; default sum",
    )
    p.set_defaults(func=_cmd_series)
    _add_common(p)

    p = sub.add_parser("zn", help="reciprocal census sum over all words of one length")
    p.add_argument("--n", type=int, required=True, help=f"word length, 1..{MAX_LEVEL}")
    p.add_argument("--u", default="0", help="first sign-flipped coordinate (float, or rational with --exact)")
    p.add_argument("--v", default="0", help="second sign-flipped coordinate")
    p.add_argument("--w", default="0", help="third coordinate")
    p.add_argument("--exact", action="store_true", help="exact rational arithmetic")
    p.add_argument(
        "--skip-singular",
        action="store_true",
        help="record words with zero denominator and leave them out instead of failing",
    )
    p.set_defaults(func=_cmd_zn)
    _add_common(p)

    p = sub.add_parser("zpartial", help="damped partial sums of the level values, as CSV")
    p.add_argument("--gamma", type=float, required=True, help="damping rate per level")
    p.add_argument("--nmax", type=int, required=True, help=f"last level, 1..{MAX_LEVEL}")
    p.add_argument("--u", default="0")
    p.add_argument("--v", default="0")
    p.add_argument("--w", default="0")
    p.add_argument("--exact", action="store_true", help="exact rational level values")
    p.add_argument("--skip-singular", action="store_true")
    p.set_defaults(func=_cmd_zpartial)
    _add_common(p)

    p = sub.add_parser("lyapunov", help="Monte Carlo quenched growth exponent")
    p.add_argument("--n", type=int, default=100_000, help="letters per trial (default 100000)")
    p.add_argument("--trials", type=int, default=64, help="independent trials (default 64)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"RNG seed (default {DEFAULT_SEED})")
    p.add_argument("--batch-means", action="store_true", help="batch-means standard error")
    p.set_defaults(func=_cmd_lyapunov)
    _add_common(p)

    p = sub.add_parser("spectrum", help="dominant eigenvalue of the averaged letter matrix")
    p.add_argument("--tol", type=float, default=1e-12, help="power-iteration residual tolerance")
    p.set_defaults(func=_cmd_spectrum)
    _add_common(p)

    p = sub.add_parser("growthcurve", help="annealed growth exponent against length, as CSV")
    p.add_argument("--nmax", type=int, required=True, help="largest length")
    p.add_argument("--step", type=int, default=1, help="length increment between rows")
    p.set_defaults(func=_cmd_growthcurve)
    _add_common(p)

    p = sub.add_parser("verify", help="three-way oracle equivalence over all short words")
    p.add_argument("--max-len", type=int, default=12, help="check lengths 1..N (default 12)")
    p.set_defaults(func=_cmd_verify)
    _add_common(p)

    return parser


def _resolve_threads(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    threads = getattr(args, "threads", None)
    if threads is None:
        env = os.environ.get("HARDIMER_THREADS")
        if env is not None:
            try:
                threads = int(env)
            except ValueError:
                parser.error(f"HARDIMER_THREADS must be an integer, got {env!r}")
    if threads is None:
        threads = 1
    if threads < 1:
        parser.error(f"thread count must be at least 1, got {threads}")
    return threads


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.threads = _resolve_threads(parser, args)
    out = sys.stdout
    opened = None
    try:
        if getattr(args, "output", None):
            opened = open(args.output, "w", newline="")
            out = opened
        return args.func(args, out)
    except _UsageError as exc:
        parser.error(str(exc))
    except (SingularWordError, NonConvergenceError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if opened is not None:
            opened.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
