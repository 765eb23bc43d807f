"""Command-line interface.

Subcommands: sum, compare (sum with classical methods), table, kappa,
weights, error.  Output formats: text (human), json (one document), csv
(header row plus data rows); numbers in json/csv round-trip at full
double precision.

Exit codes: 0 ok, 2 usage or domain error, 3 input parse error,
4 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .error_model import observed_error, predicted_error
from .exceptions import (
    AbelRadiusError,
    DomainError,
    NumericError,
    SeriesFormatError,
)
from .series import CATALOG_NAMES, catalog_lookup, load_custom
from .special import solve_kappa
from .summation import abel_estimate, cesaro_mean, chi_sweep, euler_transform
from .weights import averaging_row, chi_row, verify_toeplitz

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_NUMERIC = 4

_TABLE_DEFAULT_N = (20, 25, 30)
_TABLE_DEFAULT_X = (-1.0, -0.7, -0.2, 0.0, 0.2, 0.7, 1.0)
_ABEL_DEFAULT_RADII = (0.9, 0.99, 0.999)
_COMPARE_METHODS = ("cesaro", "euler", "abel")


def _emit(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(record, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        _emit_csv(record, out)
    else:
        _emit_text(record, out)


def _emit_csv(record: dict, out) -> None:
    rows = record.get("rows")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if rows:
        writer.writerow(rows["header"])
        for row in rows["data"]:
            writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    else:
        flat = dict(record.get("inputs", {}))
        flat.update(record.get("results", {}))
        if record.get("verdict") is not None:
            flat["verdict"] = record["verdict"]
        keys = [k for k, v in flat.items() if not isinstance(v, (list, dict))]
        writer.writerow(keys)
        writer.writerow(
            [repr(flat[k]) if isinstance(flat[k], float) else flat[k] for k in keys]
        )
    out.write(buf.getvalue())


def _emit_text(record: dict, out) -> None:
    print(f"command: {record['command']}", file=out)
    for k, v in record.get("inputs", {}).items():
        print(f"  {k} = {v}", file=out)
    rows = record.get("rows")
    if rows:
        header = rows["header"]
        print("  " + "  ".join(str(h) for h in header), file=out)
        for row in rows["data"]:
            print(
                "  "
                + "  ".join(
                    f"{v:.10g}" if isinstance(v, float) else str(v) for v in row
                ),
                file=out,
            )
    for k, v in record.get("results", {}).items():
        if isinstance(v, float):
            print(f"{k} = {v!r}", file=out)
        else:
            print(f"{k} = {v}", file=out)
    if record.get("verdict") is not None:
        print(f"verdict = {record['verdict']}", file=out)


def _parse_grid(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError as exc:
        raise DomainError(f"bad integer list {text!r}") from exc


def _parse_floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(s) for s in text.split(","))
    except ValueError as exc:
        raise DomainError(f"bad number list {text!r}") from exc


def _resolve_series(args):
    if args.series == "custom":
        if not args.file:
            raise DomainError("custom series needs --file")
        return load_custom(args.file)
    params = {}
    if args.x is not None:
        params["x"] = args.x
    return catalog_lookup(args.series, **params)


def _cmd_sum(args, out) -> int:
    spec = _resolve_series(args)
    grid = _parse_grid(args.n_grid) if args.n_grid else (args.n,)
    if args.n is None and not args.n_grid:
        raise DomainError("need --n or --n-grid")
    result = chi_sweep(spec, grid, accelerate=args.accelerate)
    n_last = grid[-1]

    results = {"value": result.value, "n": n_last}
    if result.accelerated:
        results["accelerated"] = True
    if spec.exact_value is not None:
        results["exact"] = spec.exact_value
        results["observed_error"] = observed_error(
            result.approximants[-1], spec.exact_value
        )
    if result.error is not None:
        results["predicted_error"] = result.error.predicted
        if result.error.ratio is not None:
            results["error_ratio"] = result.error.ratio

    compare = {}
    for method in args.compare:
        try:
            if method == "cesaro":
                compare["cesaro"] = cesaro_mean(spec, n_last)
            elif method == "euler":
                compare["euler"] = euler_transform(spec, n_last)
            elif method == "abel":
                compare["abel"] = abel_estimate(
                    spec, _ABEL_DEFAULT_RADII, extrapolate=True
                )
        except AbelRadiusError as exc:
            compare[method] = None
            results[f"{method}_error"] = str(exc)
    results.update({k: v for k, v in compare.items() if v is not None})

    record = {
        "command": "sum",
        "inputs": {
            "series": args.series,
            **({"x": args.x} if args.x is not None else {}),
            "n_grid": list(grid),
        },
        "results": results,
        "verdict": result.verdict if len(grid) >= 3 else None,
        "rows": {
            "header": ["n", "approximant"],
            "data": [[n, v] for n, v in zip(grid, result.approximants)],
        },
    }
    _emit(record, args.format, out)
    return EXIT_OK


def _cmd_table(args, out) -> int:
    from .special import bernoulli_gen_fn
    from .summation import chi_sum

    n_list = _parse_grid(args.n_list) if args.n_list else _TABLE_DEFAULT_N
    x_list = _parse_floats(args.x_list) if args.x_list else _TABLE_DEFAULT_X
    if any(n > 60 for n in n_list):
        raise DomainError("table orders are limited to n <= 60")
    header = ["n"] + [f"x={x:g}" for x in x_list]
    data = []
    for n in n_list:
        row = [n]
        for x in x_list:
            row.append(chi_sum(catalog_lookup("bernoulli_power", x=x), n))
        data.append(row)
    data.append(["exact"] + [bernoulli_gen_fn(x) for x in x_list])
    record = {
        "command": "table",
        "inputs": {"n_list": list(n_list), "x_list": list(x_list)},
        "results": {},
        "rows": {"header": header, "data": data},
    }
    _emit(record, args.format, out)
    return EXIT_OK


def _cmd_kappa(args, out) -> int:
    value = solve_kappa(args.tol)
    record = {
        "command": "kappa",
        "inputs": {"tol": args.tol},
        "results": {"kappa": value},
    }
    _emit(record, args.format, out)
    return EXIT_OK


def _cmd_weights(args, out) -> int:
    row = chi_row(args.n)
    avg = averaging_row(args.n)
    diag = verify_toeplitz(avg)
    record = {
        "command": "weights",
        "inputs": {"n": args.n},
        "results": {
            "abs_row_sum": diag.abs_row_sum,
            "row_sum": diag.row_sum,
            "max_entry": diag.max_entry,
            "nonnegative": diag.nonnegative,
        },
        "rows": {
            "header": ["k", "chi", "averaging"],
            "data": [[k, row.w[k], avg.a[k]] for k in range(args.n + 1)],
        },
    }
    _emit(record, args.format, out)
    return EXIT_OK


def _cmd_error(args, out) -> int:
    from .summation import chi_sum

    spec = _resolve_series(args)
    if spec.second_derivative is None or spec.x is None:
        raise DomainError(
            f"series {args.series!r} carries no closed-form second "
            "derivative; the predictor is unavailable"
        )
    predicted = predicted_error(spec.second_derivative, spec.x, spec.x0, args.n)
    results = {"predicted_error": predicted, "n": args.n}
    approximant = chi_sum(spec, args.n)
    results["approximant"] = approximant
    if spec.exact_value is not None:
        obs = observed_error(approximant, spec.exact_value)
        results["observed_error"] = obs
        if predicted != 0.0:
            results["ratio"] = obs / predicted
    record = {
        "command": "error",
        "inputs": {
            "series": args.series,
            **({"x": args.x} if args.x is not None else {}),
            "n": args.n,
        },
        "results": results,
    }
    _emit(record, args.format, out)
    return EXIT_OK


def _add_series_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--series", required=True, help=f"one of {CATALOG_NAMES}")
    p.add_argument("--x", type=float, default=None, help="series parameter")
    p.add_argument("--file", default=None, help="custom series JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chisum",
        description="Summation of divergent series by factorial-decay weights.",
    )
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default="text"
    )
    parser.add_argument("--tol", type=float, default=1e-10)
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for randomized property harnesses (accepted for "
        "reproducibility; the shipped subcommands are deterministic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("sum", help="chi-sum a series")
    _add_series_args(p_sum)
    p_sum.add_argument("--n", type=int, default=None)
    p_sum.add_argument("--n-grid", default=None, help="comma-separated orders")
    p_sum.add_argument("--accelerate", action="store_true")
    p_sum.add_argument(
        "--compare",
        default="",
        help=f"comma-separated classical methods from {_COMPARE_METHODS}",
    )

    p_cmp = sub.add_parser(
        "compare", help="chi-sum with all classical comparison methods"
    )
    _add_series_args(p_cmp)
    p_cmp.add_argument("--n", type=int, default=None)
    p_cmp.add_argument("--n-grid", default=None)
    p_cmp.add_argument("--accelerate", action="store_true")
    p_cmp.add_argument("--compare", default=",".join(_COMPARE_METHODS))

    p_table = sub.add_parser(
        "table", help="Bernoulli power-series table against its generating fn"
    )
    p_table.add_argument("--n-list", default=None)
    p_table.add_argument("--x-list", default=None)

    sub.add_parser("kappa", help="summability boundary constant")

    p_w = sub.add_parser("weights", help="weight and averaging rows at order n")
    p_w.add_argument("--n", type=int, required=True)

    p_err = sub.add_parser("error", help="predicted vs observed error")
    _add_series_args(p_err)
    p_err.add_argument("--n", type=int, required=True)

    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    try:
        if args.command in ("sum", "compare"):
            args.compare = tuple(
                m for m in args.compare.split(",") if m
            )
            unknown = [m for m in args.compare if m not in _COMPARE_METHODS]
            if unknown:
                raise DomainError(f"unknown comparison methods {unknown}")
            return _cmd_sum(args, out)
        if args.command == "table":
            return _cmd_table(args, out)
        if args.command == "kappa":
            return _cmd_kappa(args, out)
        if args.command == "weights":
            return _cmd_weights(args, out)
        if args.command == "error":
            return _cmd_error(args, out)
        raise DomainError(f"unknown command {args.command!r}")
    except SeriesFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def run() -> None:
    sys.exit(main())
