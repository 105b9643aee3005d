"""Command-line front end for the matching workbench."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Sequence

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import pandas as pd
from pydantic import ValidationError

from config.constants import ENGINE_LITERALS, FORMAT_LITERALS, FORMAT_TEXT, FORMAT_TSV
from config.settings import settings
from src.analysis.factoring import factorize, render_factored, render_structure, roundness_report
from src.analysis.inverse_sum import inverse_entry_sum
from src.analysis.probabilities import moments_of_inertia, probability_table, render_probability
from src.analysis.spectra import carlitz_cokernels, integral_kasteleyn, render_poly, spectrum
from src.analysis.verify import default_range, verify
from src.contracts.errors import MatchworkError
from src.contracts.models import CommandSpec, HexagonSpec, RectangleSpec, SweepRecord
from src.data.repository import get_region
from src.families.registry import build_family, get_family
from src.graph.flow import run_count, run_pipeline
from src.grid.dual import dual_graph
from src.grid.plane import PlaneGraph
from src.linalg.snf import render_cokernel, smith_normal_form
from src.utils.logging import configure_logging, log_event
from src.weighted.gessel import gessel_check, schur_specialization_check
from src.weighted.rewrites import check_rewrite, city_host, ladder_host

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def parse_params(text: str | None) -> dict[str, int]:
    """'a=2,b=2,c=2' -> {'a': 2, 'b': 2, 'c': 2}."""
    params: dict[str, int] = {}
    if not text:
        return params
    for item in text.split(","):
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise ValueError(f"bad parameter {item!r}; expected name=value")
        params[name.strip()] = int(value)
    return params


def parse_range(text: str) -> tuple[int, int]:
    """'1..8' or '5'."""
    start, sep, stop = text.partition("..")
    return (int(start), int(stop)) if sep else (int(start), int(start))


def _emit(frame: pd.DataFrame, output_format: str) -> None:
    """Aligned text or TSV; every cell is already an exact string."""
    if output_format == FORMAT_TSV:
        sys.stdout.write(frame.to_csv(sep="\t", index=False))
    else:
        print(frame.to_string(index=False))


def _spec(args: argparse.Namespace, sweep_range: tuple[int, int] | None = None) -> CommandSpec:
    return CommandSpec(
        subcommand=args.command,
        file=getattr(args, "file", None),
        family=getattr(args, "family", None),
        params=parse_params(getattr(args, "params", None)),
        method=getattr(args, "method", None),
        output_format=getattr(args, "format", FORMAT_TEXT),
        sweep_range=sweep_range,
    )


def _plane(spec: CommandSpec, default_family: str | None = None) -> PlaneGraph:
    """Dual graph of the requested region."""
    if spec.file:
        instance = get_region(spec.file)
    elif spec.family or default_family:
        instance = build_family(spec.family or default_family, spec.params)
    else:
        raise MatchworkError("no region source: use --file or --family")
    return instance if isinstance(instance, PlaneGraph) else dual_graph(instance)


def _hexagon(spec: CommandSpec, n: int | None = None) -> HexagonSpec:
    size = n if n is not None else spec.params.get("n", 1)
    return HexagonSpec(
        a=spec.params.get("a", size), b=spec.params.get("b", size), c=spec.params.get("c", size)
    )


def cmd_count(args: argparse.Namespace) -> int:
    spec = _spec(args)
    if not spec.file and not spec.family:
        raise MatchworkError("no region source: use --file or --family")
    result = run_count(
        region_path=spec.file,
        family=spec.family,
        params=spec.params,
        method=spec.method,
        factored=args.factored,
    )
    print(f"count={result.count}")
    if args.factored and result.factorization is not None:
        print(f"factored={render_factored(result.factorization)}")
        print(f"structure={render_structure(result.factorization)}")
    if args.timing:
        print(f"engine={result.engine} seconds={result.seconds:.3f}", file=sys.stderr)
    return EXIT_OK


def sweep_row(family: str, key: str, value: int, params: dict[str, int], method: str | None) -> SweepRecord:
    """One sweep instance; failures become the row's error."""
    final = run_pipeline(family=family, params={**params, key: value}, method=method, factored=True)
    if final.get("error_type"):
        log_event("sweep_row_failed", family=family, parameter=value, error=final.get("error_message"))
        return SweepRecord(parameter=value, error=f"{final['error_type']}: {final['error_message']}")
    count = final.get("count")
    return SweepRecord(
        parameter=value,
        count=count if isinstance(count, int) else None,
        factored=final.get("factorization"),
        engine=final.get("engine"),
        seconds=final.get("seconds", 0.0),
    )


def _sweep_frame(records: Sequence[SweepRecord], timing: bool) -> pd.DataFrame:
    rows = []
    for record in records:
        row: dict[str, Any] = {"parameter": str(record.parameter)}
        if record.error:
            row.update(count="", factored="", structure="", largest_prime="", outlier="", engine="")
            row["error"] = record.error
        else:
            factored = record.factored
            roundness = roundness_report(factored, max(record.parameter, 1)) if factored else None
            row.update(
                count=str(record.count),
                factored=render_factored(factored) if factored else "",
                structure=render_structure(factored) if factored else "",
                largest_prime=str(roundness.largest_prime or "") if roundness else "",
                outlier="yes" if roundness and roundness.outlier else "",
                engine=record.engine or "",
                error="",
            )
        if timing:
            row["seconds"] = f"{record.seconds:.3f}"
        rows.append(row)
    return pd.DataFrame(rows)


def cmd_sweep(args: argparse.Namespace) -> int:
    spec = _spec(args, parse_range(args.range))
    if not spec.family:
        raise MatchworkError("sweep needs --family")
    key = get_family(spec.family).sweep_key
    start, stop = spec.sweep_range
    values = range(start, stop + 1)
    jobs = args.jobs or settings.SWEEP_JOBS
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(sweep_row, spec.family, key, value, spec.params, spec.method) for value in values
            ]
            records = [future.result() for future in futures]
    else:
        records = [sweep_row(spec.family, key, value, spec.params, spec.method) for value in values]
    records.sort(key=lambda record: record.parameter)
    _emit(_sweep_frame(records, args.timing), spec.output_format)
    return EXIT_FAILURE if any(record.error for record in records) else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    start, stop = parse_range(args.range) if args.range else default_range(args.formula)
    spec = _spec(args, (start, stop))
    records = verify(args.formula, start, stop, spec.params)
    frame = pd.DataFrame(
        [
            {
                "parameter": record.parameter,
                "expected": record.expected,
                "actual": record.actual,
                "status": "PASS" if record.passed else "FAIL",
            }
            for record in records
        ]
    )
    _emit(frame, spec.output_format)
    passed = sum(record.passed for record in records)
    print(f"{args.formula}: {passed}/{len(records)} passed")
    return EXIT_OK if passed == len(records) else EXIT_FAILURE


def cmd_probs(args: argparse.Namespace) -> int:
    spec = _spec(args)
    table = probability_table(_plane(spec), cross_check=args.cross_check)
    digits = settings.PROBABILITY_DIGITS if args.digits is None else args.digits
    frame = pd.DataFrame(
        [
            {
                "black": str(black),
                "white": str(white),
                "probability": str(value),
                "decimal": render_probability(value, digits),
            }
            for (black, white), value in sorted(table.items(), key=lambda item: (str(item[0][0]), str(item[0][1])))
        ]
    )
    _emit(frame, spec.output_format)
    return EXIT_OK


def cmd_moments(args: argparse.Namespace) -> int:
    spec = _spec(args)
    report = moments_of_inertia(_hexagon(spec, args.n))
    if args.table:
        frame = pd.DataFrame(
            [
                {"x": str(row.x), "y": str(row.y), "probability": str(row.probability)}
                for row in report.rows
            ]
        )
        _emit(frame, spec.output_format)
    line = f"vertical={report.vertical} horizontal={report.horizontal}"
    print(line if report.regular else f"{line} regular=no")
    return EXIT_OK


def cmd_cokernel(args: argparse.Namespace) -> int:
    spec = _spec(args)
    if args.source == "carlitz":
        for index, (determinant, snf) in enumerate(carlitz_cokernels(_hexagon(spec)), start=1):
            print(f"carlitz{index}: det={determinant} cokernel={render_cokernel(snf)}")
        return EXIT_OK
    matrix = integral_kasteleyn(_plane(spec, default_family="hexagon"))
    print(render_cokernel(smith_normal_form(matrix.to_domain())))
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    spec = _spec(args)
    print(render_poly(spectrum(integral_kasteleyn(_plane(spec)))))
    return EXIT_OK


def cmd_invsum(args: argparse.Namespace) -> int:
    print(f"invsum={inverse_entry_sum(args.n)}")
    return EXIT_OK


def cmd_gessel(args: argparse.Namespace) -> int:
    rectangle = RectangleSpec(m=args.m, n=args.n)
    check = schur_specialization_check(rectangle) if args.schur else gessel_check(rectangle)
    print(f"dimer={check.left}")
    print(f"{'product' if args.schur else 'tableaux'}={check.right}")
    for line in check.difference:
        print(f"diff {line}")
    print(check.verdict)
    return EXIT_OK if not check.difference else EXIT_FAILURE


def cmd_rewrite_check(args: argparse.Namespace) -> int:
    if args.move == "kenyon":
        plane, site = ladder_host(args.orientation)
        host = f"3x4 grid, {args.orientation}"
    else:
        plane, site = city_host(args.seed)
        host = f"random city host, seed {args.seed}"
    check = check_rewrite(args.move, plane, site, host)
    print(f"move={check.move}")
    print(f"host={check.host}")
    print(f"before={check.before}")
    print(f"after={check.after}")
    print(f"factor={check.factor}")
    print(f"holds={'yes' if check.holds else 'no'}")
    return EXIT_OK if check.holds else EXIT_FAILURE


def cmd_factor(args: argparse.Namespace) -> int:
    value = int(args.value)
    if value < 1:
        raise ValueError("factor needs a positive integer")
    factored = factorize(value)
    print(f"factored={render_factored(factored)}")
    print(f"structure={render_structure(factored)}")
    if args.parameter:
        report = roundness_report(factored, args.parameter)
        ratio = report.ratio if report.ratio is not None else ""
        print(f"largest_prime={report.largest_prime or ''} ratio={ratio} outlier={'yes' if report.outlier else 'no'}")
    return EXIT_OK


def _add_region_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--file", help="Region file (.vax, .xreg or .cells).")
    parser.add_argument("--family", help="Registered family name.")
    parser.add_argument("--params", help="Family parameters, e.g. a=2,b=2,c=2.")


def _add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMAT_LITERALS, default=FORMAT_TEXT)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(prog="matchwork", description="Exact perfect-matching workbench.")
    parser.add_argument("--verbose", action="store_true", help="Log structured events to stderr.")
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", help="Count perfect matchings of one region.")
    _add_region_flags(count)
    count.add_argument("--method", choices=ENGINE_LITERALS)
    count.add_argument("--factored", action="store_true")
    count.add_argument("--timing", action="store_true")
    count.set_defaults(handler=cmd_count)

    sweep = commands.add_parser("sweep", help="Count a family over a parameter range.")
    sweep.add_argument("range", help="start..stop of the family's sweep parameter.")
    _add_region_flags(sweep)
    sweep.add_argument("--method", choices=ENGINE_LITERALS)
    sweep.add_argument("--jobs", type=int, default=None)
    sweep.add_argument("--timing", action="store_true")
    _add_format_flag(sweep)
    sweep.set_defaults(handler=cmd_sweep)

    verify_parser = commands.add_parser("verify", help="Check a formula over a range.")
    verify_parser.add_argument("formula")
    verify_parser.add_argument("range", nargs="?")
    verify_parser.add_argument("--params")
    _add_format_flag(verify_parser)
    verify_parser.set_defaults(handler=cmd_verify)

    probs = commands.add_parser("probs", help="Exact edge probabilities.")
    _add_region_flags(probs)
    probs.add_argument("--cross-check", action="store_true")
    probs.add_argument("--digits", type=int, default=None)
    _add_format_flag(probs)
    probs.set_defaults(handler=cmd_probs)

    moments = commands.add_parser("moments", help="Moments of inertia of a hexagon.")
    moments.add_argument("n", type=int, nargs="?")
    moments.add_argument("--params")
    moments.add_argument("--table", action="store_true")
    _add_format_flag(moments)
    moments.set_defaults(handler=cmd_moments)

    cokernel = commands.add_parser("cokernel", help="Cokernel of a Kasteleyn or Carlitz matrix.")
    _add_region_flags(cokernel)
    cokernel.add_argument("--source", choices=("kasteleyn", "carlitz"), default="kasteleyn")
    cokernel.set_defaults(handler=cmd_cokernel)

    spectrum_parser = commands.add_parser("spectrum", help="Characteristic polynomial of K K^T.")
    _add_region_flags(spectrum_parser)
    spectrum_parser.set_defaults(handler=cmd_spectrum)

    invsum = commands.add_parser("invsum", help="Entry sum of the inverse Aztec Kasteleyn matrix.")
    invsum.add_argument("n", type=int)
    invsum.set_defaults(handler=cmd_invsum)

    gessel = commands.add_parser("gessel", help="Dimer coverings against dimer tableaux.")
    gessel.add_argument("m", type=int)
    gessel.add_argument("n", type=int)
    gessel.add_argument("--schur", action="store_true", help="Check the odd-variable product form.")
    gessel.set_defaults(handler=cmd_gessel)

    rewrite = commands.add_parser("rewrite-check", help="Brute-force check of a local substitution.")
    rewrite.add_argument("--move", choices=("urban-renewal", "kenyon"), default="kenyon")
    rewrite.add_argument("--orientation", choices=("left", "right"), default="left")
    rewrite.add_argument("--seed", type=int, default=0)
    rewrite.set_defaults(handler=cmd_rewrite_check)

    factor = commands.add_parser("factor", help="Factor an integer and tag its square structure.")
    factor.add_argument("value")
    factor.add_argument("--parameter", type=int, default=None, help="n for the roundness report.")
    factor.set_defaults(handler=cmd_factor)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit status."""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging("INFO" if args.verbose else None)
    try:
        return args.handler(args)
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatchworkError as exc:
        log_event("command_failed", command=args.command, error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
