# Copyright 2025 gentrib-utils contributors. See the top-level COPYRIGHT file for details.
# SPDX-License-Identifier: Apache-2.0

"""Command-line front end.

    gentrib term   --preset tribonacci -n 7 --method matrix
    gentrib terms  --notation "V(1,1,1;1,1,1)" --n-lo 0 --n-hi 10
    gentrib roots  --preset narayana:3
    gentrib verify --all --n-max 40 --json
    gentrib bench  --preset tribonacci -n 1000 100000 --methods iter matrix --csv

Sequence parameters are selected with ``--preset``, ``--notation`` or the six flags ``--v0 --v1 --v2 --r --s --t``.
Flags override the corresponding fields of a preset or notation; without either, the initial terms default to
``(0, 0, 1)`` and ``--r --s --t`` are required.

Exit codes: 0 success, 1 identity failure or benchmark disagreement, 2 usage error (including closed forms that
leave the floating-point range), 3 Delta(r, s, t) <= 0.

Every command prints JSON with ``--json``. ``term``, ``terms``, ``roots`` and ``bench`` also print CSV with ``--csv``.
"""

import argparse
import csv
import json
import logging
import sys
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import gentrib
from gentrib.analytic import (
    DeltaNotPositive,
    RootConvergenceError,
    binet_constants,
    char_poly,
    cubic_roots,
    symmetric_residuals,
    v_binet,
)
from gentrib.bench import METHODS, BenchmarkMismatch, run_bench, write_csv
from gentrib.identities import IDENTITY_IDS, run_suite
from gentrib.matrix import term_by_matrix, term_by_matrix_mod
from gentrib.notation import format_params, parse_params
from gentrib.seq_core import (
    SequenceParams,
    cassini_seed,
    make_params,
    real_params,
    require_exact,
    term_iterative,
    terms_range,
)
from gentrib.suite_config import SuiteConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_DELTA = 3

DELTA_NONPOSITIVE_PARAMS = make_params(0, 0, 1, 0, 3, 0)
"""(0,0,1;0,3,0): Delta = -1, three real roots."""


@dataclass
class OutputRecord:
    """Machine-readable result of a command: what was asked, what came out, and which version answered."""

    command: str
    inputs: dict[str, Any]
    results: Any
    version: str = field(default_factory=lambda: gentrib.__version__)

    def to_dict(self) -> dict[str, Any]:
        return {"command": self.command, "inputs": self.inputs, "results": self.results, "version": self.version}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def _coefficient(text: str) -> int | Fraction | float:
    """Recurrence coefficient flag: integer, rational ``a/b`` or decimal."""
    try:
        return int(text)
    except ValueError:
        pass
    if "/" in text:
        value = Fraction(text)
        return value.numerator if value.denominator == 1 else value
    return float(text)


def _add_params_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("sequence parameters")
    group.add_argument("--preset", help="tribonacci, padovan or narayana:<k>")
    group.add_argument("--notation", help='explicit parameters, e.g. "V(0,0,1;1,1,1)"')
    for name in ("v0", "v1", "v2"):
        group.add_argument(f"--{name}", type=int)
    for name in ("r", "s", "t"):
        group.add_argument(f"--{name}", type=_coefficient)


def _has_params(args: argparse.Namespace) -> bool:
    return any(getattr(args, name) is not None for name in ("preset", "notation", *SequenceParams._fields))


def _resolve_params(args: argparse.Namespace, *, allow_real: bool = False) -> SequenceParams:
    if args.preset is not None and args.notation is not None:
        raise ValueError("Use either --preset or --notation, not both")

    text = args.preset if args.preset is not None else args.notation
    if text is not None:
        base = parse_params(text, allow_real=True)
    else:
        missing = [f"--{name}" for name in ("r", "s", "t") if getattr(args, name) is None]
        if missing:
            raise ValueError(f"Without --preset or --notation the coefficients {missing} are required")
        base = real_params(0, 0, 1, args.r, args.s, args.t)

    overrides = {name: getattr(args, name) for name in SequenceParams._fields if getattr(args, name) is not None}
    p = real_params(*base._replace(**overrides))
    if not allow_real:
        require_exact(p)
    return p


def cmd_term(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    p = _resolve_params(args, allow_real=args.method == "binet")
    if args.n < 0:
        raise ValueError(f"Index must be a non-negative integer. Got {args.n} instead")
    if args.mod is not None and args.method != "matrix":
        raise ValueError(f"--mod is only supported by the matrix method. Got --method {args.method} instead")

    results: dict[str, Any] = {}
    if args.method == "iter":
        results["value"] = term_iterative(p, args.n)
    elif args.mod is not None:
        results["value"] = term_by_matrix_mod(p, args.n, args.mod)
    elif args.method == "matrix":
        results["value"] = term_by_matrix(p, args.n)
    else:
        closed = v_binet(p, args.n)
        results["value"] = round(closed.value)
        results["binet_value"] = closed.value
        results["imag_residue"] = closed.imag_residue

    inputs = {"params": format_params(p), "n": args.n, "method": args.method, "modulus": args.mod}
    return OutputRecord("term", inputs, results), EXIT_OK


def cmd_terms(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    p = _resolve_params(args)
    values = terms_range(p, args.n_lo, args.n_hi)
    inputs = {"params": format_params(p), "n_lo": args.n_lo, "n_hi": args.n_hi}
    results = [{"n": n, "value": v} for n, v in zip(range(args.n_lo, args.n_hi + 1), values, strict=True)]
    return OutputRecord("terms", inputs, results), EXIT_OK


def cmd_roots(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    p = _resolve_params(args, allow_real=True)
    roots = cubic_roots(p.r, p.s, p.t)
    consts = binet_constants(p, roots)
    rf, sf, tf = (float(c) for c in p.coefficients)

    results = {
        "delta": roots.delta,
        "radicand": roots.radicand,
        "alpha": roots.alpha,
        "omega1": roots.omega1,
        "omega2": roots.omega2,
        "a_v": roots.a_v,
        "b_v": roots.b_v,
        "P": consts.p_c,
        "Q": consts.q_c,
        "R": consts.r_c,
        "root_residuals": [abs(char_poly(z, rf, sf, tf)) for z in roots.roots],
        "symmetric_residuals": list(symmetric_residuals(roots, p.r, p.s, p.t)),
    }
    if p.is_exact:
        results["g0"] = cassini_seed(p)
    results = {key: _jsonable(value) for key, value in results.items()}
    return OutputRecord("roots", {"params": format_params(p)}, results), EXIT_OK


def _suite_config(args: argparse.Namespace) -> SuiteConfig:
    cfg = SuiteConfig.from_file(args.config) if args.config else SuiteConfig()
    kwargs = cfg.to_dict()
    kwargs["params"] = list(cfg.params)

    if args.delta_nonpositive_params:
        kwargs.update(presets=[], params=[DELTA_NONPOSITIVE_PARAMS], random_count=0)
    elif _has_params(args):
        kwargs.update(presets=[], params=[_resolve_params(args)], random_count=0)

    if args.identity:
        kwargs["identities"] = args.identity
    elif args.all:
        kwargs["identities"] = "all"
    for key, value in (
        ("n_lo", args.n_min),
        ("n_hi", args.n_max),
        ("seed", args.seed),
        ("rel_tol", args.tol_rel),
        ("abs_tol", args.tol_abs),
        ("random_count", args.random_count),
        ("workers", args.workers),
    ):
        if value is not None:
            kwargs[key] = value
    return SuiteConfig(**kwargs)


def cmd_verify(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    cfg = _suite_config(args)
    reports = run_suite(cfg)
    failed = sum(not r.passed for r in reports)
    results = {
        "reports": [r.to_dict() for r in reports],
        "summary": {"total": len(reports), "passed": len(reports) - failed, "failed": failed},
    }
    return OutputRecord("verify", {"config": cfg.to_dict()}, results), EXIT_FAILURE if failed else EXIT_OK


def cmd_bench(args: argparse.Namespace) -> tuple[OutputRecord, int]:
    p = _resolve_params(args)
    rows = run_bench(p, args.n, args.methods, args.repetitions, args.mod, rel_tol=args.tol_rel)
    inputs = {
        "params": format_params(p),
        "n": list(args.n),
        "methods": list(args.methods),
        "repetitions": args.repetitions,
        "modulus": args.mod,
    }
    return OutputRecord("bench", inputs, [row._asdict() for row in rows]), EXIT_OK


def _print_human(record: OutputRecord) -> None:
    results = record.results
    if record.command == "term":
        print(results["value"])
        if "imag_residue" in results:
            print(f"binet value {results['binet_value']!r}, imaginary residue {results['imag_residue']:.3e}")
    elif record.command == "terms":
        for item in results:
            print(f"{item['n']}\t{item['value']}")
    elif record.command == "roots":
        for key, value in results.items():
            print(f"{key:>20}: {value}")
    elif record.command == "verify":
        for report in results["reports"]:
            line = f"{report['status'].upper():4} {report['identity_id']:<17} {report['params']} {report['range']}"
            print(f"{line} worst={report['worst_residual']:.3e}")
            for failure in report["failures"]:
                print(f"     n={failure['n']}: {failure['detail']}")
        summary = results["summary"]
        print(f"{summary['passed']}/{summary['total']} checks passed")
    else:
        for row in results:
            modulus = f" mod {row['modulus']}" if row["modulus"] is not None else ""
            print(f"{row['method']:>6} n={row['n']}{modulus}: median {row['median_ns']} ns, min {row['min_ns']} ns")


def _print_csv(record: OutputRecord) -> None:
    if record.command == "bench":
        write_csv((tuple(row.values()) for row in record.results), sys.stdout)
        return

    writer = csv.writer(sys.stdout, lineterminator="\n")
    if record.command == "term":
        extra = [key for key in ("binet_value", "imag_residue") if key in record.results]
        writer.writerow(("n", "value", *extra))
        writer.writerow((record.inputs["n"], record.results["value"], *(record.results[key] for key in extra)))
    elif record.command == "roots":
        # complex values and residual lists spread over several columns
        writer.writerow(("name", "value"))
        for key, value in record.results.items():
            writer.writerow((key, *value) if isinstance(value, list) else (key, value))
    else:
        writer.writerow(("n", "value"))
        for item in record.results:
            writer.writerow((item["n"], item["value"]))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gentrib", description="Generalized Tribonacci sequences and identities.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    term = subparsers.add_parser("term", help="compute a single term V_n")
    _add_params_args(term)
    term.add_argument("-n", type=int, required=True)
    term.add_argument("--method", choices=METHODS, default="matrix")
    term.add_argument("--mod", type=int, help="reduce modulo this integer (matrix method only)")
    term.add_argument("--json", action="store_true")
    term.add_argument("--csv", action="store_true")
    term.set_defaults(handler=cmd_term)

    terms = subparsers.add_parser("terms", help="list V_n over an index range")
    _add_params_args(terms)
    terms.add_argument("--n-lo", type=int, default=0)
    terms.add_argument("--n-hi", type=int, required=True)
    terms.add_argument("--json", action="store_true")
    terms.add_argument("--csv", action="store_true")
    terms.set_defaults(handler=cmd_terms)

    roots = subparsers.add_parser("roots", help="roots, Delta and Binet constants of the characteristic cubic")
    _add_params_args(roots)
    roots.add_argument("--json", action="store_true")
    roots.add_argument("--csv", action="store_true")
    roots.set_defaults(handler=cmd_roots)

    verify = subparsers.add_parser("verify", help="verify the identities over a parameter pool")
    _add_params_args(verify)
    verify.add_argument("--all", action="store_true", help="run every identity (the default)")
    verify.add_argument("--identity", action="append", choices=IDENTITY_IDS, help="run this identity (repeatable)")
    verify.add_argument("--config", help="YAML suite configuration")
    verify.add_argument("--n-min", type=int)
    verify.add_argument("--n-max", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--random-count", type=int)
    verify.add_argument("--tol-rel", type=float)
    verify.add_argument("--tol-abs", type=float)
    verify.add_argument("--workers", type=int)
    verify.add_argument(
        "--delta-nonpositive-params",
        action="store_true",
        help="check the parameters (0,0,1;0,3,0), whose Delta is -1",
    )
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    bench = subparsers.add_parser("bench", help="time the evaluation paths")
    _add_params_args(bench)
    bench.add_argument("-n", type=int, nargs="+", required=True)
    bench.add_argument("--methods", nargs="+", choices=METHODS, default=["iter", "matrix"])
    bench.add_argument("--repetitions", type=int, default=5)
    bench.add_argument("--mod", type=int)
    bench.add_argument("--tol-rel", type=float, default=1e-8)
    bench.add_argument("--json", action="store_true")
    bench.add_argument("--csv", action="store_true")
    bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code else EXIT_OK

    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if hasattr(sys, "set_int_max_str_digits"):
        # exact terms easily exceed the default limit of 4300 digits
        sys.set_int_max_str_digits(0)

    try:
        record, code = args.handler(args)
    except DeltaNotPositive as err:
        logger.error(str(err))
        return EXIT_DELTA
    except BenchmarkMismatch as err:
        logger.error(str(err))
        return EXIT_FAILURE
    except (ValueError, TypeError) as err:
        logger.error(str(err))
        return EXIT_USAGE
    except (OverflowError, RootConvergenceError) as err:
        # closed forms beyond the float range, or roots that do not polish
        logger.error(str(err))
        return EXIT_USAGE

    if getattr(args, "json", False):
        print(record.to_json())
    elif getattr(args, "csv", False):
        _print_csv(record)
    else:
        _print_human(record)
    return code


if __name__ == "__main__":
    sys.exit(main())
