"""Command-line interface: sweeps, resonance tables, self checks, figure data.

Verbs
-----
scan          run the sweep described by --config, write CSV
resonances    run the sweep, report transmission peaks (T >= 1 - eps)
check         run the numerical invariant suites, one line per check
figures-data  emit the four standard coefficient-sweep CSV files

Exit codes: 0 success, 1 configuration error (or failed checks),
2 when more than 10% of a sweep's grid points fail.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ConfigError, KGBarrierError, ScanError
from .scan import ScanSpec, emit_csv, find_resonances, format_csv, read_config, run_scan
from .selfcheck import run_all_checks

FIGURE_SPECS: tuple[tuple[str, ScanSpec], ...] = (
    (
        "smooth_x0_-1.csv",
        ScanSpec("V0", 0.0, 10.0, 0.01, {"E": 2.0, "a": 0.5, "x0": -1.0}, "matcher"),
    ),
    (
        "smooth_x0_-2.csv",
        ScanSpec("V0", 0.0, 10.0, 0.01, {"E": 2.0, "a": 0.5, "x0": -2.0}, "matcher"),
    ),
    (
        "square_schrodinger.csv",
        ScanSpec("V0", 0.0, 6.0, 0.01, {"E": 3.0, "a": 1e-3, "x0": -3.0}, "analytic_schrodinger"),
    ),
    (
        "square_kg.csv",
        ScanSpec("V0", 0.0, 6.0, 0.01, {"E": 3.0, "a": 1e-3, "x0": -3.0}, "analytic_kg"),
    ),
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgbarrier",
        description="Reflection/transmission sweeps for a spin-0 particle on a smooth barrier",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    scan = sub.add_parser("scan", help="run a sweep and write CSV rows")
    scan.add_argument("--config", required=True, help="sweep configuration file")
    scan.add_argument("--engine", default=None, help="override the engine named in the config")
    scan.add_argument("--out", default=None, help="output CSV path (default: stdout)")

    res = sub.add_parser("resonances", help="report transmission peaks of a sweep")
    res.add_argument("--config", required=True)
    res.add_argument("--engine", default=None)
    res.add_argument("--eps", type=float, default=1e-3, help="peak threshold: T >= 1 - eps")
    res.add_argument("--out", default=None)

    sub.add_parser("check", help="run the numerical invariant suites")

    fig = sub.add_parser("figures-data", help="emit the four standard sweep CSV files")
    fig.add_argument("--out", default="figure_data", help="output directory")
    return parser


def _load_spec(args: argparse.Namespace) -> ScanSpec:
    spec = read_config(args.config)
    if args.engine is not None:
        spec = ScanSpec(
            sweep_variable=spec.sweep_variable,
            start=spec.start,
            stop=spec.stop,
            step=spec.step,
            fixed=spec.fixed,
            engine=args.engine,
        )
    return spec


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_scan(args: argparse.Namespace) -> int:
    result = run_scan(_load_spec(args))
    _write_or_print(format_csv(result), args.out)
    if result.crosscheck_max_delta_r is not None:
        print(f"crosscheck max|dR| = {result.crosscheck_max_delta_r:.3e}", file=sys.stderr)
    for value, message in result.errors:
        print(f"warning: swept_value={value!r}: {message}", file=sys.stderr)
    return 0


def _cmd_resonances(args: argparse.Namespace) -> int:
    result = run_scan(_load_spec(args))
    peaks = find_resonances(result.rows, eps=args.eps)
    lines = ["swept_value,T_peak"]
    lines.extend(f"{value:.12g},{t_peak:.12g}" for value, t_peak in peaks)
    _write_or_print("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_check() -> int:
    results = run_all_checks()
    all_ok = True
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        all_ok &= result.passed
        print(f"{status} {result.name}: {result.detail}")
    print("all checks passed" if all_ok else "CHECKS FAILED")
    return 0 if all_ok else 1


def _cmd_figures_data(args: argparse.Namespace) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, spec in FIGURE_SPECS:
        emit_csv(run_scan(spec), out_dir / name)
        print(f"wrote {out_dir / name}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.verb == "scan":
            return _cmd_scan(args)
        if args.verb == "resonances":
            return _cmd_resonances(args)
        if args.verb == "check":
            return _cmd_check()
        return _cmd_figures_data(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except ScanError as exc:
        print(f"scan failed: {exc}", file=sys.stderr)
        return 2
    except KGBarrierError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
