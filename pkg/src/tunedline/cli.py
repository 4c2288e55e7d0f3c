"""Command-line interface: tuning queries, single-point solves, sweeps.

Exit codes: 0 success, 2 argument or config error, 3 singular operating
point (solve only), 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import __version__
from .config import ConfigError, load_sweep_config, resolve_config_arg
from .linemodel import Frequency
from .powerflow import ResonanceError, complex_power_accounting, solve_receiving_end
from .reporting import (
    SweepCsvRow,
    build_manifest,
    dips_report_json,
    format_sweep_csv,
    to_csv_rows,
    write_text_atomic,
)
from .sweep import SweepRecord, detect_tuning_dips, run_sweep
from .tuning import DEFAULT_VELOCITY_KM_S, tuned_lengths, tuning_frequencies

_PLOT_QUANTITIES = ("p_r_mw", "q_r_mvar", "q_line_mvar")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tunedline",
        description="Steady-state simulation of long HVAC lines and tuned-frequency analysis.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_tuning = sub.add_parser(
        "tuning",
        help="tuned lengths for a frequency, or tuning frequencies for a length",
    )
    group = p_tuning.add_mutually_exclusive_group(required=True)
    group.add_argument("--length", type=float, metavar="KM", help="line length in km")
    group.add_argument("--frequency", type=float, metavar="HZ", help="supply frequency in Hz")
    p_tuning.add_argument(
        "--velocity",
        type=float,
        default=DEFAULT_VELOCITY_KM_S,
        metavar="KM_S",
        help="wave velocity in km/s (default %(default)s)",
    )
    p_tuning.add_argument(
        "--n-max", type=int, default=3, metavar="N", help="highest harmonic (default 3)"
    )
    p_tuning.add_argument(
        "--format", choices=("table", "csv", "json"), default="table", help="output format"
    )
    p_tuning.set_defaults(func=cmd_tuning)

    p_solve = sub.add_parser("solve", help="solve one operating point of a configured system")
    p_solve.add_argument("--config", required=True, help="config file path or bundled name")
    p_solve.add_argument(
        "--frequency", type=float, required=True, metavar="HZ", help="supply frequency in Hz"
    )
    p_solve.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    p_solve.add_argument("--out", help="also write the JSON report to this file")
    p_solve.set_defaults(func=cmd_solve)

    p_sweep = sub.add_parser("sweep", help="run a frequency sweep and emit CSV plus reports")
    p_sweep.add_argument("--config", required=True, help="config file path or bundled name")
    p_sweep.add_argument("--out", required=True, metavar="DIR", help="output directory")
    p_sweep.add_argument(
        "--format",
        choices=("csv", "json"),
        default="csv",
        help="records format; json writes records.json alongside the CSV",
    )
    p_sweep.add_argument(
        "--plot-data",
        action="store_true",
        help="also write two-column gnuplot files per quantity",
    )
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def cmd_tuning(args: argparse.Namespace) -> int:
    if args.length is not None:
        if args.length <= 0:
            raise ValueError("--length must be positive")
        solutions = tuning_frequencies(args.length, args.velocity, args.n_max)
        unit, title = "Hz", f"tuning frequencies for a {args.length:g} km line"
    else:
        solutions = tuned_lengths(Frequency(args.frequency), args.velocity, args.n_max)
        unit, title = "km", f"tuned lengths at {args.frequency:g} Hz"

    if args.format == "json":
        payload = [{"n": s.n, "value": s.value, "unit": unit} for s in solutions]
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print(f"n,value_{unit.lower()}")
        for s in solutions:
            print(f"{s.n},{format(s.value, '.17g')}")
    else:
        print(f"# {title} (v = {args.velocity:g} km/s)")
        print(f"{'n':>3}  {'value':>14}")
        for s in solutions:
            print(f"{s.n:>3}  {s.value:>11.6g} {unit}")
    return 0


def _solve_row(cfg, frequency: float) -> SweepCsvRow:
    freq = Frequency(frequency)
    line = cfg.two_port(freq)
    vs = complex(cfg.source_voltage / 3.0**0.5, 0.0)
    state = solve_receiving_end(line, vs, cfg.load, freq)
    result = complex_power_accounting(state)
    record = SweepRecord(
        f=frequency,
        p_r=result.p_r,
        q_r=result.q_r,
        q_line=result.q_line,
        vs_mag=abs(state.vs),
        vr_mag=abs(state.vr),
        delta_v=result.delta_v,
        singular=False,
    )
    return to_csv_rows([record])[0]


def cmd_solve(args: argparse.Namespace) -> int:
    cfg = load_sweep_config(resolve_config_arg(args.config))
    row = _solve_row(cfg, args.frequency)
    payload = asdict(row)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"f        = {row.f_hz:g} Hz")
        print(f"model    = {cfg.model}, length = {cfg.length:g} km")
        print(f"P_r      = {row.p_r_mw:.6g} MW (three-phase)")
        print(f"Q_r      = {row.q_r_mvar:.6g} MVAr")
        print(f"Q_line   = {row.q_line_mvar:.6g} MVAr")
        print(f"|Vs|     = {row.vs_kv:.6g} kV (line-to-line)")
        print(f"|Vr|     = {row.vr_kv:.6g} kV")
        print(f"delta_v  = {row.delta_v:.6g}")
    if args.out:
        write_text_atomic(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = load_sweep_config(resolve_config_arg(args.config))
    records = run_sweep(cfg)
    dips = detect_tuning_dips(records, cfg.length, cfg.line.velocity)
    rows = to_csv_rows(records)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    csv_path = out_dir / "records.csv"
    write_text_atomic(csv_path, format_sweep_csv(rows))
    outputs = [str(csv_path)]

    if args.format == "json":
        json_path = out_dir / "records.json"
        write_text_atomic(json_path, json.dumps([asdict(r) for r in rows], indent=2) + "\n")
        outputs.append(str(json_path))

    dips_path = out_dir / "dips.json"
    write_text_atomic(dips_path, dips_report_json(dips))
    outputs.append(str(dips_path))

    if args.plot_data:
        for quantity in _PLOT_QUANTITIES:
            lines = [f"# f_hz {quantity}"]
            for row in rows:
                value = getattr(row, quantity)
                if value is not None:
                    lines.append(f"{format(row.f_hz, '.17g')} {format(value, '.17g')}")
            dat_path = out_dir / f"{quantity}.dat"
            write_text_atomic(dat_path, "\n".join(lines) + "\n")
            outputs.append(str(dat_path))

    manifest = build_manifest(cfg, outputs)
    write_text_atomic(out_dir / "manifest.json", json.dumps(asdict(manifest), indent=2) + "\n")

    n_singular = sum(r.singular for r in records)
    print(f"wrote {len(records)} records ({n_singular} singular) to {csv_path}")
    matched = [d for d in dips if d.n_matched > 0]
    print(f"tuning dips: {len(matched)} matched, {len(dips) - len(matched)} unmatched")
    for d in matched:
        print(f"  n={d.n_matched}  f={d.f_detected:g} Hz")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResonanceError as exc:
        print(f"error: singular operating point: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
