"""Result serialization: sweep CSV, dips report, run manifest, plot data.

The CSV schema is fixed and byte-deterministic for a given config:

    f_hz,p_r_mw,q_r_mvar,q_line_mvar,vs_kv,vr_kv,delta_v,singular

Rows hold three-phase totals in MW/MVAr and line-to-line kV (the library
itself works per phase); floats are written with 17 significant digits so
parsing a file reproduces the written values exactly.  Singular rows keep
f_hz, vs_kv and the flag and leave the other cells empty.

All writers go through a .partial temp file and rename on success, so an
interrupted run never leaves a clean-looking half-written output.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .sweep import SweepConfig, SweepRecord, TuningDip

__all__ = [
    "CSV_HEADER",
    "SweepCsvRow",
    "to_csv_rows",
    "format_sweep_csv",
    "read_sweep_csv",
    "write_text_atomic",
    "dips_report_json",
    "config_digest",
    "RunManifest",
    "build_manifest",
]

CSV_HEADER = "f_hz,p_r_mw,q_r_mvar,q_line_mvar,vs_kv,vr_kv,delta_v,singular"

_SQRT3 = 3.0**0.5


@dataclass(frozen=True)
class SweepCsvRow:
    """One CSV row: three-phase MW/MVAr, line-to-line kV."""

    f_hz: float
    p_r_mw: float | None
    q_r_mvar: float | None
    q_line_mvar: float | None
    vs_kv: float
    vr_kv: float | None
    delta_v: float | None
    singular: bool


def _to_mw(per_phase_w: float | None) -> float | None:
    return None if per_phase_w is None else per_phase_w * 3.0 / 1e6


def _to_kv_ll(per_phase_v: float | None) -> float | None:
    return None if per_phase_v is None else per_phase_v * _SQRT3 / 1e3


def to_csv_rows(records: list[SweepRecord]) -> list[SweepCsvRow]:
    """Convert per-phase sweep records to reporting units."""
    return [
        SweepCsvRow(
            f_hz=r.f,
            p_r_mw=_to_mw(r.p_r),
            q_r_mvar=_to_mw(r.q_r),
            q_line_mvar=_to_mw(r.q_line),
            vs_kv=_to_kv_ll(r.vs_mag),
            vr_kv=_to_kv_ll(r.vr_mag),
            delta_v=r.delta_v,
            singular=r.singular,
        )
        for r in records
    ]


def _fmt(value: float | None) -> str:
    return "" if value is None else format(value, ".17g")


def format_sweep_csv(rows: list[SweepCsvRow]) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                (
                    _fmt(row.f_hz),
                    _fmt(row.p_r_mw),
                    _fmt(row.q_r_mvar),
                    _fmt(row.q_line_mvar),
                    _fmt(row.vs_kv),
                    _fmt(row.vr_kv),
                    _fmt(row.delta_v),
                    "true" if row.singular else "false",
                )
            )
        )
    return "\n".join(lines) + "\n"


def read_sweep_csv(path: str | Path) -> list[SweepCsvRow]:
    """Parse an emitted CSV back into rows (floats round-trip exactly)."""
    text = Path(path).read_text()
    lines = text.splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path}: unexpected CSV header")

    def parse(cell: str) -> float | None:
        return None if cell == "" else float(cell)

    rows = []
    for line in lines[1:]:
        cells = line.split(",")
        if len(cells) != 8:
            raise ValueError(f"{path}: malformed row {line!r}")
        rows.append(
            SweepCsvRow(
                f_hz=float(cells[0]),
                p_r_mw=parse(cells[1]),
                q_r_mvar=parse(cells[2]),
                q_line_mvar=parse(cells[3]),
                vs_kv=float(cells[4]),
                vr_kv=parse(cells[5]),
                delta_v=parse(cells[6]),
                singular={"true": True, "false": False}[cells[7]],
            )
        )
    return rows


def write_text_atomic(path: str | Path, text: str) -> None:
    """Write via a .partial sibling and rename, so failures leave no clean file."""
    path = Path(path)
    partial = path.with_name(path.name + ".partial")
    with open(partial, "w", newline="") as fh:
        fh.write(text)
    os.replace(partial, path)


def dips_report_json(dips: list[TuningDip]) -> str:
    """Dips as a JSON array; q_line_at_dip in three-phase MVAr."""
    payload = [
        {
            "f_detected": d.f_detected,
            "n_matched": d.n_matched,
            "q_line_at_dip": _to_mw(d.q_line_at_dip),
        }
        for d in dips
    ]
    return json.dumps(payload, indent=2) + "\n"


def config_digest(cfg: SweepConfig) -> str:
    """Content hash of the resolved config; stable across identical runs."""
    canonical = json.dumps(asdict(cfg), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


@dataclass(frozen=True)
class RunManifest:
    config_digest: str
    tool_version: str
    timestamp: str
    outputs: list[str]


def build_manifest(cfg: SweepConfig, outputs: list[str]) -> RunManifest:
    return RunManifest(
        config_digest=config_digest(cfg),
        tool_version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        outputs=list(outputs),
    )
