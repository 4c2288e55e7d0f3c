"""Frequency-sweep engine: P/Q curves over a grid and tuning-dip detection.

Reproduces the tuned-line experiment: an ideal source at a fixed
line-to-line voltage drives the line into a shunt load while the supply
frequency is swept over a uniform grid.  Each grid point is solved
independently with the selected line model; resonant points are flagged
in-band rather than aborting the sweep.  Records are per-phase quantities
in SI units, emitted in ascending frequency order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .linemodel import (
    Frequency,
    LineParameters,
    TwoPort,
    abcd_exact,
    abcd_lossless,
    pi_cascade_oracle,
)
from .powerflow import LoadSpec, ResonanceError, complex_power_accounting, solve_receiving_end

__all__ = [
    "MODEL_CHOICES",
    "SweepConfig",
    "SweepRecord",
    "TuningDip",
    "run_sweep",
    "detect_tuning_dips",
]

MODEL_CHOICES = ("exact", "lossless", "pi-cascade")

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class SweepConfig:
    """Full experiment definition: line, load, source and frequency grid.

    source_voltage is line-to-line RMS volts; the solver works per phase
    with vs = source_voltage/sqrt(3) at angle zero.  model selects the
    line representation: "exact", "lossless", or "pi-cascade" with
    pi_sections lumped segments.
    """

    line: LineParameters
    length: float
    source_voltage: float
    load: LoadSpec
    f_start: float
    f_end: float
    n_points: int
    model: str = "lossless"
    pi_sections: int = 100

    def __post_init__(self) -> None:
        if not (math.isfinite(self.length) and self.length > 0.0):
            raise ValueError("length must be positive")
        if self.source_voltage <= 0.0:
            raise ValueError("source_voltage must be positive")
        if not (0.0 < self.f_start < self.f_end):
            raise ValueError("need 0 < f_start < f_end")
        if self.n_points < 2:
            raise ValueError("n_points must be at least 2")
        if self.model not in MODEL_CHOICES:
            raise ValueError(f"model must be one of {MODEL_CHOICES}")
        if self.model == "lossless" and not self.line.is_lossless:
            raise ValueError("lossless model requires r = 0 and g = 0")
        if self.pi_sections < 1:
            raise ValueError("pi_sections must be at least 1")

    def grid(self) -> list[float]:
        """Uniform frequency grid, endpoints inclusive."""
        step = (self.f_end - self.f_start) / (self.n_points - 1)
        return [self.f_start + i * step for i in range(self.n_points - 1)] + [self.f_end]

    def two_port(self, freq: Frequency) -> TwoPort:
        if self.model == "lossless":
            return abcd_lossless(self.line, self.length, freq)
        if self.model == "pi-cascade":
            return pi_cascade_oracle(self.line, self.length, freq, self.pi_sections)
        return abcd_exact(self.line, self.length, freq)


@dataclass(frozen=True)
class SweepRecord:
    """One frequency point: per-phase W/VAr and line-to-neutral volts.

    Singular (resonant) points keep f, vs_mag and the flag but carry None
    for everything the solve would have produced.
    """

    f: float
    p_r: float | None
    q_r: float | None
    q_line: float | None
    vs_mag: float
    vr_mag: float | None
    delta_v: float | None
    singular: bool


@dataclass(frozen=True)
class TuningDip:
    """A detected local minimum of |q_line|, matched to harmonic n (0 if none)."""

    f_detected: float
    n_matched: int
    q_line_at_dip: float


def run_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """Evaluate the source-line-load solution at every grid frequency.

    Grid points are independent; they are evaluated sequentially and
    returned in ascending frequency order.  Per-point resonances produce
    singular records instead of aborting.
    """
    vs = complex(cfg.source_voltage / _SQRT3, 0.0)
    records: list[SweepRecord] = []
    for f in cfg.grid():
        freq = Frequency(f)
        line = cfg.two_port(freq)
        try:
            state = solve_receiving_end(line, vs, cfg.load, freq)
        except ResonanceError:
            records.append(
                SweepRecord(
                    f=f,
                    p_r=None,
                    q_r=None,
                    q_line=None,
                    vs_mag=abs(vs),
                    vr_mag=None,
                    delta_v=None,
                    singular=True,
                )
            )
            continue
        result = complex_power_accounting(state)
        records.append(
            SweepRecord(
                f=f,
                p_r=result.p_r,
                q_r=result.q_r,
                q_line=result.q_line,
                vs_mag=abs(state.vs),
                vr_mag=abs(state.vr),
                delta_v=result.delta_v,
                singular=False,
            )
        )
    return records


def detect_tuning_dips(
    records: list[SweepRecord], length: float, velocity: float
) -> list[TuningDip]:
    """Locate local minima of |q_line| and match them to tuning harmonics.

    Interior records count as dips when strictly smaller than both
    neighbours; the first and last record of the sweep count when strictly
    smaller than their single neighbour (a tuning point can sit exactly on
    the sweep edge).  Records adjacent to singular points are skipped,
    since one neighbour is unknown there.

    Each dip is matched to the nearest analytic harmonic n*v/(2*length);
    dips farther than two grid steps from every harmonic are reported with
    n_matched = 0.
    """
    usable = sum(1 for r in records if not r.singular)
    if usable < 3:
        raise ValueError("need at least 3 non-singular records to detect dips")
    if len(records) < 2:
        raise ValueError("need at least 2 records to infer the grid step")
    step = records[1].f - records[0].f

    def magnitude(rec: SweepRecord) -> float | None:
        return None if rec.singular else abs(rec.q_line)

    dips: list[TuningDip] = []
    last = len(records) - 1
    for i, rec in enumerate(records):
        q = magnitude(rec)
        if q is None:
            continue
        left = magnitude(records[i - 1]) if i > 0 else None
        right = magnitude(records[i + 1]) if i < last else None
        if i == 0:
            is_dip = right is not None and q < right
        elif i == last:
            is_dip = left is not None and q < left
        else:
            is_dip = left is not None and right is not None and q < left and q < right
        if not is_dip:
            continue
        n = max(1, round(2.0 * rec.f * length / velocity))
        f_harmonic = n * velocity / (2.0 * length)
        if abs(rec.f - f_harmonic) > 2.0 * step:
            n = 0
        dips.append(TuningDip(f_detected=rec.f, n_matched=n, q_line_at_dip=rec.q_line))
    return dips
