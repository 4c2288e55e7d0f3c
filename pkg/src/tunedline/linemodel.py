"""Distributed-parameter transmission line two-port models.

A long overhead line (> 250 km) cannot be treated as a lumped impedance:
its series impedance z = r + jwL and shunt admittance y = g + jwC are
spread uniformly along the length.  The steady-state terminal behaviour is
captured by a 2x2 complex transmission (ABCD) matrix

    [Vs]   [a  b] [Vr]
    [Is] = [c  d] [Ir]

with a = d = cosh(gamma*l), b = Zc*sinh(gamma*l), c = sinh(gamma*l)/Zc,
where gamma = sqrt(z*y) is the propagation constant per km and
Zc = sqrt(z/y) the characteristic impedance.

This module provides the exact hyperbolic model, the lossless
trigonometric simplification, the lumped nominal-pi approximation, and a
pi-section cascade that converges to the exact model and serves as an
independent numerical oracle.

Units: lengths in km, frequency in Hz, impedances in ohm, admittances in
siemens.  All functions are pure and safe for concurrent use.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "LineParameters",
    "Frequency",
    "WaveQuantities",
    "TwoPort",
    "default_line",
    "wave_quantities",
    "abcd_exact",
    "abcd_lossless",
    "nominal_pi",
    "cascade",
    "pi_cascade_oracle",
    "RECIPROCITY_TOL",
]

# |a*d - b*c - 1| allowed for any constructed two-port.
RECIPROCITY_TOL = 1e-10


@dataclass(frozen=True)
class LineParameters:
    """Per-unit-length line constants: series r + jwL, shunt g + jwC (per km)."""

    L: float
    C: float
    r: float = 0.0
    g: float = 0.0

    def __post_init__(self) -> None:
        for name in ("L", "C", "r", "g"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"line parameter {name} must be finite")
        if self.L <= 0.0 or self.C <= 0.0:
            raise ValueError("L and C must be positive")
        if self.r < 0.0 or self.g < 0.0:
            raise ValueError("r and g must be non-negative")

    @property
    def is_lossless(self) -> bool:
        return self.r == 0.0 and self.g == 0.0

    @property
    def velocity(self) -> float:
        """Wave propagation velocity 1/sqrt(L*C) in km/s."""
        return 1.0 / math.sqrt(self.L * self.C)

    @property
    def surge_impedance(self) -> float:
        """Lossless characteristic impedance sqrt(L/C) in ohm."""
        return math.sqrt(self.L / self.C)

    def series_impedance(self, omega: float) -> complex:
        """z = r + jwL, ohm/km."""
        return complex(self.r, omega * self.L)

    def shunt_admittance(self, omega: float) -> complex:
        """y = g + jwC, S/km."""
        return complex(self.g, omega * self.C)


def default_line() -> LineParameters:
    """Default lossless 220 kV profile.

    L = 1.0 mH/km and C = 1/90 uF/km give a wave velocity of exactly
    3.0e5 km/s and a 300 ohm surge impedance, so the closed-form tuning
    frequencies come out as round numbers (300/600/900 Hz at 500 km).
    """
    return LineParameters(L=1.0e-3, C=1.0 / 9.0e7)


@dataclass(frozen=True)
class Frequency:
    """Operating frequency; exposes both cyclic f (Hz) and angular omega."""

    f: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.f) and self.f > 0.0):
            raise ValueError("frequency must be positive and finite")

    @property
    def omega(self) -> float:
        return 2.0 * math.pi * self.f


@dataclass(frozen=True)
class WaveQuantities:
    """Propagation constant gamma (1/km) and characteristic impedance zc (ohm)."""

    gamma: complex
    zc: complex


@dataclass(frozen=True)
class TwoPort:
    """Transmission (ABCD) matrix entries: a, d dimensionless, b ohm, c siemens."""

    a: complex
    b: complex
    c: complex
    d: complex

    @classmethod
    def identity(cls) -> "TwoPort":
        return cls(1.0 + 0.0j, 0.0j, 0.0j, 1.0 + 0.0j)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def reciprocity_defect(self) -> float:
        """|a*d - b*c - 1|; zero for any passive reciprocal network."""
        return abs(self.det - 1.0)

    def __matmul__(self, other: "TwoPort") -> "TwoPort":
        """Matrix product, self on the sending side of other."""
        return TwoPort(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


def wave_quantities(params: LineParameters, freq: Frequency) -> WaveQuantities:
    """Per-km wave quantities gamma = sqrt(z*y) and zc = sqrt(z/y).

    Both square roots take the principal branch (Re >= 0): attenuation and
    the resistive part of the characteristic impedance are non-negative.
    For a lossless line this reduces exactly to gamma = jw*sqrt(LC) and a
    purely real zc = sqrt(L/C).
    """
    z = params.series_impedance(freq.omega)
    y = params.shunt_admittance(freq.omega)
    gamma = cmath.sqrt(z * y)
    zc = cmath.sqrt(z / y)
    return WaveQuantities(gamma=gamma, zc=zc)


def abcd_exact(params: LineParameters, length: float, freq: Frequency) -> TwoPort:
    """Exact distributed-parameter two-port over the given length (km).

    a = d = cosh(gamma*l), b = zc*sinh(gamma*l), c = sinh(gamma*l)/zc.
    Valid for lossy and lossless lines.
    """
    _check_length(length)
    wq = wave_quantities(params, freq)
    gl = wq.gamma * length
    ch = cmath.cosh(gl)
    sh = cmath.sinh(gl)
    return TwoPort(ch, wq.zc * sh, sh / wq.zc, ch)


def abcd_lossless(params: LineParameters, length: float, freq: Frequency) -> TwoPort:
    """Lossless-line two-port: a = d = cos(theta), b = j*zc*sin(theta),
    c = j*sin(theta)/zc with theta = w*l*sqrt(LC).

    Only defined for r = 0 and g = 0; agrees with abcd_exact there.
    """
    _check_length(length)
    if not params.is_lossless:
        raise ValueError("abcd_lossless requires r = 0 and g = 0")
    theta = freq.omega * length * math.sqrt(params.L * params.C)
    zc = params.surge_impedance
    cos_t = math.cos(theta)
    sin_t = math.sin(theta)
    return TwoPort(
        complex(cos_t, 0.0),
        complex(0.0, zc * sin_t),
        complex(0.0, sin_t / zc),
        complex(cos_t, 0.0),
    )


def nominal_pi(params: LineParameters, length: float, freq: Frequency) -> TwoPort:
    """Lumped nominal-pi approximation of the whole line.

    Total series Z = z*l with half the total shunt admittance Y = y*l at
    each terminal: a = d = 1 + ZY/2, b = Z, c = Y*(1 + ZY/4).  Adequate
    for short lines only; see pi_cascade_oracle for a converging chain.
    """
    _check_length(length)
    z_total = params.series_impedance(freq.omega) * length
    y_total = params.shunt_admittance(freq.omega) * length
    zy = z_total * y_total
    a = 1.0 + zy / 2.0
    return TwoPort(a, z_total, y_total * (1.0 + zy / 4.0), a)


def cascade(first: TwoPort, second: TwoPort) -> TwoPort:
    """Chain two two-ports, `first` on the sending side.

    Both operands must satisfy reciprocity within RECIPROCITY_TOL; the
    product then satisfies it as well (det of product = product of dets).
    """
    for name, tp in (("first", first), ("second", second)):
        if tp.reciprocity_defect() > RECIPROCITY_TOL:
            raise ValueError(
                f"{name} operand violates reciprocity: |ad - bc - 1| = "
                f"{tp.reciprocity_defect():.3e}"
            )
    return first @ second


def pi_cascade_oracle(
    params: LineParameters, length: float, freq: Frequency, n_sections: int
) -> TwoPort:
    """Cascade of n_sections nominal-pi segments of length l/n_sections.

    Converges to abcd_exact as n_sections grows (section error is cubic in
    the per-section electrical length), which makes it an independent
    check on the hyperbolic closed form.
    """
    if n_sections < 1:
        raise ValueError("n_sections must be at least 1")
    section = nominal_pi(params, length / n_sections, freq)
    result = section
    for _ in range(n_sections - 1):
        result = result @ section
    return result


def _check_length(length: float) -> None:
    if not (math.isfinite(length) and length > 0.0):
        raise ValueError("length must be positive and finite")
