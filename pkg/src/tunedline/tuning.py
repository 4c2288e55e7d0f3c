"""Tuned-line condition solvers.

A line is tuned when its electrical length w*l*sqrt(LC) is an integer
multiple of pi; the receiving-end voltage and current magnitudes then
equal the sending-end ones.  With wave velocity v = 1/sqrt(LC) this gives
two closed forms:

    tuned length     l_n = n * v / (2 * f)     for a given frequency
    tuning frequency f_n = n * v / (2 * l)     for a given length

Both directions are solved here, plus a classifier for how close an
arbitrary (length, frequency) pair sits to the nearest harmonic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .linemodel import Frequency

__all__ = [
    "DEFAULT_VELOCITY_KM_S",
    "TuningSolution",
    "tuned_lengths",
    "tuning_frequencies",
    "is_tuned",
]

# Wave velocity of the default line profile, km/s (idealized speed of light).
DEFAULT_VELOCITY_KM_S = 3.0e5


@dataclass(frozen=True)
class TuningSolution:
    """Harmonic index n with its tuned frequency (Hz) or tuned length (km)."""

    n: int
    value: float


def _check_velocity(velocity: float) -> None:
    if not (math.isfinite(velocity) and velocity > 0.0):
        raise ValueError("velocity must be positive and finite")


def tuned_lengths(
    freq: Frequency, velocity: float = DEFAULT_VELOCITY_KM_S, n_max: int = 3
) -> list[TuningSolution]:
    """Tuned line lengths n*v/(2f) in km for n = 1..n_max."""
    _check_velocity(velocity)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return [TuningSolution(n, n * velocity / (2.0 * freq.f)) for n in range(1, n_max + 1)]


def tuning_frequencies(
    length: float, velocity: float = DEFAULT_VELOCITY_KM_S, n_max: int = 3
) -> list[TuningSolution]:
    """Tuning frequencies n*v/(2l) in Hz for n = 1..n_max."""
    _check_velocity(velocity)
    if not (math.isfinite(length) and length > 0.0):
        raise ValueError("length must be positive")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return [TuningSolution(n, n * velocity / (2.0 * length)) for n in range(1, n_max + 1)]


def is_tuned(
    length: float,
    freq: Frequency,
    velocity: float = DEFAULT_VELOCITY_KM_S,
    rel_tol: float = 1e-6,
) -> tuple[bool, TuningSolution]:
    """Classify a (length, frequency) pair against the tuning condition.

    The pair is tuned when 2*f*l/v is within rel_tol of an integer n >= 1.
    Also returns the nearest tuning frequency as a TuningSolution (with n
    clamped to 1, since n = 0 is no line at all).
    """
    _check_velocity(velocity)
    if not (math.isfinite(length) and length > 0.0):
        raise ValueError("length must be positive")
    if not (0.0 < rel_tol < 0.5):
        raise ValueError("rel_tol must lie in (0, 0.5)")
    x = 2.0 * freq.f * length / velocity
    nearest_int = round(x)
    tuned = nearest_int >= 1 and abs(x - nearest_int) <= rel_tol
    n = max(1, nearest_int)
    nearest = TuningSolution(n, n * velocity / (2.0 * length))
    return tuned, nearest
