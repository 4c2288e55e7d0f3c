"""Shared helpers for comparing two-port matrices at mixed entry scales."""

from __future__ import annotations

from tunedline import TwoPort


def twoport_max_error(m1: TwoPort, m2: TwoPort, z_ref: float = 300.0) -> float:
    """Largest entry difference with b and c normalized to dimensionless form.

    b is divided by z_ref and c multiplied by it, so one number bounds the
    error of all four entries on a comparable scale.
    """
    return max(
        abs(m1.a - m2.a),
        abs(m1.d - m2.d),
        abs(m1.b - m2.b) / z_ref,
        abs(m1.c - m2.c) * z_ref,
    )


def assert_twoport_close(
    m1: TwoPort, m2: TwoPort, rtol: float, z_ref: float = 300.0
) -> None:
    """Per-entry relative comparison against each entry's natural scale.

    Entries that are incidentally near zero (b and c at a tuning point)
    are judged against the characteristic scale of their unit (z_ref for
    b, 1/z_ref for c, unity for a and d) instead of against themselves.
    """
    for name, floor in (("a", 1.0), ("d", 1.0), ("b", z_ref), ("c", 1.0 / z_ref)):
        x = getattr(m1, name)
        y = getattr(m2, name)
        scale = max(floor, abs(x), abs(y))
        assert abs(x - y) <= rtol * scale, (
            f"entry {name}: {x} vs {y}, diff {abs(x - y):.3e} > {rtol:.1e} * {scale:.3e}"
        )
