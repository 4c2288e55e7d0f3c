"""Declarative experiment configs: INI files with unit-suffixed values.

A config has four sections whose keys mirror the SweepConfig fields:

    [line]
    r = 0 ohm/km
    L = 1.0 mH/km
    g = 0 S/km
    C = 1.1111111111111112e-08 F/km
    length = 500 km

    [load]
    kind = fixed-capacitance-rated
    rated_q = 100 MVAr
    rated_v = 220 kV
    rated_f = 50 Hz
    rated_p = 100 MW

    [source]
    voltage = 220 kV

    [sweep]
    f_start = 50 Hz
    f_end = 1000 Hz
    n_points = 951
    model = lossless

Values may carry a unit suffix from the tables below; bare numbers are
taken in the base unit (km, Hz, V, VAr, W, ohm/km, H/km, S/km, F/km, S,
F, ohm).  Unit tokens are case-sensitive (m and M differ).  model is one
of: exact, lossless, pi-cascade, pi-cascade(N).
"""

from __future__ import annotations

import configparser
import re
from importlib import resources
from pathlib import Path

from .linemodel import LineParameters
from .powerflow import LoadSpec
from .sweep import SweepConfig

__all__ = [
    "ConfigError",
    "parse_sweep_config",
    "load_sweep_config",
    "bundled_config_names",
    "bundled_config_path",
    "resolve_config_arg",
]


class ConfigError(ValueError):
    """A config file is missing, malformed, or fails validation."""


_LENGTH = {"km": 1.0, "m": 1e-3}
_FREQ = {"Hz": 1.0, "kHz": 1e3}
_VOLT = {"V": 1.0, "kV": 1e3, "MV": 1e6}
_REACTIVE = {"VAr": 1.0, "kVAr": 1e3, "MVAr": 1e6, "var": 1.0, "kvar": 1e3, "Mvar": 1e6}
_ACTIVE = {"W": 1.0, "kW": 1e3, "MW": 1e6}
_R_PER_KM = {"ohm/km": 1.0, "mohm/km": 1e-3}
_L_PER_KM = {"H/km": 1.0, "mH/km": 1e-3, "uH/km": 1e-6}
_G_PER_KM = {"S/km": 1.0, "mS/km": 1e-3, "uS/km": 1e-6, "nS/km": 1e-9}
_C_PER_KM = {"F/km": 1.0, "uF/km": 1e-6, "nF/km": 1e-9, "pF/km": 1e-12}
_CONDUCTANCE = {"S": 1.0, "mS": 1e-3, "uS": 1e-6}
_CAPACITANCE = {"F": 1.0, "uF": 1e-6, "nF": 1e-9, "pF": 1e-12}
_RESISTANCE = {"ohm": 1.0, "kohm": 1e3}

_MODEL_RE = re.compile(r"^pi-cascade\((\d+)\)$")


def parse_quantity(text: str, units: dict[str, float], *, where: str) -> float:
    """Parse '<number>[ <unit>]' normalizing the unit suffix to base units."""
    parts = text.split()
    if not parts or len(parts) > 2:
        raise ConfigError(f"{where}: expected '<number> [unit]', got {text!r}")
    try:
        value = float(parts[0])
    except ValueError:
        raise ConfigError(f"{where}: {parts[0]!r} is not a number") from None
    if len(parts) == 1:
        return value
    try:
        return value * units[parts[1]]
    except KeyError:
        allowed = ", ".join(sorted(units))
        raise ConfigError(
            f"{where}: unknown unit {parts[1]!r} (allowed: {allowed})"
        ) from None


class _Section:
    """One config section with typed getters and unknown-key detection."""

    def __init__(self, name: str, raw: dict[str, str], origin: str):
        self.name = name
        self.raw = raw
        self.origin = origin
        self.seen: set[str] = set()

    def _where(self, key: str) -> str:
        return f"{self.origin}: [{self.name}] {key}"

    def get(self, key: str, units: dict[str, float], default: float | None = None) -> float:
        self.seen.add(key)
        if key not in self.raw:
            if default is not None:
                return default
            raise ConfigError(f"{self._where(key)} is required")
        return parse_quantity(self.raw[key], units, where=self._where(key))

    def get_str(self, key: str, default: str | None = None) -> str:
        self.seen.add(key)
        if key not in self.raw:
            if default is not None:
                return default
            raise ConfigError(f"{self._where(key)} is required")
        return self.raw[key].strip()

    def get_int(self, key: str) -> int:
        self.seen.add(key)
        if key not in self.raw:
            raise ConfigError(f"{self._where(key)} is required")
        try:
            return int(self.raw[key])
        except ValueError:
            raise ConfigError(
                f"{self._where(key)}: {self.raw[key]!r} is not an integer"
            ) from None

    def has(self, key: str) -> bool:
        return key in self.raw

    def check_no_extras(self) -> None:
        extras = set(self.raw) - self.seen
        if extras:
            raise ConfigError(
                f"{self.origin}: unknown key(s) in [{self.name}]: {', '.join(sorted(extras))}"
            )


def parse_sweep_config(text: str, origin: str = "<config>") -> SweepConfig:
    """Parse config text into a validated SweepConfig."""
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text, source=origin)
    except configparser.Error as exc:
        raise ConfigError(f"{origin}: {exc}") from None

    required = {"line", "load", "source", "sweep"}
    present = set(parser.sections())
    missing = required - present
    if missing:
        raise ConfigError(f"{origin}: missing section(s): {', '.join(sorted(missing))}")
    extras = present - required
    if extras:
        raise ConfigError(f"{origin}: unknown section(s): {', '.join(sorted(extras))}")

    def section(name: str) -> _Section:
        return _Section(name, dict(parser[name]), origin)

    line_sec = section("line")
    try:
        line = LineParameters(
            L=line_sec.get("l", _L_PER_KM),
            C=line_sec.get("c", _C_PER_KM),
            r=line_sec.get("r", _R_PER_KM, default=0.0),
            g=line_sec.get("g", _G_PER_KM, default=0.0),
        )
    except ValueError as exc:
        raise ConfigError(f"{origin}: [line]: {exc}") from None
    length = line_sec.get("length", _LENGTH)
    line_sec.check_no_extras()

    load = _parse_load(section("load"), origin)

    source_sec = section("source")
    voltage = source_sec.get("voltage", _VOLT)
    source_sec.check_no_extras()

    sweep_sec = section("sweep")
    f_start = sweep_sec.get("f_start", _FREQ)
    f_end = sweep_sec.get("f_end", _FREQ)
    n_points = sweep_sec.get_int("n_points")
    model, pi_sections = _parse_model(sweep_sec.get_str("model", default="lossless"), origin)
    sweep_sec.check_no_extras()

    try:
        return SweepConfig(
            line=line,
            length=length,
            source_voltage=voltage,
            load=load,
            f_start=f_start,
            f_end=f_end,
            n_points=n_points,
            model=model,
            pi_sections=pi_sections,
        )
    except ValueError as exc:
        raise ConfigError(f"{origin}: {exc}") from None


def _parse_load(sec: _Section, origin: str) -> LoadSpec:
    kind = sec.get_str("kind")
    try:
        if kind == "admittance":
            load = LoadSpec.from_admittance(
                g_load=sec.get("g_load", _CONDUCTANCE, default=0.0),
                c_load=sec.get("c_load", _CAPACITANCE, default=0.0),
            )
        elif kind == "fixed-capacitance-rated":
            rated_v = sec.get("rated_v", _VOLT)
            g_load = sec.get("g_load", _CONDUCTANCE, default=0.0)
            if sec.has("rated_p"):
                # resistive component given as active power at the rating voltage
                g_load += sec.get("rated_p", _ACTIVE) / rated_v**2
            load = LoadSpec.from_rated_capacitor(
                rated_q=sec.get("rated_q", _REACTIVE),
                rated_v=rated_v,
                rated_f=sec.get("rated_f", _FREQ),
                g_load=g_load,
            )
        elif kind == "impedance":
            load = LoadSpec.from_impedance(
                resistance=sec.get("resistance", _RESISTANCE),
                c_load=sec.get("c_load", _CAPACITANCE, default=0.0),
            )
        else:
            raise ConfigError(f"{origin}: [load] kind must be one of "
                              f"admittance, fixed-capacitance-rated, impedance")
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{origin}: [load]: {exc}") from None
    sec.check_no_extras()
    return load


def _parse_model(text: str, origin: str) -> tuple[str, int]:
    if text in ("exact", "lossless"):
        return text, 100
    if text == "pi-cascade":
        return "pi-cascade", 100
    match = _MODEL_RE.match(text)
    if match:
        sections = int(match.group(1))
        if sections < 1:
            raise ConfigError(f"{origin}: pi-cascade needs at least 1 section")
        return "pi-cascade", sections
    raise ConfigError(
        f"{origin}: [sweep] model must be exact, lossless, pi-cascade or pi-cascade(N), "
        f"got {text!r}"
    )


def load_sweep_config(path: str | Path) -> SweepConfig:
    """Read and parse a config file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_sweep_config(text, origin=str(path))


def bundled_config_names() -> list[str]:
    """Names of the configs shipped with the package."""
    base = resources.files("tunedline").joinpath("configs")
    return sorted(p.name[:-4] for p in base.iterdir() if p.name.endswith(".ini"))


def bundled_config_path(name: str) -> Path:
    """Filesystem path of a bundled config, by name or filename."""
    filename = name if name.endswith(".ini") else name + ".ini"
    candidate = resources.files("tunedline").joinpath("configs", filename)
    if not candidate.is_file():
        raise ConfigError(
            f"no bundled config named {name!r} (available: "
            f"{', '.join(bundled_config_names())})"
        )
    return Path(str(candidate))


def resolve_config_arg(value: str) -> Path:
    """Interpret a --config argument: a filesystem path, else a bundled name."""
    path = Path(value)
    if path.is_file():
        return path
    try:
        return bundled_config_path(value)
    except ConfigError:
        raise ConfigError(
            f"config {value!r} is neither a file nor a bundled config name "
            f"(bundled: {', '.join(bundled_config_names())})"
        ) from None
