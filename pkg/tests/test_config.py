"""Tests for config parsing and unit normalization."""

from __future__ import annotations

import math

import pytest

from tunedline.config import (
    ConfigError,
    bundled_config_names,
    bundled_config_path,
    load_sweep_config,
    parse_quantity,
    parse_sweep_config,
    resolve_config_arg,
)

GOOD = """
[line]
r = 0 ohm/km
L = 1.0 mH/km
g = 0 S/km
C = 11.111111111111112 nF/km
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
f_end = 1 kHz
n_points = 951
model = lossless
"""


def test_parse_good_config():
    cfg = parse_sweep_config(GOOD)
    assert cfg.line.L == pytest.approx(1.0e-3, rel=1e-15)
    assert cfg.line.C == pytest.approx(1.1111111111111112e-8, rel=1e-15)
    assert cfg.line.r == 0.0 and cfg.line.g == 0.0
    assert cfg.length == 500.0
    assert cfg.source_voltage == 220e3
    assert cfg.f_start == 50.0 and cfg.f_end == 1000.0
    assert cfg.n_points == 951
    assert cfg.model == "lossless"
    assert cfg.load.kind == "fixed-capacitance-rated"
    assert cfg.load.c_load == pytest.approx(
        100e6 / (2.0 * math.pi * 50.0 * (220e3) ** 2), rel=1e-15
    )
    assert cfg.load.g_load == pytest.approx(100e6 / (220e3) ** 2, rel=1e-15)


def test_parse_quantity_units():
    assert parse_quantity("1.5", {"Hz": 1.0}, where="x") == 1.5
    assert parse_quantity("1.5 kHz", {"Hz": 1.0, "kHz": 1e3}, where="x") == 1500.0
    with pytest.raises(ConfigError):
        parse_quantity("1.5 MHz", {"Hz": 1.0, "kHz": 1e3}, where="x")
    with pytest.raises(ConfigError):
        parse_quantity("abc Hz", {"Hz": 1.0}, where="x")
    with pytest.raises(ConfigError):
        parse_quantity("1 2 Hz", {"Hz": 1.0}, where="x")


def test_admittance_load_kind():
    text = GOOD.replace(
        """kind = fixed-capacitance-rated
rated_q = 100 MVAr
rated_v = 220 kV
rated_f = 50 Hz
rated_p = 100 MW""",
        """kind = admittance
g_load = 2 mS
c_load = 6.6 uF""",
    )
    cfg = parse_sweep_config(text)
    assert cfg.load.g_load == pytest.approx(2e-3, rel=1e-15)
    assert cfg.load.c_load == pytest.approx(6.6e-6, rel=1e-15)


def test_impedance_load_kind():
    text = GOOD.replace(
        """kind = fixed-capacitance-rated
rated_q = 100 MVAr
rated_v = 220 kV
rated_f = 50 Hz
rated_p = 100 MW""",
        """kind = impedance
resistance = 484 ohm
c_load = 1 uF""",
    )
    cfg = parse_sweep_config(text)
    assert cfg.load.g_load == pytest.approx(1.0 / 484.0, rel=1e-15)


def test_model_variants():
    for text, model, sections in (
        (GOOD.replace("model = lossless", "model = exact"), "exact", 100),
        (GOOD.replace("model = lossless", "model = pi-cascade"), "pi-cascade", 100),
        (GOOD.replace("model = lossless", "model = pi-cascade(250)"), "pi-cascade", 250),
    ):
        cfg = parse_sweep_config(text)
        assert (cfg.model, cfg.pi_sections) == (model, sections)


def test_errors_are_config_errors():
    cases = [
        GOOD.replace("[source]\nvoltage = 220 kV\n", ""),  # missing section
        GOOD.replace("voltage = 220 kV", "voltage = 220 kV\ntyp = oops"),  # unknown key
        GOOD.replace("length = 500 km", "length = 500 miles"),  # unknown unit
        GOOD.replace("n_points = 951", "n_points = many"),  # bad int
        GOOD.replace("model = lossless", "model = spice"),  # bad model
        GOOD.replace("f_end = 1 kHz", "f_end = 10 Hz"),  # fails validation
        GOOD.replace("L = 1.0 mH/km", "L = -1.0 mH/km"),  # bad line params
        GOOD + "\n[extra]\nx = 1\n",  # unknown section
        "not an ini file [",  # unparsable
    ]
    for text in cases:
        with pytest.raises(ConfigError):
            parse_sweep_config(text)


def test_missing_required_key():
    with pytest.raises(ConfigError):
        parse_sweep_config(GOOD.replace("rated_q = 100 MVAr\n", ""))


def test_bundled_configs():
    assert bundled_config_names() == ["experiment_300km", "experiment_500km"]
    for name in bundled_config_names():
        cfg = load_sweep_config(bundled_config_path(name))
        assert cfg.f_start == 50.0
        assert cfg.f_end == 1000.0
        assert cfg.n_points == 951
        assert cfg.line.is_lossless
    assert load_sweep_config(bundled_config_path("experiment_500km")).length == 500.0
    assert load_sweep_config(bundled_config_path("experiment_300km")).length == 300.0


def test_resolve_config_arg(tmp_path):
    own = tmp_path / "mine.ini"
    own.write_text(GOOD)
    assert resolve_config_arg(str(own)) == own
    assert resolve_config_arg("experiment_500km").name == "experiment_500km.ini"
    with pytest.raises(ConfigError):
        resolve_config_arg("no_such_config_anywhere")


def test_load_missing_file():
    with pytest.raises(ConfigError):
        load_sweep_config("/nonexistent/path/config.ini")
