#!/usr/bin/env python3
"""
Tests for logging, configuration and formatting helpers.
"""

import json
import logging
import math

import pytest

from utils.helpers import (
    DEFAULT_CONFIG,
    OUTPUT_ENV_VAR,
    format_number,
    get_output_dir,
    load_config,
    parse_params,
    parse_point,
    sanitize_filename,
    setup_logging,
)


@pytest.mark.parametrize("value,expected", [
    (math.pi / 6, "0.5235987756"),
    (0.0, "0.0000000000"),
    (-0.0, "0.0000000000"),
    (1.0, "1.000000000"),
    (-2.5, "-2.500000000"),
    (0.12345678905, "0.1234567890"),
    (0.12345678915, "0.1234567892"),
    (9.9999999999, "10.00000000"),
    (123456.789, "123456.7890"),
    (12345678901.0, "1.234567890E+10"),
    (1e-7, "1.000000000E-07"),
    (1.5e-6, "0.000001500000000"),
    (float("nan"), "nan"),
    (float("inf"), "inf"),
])
def test_format_number(value, expected):
    assert format_number(value) == expected


def test_parse_point():
    assert parse_point("0.5, -1e-3") == (0.5, -0.001)
    for bad in ("1", "1,2,3", "a,b", "nan,0"):
        with pytest.raises(ValueError):
            parse_point(bad)


def test_parse_params():
    assert parse_params(["q=5", "j = 2"]) == {"q": 5, "j": 2}
    assert parse_params(None) == {}
    with pytest.raises(ValueError):
        parse_params(["q5"])
    with pytest.raises(ValueError):
        parse_params(["q=5", "q=6"])


def test_load_config_defaults_when_missing(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    config = load_config()
    assert config == DEFAULT_CONFIG
    assert config is not DEFAULT_CONFIG


def test_load_config_deep_merges_json_and_yaml(tmp_path):
    json_path = tmp_path / "settings.json"
    json_path.write_text(json.dumps({"solver": {"max_iter": 7}}), encoding="utf-8")
    config = load_config(str(json_path))
    assert config["solver"]["max_iter"] == 7
    assert config["solver"]["newton_tol"] == 1e-12

    yaml_path = tmp_path / "settings.yaml"
    yaml_path.write_text("flow:\n  t_max: 3.5\nsvg:\n  arrows: false\n", encoding="utf-8")
    config = load_config(str(yaml_path))
    assert config["flow"]["t_max"] == 3.5
    assert config["flow"]["delta_stop"] == 1e-6
    assert config["svg"]["arrows"] is False


def test_load_config_rejects_missing_explicit_file(tmp_path):
    with pytest.raises(ValueError):
        load_config(str(tmp_path / "absent.json"))


def test_output_dir_resolution(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(OUTPUT_ENV_VAR, raising=False)
    config = {"output": {"directory": "results"}}
    assert str(get_output_dir(config)) == "results"

    (tmp_path / ".env").write_text(f"{OUTPUT_ENV_VAR}=from_dotenv\n", encoding="utf-8")
    assert str(get_output_dir(config)) == "from_dotenv"

    monkeypatch.setenv(OUTPUT_ENV_VAR, "from_env")
    assert str(get_output_dir(config)) == "from_env"


def test_sanitize_filename():
    assert sanitize_filename("SOq2_SUq2_SU2Uq[q=5]") == "SOq2_SUq2_SU2Uq_q_5_"
    assert sanitize_filename(" . ") == "untitled"


def test_setup_logging_levels(tmp_path):
    setup_logging("debug", log_file=str(tmp_path / "logs" / "run.log"))
    root = logging.getLogger()
    assert root.level == logging.DEBUG
    assert len(root.handlers) == 2
    setup_logging("WARNING")
    assert len(logging.getLogger().handlers) == 1
    with pytest.raises(ValueError):
        setup_logging("LOUD")
