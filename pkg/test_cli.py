#!/usr/bin/env python3
"""
Tests for the command-line front end.
"""

import io
import json

import pytest

from core.catalog import load_catalog
from ui.cli import EXIT_ERROR, EXIT_OK, EXIT_USAGE, run_command


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("HERMANN_FLOW_OUT", raising=False)


def test_list(capsys):
    assert run_command(["list"]) == EXIT_OK
    out = capsys.readouterr().out
    for action in load_catalog():
        assert action.id in out


def test_equilibrium_prints_rho1_values(capsys):
    assert run_command(["equilibrium", "rho1_SO3_SU3_SO3"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    interior = next(line for line in lines if line.startswith("interior"))
    assert "0.5235987756" in interior
    assert "0.0000000000" in interior
    assert sum(line.startswith(("edge", "vertex")) for line in lines) == 3


def test_output_is_deterministic(capsys):
    run_command(["equilibrium", "SO6_SU6_Sp3"])
    first = capsys.readouterr().out
    run_command(["equilibrium", "SO6_SU6_Sp3"])
    assert capsys.readouterr().out == first


def test_info_and_params(capsys):
    assert run_command(["info", "SOq2_SUq2_SU2Uq", "--param", "q=5"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("SOq2_SUq2_SU2Uq[q=5]:")
    assert "vertices:" in out
    assert "printed interior" not in out


def test_field_at_interior_and_edge(capsys):
    assert run_command(["field", "rho1_SO3_SU3_SO3", "--at", "0.5235987755982988,0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "|h|^2: 4.000000000" in out
    assert "phi:" in out

    assert run_command(["field", "rho1_SO3_SU3_SO3", "--at", "0,0.2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "boundary: α=0" in out


def test_flow_writes_csv(tmp_path, capsys):
    path = tmp_path / "traj.csv"
    assert run_command(["flow", "rho1_SO3_SU3_SO3", "--from", "0.3,0", "--csv", str(path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "termination: WALL_CONTACT(edge 0)" in out
    assert "collapse time:" in out
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "t,x1,x2,speed,h_norm_sq"
    assert lines[1].startswith("0.0000000000,0.3000000000,0.0000000000,")


def test_grid_csv_and_svg(tmp_path, capsys):
    csv_path = tmp_path / "grid.csv"
    svg_path = tmp_path / "grid.svg"
    assert run_command(["grid", "rho1_SO3_SU3_SO3", "--res", "10", "--out", str(csv_path)]) == EXIT_OK
    assert csv_path.read_text(encoding="utf-8").startswith("x1,x2,X1,X2,normX,phi\n")
    assert run_command(["grid", "rho1_SO3_SU3_SO3", "--res", "10", "--out", str(svg_path)]) == EXIT_OK
    first = svg_path.read_bytes()
    assert run_command(["grid", "rho1_SO3_SU3_SO3", "--res", "10", "--out", str(svg_path),
                        "--workers", "3"]) == EXIT_OK
    assert svg_path.read_bytes() == first


def test_grid_default_output_uses_environment(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("HERMANN_FLOW_OUT", str(tmp_path / "env_out"))
    assert run_command(["grid", "rho1_SO3_SU3_SO3", "--res", "5"]) == EXIT_OK
    assert (tmp_path / "env_out" / "rho1_SO3_SU3_SO3_grid_5.csv").exists()


def test_export_catalog(tmp_path, capsys):
    path = tmp_path / "catalog.json"
    assert run_command(["export-catalog", "--out", str(path)]) == EXIT_OK
    data = json.loads(path.read_text(encoding="utf-8"))
    assert len(data["actions"]) == 36
    assert run_command(["export-catalog", "--check"]) == EXIT_OK
    assert "round trip OK" in capsys.readouterr().out


def test_verify_single_action(capsys):
    assert run_command(["verify", "--action", "rho1_SO3_SU3_SO3"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    summary = json.loads(lines[-1])
    assert set(summary) == {"pass", "flagged", "fail", "derived"}
    assert summary["fail"] == 0
    assert summary["pass"] > 0


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["grid", "rho1_SO3_SU3_SO3", "--res", "ten"],
    ["field", "rho1_SO3_SU3_SO3"],
    ["verify"],
])
def test_usage_errors(argv, capsys):
    assert run_command(argv) == EXIT_USAGE
    assert "usage:" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["info", "no_such_action"],
    ["field", "rho1_SO3_SU3_SO3", "--at", "-1,0"],
    ["field", "rho1_SO3_SU3_SO3", "--at", "1,2,3"],
    ["grid", "rho1_SO3_SU3_SO3", "--res", "1", "--out", "x.csv"],
    ["grid", "rho1_SO3_SU3_SO3", "--out", "x.png"],
    ["info", "SOq2_SUq2_SU2Uq", "--param", "q=1"],
])
def test_domain_errors(argv, capsys):
    assert run_command(argv) == EXIT_ERROR
    err = capsys.readouterr().err
    assert err.startswith("error: ")
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize("argv", [
    ["field", "rho1_SO3_SU3_SO3", "--at=-1,0"],
    ["flow", "rho1_SO3_SU3_SO3", "--from", "-0.2,0"],
    ["flow", "rho1_SO3_SU3_SO3", "--from", "-.2,0", "--t-max", "1"],
])
def test_negative_coordinates_are_values_not_options(argv, capsys):
    assert run_command(argv) == EXIT_ERROR
    err = capsys.readouterr().err
    assert err.startswith("error: ")
    assert "expected one argument" not in err


def test_parser_output_goes_to_the_given_streams(capsys):
    out, err = io.StringIO(), io.StringIO()
    assert run_command(["grid", "rho1_SO3_SU3_SO3", "--res", "ten"], out=out, err=err) == EXIT_USAGE
    assert "usage:" in err.getvalue()
    assert "invalid int value" in err.getvalue()

    assert run_command(["--help"], out=out, err=err) == EXIT_OK
    assert "export-catalog" in out.getvalue()

    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err == ""
