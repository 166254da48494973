#!/usr/bin/env python3
"""
Tests for grid sampling, grid CSV files and SVG rendering.
"""

import math

import numpy as np
import pytest

from core.catalog import PointInB, build_simplex
from ui.grid import CSV_HEADER, GridSample, read_csv, sample_grid, write_csv
from ui.svg import SvgStyle, render_svg


def test_coarse_grid_keeps_interior_points_only(rho1):
    sample = sample_grid(rho1, 3)
    assert len(sample) == 1
    assert sample.x1[0] == pytest.approx(math.pi / 4)
    assert sample.x2[0] == pytest.approx(0.0, abs=1e-15)


def test_resolution_bounds(rho1):
    for resolution in (1, 2001):
        with pytest.raises(ValueError):
            sample_grid(rho1, resolution)


def test_smallest_field_sits_next_to_the_equilibrium(rho1):
    sample = sample_grid(rho1, 50)
    index = sample.argmin_norm()
    spacing = (math.pi / 2) / 49
    assert abs(sample.x1[index] - math.pi / 6) < spacing
    assert abs(sample.x2[index]) < spacing
    assert np.all(np.isfinite(sample.phi))


def test_grid_is_sorted_and_independent_of_workers(rho1):
    serial = sample_grid(rho1, 40, workers=1)
    parallel = sample_grid(rho1, 40, workers=4)
    keys = list(zip(serial.x1, serial.x2))
    assert keys == sorted(keys)
    for name in ("x1", "x2", "X1", "X2", "norm", "phi"):
        np.testing.assert_array_equal(getattr(serial, name), getattr(parallel, name))


def test_csv_round_trip(rho1, tmp_path):
    sample = sample_grid(rho1, 12)
    first = write_csv(sample, tmp_path / "one.csv")
    second = write_csv(sample_grid(rho1, 12, workers=3), tmp_path / "two.csv")
    data = first.read_bytes()
    assert data == second.read_bytes()
    assert data.startswith((",".join(CSV_HEADER) + "\n").encode("utf-8"))
    assert b"\r\n" not in data

    loaded = read_csv(first, rho1.id, 12)
    assert len(loaded) == len(sample)
    np.testing.assert_allclose(loaded.X1, sample.X1, rtol=1e-9, atol=1e-12)
    np.testing.assert_allclose(loaded.phi, sample.phi, rtol=1e-9, atol=1e-12)


def test_svg_is_deterministic_and_marks_equilibria(rho1):
    sample = sample_grid(rho1, 20)
    simplex = build_simplex(rho1)
    markers = [PointInB(math.pi / 6, 0.0)]
    first = render_svg(sample, SvgStyle(), simplex, markers)
    assert first == render_svg(sample, SvgStyle(), simplex, markers)
    assert first.startswith('<?xml version="1.0" encoding="UTF-8"?>')
    assert "<polygon" in first
    assert first.count("<circle") == 1
    assert first.count("<path") == len(sample)
    assert first.rstrip().endswith("</svg>")


def test_svg_without_arrows(rho1):
    sample = sample_grid(rho1, 20)
    document = render_svg(sample, SvgStyle(arrows=False), build_simplex(rho1), [PointInB(math.pi / 6, 0.0)])
    assert "<path" not in document
    assert "<circle" in document


def test_svg_subsamples_arrows(rho1):
    sample = sample_grid(rho1, 60)
    document = render_svg(sample, SvgStyle(max_arrows=50))
    assert 0 < document.count("<path") <= 50


def test_svg_rejects_empty_sample():
    empty = GridSample("empty", 2, *(np.empty(0) for _ in range(6)))
    with pytest.raises(ValueError):
        render_svg(empty)


def test_style_from_config():
    style = SvgStyle.from_config({"svg": {"width": 300, "arrows": False}})
    assert style.width == 300
    assert style.height == 640
    assert not style.arrows
