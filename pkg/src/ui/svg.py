"""
SVG Rendering

Draws a sampled field as a standalone SVG document: the simplex outline,
arrows at the sample points and optional equilibrium markers. The output
depends only on its inputs, so repeated renders are byte-identical.
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.catalog import OrbitSimplex, PointInB
from ui.grid import GridSample
from utils.helpers import format_number


MARGIN = 40.0
# blue to yellow
LOW_COLOR = (49, 54, 149)
HIGH_COLOR = (254, 224, 44)


@dataclass(frozen=True)
class SvgStyle:
    width: int = 640
    height: int = 640
    max_arrows: int = 400
    arrows: bool = True
    color_by_magnitude: bool = True

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "SvgStyle":
        svg = config.get("svg", {})
        return cls(
            width=int(svg.get("width", cls.width)),
            height=int(svg.get("height", cls.height)),
            max_arrows=int(svg.get("max_arrows", cls.max_arrows)),
            arrows=bool(svg.get("arrows", cls.arrows)),
            color_by_magnitude=bool(svg.get("color_by_magnitude", cls.color_by_magnitude)),
        )


def _fmt(value: float) -> str:
    return f"{value:.3f}"


def _color(fraction: float) -> str:
    fraction = min(max(fraction, 0.0), 1.0)
    channels = (round(low + fraction * (high - low)) for low, high in zip(LOW_COLOR, HIGH_COLOR))
    return "#" + "".join(f"{channel:02x}" for channel in channels)


class _Canvas:
    """Maps orbit-space coordinates to SVG pixels, y pointing up."""

    def __init__(self, style: SvgStyle, bounds: Tuple[float, float, float, float]):
        x_min, x_max, y_min, y_max = bounds
        span = max(x_max - x_min, y_max - y_min, 1e-12)
        self.scale = min(style.width, style.height) - 2 * MARGIN
        self.scale /= span
        self.x_min, self.y_max = x_min, y_max

    def map(self, x1: float, x2: float) -> Tuple[float, float]:
        return (MARGIN + (x1 - self.x_min) * self.scale,
                MARGIN + (self.y_max - x2) * self.scale)


def render_svg(sample: GridSample, style: Optional[SvgStyle] = None,
               simplex: Optional[OrbitSimplex] = None,
               equilibria: Sequence[PointInB] = ()) -> str:
    """
    Render a grid sample.

    Arrow length is proportional to log(1 + |X|), scaled so the longest arrow
    spans about one lattice cell.

    Args:
        sample: Nonempty grid sample
        style: Canvas size and arrow options
        simplex: Outline to draw, the sample bounding box sets the view otherwise
        equilibria: Points to mark

    Returns:
        SVG document text

    Raises:
        ValueError: If the sample is empty
    """
    if len(sample) == 0:
        raise ValueError(f"Cannot render an empty grid sample for {sample.action_id}")
    style = style or SvgStyle()

    if simplex is not None:
        bounds = simplex.bounding_box()
    else:
        bounds = (float(sample.x1.min()), float(sample.x1.max()),
                  float(sample.x2.min()), float(sample.x2.max()))
    canvas = _Canvas(style, bounds)

    lines: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.width}" height="{style.height}" '
        f'viewBox="0 0 {style.width} {style.height}">',
        f'<title>{sample.action_id}</title>',
        f'<rect x="0" y="0" width="{style.width}" height="{style.height}" fill="#ffffff"/>',
    ]

    if simplex is not None:
        corners = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (canvas.map(*v) for v in simplex.vertices))
        lines.append(f'<polygon points="{corners}" fill="none" stroke="#000000" stroke-width="1.5"/>')

    if style.arrows:
        lines.extend(_arrows(sample, style, canvas, bounds))

    for point in equilibria:
        x, y = canvas.map(point.x1, point.x2)
        lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4.000" fill="#d62728" stroke="#000000"/>')

    low, high = float(sample.norm.min()), float(sample.norm.max())
    lines.append(f'<text x="{_fmt(MARGIN)}" y="{_fmt(style.height - MARGIN / 3)}" font-family="monospace" '
                 f'font-size="11">|X| from {format_number(low)} to {format_number(high)}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _arrows(sample: GridSample, style: SvgStyle, canvas: _Canvas,
            bounds: Tuple[float, float, float, float]) -> List[str]:
    stride = max(1, math.ceil(len(sample) / max(1, style.max_arrows)))
    indices = range(0, len(sample), stride)

    magnitudes = np.log1p(sample.norm)
    longest = float(magnitudes.max()) or 1.0
    cells = math.sqrt(len(sample) / stride)
    cell = (bounds[1] - bounds[0] + bounds[3] - bounds[2]) / 2 / max(cells, 1.0)
    low, high = float(sample.norm.min()), float(sample.norm.max())

    lines = []
    for i in indices:
        norm = float(sample.norm[i])
        if norm == 0.0:
            continue
        length = 0.9 * cell * float(magnitudes[i]) / longest
        dx = float(sample.X1[i]) / norm * length
        dy = float(sample.X2[i]) / norm * length
        x0, y0 = canvas.map(float(sample.x1[i]), float(sample.x2[i]))
        x1, y1 = canvas.map(float(sample.x1[i]) + dx, float(sample.x2[i]) + dy)

        if style.color_by_magnitude and high > low:
            color = _color((norm - low) / (high - low))
        else:
            color = "#1f77b4"

        # arrowhead wings at +-25 degrees
        angle = math.atan2(y1 - y0, x1 - x0)
        head = min(4.0, 0.35 * math.hypot(x1 - x0, y1 - y0))
        wings = [(x1 - head * math.cos(angle - sign * 0.436), y1 - head * math.sin(angle - sign * 0.436))
                 for sign in (1, -1)]
        lines.append(
            f'<path d="M{_fmt(x0)},{_fmt(y0)} L{_fmt(x1)},{_fmt(y1)} '
            f'M{_fmt(wings[0][0])},{_fmt(wings[0][1])} L{_fmt(x1)},{_fmt(y1)} '
            f'L{_fmt(wings[1][0])},{_fmt(wings[1][1])}" stroke="{color}" fill="none" stroke-width="1"/>')
    return lines
