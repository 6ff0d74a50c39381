"""SVG drawings of a single tiling."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .engine import Tiling
from .lattice import StripComplex

_ROW_HEIGHT = math.sqrt(3) / 2


@dataclass(frozen=True)
class RenderSpec:
    side_px: float = 40.0
    small_fill: str = "#f4f1de"
    large_up_fill: str = "#81b29a"
    large_down_fill: str = "#e07a5f"
    stroke_color: str = "#3d405b"
    margin_px: float = 10.0

    def __post_init__(self) -> None:
        if not self.side_px > 0:
            raise ValueError("side_px must be positive")
        if self.margin_px < 0:
            raise ValueError("margin_px must be non-negative")

    def to_pixel(self, u: float, v: float) -> tuple[float, float]:
        """Half-unit embedding coordinates to SVG pixels (y grows downwards)."""
        return (self.margin_px + u * self.side_px / 2,
                self.margin_px + (2 - v) * self.side_px * _ROW_HEIGHT)


def _points(spec: RenderSpec, verts) -> str:
    return " ".join(f"{x:.3f},{y:.3f}" for x, y in (spec.to_pixel(u, v) for u, v in verts))


def render_svg(complex_: StripComplex, tiling: Tiling, spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec()
    width_units = max((c.index + 2 for c in complex_.cells), default=0)
    width = 2 * spec.margin_px + width_units * spec.side_px / 2
    height = 2 * spec.margin_px + 2 * spec.side_px * _ROW_HEIGHT
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.3f}" height="{height:.3f}" viewBox="0 0 {width:.3f} {height:.3f}">',
        f'<title>{complex_.name}</title>',
        f'<g stroke="{spec.stroke_color}" stroke-width="1" stroke-linejoin="round">',
    ]
    for c in tiling.small_cells(complex_):
        out.append(f'<polygon class="small" data-cell="{c.row},{c.index}" '
                   f'fill="{spec.small_fill}" points="{_points(spec, c.vertices())}"/>')
    for p in tiling.larges:
        fill = spec.large_up_fill if p.is_up else spec.large_down_fill
        out.append(f'<polygon class="large" data-placement="{p.label()}" '
                   f'fill="{fill}" points="{_points(spec, p.vertices())}"/>')
    out += ["</g>", "</svg>"]
    return "\n".join(out) + "\n"
