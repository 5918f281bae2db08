"""Deterministic SVG emission of spider-web charts.

Three chart kinds share one geometry: eight axes, axis 1 (Linguistic) at
12 o'clock, then clockwise in class order.  In the default scale mode a
vertex sits at radius ``R * score / ideal`` on its axis, so the ideal web
is the full regular octagon.

Output is a pure function of the inputs: coordinates use fixed 3-decimal
formatting, there are no timestamps or generated ids, and identical calls
produce byte-identical documents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ValidationError
from .quotient import CLASS_COUNT, INTELLIGENCES, CanonicalPartition
from .scoring import SwsVector

#: Paint cycle for overlaid member webs.
DEFAULT_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#17becf",
)

_HALF_SQRT2 = math.sqrt(0.5)

#: Unit direction of each axis (math orientation, y up): axis 1 points
#: straight up, later axes step 45 degrees clockwise.  Exact constants,
#: not trigonometric calls, so output never depends on the platform libm.
_AXIS_UNITS = (
    (0.0, 1.0),
    (_HALF_SQRT2, _HALF_SQRT2),
    (1.0, 0.0),
    (_HALF_SQRT2, -_HALF_SQRT2),
    (0.0, -1.0),
    (-_HALF_SQRT2, -_HALF_SQRT2),
    (-1.0, 0.0),
    (-_HALF_SQRT2, _HALF_SQRT2),
)

SCALE_MODES = ("normalize", "fixed")


@dataclass(frozen=True)
class RenderStyle:
    """Canvas and styling knobs, all with deterministic defaults.

    ``size``: square canvas edge in pixels (>= 100).
    ``margin``: gap between the web and the canvas edge; the web radius
    is ``size / 2 - margin``.
    ``scale``: ``"normalize"`` scales each axis by its ideal score (the
    default); ``"fixed"`` scales every axis by ``max_score`` instead.
    ``show_labels``: toggle the axis name captions.
    ``palette``: non-empty paint cycle for overlaid webs.
    """

    size: int = 640
    margin: float = 70.0
    scale: str = "normalize"
    max_score: int = 8
    show_labels: bool = True
    palette: tuple[str, ...] = DEFAULT_PALETTE

    def __post_init__(self):
        findings = []
        if self.size < 100:
            findings.append(f"canvas size must be >= 100, got {self.size}")
        if self.scale not in SCALE_MODES:
            findings.append(f"scale must be one of {SCALE_MODES}, got {self.scale!r}")
        if not self.palette:
            findings.append("palette must not be empty")
        if self.max_score < 1:
            findings.append(f"max_score must be >= 1, got {self.max_score}")
        if self.margin < 0 or 2 * self.margin >= self.size:
            findings.append(f"margin {self.margin} leaves no web radius")
        if findings:
            raise ValidationError(findings)

    @property
    def center(self) -> float:
        return self.size / 2.0

    @property
    def radius(self) -> float:
        """Full web radius R in pixels."""
        return self.size / 2.0 - self.margin


def _fmt(value: float) -> str:
    rounded = round(value, 3)
    if rounded == 0:
        rounded = 0.0  # avoid "-0.000"
    return f"{rounded:.3f}"


def _point(style: RenderStyle, axis: int, radius: float) -> tuple[float, float]:
    """Canvas coordinates of a point at ``radius`` on the 1-based axis."""
    ux, uy = _AXIS_UNITS[axis - 1]
    return style.center + radius * ux, style.center - radius * uy


def _points_attr(style: RenderStyle, radii: Sequence[float]) -> str:
    coords = (_point(style, j, r) for j, r in enumerate(radii, start=1))
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in coords)


def _axis_fractions(sws: SwsVector, ideal: SwsVector, style: RenderStyle) -> list[float]:
    if style.scale == "fixed":
        return [s / style.max_score for s in sws]
    return [0.0 if m == 0 else s / m for s, m in zip(sws, ideal)]


def _document_open(style: RenderStyle) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{style.size}" height="{style.size}" '
        f'viewBox="0 0 {style.size} {style.size}">',
        f'<rect width="{style.size}" height="{style.size}" fill="#ffffff"/>',
    ]


def _grid(style: RenderStyle) -> list[str]:
    lines = ['<g class="grid">']
    for fraction in (0.25, 0.5, 0.75):
        points = _points_attr(style, [fraction * style.radius] * CLASS_COUNT)
        lines.append(f'<polygon points="{points}" fill="none" '
                     f'stroke="#dddddd" stroke-width="1"/>')
    outer = _points_attr(style, [style.radius] * CLASS_COUNT)
    lines.append(f'<polygon points="{outer}" fill="none" '
                 f'stroke="#999999" stroke-width="1"/>')
    for j in range(1, CLASS_COUNT + 1):
        x, y = _point(style, j, style.radius)
        lines.append(f'<line x1="{_fmt(style.center)}" y1="{_fmt(style.center)}" '
                     f'x2="{_fmt(x)}" y2="{_fmt(y)}" '
                     f'stroke="#cccccc" stroke-width="1"/>')
    lines.append('</g>')
    return lines


def _labels(style: RenderStyle) -> list[str]:
    if not style.show_labels:
        return []
    lines = ['<g class="labels" font-family="sans-serif" font-size="13" '
             'fill="#333333">']
    for j, name in enumerate(INTELLIGENCES, start=1):
        x, y = _point(style, j, style.radius + 22.0)
        lines.append(f'<text x="{_fmt(x)}" y="{_fmt(y)}" text-anchor="middle" '
                     f'dominant-baseline="middle">{name}</text>')
    lines.append('</g>')
    return lines


def _web(style: RenderStyle, fractions: Sequence[float], color: str, *,
         css_class: str, stroke_width: float, fill_opacity: float,
         dots: bool) -> list[str]:
    radii = [f * style.radius for f in fractions]
    points = _points_attr(style, radii)
    fill = (f'fill="{color}" fill-opacity="{_fmt(fill_opacity)}"'
            if fill_opacity > 0 else 'fill="none"')
    lines = [f'<polygon class="{css_class}" points="{points}" {fill} '
             f'stroke="{color}" stroke-width="{_fmt(stroke_width)}"/>']
    if dots:
        for j, r in enumerate(radii, start=1):
            x, y = _point(style, j, r)
            lines.append(f'<circle class="{css_class}-vertex" cx="{_fmt(x)}" '
                         f'cy="{_fmt(y)}" r="3" fill="{color}"/>')
    return lines


def _require_within_ideal(sws: SwsVector, ideal: SwsVector, what: str) -> None:
    over = [j for j in range(1, CLASS_COUNT + 1) if sws[j - 1] > ideal[j - 1]]
    if over:
        raise ValidationError(
            [f"{what} exceeds the ideal score on axes {over}"])


def render_sws(sws: SwsVector, ideal: SwsVector,
               style: RenderStyle = RenderStyle()) -> str:
    """One person's spider web as a standalone SVG document."""
    _require_within_ideal(sws, ideal, "score vector")
    lines = _document_open(style)
    lines += _grid(style)
    lines += _labels(style)
    lines += _web(style, _axis_fractions(sws, ideal, style), style.palette[0],
                  css_class="sws-web", stroke_width=2.0, fill_opacity=0.25,
                  dots=True)
    lines.append('</svg>')
    return "\n".join(lines) + "\n"


def render_group(profiles: Sequence[SwsVector], group_max: SwsVector,
                 ideal: SwsVector, style: RenderStyle = RenderStyle()) -> str:
    """Member webs overlaid with the emphasized group-coverage web."""
    if not profiles:
        raise ValidationError(["a group rendering needs at least one member"])
    for i, member in enumerate(profiles):
        _require_within_ideal(member, ideal, f"member {i}")
    expected = SwsVector.componentwise_max(profiles)
    if expected != group_max:
        raise ValidationError(
            [f"group maximum {tuple(group_max)} does not match the "
             f"componentwise member maximum {tuple(expected)}"])

    lines = _document_open(style)
    lines += _grid(style)
    lines += _labels(style)
    for i, member in enumerate(profiles):
        color = style.palette[i % len(style.palette)]
        lines += _web(style, _axis_fractions(member, ideal, style), color,
                      css_class="member-web", stroke_width=1.5,
                      fill_opacity=0.10, dots=False)
    lines += _web(style, _axis_fractions(group_max, ideal, style), "#222222",
                  css_class="group-web", stroke_width=3.0, fill_opacity=0.0,
                  dots=True)
    lines.append('</svg>')
    return "\n".join(lines) + "\n"


def render_partition(partition: CanonicalPartition,
                     style: RenderStyle = RenderStyle(), *,
                     joined: bool = False) -> str:
    """Reduced classes as dotted rays from a common origin.

    Ray ``j`` carries one dot per member of reduced class ``j``, at unit
    spacing set by the largest class (dot k sits at ``k * R / max_size``).
    With ``joined=True`` a web thread additionally connects the outermost
    dots of angularly adjacent axes, depicting the whole partition as one
    object; an empty class contributes the center point to that thread.
    """
    sizes = partition.sizes
    unit = style.radius / max(1, max(sizes))

    lines = _document_open(style)
    lines.append('<g class="rays">')
    for j in range(1, CLASS_COUNT + 1):
        x, y = _point(style, j, style.radius)
        lines.append(f'<line x1="{_fmt(style.center)}" y1="{_fmt(style.center)}" '
                     f'x2="{_fmt(x)}" y2="{_fmt(y)}" '
                     f'stroke="#999999" stroke-width="1"/>')
    lines.append('</g>')
    lines += _labels(style)

    if joined:
        outer = [sizes[j - 1] * unit for j in range(1, CLASS_COUNT + 1)]
        points = _points_attr(style, outer)
        lines.append(f'<polygon class="joined-web" points="{points}" fill="none" '
                     f'stroke="#1f77b4" stroke-width="2"/>')

    for j in range(1, CLASS_COUNT + 1):
        for k in range(1, sizes[j - 1] + 1):
            x, y = _point(style, j, k * unit)
            lines.append(f'<circle class="ability-dot" data-axis="{j}" '
                         f'cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#333333"/>')

    lines.append('</svg>')
    return "\n".join(lines) + "\n"
