"""Renderer-independent vector scene, serialized to standalone SVG 1.1.

A :class:`VectorDoc` is an ordered display list of paths, circles, text and
groups in document coordinates (y down, 100 units per canvas unit, origin
at the wheel center).  Serialization is deterministic: identical documents
yield byte-identical SVG.  Numbers are formatted with a pinned two-decimal
format, trailing zeros trimmed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path as FsPath
from typing import Union
from xml.sax.saxutils import escape

from .geometry import Cubic, Line, PetalPath

__all__ = [
    "SCALE",
    "fmt",
    "to_doc",
    "path_data",
    "annular_sector_data",
    "PathElement",
    "CircleElement",
    "TextElement",
    "GroupElement",
    "Element",
    "VectorDoc",
]

#: Document units per canvas unit.
SCALE = 100.0

_SVG_NS = "http://www.w3.org/2000/svg"


def fmt(value: float) -> str:
    """Pinned numeric format: two decimals, trailing zeros trimmed."""
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def to_doc(x: float, y: float) -> tuple[float, float]:
    """Canvas coordinates (y up) to document coordinates (y down)."""
    return (x * SCALE, -y * SCALE)


def path_data(petal: PetalPath) -> str:
    """SVG path data for a closed petal outline ('' when empty)."""
    if petal.is_empty:
        return ""
    parts = ["M {} {}".format(*_fmt_point(petal.segments[0].start))]
    for segment in petal.segments:
        if isinstance(segment, Line):
            parts.append("L {} {}".format(*_fmt_point(segment.end)))
        elif isinstance(segment, Cubic):
            parts.append(
                "C {} {} {} {} {} {}".format(
                    *_fmt_point(segment.control1),
                    *_fmt_point(segment.control2),
                    *_fmt_point(segment.end),
                )
            )
        else:  # pragma: no cover - segment union is closed
            raise TypeError(f"unknown segment type: {segment!r}")
    parts.append("Z")
    return " ".join(parts)


def _fmt_point(point) -> tuple[str, str]:
    dx, dy = to_doc(point[0], point[1])
    return fmt(dx), fmt(dy)


def annular_sector_data(
    inner_radius: float,
    outer_radius: float,
    start_angle: float,
    end_angle: float,
) -> str:
    """Path data for a donut slice between two canvas angles (radians,
    counterclockwise; the sector spans from start_angle to end_angle going
    clockwise on screen, i.e. decreasing canvas angle)."""
    def polar(radius: float, angle: float) -> tuple[str, str]:
        return _fmt_point((radius * math.cos(angle), radius * math.sin(angle)))

    r_out, r_in = fmt(outer_radius * SCALE), fmt(inner_radius * SCALE)
    # Canvas angles run counterclockwise, document y is flipped, so a
    # decreasing canvas angle is sweep=1 (clockwise on screen).
    return " ".join(
        [
            "M {} {}".format(*polar(outer_radius, start_angle)),
            "A {} {} 0 0 1 {} {}".format(
                r_out, r_out, *polar(outer_radius, end_angle)
            ),
            "L {} {}".format(*polar(inner_radius, end_angle)),
            "A {} {} 0 0 0 {} {}".format(
                r_in, r_in, *polar(inner_radius, start_angle)
            ),
            "Z",
        ]
    )


@dataclass(frozen=True)
class PathElement:
    id: str
    d: str
    fill: str = "none"
    stroke: str = "none"
    stroke_width: float = 1.0

    def to_svg(self, indent: str = "") -> str:
        attrs = [f'id="{_attr(self.id)}"', f'd="{_attr(self.d)}"',
                 f'fill="{_attr(self.fill)}"']
        if self.stroke != "none":
            attrs.append(f'stroke="{_attr(self.stroke)}"')
            attrs.append(f'stroke-width="{fmt(self.stroke_width)}"')
        return f"{indent}<path {' '.join(attrs)}/>"


@dataclass(frozen=True)
class CircleElement:
    id: str
    cx: float
    cy: float
    r: float
    fill: str = "none"
    stroke: str = "none"
    stroke_width: float = 1.0

    def to_svg(self, indent: str = "") -> str:
        attrs = [
            f'id="{_attr(self.id)}"',
            f'cx="{fmt(self.cx)}"',
            f'cy="{fmt(self.cy)}"',
            f'r="{fmt(self.r)}"',
            f'fill="{_attr(self.fill)}"',
        ]
        if self.stroke != "none":
            attrs.append(f'stroke="{_attr(self.stroke)}"')
            attrs.append(f'stroke-width="{fmt(self.stroke_width)}"')
        return f"{indent}<circle {' '.join(attrs)}/>"


@dataclass(frozen=True)
class TextElement:
    id: str
    x: float
    y: float
    content: str
    font_size: float = 15.0
    fill: str = "#000000"
    font_family: str = "sans-serif"
    font_weight: str = "300"
    anchor: str = "middle"

    def to_svg(self, indent: str = "") -> str:
        attrs = [
            f'id="{_attr(self.id)}"',
            f'x="{fmt(self.x)}"',
            f'y="{fmt(self.y)}"',
            f'font-size="{fmt(self.font_size)}"',
            f'font-family="{_attr(self.font_family)}"',
            f'font-weight="{_attr(self.font_weight)}"',
            f'fill="{_attr(self.fill)}"',
            f'text-anchor="{_attr(self.anchor)}"',
            'dominant-baseline="central"',
        ]
        return f"{indent}<text {' '.join(attrs)}>{escape(self.content)}</text>"


@dataclass(frozen=True)
class GroupElement:
    id: str
    transform: str
    children: tuple["Element", ...] = field(default_factory=tuple)

    def to_svg(self, indent: str = "") -> str:
        inner = "\n".join(c.to_svg(indent + "  ") for c in self.children)
        open_tag = (
            f'{indent}<g id="{_attr(self.id)}" '
            f'transform="{_attr(self.transform)}">'
        )
        return f"{open_tag}\n{inner}\n{indent}</g>"


Element = Union[PathElement, CircleElement, TextElement, GroupElement]


def _attr(value: str) -> str:
    return escape(value, {'"': "&quot;"})


@dataclass(frozen=True)
class VectorDoc:
    """A standalone vector document (one wheel, or a composed grid).

    Wheel documents are centered on the origin; composed documents set
    ``corner_origin`` and carry centering in their cell transforms.
    """

    width: float
    height: float
    elements: tuple[Element, ...]
    corner_origin: bool = False

    @property
    def view_box(self) -> tuple[float, float, float, float]:
        if self.corner_origin:
            return (0.0, 0.0, self.width, self.height)
        return (-self.width / 2, -self.height / 2, self.width, self.height)

    def to_svg(self) -> str:
        vx, vy, vw, vh = self.view_box
        header = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="{_SVG_NS}" width="{fmt(self.width)}" '
            f'height="{fmt(self.height)}" '
            f'viewBox="{fmt(vx)} {fmt(vy)} {fmt(vw)} {fmt(vh)}">'
        )
        body = "\n".join(el.to_svg("  ") for el in self.elements)
        return f"{header}\n{body}\n</svg>\n"

    def save(self, path: FsPath | str) -> None:
        FsPath(path).write_text(self.to_svg(), encoding="utf-8")
