"""Petal geometry in canvas coordinates (resolution independent, y up).

The canvas spans [-1.6, 1.6] on both axes: petals of length at most 1,
grid circles up to radius 1, score labels at radius 1.2 and name labels at
radius 1.4.  A petal is a closed leaf built from two mirrored cubic curves
from the origin to the tip; the tip sits exactly at polar radius = length
on the petal's axis.  With aspect ratio r the petal's maximum half-width is
length / (2*r), attained halfway along the axis (the cubic's control points
sit at axial radius length/2, offset perpendicular by 4/3 of the half-width
so the realized extremum lands on the contract value).

Everything here is a pure function of its arguments; rendering concerns
(colors, text, SVG) live elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import NonPositiveRatioError
from .model import EPSILON, IntensityTriple

__all__ = [
    "CANVAS_HALF_EXTENT",
    "CENTER_DISC_RADIUS",
    "NAME_LABEL_RADIUS",
    "SCORE_LABEL_RADIUS",
    "CanvasPoint",
    "Line",
    "Cubic",
    "Segment",
    "PetalPath",
    "petal_outline",
    "intensity_sections",
    "two_tone_halves",
    "grid_arcs",
    "label_anchor",
]

CANVAS_HALF_EXTENT = 1.6
CENTER_DISC_RADIUS = 0.2
SCORE_LABEL_RADIUS = 1.2
NAME_LABEL_RADIUS = 1.4

# Perpendicular control offset that makes a cubic with coincident control
# points peak at exactly 3/4 of the offset: scale by 4/3 to hit the target.
_CONTROL_WIDTH_FACTOR = 4.0 / 3.0


class CanvasPoint(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Line:
    start: CanvasPoint
    end: CanvasPoint


@dataclass(frozen=True)
class Cubic:
    start: CanvasPoint
    control1: CanvasPoint
    control2: CanvasPoint
    end: CanvasPoint


Segment = Union[Line, Cubic]


@dataclass(frozen=True)
class PetalPath:
    """A closed outline along one wheel axis.

    ``length`` is the outline's radial extent on the axis: the full score
    for whole petals and two-tone halves, the outer cumulative radius for
    intensity sections.  An empty tuple of segments is the degenerate
    zero-score petal.
    """

    segments: tuple[Segment, ...]
    axis_angle: float
    length: float

    @property
    def is_empty(self) -> bool:
        return not self.segments

    @property
    def is_closed(self) -> bool:
        if self.is_empty:
            return False
        return self.segments[0].start == self.segments[-1].end


def _rotate(point: tuple[float, float], angle: float) -> CanvasPoint:
    c, s = math.cos(angle), math.sin(angle)
    x, y = point
    return CanvasPoint(x * c - y * s, x * s + y * c)


_Local = tuple[float, float]
_LocalCubic = tuple[_Local, _Local, _Local, _Local]


def _to_world(segments_local: list, angle: float) -> tuple[Segment, ...]:
    out: list[Segment] = []
    for kind, pts in segments_local:
        world = [_rotate(p, angle) for p in pts]
        if kind == "L":
            out.append(Line(world[0], world[1]))
        else:
            out.append(Cubic(world[0], world[1], world[2], world[3]))
    return tuple(out)


def _upper_cubic(length: float, ratio: float) -> _LocalCubic:
    # Local frame: axis along +x, counterclockwise side is +y.
    half_width = length / (2.0 * ratio)
    control = (length / 2.0, _CONTROL_WIDTH_FACTOR * half_width)
    return ((0.0, 0.0), control, control, (length, 0.0))


def _mirror_cubic(cubic: _LocalCubic) -> _LocalCubic:
    return tuple((x, -y) for x, y in cubic)  # type: ignore[return-value]


def _reverse_cubic(cubic: _LocalCubic) -> _LocalCubic:
    return (cubic[3], cubic[2], cubic[1], cubic[0])


def _check_args(length: float, aspect_ratio: float) -> None:
    if aspect_ratio <= 0:
        raise NonPositiveRatioError(
            f"aspect ratio must be > 0, got {aspect_ratio!r}"
        )
    if not (-EPSILON <= length <= 1.0 + EPSILON):
        raise ValueError(f"petal length {length!r} outside [0, 1]")


def petal_outline(
    axis_angle: float, length: float, aspect_ratio: float = 1.0
) -> PetalPath:
    """Closed leaf from the origin to polar radius ``length`` on the axis.

    Zero length yields the empty path.
    """
    _check_args(length, aspect_ratio)
    if length == 0.0:
        return PetalPath((), axis_angle, 0.0)
    upper = _upper_cubic(length, aspect_ratio)
    lower = _reverse_cubic(_mirror_cubic(upper))
    segments = _to_world([("C", upper), ("C", lower)], axis_angle)
    return PetalPath(segments, axis_angle, length)


def _split_cubic(cubic: _LocalCubic, t: float) -> tuple[_LocalCubic, _LocalCubic]:
    """de Casteljau subdivision at parameter t."""

    def lerp(a: _Local, b: _Local) -> _Local:
        return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)

    p0, p1, p2, p3 = cubic
    q0, q1, q2 = lerp(p0, p1), lerp(p1, p2), lerp(p2, p3)
    r0, r1 = lerp(q0, q1), lerp(q1, q2)
    s = lerp(r0, r1)
    return (p0, q0, r0, s), (s, r1, q2, p3)


def _axial_fraction_to_t(u: float) -> float:
    """Invert the cubic's axial progress g(t) = 1.5*t*(1-t) + t^3.

    g is strictly increasing on [0, 1] (its derivative is
    3*((t - 1/2)^2 + 1/4) > 0), so plain bisection converges; 80 halvings
    exhaust double precision and keep the result deterministic.
    """
    if u <= 0.0:
        return 0.0
    if u >= 1.0:
        return 1.0
    lo, hi = 0.0, 1.0
    for _ in range(80):
        mid = (lo + hi) / 2.0
        if 1.5 * mid * (1.0 - mid) + mid**3 < u:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def _cubic_pieces(
    cubic: _LocalCubic, t1: float, t2: float
) -> tuple[_LocalCubic, _LocalCubic, _LocalCubic]:
    """Split one cubic into the pieces over [0,t1], [t1,t2], [t2,1]."""
    inner, rest = _split_cubic(cubic, t1)
    if t1 >= 1.0:
        middle, outer = rest, rest
    else:
        middle, outer = _split_cubic(rest, (t2 - t1) / (1.0 - t1))
    return inner, middle, outer


def intensity_sections(
    axis_angle: float,
    triple: IntensityTriple,
    aspect_ratio: float = 1.0,
) -> tuple[PetalPath, PetalPath, PetalPath]:
    """Partition the petal of length triple.total into three sections.

    Cut chords cross the axis at radius ``intense`` and
    ``intense + medium`` from the center: the intense section is innermost,
    mild outermost.  Returned in (intense, medium, mild) order; sections
    with zero score are empty paths.  Non-empty sections tile the full
    petal exactly (shared boundaries are the same split points).
    """
    if aspect_ratio <= 0:
        raise NonPositiveRatioError(
            f"aspect ratio must be > 0, got {aspect_ratio!r}"
        )
    total = triple.total
    cuts = (triple.intense, triple.intense + triple.medium, total)
    if total == 0.0:
        empty = PetalPath((), axis_angle, 0.0)
        return (empty, empty, empty)

    upper = _upper_cubic(total, aspect_ratio)
    t1 = _axial_fraction_to_t(cuts[0] / total)
    t2 = _axial_fraction_to_t(cuts[1] / total)
    upper_pieces = _cubic_pieces(upper, t1, t2)
    lower_pieces = tuple(_mirror_cubic(c) for c in upper_pieces)
    bounds = ((0.0, t1), (t1, t2), (t2, 1.0))
    scores = (triple.intense, triple.medium, triple.mild)

    sections: list[PetalPath] = []
    for piece_u, piece_l, (t_lo, t_hi), score, outer_radius in zip(
        upper_pieces, lower_pieces, bounds, scores, cuts
    ):
        if score == 0.0:
            sections.append(PetalPath((), axis_angle, outer_radius))
            continue
        local: list = [("C", piece_u)]
        if 0.0 < t_hi < 1.0:  # chord across the petal at the outer cut
            local.append(("L", (piece_u[3], piece_l[3])))
        local.append(("C", _reverse_cubic(piece_l)))
        if 0.0 < t_lo < 1.0:  # chord back at the inner cut
            local.append(("L", (piece_l[0], piece_u[0])))
        sections.append(
            PetalPath(_to_world(local, axis_angle), axis_angle, outer_radius)
        )
    return tuple(sections)  # type: ignore[return-value]


def two_tone_halves(
    axis_angle: float, length: float, aspect_ratio: float = 1.0
) -> tuple[PetalPath, PetalPath]:
    """Split the petal along its axis into two mirror-image closed halves.

    The first half lies on the counterclockwise side of the axis (where a
    dyad's first component sits), the second on the clockwise side.  Each
    half runs along its cubic to the tip and returns along the axis.
    """
    _check_args(length, aspect_ratio)
    if length == 0.0:
        empty = PetalPath((), axis_angle, 0.0)
        return (empty, empty)
    upper = _upper_cubic(length, aspect_ratio)
    lower = _mirror_cubic(upper)
    axis_back = ("L", ((length, 0.0), (0.0, 0.0)))
    ccw = PetalPath(
        _to_world([("C", upper), axis_back], axis_angle), axis_angle, length
    )
    cw = PetalPath(
        _to_world([("C", lower), axis_back], axis_angle), axis_angle, length
    )
    return (ccw, cw)


def grid_arcs() -> tuple[float, ...]:
    """Radii of the concentric grid circles: four minor lines spaced 0.2
    plus the unit reference circle."""
    return (0.2, 0.4, 0.6, 0.8, 1.0)


def label_anchor(axis_angle: float) -> tuple[CanvasPoint, CanvasPoint]:
    """Anchor points on the axis for the name label (radius 1.4) and the
    numeric score label (radius 1.2)."""
    c, s = math.cos(axis_angle), math.sin(axis_angle)
    return (
        CanvasPoint(NAME_LABEL_RADIUS * c, NAME_LABEL_RADIUS * s),
        CanvasPoint(SCORE_LABEL_RADIUS * c, SCORE_LABEL_RADIUS * s),
    )
