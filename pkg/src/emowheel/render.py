"""Wheel rendering: a validated ScoreSet plus options becomes a VectorDoc.

Layout (canvas units, y up): petals up to radius 1, concentric grid every
0.2, white center disc at 0.2, dyad ring in the 1.05-1.15 annulus, score
labels at 1.2, name labels at 1.4.  The document adds a small margin beyond
the 1.6 canvas bound for glyph overhang, so a standalone wheel is 360x360
document units.

Rendering is a pure function: the same scores and options always produce
the same element list, and serialization is byte-identical across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidOptionCombinationError, NonPositiveRatioError
from .geometry import (
    CENTER_DISC_RADIUS,
    grid_arcs,
    intensity_sections,
    label_anchor,
    petal_outline,
    two_tone_halves,
)
from .model import (
    Dyad,
    DyadKind,
    Emotion,
    IntensityTriple,
    ScoreKind,
    ScoreSet,
    Slot,
    angular_position,
    dyads_of_kind,
)
from .palette import DEGREES, GHOST_FILL, color_for
from .scene import (
    SCALE,
    CircleElement,
    Element,
    PathElement,
    TextElement,
    VectorDoc,
    annular_sector_data,
    fmt,
    path_data,
    to_doc,
)

__all__ = [
    "ALL_EMOTIONS",
    "RenderOptions",
    "render_wheel",
    "render_dyad_ring",
    "center_annotation",
    "color_for",
]

#: Default highlight set: every petal keeps its colored fill.
ALL_EMOTIONS: frozenset[Emotion] = frozenset(Emotion)

# Document geometry.
_DOC_HALF_EXTENT = 1.8  # canvas units; leaves label headroom beyond 1.6
_RING_INNER = 1.05
_RING_OUTER = 1.15
_TITLE_Y = 1.6

# Pinned strokes and text colors.
_GRID_COLOR = "#cccccc"
_UNIT_CIRCLE_COLOR = "#999999"
_SPOKE_COLOR = "#e3e3e3"
_DISC_STROKE = "#cccccc"
_SCORE_COLOR = "#333333"
_BLACK = "#000000"
_DYAD_OUTLINE = "#4d4d4d"

_FONT_WEIGHTS = {"light": "300", "normal": "400", "bold": "700"}

_CENTER_LABELS = {
    ScoreKind.DYAD_PRIMARY: "1",
    ScoreKind.DYAD_SECONDARY: "2",
    ScoreKind.DYAD_TERTIARY: "3",
    ScoreKind.DYAD_OPPOSITE: "opp.",
}


@dataclass(frozen=True)
class RenderOptions:
    """Presentation knobs for one wheel.

    ``height_width_ratio`` controls petal slenderness (lower is thicker).
    ``highlight_emotions`` narrows the colored petals to a focus set; the
    rest keep their outline over a neutral gray fill.
    ``show_intensity_labels`` lists the emotions whose three degree scores
    are printed individually instead of the cumulative score.
    """

    show_coordinates: bool = True
    height_width_ratio: float = 1.0
    highlight_emotions: frozenset[Emotion] = ALL_EMOTIONS
    show_intensity_labels: frozenset[Emotion] = frozenset()
    font_size: float = 15.0
    font_family: str = "sans-serif"
    font_weight: str = "light"
    title: str | None = None

    def __post_init__(self) -> None:
        if self.height_width_ratio <= 0:
            raise NonPositiveRatioError(
                f"height_width_ratio must be > 0, got {self.height_width_ratio!r}"
            )
        if self.font_size <= 0:
            raise ValueError(f"font_size must be > 0, got {self.font_size!r}")
        if self.font_weight not in _FONT_WEIGHTS:
            raise ValueError(
                f"font_weight must be one of {sorted(_FONT_WEIGHTS)}, "
                f"got {self.font_weight!r}"
            )
        for name in ("highlight_emotions", "show_intensity_labels"):
            members = getattr(self, name)
            if not all(isinstance(e, Emotion) for e in members):
                raise ValueError(f"{name} may contain basic emotions only")
            object.__setattr__(self, name, frozenset(members))

    @property
    def svg_font_weight(self) -> str:
        return _FONT_WEIGHTS[self.font_weight]


def _slot_name(slot: Slot) -> str:
    return slot.value if isinstance(slot, Emotion) else slot.name


def _display_name(slot: Slot) -> str:
    return _slot_name(slot).capitalize()


def _text(
    options: RenderOptions,
    element_id: str,
    x: float,
    y: float,
    content: str,
    *,
    size_factor: float = 1.0,
    fill: str = _BLACK,
) -> TextElement:
    dx, dy = to_doc(x, y)
    return TextElement(
        id=element_id,
        x=dx,
        y=dy,
        content=content,
        font_size=options.font_size * size_factor,
        fill=fill,
        font_family=options.font_family,
        font_weight=options.svg_font_weight,
    )


def _coordinate_elements(
    scores: ScoreSet, options: RenderOptions
) -> list[Element]:
    """Radial spokes and concentric grid circles."""
    elements: list[Element] = []
    for slot in scores.slots:
        angle = angular_position(slot)
        tip_x, tip_y = to_doc(math.cos(angle), math.sin(angle))
        elements.append(
            PathElement(
                id=f"axis-{_slot_name(slot)}",
                d=f"M 0 0 L {fmt(tip_x)} {fmt(tip_y)}",
                stroke=_SPOKE_COLOR,
                stroke_width=1.0,
            )
        )
    for radius in grid_arcs():
        is_unit = radius == 1.0
        elements.append(
            CircleElement(
                id=f"grid-{radius:.1f}",
                cx=0.0,
                cy=0.0,
                r=radius * SCALE,
                stroke=_UNIT_CIRCLE_COLOR if is_unit else _GRID_COLOR,
                stroke_width=1.0,
            )
        )
    return elements


def _petal_elements(
    slot: Slot, scores: ScoreSet, options: RenderOptions
) -> list[Element]:
    angle = angular_position(slot)
    ratio = options.height_width_ratio
    value = scores.entries[slot]
    name = _slot_name(slot)
    elements: list[Element] = []

    if isinstance(slot, Dyad):
        first, second = slot.components
        halves = two_tone_halves(angle, value, ratio)
        for half, component in zip(halves, (first, second)):
            elements.append(
                PathElement(
                    id=f"petal-{name}-{component.value}",
                    d=path_data(half),
                    fill=color_for(component, "medium"),
                )
            )
        elements.append(
            PathElement(
                id=f"petal-{name}",
                d=path_data(petal_outline(angle, value, ratio)),
                stroke=_DYAD_OUTLINE,
                stroke_width=1.0,
            )
        )
        return elements

    ghosted = slot not in options.highlight_emotions
    base_color = color_for(slot, "medium")
    if isinstance(value, IntensityTriple):
        sections = intensity_sections(angle, value, ratio)
        for degree, section in zip(DEGREES, sections):
            fill = GHOST_FILL if ghosted else color_for(slot, degree)
            elements.append(
                PathElement(
                    id=f"petal-{name}-{degree}",
                    d=path_data(section),
                    fill=fill,
                )
            )
        outline = petal_outline(angle, value.total, ratio)
        elements.append(
            PathElement(
                id=f"petal-{name}",
                d=path_data(outline),
                stroke=base_color,
                stroke_width=1.5,
            )
        )
    else:
        fill = GHOST_FILL if ghosted else base_color
        elements.append(
            PathElement(
                id=f"petal-{name}",
                d=path_data(petal_outline(angle, value, ratio)),
                fill=fill,
                stroke=base_color,
                stroke_width=1.5,
            )
        )
    return elements


def _label_elements(
    slot: Slot, scores: ScoreSet, options: RenderOptions
) -> list[Element]:
    angle = angular_position(slot)
    name = _slot_name(slot)
    name_point, score_point = label_anchor(angle)
    name_fill = (
        color_for(slot, "medium") if isinstance(slot, Emotion) else _BLACK
    )
    elements: list[Element] = [
        _text(
            options,
            f"label-{name}",
            name_point.x,
            name_point.y,
            _display_name(slot),
            fill=name_fill,
        )
    ]
    value = scores.entries[slot]
    score_size = 0.8
    if (
        isinstance(value, IntensityTriple)
        and isinstance(slot, Emotion)
        and slot in options.show_intensity_labels
    ):
        spacing = (options.font_size * score_size + 1.0) / SCALE
        stacked = zip(DEGREES, value.as_tuple()[::-1])  # intense, medium, mild
        for line_index, (degree, component) in enumerate(stacked):
            elements.append(
                _text(
                    options,
                    f"score-{name}-{degree}",
                    score_point.x,
                    score_point.y + (1 - line_index) * spacing,
                    f"{component:.2f}",
                    size_factor=score_size,
                    fill=_SCORE_COLOR,
                )
            )
    else:
        elements.append(
            _text(
                options,
                f"score-{name}",
                score_point.x,
                score_point.y,
                f"{scores.score_of(slot):.2f}",
                size_factor=score_size,
                fill=_SCORE_COLOR,
            )
        )
    return elements


def render_dyad_ring(
    kind: ScoreKind, options: RenderOptions | None = None
) -> tuple[Element, ...]:
    """Annular reference ring naming the basic emotions behind a dyad wheel.

    Eight arcs in the 1.05-1.15 annulus, one per constituent emotion, each
    filled with that emotion's medium color and labeled.  For the primary,
    secondary and tertiary wheels the arcs are centered on the emotions'
    own axes (for primary dyads every petal axis falls exactly on the
    boundary between its two components' arcs).  For the opposite wheel the
    two constituents of each dyad flank its petal axis, first component on
    the counterclockwise side.
    """
    options = options or RenderOptions()
    if kind.is_basic:
        raise ValueError("the constituent ring applies to dyad wheels only")
    span = math.pi / 4
    arcs: list[tuple[Emotion, float]] = []  # (emotion, ccw edge angle)
    if kind is ScoreKind.DYAD_OPPOSITE:
        for dyad in dyads_of_kind(DyadKind.OPPOSITE):
            axis = angular_position(dyad)
            first, second = dyad.components
            arcs.append((first, axis + span))
            arcs.append((second, axis))
    else:
        for emotion in Emotion:
            arcs.append((emotion, angular_position(emotion) + span / 2))

    elements: list[Element] = []
    for emotion, ccw_edge in arcs:
        elements.append(
            PathElement(
                id=f"ring-{emotion.value}",
                d=annular_sector_data(
                    _RING_INNER, _RING_OUTER, ccw_edge, ccw_edge - span
                ),
                fill=color_for(emotion, "medium"),
            )
        )
    label_radius = (_RING_INNER + _RING_OUTER) / 2
    for emotion, ccw_edge in arcs:
        center = ccw_edge - span / 2
        elements.append(
            _text(
                options,
                f"ring-label-{emotion.value}",
                label_radius * math.cos(center),
                label_radius * math.sin(center),
                _display_name(emotion),
                size_factor=0.5,
            )
        )
    return tuple(elements)


def center_annotation(
    kind: ScoreKind, options: RenderOptions | None = None
) -> TextElement:
    """Dyad-level marker printed inside the white center disc:
    "1", "2", "3" or "opp."."""
    options = options or RenderOptions()
    if kind.is_basic:
        raise ValueError("center annotations apply to dyad wheels only")
    return _text(options, "center-annotation", 0.0, 0.0, _CENTER_LABELS[kind])


def _validate_options(scores: ScoreSet, options: RenderOptions) -> None:
    if options.show_intensity_labels and scores.kind is not ScoreKind.BASIC_INTENSITY:
        raise InvalidOptionCombinationError(
            "show_intensity_labels requires a basic_intensity score set, "
            f"got {scores.kind.value}"
        )
    if not scores.kind.is_basic and options.highlight_emotions != ALL_EMOTIONS:
        raise InvalidOptionCombinationError(
            "highlight_emotions applies to basic-emotion wheels only"
        )


def render_wheel(
    scores: ScoreSet, options: RenderOptions | None = None
) -> VectorDoc:
    """Render one wheel to a standalone vector document.

    Petals sit at their slots' angular positions, sized by score (triple
    sum for the intensity wheel, drawn as three sections with saturation
    decreasing outward).  Grid, spokes, name and score labels appear iff
    ``show_coordinates``.  Dyad wheels add two-tone petals, the constituent
    ring and the center annotation.  Output is deterministic.
    """
    options = options or RenderOptions()
    _validate_options(scores, options)

    elements: list[Element] = []
    if options.show_coordinates:
        elements.extend(_coordinate_elements(scores, options))
    for slot in scores.slots:
        elements.extend(_petal_elements(slot, scores, options))
    elements.append(
        CircleElement(
            id="center-disc",
            cx=0.0,
            cy=0.0,
            r=CENTER_DISC_RADIUS * SCALE,
            fill="#ffffff",
            stroke=_DISC_STROKE,
            stroke_width=1.0,
        )
    )
    if not scores.kind.is_basic:
        elements.append(center_annotation(scores.kind, options))
        elements.extend(render_dyad_ring(scores.kind, options))
    if options.show_coordinates:
        for slot in scores.slots:
            elements.extend(_label_elements(slot, scores, options))
    if options.title is not None:
        elements.append(
            _text(options, "title", 0.0, _TITLE_Y, options.title, size_factor=1.2)
        )

    size = 2 * _DOC_HALF_EXTENT * SCALE
    return VectorDoc(width=size, height=size, elements=tuple(elements))
