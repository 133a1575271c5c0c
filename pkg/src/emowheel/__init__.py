"""emowheel: deterministic SVG rendering of Plutchik-style emotion wheels.

The wheel places the 8 basic emotions so that spatial distance encodes
semantic distance: adjacent petals are related, opposite petals opposed.
This package turns JSON score documents (per-emotion scores in [0, 1],
optional three-degree intensity splits, or any of the four dyad levels)
into vector documents that keep that layout, and composes them into
comparison rows and small-multiple grids.
"""

from . import errors
from .geometry import (
    CanvasPoint,
    Cubic,
    Line,
    PetalPath,
    grid_arcs,
    intensity_sections,
    label_anchor,
    petal_outline,
    two_tone_halves,
)
from .ingest import load_corpus, load_scores
from .layout import GridSpec, compose_grid, dyad_row_spec
from .model import (
    DYADS,
    Dyad,
    DyadKind,
    Emotion,
    IntensityTriple,
    ScoreKind,
    ScoreSet,
    aggregate_corpus,
    angular_position,
    circular_distance,
    dyad_components,
    dyad_named,
    dyads_of_kind,
    parse_scores,
    slots_for_kind,
)
from .palette import GHOST_FILL, color_for
from .render import (
    ALL_EMOTIONS,
    RenderOptions,
    center_annotation,
    render_dyad_ring,
    render_wheel,
)
from .scene import VectorDoc

__version__ = "0.1.0"

__all__ = [
    "errors",
    "Emotion",
    "Dyad",
    "DyadKind",
    "ScoreKind",
    "ScoreSet",
    "IntensityTriple",
    "DYADS",
    "parse_scores",
    "aggregate_corpus",
    "angular_position",
    "circular_distance",
    "dyad_components",
    "dyad_named",
    "dyads_of_kind",
    "slots_for_kind",
    "CanvasPoint",
    "Line",
    "Cubic",
    "PetalPath",
    "petal_outline",
    "intensity_sections",
    "two_tone_halves",
    "grid_arcs",
    "label_anchor",
    "color_for",
    "GHOST_FILL",
    "ALL_EMOTIONS",
    "RenderOptions",
    "render_wheel",
    "render_dyad_ring",
    "center_annotation",
    "VectorDoc",
    "GridSpec",
    "compose_grid",
    "dyad_row_spec",
    "load_scores",
    "load_corpus",
    "__version__",
]
