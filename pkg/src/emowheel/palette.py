"""The hard-coded wheel color code.

One hue family per emotion, three saturation steps per family (intense is
the most saturated, mild the palest), matching the classic iconography:
joy yellow, trust green, fear teal, surprise light blue, sadness blue,
disgust violet, anger red, anticipation orange.  The hex values are pinned
constants; golden tests depend on them byte for byte.
"""

from __future__ import annotations

from typing import Literal

from .model import Emotion

__all__ = ["Degree", "DEGREES", "GHOST_FILL", "color_for"]

Degree = Literal["intense", "medium", "mild"]

#: Saturation steps in decreasing order, innermost petal section first.
DEGREES: tuple[Degree, ...] = ("intense", "medium", "mild")

#: Fill used for petals outside the highlight set: 85% white gray.
GHOST_FILL = "#d9d9d9"

# (intense, medium, mild) per family; generated once from an HSV ramp
# (hue per family; s/v steps 0.90/0.88, 0.55/0.96, 0.28/1.00) and frozen.
_FAMILIES: dict[Emotion, tuple[str, str, str]] = {
    Emotion.JOY: ("#e0c516", "#f5e36e", "#fff5b8"),
    Emotion.TRUST: ("#5ae016", "#9bf56e", "#cfffb8"),
    Emotion.FEAR: ("#16e09d", "#6ef5c8", "#b8ffe7"),
    Emotion.SURPRISE: ("#16aee0", "#6ed3f5", "#b8edff"),
    Emotion.SADNESS: ("#1649e0", "#6e90f5", "#b8c9ff"),
    Emotion.DISGUST: ("#ae16e0", "#d36ef5", "#edb8ff"),
    Emotion.ANGER: ("#e01616", "#f56e6e", "#ffb8b8"),
    Emotion.ANTICIPATION: ("#e07b16", "#f5b16e", "#ffdbb8"),
}


def color_for(emotion: Emotion, degree: Degree = "medium") -> str:
    """Pinned sRGB hex color of one emotion at one intensity degree."""
    return _FAMILIES[emotion][DEGREES.index(degree)]
