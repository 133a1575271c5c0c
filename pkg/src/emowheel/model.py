"""Emotion wheel taxonomy: the 8 basic emotions, the 28 dyads, angular
layout, score containers and validation.

Wheel order is clockwise from the top: joy, trust, fear, surprise, sadness,
disgust, anger, anticipation.  This is the unique cyclic order in which the
four classic opposition pairs (joy/sadness, trust/disgust, fear/anger,
anticipation/surprise) sit diametrically opposed.  Axis k points at angle
pi/2 - k*(pi/4), measured counterclockwise from the +x axis, so joy points
straight up and opposites differ by exactly pi.

A dyad (complex emotion elicited by two basic ones) sits on the bisector of
its components' axes: a half-step (pi/8) offset for primary dyads, a full
emotion axis for secondary ones, 3*pi/8 for tertiary ones.  The four
opposite dyads have no well-defined bisector (both arcs are equal), so they
are spread evenly on 4 axes spaced pi/2, ordered by their first component.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType
from typing import Union

from .errors import (
    EmptyCorpusError,
    HeterogeneousKindsError,
    InvalidScoreValueError,
    MixedKindsError,
    OutOfRangeError,
    TripleOverflowError,
    UnknownKeyError,
    WrongArityError,
)

__all__ = [
    "EPSILON",
    "Emotion",
    "DyadKind",
    "Dyad",
    "ScoreKind",
    "IntensityTriple",
    "ScoreSet",
    "DYADS",
    "dyad_named",
    "dyads_of_kind",
    "dyad_components",
    "angular_position",
    "circular_distance",
    "slots_for_kind",
    "parse_scores",
    "aggregate_corpus",
]

# Tolerance applied to every [0, 1] range check; absorbs float noise from
# JSON round-trips.  Values inside the tolerance band are clamped.
EPSILON = 1e-9


class Emotion(enum.Enum):
    """The 8 basic emotions, declared in wheel order (clockwise from top)."""

    JOY = "joy"
    TRUST = "trust"
    FEAR = "fear"
    SURPRISE = "surprise"
    SADNESS = "sadness"
    DISGUST = "disgust"
    ANGER = "anger"
    ANTICIPATION = "anticipation"

    def __str__(self) -> str:
        return self.value

    @property
    def wheel_index(self) -> int:
        """Position on the wheel, 0 (top) through 7, clockwise."""
        return _WHEEL_INDEX[self]

    @property
    def opposite(self) -> "Emotion":
        """The diametrically opposed emotion (4 petals away)."""
        return _WHEEL_ORDER[(self.wheel_index + 4) % 8]


_WHEEL_ORDER: tuple[Emotion, ...] = tuple(Emotion)
_WHEEL_INDEX: dict[Emotion, int] = {e: i for i, e in enumerate(_WHEEL_ORDER)}


class DyadKind(enum.Enum):
    """How far apart (in petals) a dyad's two components sit."""

    PRIMARY = 1
    SECONDARY = 2
    TERTIARY = 3
    OPPOSITE = 4

    @property
    def distance(self) -> int:
        return self.value


@dataclass(frozen=True)
class Dyad:
    """A complex emotion formed by two co-elicited basic emotions.

    ``components`` is ordered: the second emotion is reached from the first
    by moving ``kind.distance`` steps clockwise around the wheel.
    """

    name: str
    kind: DyadKind
    components: tuple[Emotion, Emotion]

    def __post_init__(self) -> None:
        first, second = self.components
        step = (second.wheel_index - first.wheel_index) % 8
        if step != self.kind.distance:
            raise ValueError(
                f"dyad {self.name!r}: components {first}/{second} are "
                f"{step} steps apart, expected {self.kind.distance}"
            )

    def __str__(self) -> str:
        return self.name


def _dyads(kind: DyadKind, names: Sequence[str]) -> tuple[Dyad, ...]:
    # One dyad per first-component index; 4 for opposite (k = 0..3).
    return tuple(
        Dyad(
            name,
            kind,
            (_WHEEL_ORDER[k], _WHEEL_ORDER[(k + kind.distance) % 8]),
        )
        for k, name in enumerate(names)
    )


# The full 28-dyad catalog in standard nomenclature, each level ordered by
# its first component's wheel index.  Names are labels only; all geometry
# derives from the component pairs.
_PRIMARY = _dyads(
    DyadKind.PRIMARY,
    ("love", "submission", "awe", "disapproval",
     "remorse", "contempt", "aggressiveness", "optimism"),
)
_SECONDARY = _dyads(
    DyadKind.SECONDARY,
    ("guilt", "curiosity", "despair", "unbelief",
     "envy", "cynicism", "pride", "hope"),
)
_TERTIARY = _dyads(
    DyadKind.TERTIARY,
    ("delight", "sentimentality", "shame", "outrage",
     "pessimism", "morbidness", "dominance", "anxiety"),
)
_OPPOSITE = _dyads(
    DyadKind.OPPOSITE,
    ("bittersweetness", "ambivalence", "frozenness", "confusion"),
)

DYADS: tuple[Dyad, ...] = _PRIMARY + _SECONDARY + _TERTIARY + _OPPOSITE

_DYAD_BY_NAME: dict[str, Dyad] = {d.name: d for d in DYADS}
_DYADS_BY_KIND: dict[DyadKind, tuple[Dyad, ...]] = {
    DyadKind.PRIMARY: _PRIMARY,
    DyadKind.SECONDARY: _SECONDARY,
    DyadKind.TERTIARY: _TERTIARY,
    DyadKind.OPPOSITE: _OPPOSITE,
}


def dyad_named(name: str) -> Dyad:
    """Look up a dyad by its (lowercase) name."""
    try:
        return _DYAD_BY_NAME[name]
    except KeyError:
        raise UnknownKeyError(f"unknown dyad name: {name!r}") from None


def dyads_of_kind(kind: DyadKind) -> tuple[Dyad, ...]:
    """All dyads of one level, ordered by first component's wheel index."""
    return _DYADS_BY_KIND[kind]


def dyad_components(dyad: Dyad) -> tuple[Emotion, Emotion]:
    """The ordered constituent pair of a catalog dyad."""
    return dyad.components


def circular_distance(a: Emotion, b: Emotion) -> int:
    """Number of petals between two emotions along the shorter arc (0-4)."""
    step = (a.wheel_index - b.wheel_index) % 8
    return min(step, 8 - step)


Slot = Union[Emotion, Dyad]


def angular_position(slot: Slot) -> float:
    """Axis angle of a wheel slot, in radians counterclockwise from +x.

    Basic emotions: pi/2 - k*(pi/4) for wheel index k (joy at the top,
    clockwise).  Non-opposite dyads: the shorter-arc bisector of their two
    components' axes.  Opposite dyads: 4 axes spaced pi/2, the dyad with
    first component at index k (k = 0..3) pointing at pi/2 - k*(pi/2).

    Angles are not normalised; compare them modulo 2*pi.
    """
    if isinstance(slot, Emotion):
        return math.pi / 2 - slot.wheel_index * (math.pi / 4)
    first = slot.components[0]
    if slot.kind is DyadKind.OPPOSITE:
        return math.pi / 2 - first.wheel_index * (math.pi / 2)
    # Bisector: half of the clockwise step from the first component.
    return angular_position(first) - slot.kind.distance * (math.pi / 8)


class ScoreKind(enum.Enum):
    """Which wheel a score document addresses."""

    BASIC_SCALAR = "basic_scalar"
    BASIC_INTENSITY = "basic_intensity"
    DYAD_PRIMARY = "dyad_primary"
    DYAD_SECONDARY = "dyad_secondary"
    DYAD_TERTIARY = "dyad_tertiary"
    DYAD_OPPOSITE = "dyad_opposite"

    @property
    def is_basic(self) -> bool:
        return self in (ScoreKind.BASIC_SCALAR, ScoreKind.BASIC_INTENSITY)

    @property
    def dyad_kind(self) -> DyadKind | None:
        return _SCOREKIND_TO_DYADKIND.get(self)


_SCOREKIND_TO_DYADKIND = {
    ScoreKind.DYAD_PRIMARY: DyadKind.PRIMARY,
    ScoreKind.DYAD_SECONDARY: DyadKind.SECONDARY,
    ScoreKind.DYAD_TERTIARY: DyadKind.TERTIARY,
    ScoreKind.DYAD_OPPOSITE: DyadKind.OPPOSITE,
}
_DYADKIND_TO_SCOREKIND = {v: k for k, v in _SCOREKIND_TO_DYADKIND.items()}


def slots_for_kind(kind: ScoreKind) -> tuple[Slot, ...]:
    """The wheel slots a ScoreSet of this kind must cover, in wheel order."""
    if kind.is_basic:
        return _WHEEL_ORDER
    return dyads_of_kind(_SCOREKIND_TO_DYADKIND[kind])


def _clamp01(value: float, context: str) -> float:
    """Validate a score against [0, 1] (with EPSILON slack) and clamp."""
    if not (-EPSILON <= value <= 1.0 + EPSILON):
        raise OutOfRangeError(f"{context}: score {value!r} outside [0, 1]")
    return min(1.0, max(0.0, value))


@dataclass(frozen=True)
class IntensityTriple:
    """Three intensity-degree scores of one emotion: mild, medium, intense.

    Components follow the taxonomy's column order, lower to higher degree.
    Each lies in [0, 1] and together they sum to at most 1 (one text cannot
    express two degrees of the same emotion at once).
    """

    mild: float
    medium: float
    intense: float

    def __post_init__(self) -> None:
        for field in ("mild", "medium", "intense"):
            value = getattr(self, field)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidScoreValueError(
                    f"intensity component {field}={value!r} is not a number"
                )
            object.__setattr__(self, field, _clamp01(float(value), field))
        if self.total > 1.0 + EPSILON:
            raise TripleOverflowError(
                f"intensity scores sum to {self.total!r} > 1"
            )

    @property
    def total(self) -> float:
        """Cumulative score of the emotion across its three degrees."""
        return self.mild + self.medium + self.intense

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.mild, self.medium, self.intense)


ScoreValue = Union[float, IntensityTriple]


@dataclass(frozen=True)
class ScoreSet:
    """A validated, immutable score document for one wheel.

    ``entries`` maps every slot of the wheel (Emotion or Dyad, in wheel
    order) to either a float in [0, 1] or, for the basic-intensity kind, an
    :class:`IntensityTriple`.
    """

    kind: ScoreKind
    entries: Mapping[Slot, ScoreValue]

    def __post_init__(self) -> None:
        slots = slots_for_kind(self.kind)
        given = tuple(self.entries)
        if set(given) != set(slots):
            raise WrongArityError(
                f"{self.kind.value} score set must cover exactly "
                f"{len(slots)} slots, got {len(given)}"
            )
        ordered: dict[Slot, ScoreValue] = {}
        for slot in slots:
            value = self.entries[slot]
            if self.kind is ScoreKind.BASIC_INTENSITY:
                if not isinstance(value, IntensityTriple):
                    raise InvalidScoreValueError(
                        f"{slot}: basic_intensity entries must be "
                        "IntensityTriple"
                    )
            else:
                if isinstance(value, bool) or not isinstance(value, (int, float)):
                    raise InvalidScoreValueError(
                        f"{slot}: expected a scalar score, got {value!r}"
                    )
                value = _clamp01(float(value), str(slot))
            ordered[slot] = value
        object.__setattr__(self, "entries", MappingProxyType(ordered))

    @property
    def slots(self) -> tuple[Slot, ...]:
        return tuple(self.entries)

    def score_of(self, slot: Slot) -> float:
        """Cumulative scalar score of a slot (triple sum for intensities)."""
        value = self.entries[slot]
        return value.total if isinstance(value, IntensityTriple) else value

    def to_mapping(self) -> dict[str, float | list[float]]:
        """JSON-ready plain mapping; inverse of :func:`parse_scores`."""
        out: dict[str, float | list[float]] = {}
        for slot, value in self.entries.items():
            name = slot.value if isinstance(slot, Emotion) else slot.name
            out[name] = (
                list(value.as_tuple())
                if isinstance(value, IntensityTriple)
                else value
            )
        return out


# name -> (slot, owning category); categories are ScoreKind minus the
# scalar/intensity distinction, which only values can settle.
_BASIC_CATEGORY = "basic"
_SLOT_INDEX: dict[str, tuple[Slot, object]] = {}
for _e in _WHEEL_ORDER:
    _SLOT_INDEX[_e.value] = (_e, _BASIC_CATEGORY)
for _d in DYADS:
    _SLOT_INDEX[_d.name] = (_d, _DYADKIND_TO_SCOREKIND[_d.kind])


def _classify_value(key: str, value: object) -> tuple[str, object]:
    """Return ("scalar", float) or ("triple", tuple3); raise otherwise."""
    if isinstance(value, bool):
        raise InvalidScoreValueError(f"key {key!r}: boolean is not a score")
    if isinstance(value, (int, float)):
        return "scalar", float(value)
    if isinstance(value, Sequence) and not isinstance(value, (str, bytes)):
        items = list(value)
        if len(items) != 3:
            raise InvalidScoreValueError(
                f"key {key!r}: intensity value must have exactly 3 entries, "
                f"got {len(items)}"
            )
        for item in items:
            if isinstance(item, bool) or not isinstance(item, (int, float)):
                raise InvalidScoreValueError(
                    f"key {key!r}: intensity entry {item!r} is not a number"
                )
        return "triple", tuple(float(v) for v in items)
    raise InvalidScoreValueError(f"key {key!r}: {value!r} is not a score")


def parse_scores(
    raw: Mapping[str, object], *, fill_missing: bool = False
) -> ScoreSet:
    """Validate a raw score mapping and infer which wheel it addresses.

    Keys are case-insensitive emotion or dyad names (canonicalised to
    lowercase); values are numbers in [0, 1], or 3-element sequences of
    numbers summing to at most 1 for the basic-intensity wheel.  Dyads take
    scalars only.  The key set must cover its wheel exactly: all 8 emotions,
    all 8 dyads of one level, or all 4 opposite dyads.

    With ``fill_missing`` (corpus records only), slots absent from ``raw``
    default to 0; the mapping must still name at least one slot.

    Raises UnknownKeyError, MixedKindsError, WrongArityError,
    OutOfRangeError, TripleOverflowError or InvalidScoreValueError.
    """
    if not isinstance(raw, Mapping):
        raise TypeError(f"expected a mapping of scores, got {type(raw).__name__}")

    canonical: dict[str, object] = {}
    for key, value in raw.items():
        if not isinstance(key, str):
            raise UnknownKeyError(f"non-string key: {key!r}")
        name = key.lower()
        if name in canonical:
            raise WrongArityError(f"duplicate key after case-folding: {name!r}")
        canonical[name] = value

    unknown = sorted(name for name in canonical if name not in _SLOT_INDEX)
    if unknown:
        raise UnknownKeyError(
            "unknown key(s): " + ", ".join(repr(n) for n in unknown)
        )

    categories = {_SLOT_INDEX[name][1] for name in canonical}
    if len(categories) > 1:
        detail = ", ".join(
            f"{name!r} ({_category_label(_SLOT_INDEX[name][1])})"
            for name in sorted(canonical)
        )
        raise MixedKindsError(f"keys mix wheel kinds: {detail}")
    if not categories:
        raise WrongArityError("empty score mapping: cannot infer wheel kind")
    category = categories.pop()

    expected = (
        _WHEEL_ORDER
        if category is _BASIC_CATEGORY
        else dyads_of_kind(_SCOREKIND_TO_DYADKIND[category])
    )
    expected_names = [
        s.value if isinstance(s, Emotion) else s.name for s in expected
    ]
    missing = [n for n in expected_names if n not in canonical]
    if missing and not fill_missing:
        raise WrongArityError(
            f"{_category_label(category)} wheel needs "
            f"{len(expected_names)} keys; missing: " + ", ".join(missing)
        )

    classified = {
        name: _classify_value(name, value) for name, value in canonical.items()
    }

    if category is _BASIC_CATEGORY:
        forms = {form for form, _ in classified.values()}
        if forms == {"scalar", "triple"}:
            mixed = ", ".join(
                f"{n!r} ({form})" for n, (form, _) in sorted(classified.items())
            )
            raise MixedKindsError(
                f"scalar and intensity values mixed on one wheel: {mixed}"
            )
        kind = (
            ScoreKind.BASIC_INTENSITY
            if forms == {"triple"}
            else ScoreKind.BASIC_SCALAR
        )
    else:
        for name, (form, _) in sorted(classified.items()):
            if form == "triple":
                raise InvalidScoreValueError(
                    f"dyad {name!r} takes a scalar score, not a 3-element "
                    "intensity array"
                )
        kind = category

    entries: dict[Slot, ScoreValue] = {}
    for slot, name in zip(expected, expected_names):
        if name not in classified:
            entries[slot] = (
                IntensityTriple(0.0, 0.0, 0.0)
                if kind is ScoreKind.BASIC_INTENSITY
                else 0.0
            )
            continue
        form, payload = classified[name]
        if kind is ScoreKind.BASIC_INTENSITY:
            mild, medium, intense = payload  # input order is mild, medium, intense
            try:
                entries[slot] = IntensityTriple(mild, medium, intense)
            except ScoreSetKeyedError as err:
                raise type(err)(f"key {name!r}: {err}") from None
        else:
            entries[slot] = _clamp01(payload, f"key {name!r}")
    return ScoreSet(kind, entries)


# Errors worth re-raising with the offending key prepended.
ScoreSetKeyedError = (OutOfRangeError, TripleOverflowError, InvalidScoreValueError)


def _category_label(category: object) -> str:
    if category is _BASIC_CATEGORY:
        return "basic emotion"
    return category.dyad_kind.name.lower() + " dyad"  # type: ignore[union-attr]


def aggregate_corpus(score_sets: Sequence[ScoreSet]) -> ScoreSet:
    """Slot-wise arithmetic mean of score sets sharing one kind.

    Triples are averaged componentwise.  The mean of valid documents is
    itself valid (every slot stays inside the inputs' convex hull).
    """
    if len(score_sets) == 0:
        raise EmptyCorpusError("cannot aggregate an empty corpus")
    kinds = {s.kind for s in score_sets}
    if len(kinds) > 1:
        raise HeterogeneousKindsError(
            "cannot aggregate mixed kinds: "
            + ", ".join(sorted(k.value for k in kinds))
        )
    kind = kinds.pop()
    n = len(score_sets)
    entries: dict[Slot, ScoreValue] = {}
    for slot in slots_for_kind(kind):
        values = [s.entries[slot] for s in score_sets]
        if kind is ScoreKind.BASIC_INTENSITY:
            entries[slot] = IntensityTriple(
                sum(v.mild for v in values) / n,
                sum(v.medium for v in values) / n,
                sum(v.intense for v in values) / n,
            )
        else:
            mean = sum(values) / n
            entries[slot] = min(1.0, max(0.0, mean))
    return ScoreSet(kind, entries)
