"""File ingestion: single score documents and corpora of per-text records.

A score document is one JSON object mapping emotion or dyad names to
scores.  A corpus is JSON-lines (one record per line) or a JSON array of
records; record keys starting with "_" are metadata (conventionally "_id"
and a grouping field such as "_group" or "_stars"), all other keys are
scores.  Corpus records may omit unannotated slots, which default to 0.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .errors import (
    CorpusFormatError,
    EmptyCorpusError,
    HeterogeneousKindsError,
    InputFileError,
    JsonFormatError,
    ScoreParseError,
    UnknownGroupFieldError,
)
from .model import (
    IntensityTriple,
    ScoreKind,
    ScoreSet,
    aggregate_corpus,
    parse_scores,
    slots_for_kind,
)

__all__ = [
    "load_scores",
    "scores_from_text",
    "load_corpus",
    "corpus_from_text",
    "read_source",
]


def read_source(path: str | Path) -> str:
    """Read a UTF-8 input file; '-' reads stdin."""
    if str(path) == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise InputFileError(f"cannot read {path}: {err}") from err


def load_scores(path: str | Path) -> ScoreSet:
    """Load and validate a single score document."""
    return scores_from_text(path, read_source(path))


def scores_from_text(label: str | Path, text: str) -> ScoreSet:
    """Validate one score document given as raw JSON text."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise JsonFormatError(
            f"{label}: invalid JSON at line {err.lineno}, column {err.colno}: "
            f"{err.msg}"
        ) from err
    if not isinstance(raw, dict):
        raise JsonFormatError(
            f"{label}: a score document must be a JSON object, "
            f"got {type(raw).__name__}"
        )
    try:
        return parse_scores(raw)
    except ScoreParseError as err:
        raise type(err)(f"{label}: {err}") from None


def _parse_records(path: str | Path, text: str) -> list[dict]:
    """Records from a JSON array or JSON-lines payload."""
    stripped = text.lstrip()
    if not stripped:
        return []
    if stripped.startswith("["):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as err:
            raise JsonFormatError(
                f"{path}: invalid JSON at line {err.lineno}: {err.msg}"
            ) from err
        records = payload
    else:
        records = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as err:
                raise JsonFormatError(
                    f"{path}: line {lineno}: invalid JSON: {err.msg}"
                ) from err
    for index, record in enumerate(records):
        if not isinstance(record, dict):
            raise CorpusFormatError(
                f"{path}: record {index}: expected a JSON object, "
                f"got {type(record).__name__}"
            )
    return records


def _group_key(path: str | Path, index: int, record: dict, field: str) -> str:
    value = record.get(field, record.get("_" + field.lstrip("_"), None))
    if value is None:
        raise UnknownGroupFieldError(
            f"{path}: record {index} has no group field {field!r}"
        )
    if isinstance(value, bool) or not isinstance(value, (str, int, float)):
        raise CorpusFormatError(
            f"{path}: record {index}: group value {value!r} must be a "
            "string or number"
        )
    text = str(value)
    if not text:
        raise CorpusFormatError(f"{path}: record {index}: empty group value")
    return text


def _scores_of(record: dict) -> dict:
    return {
        key: value
        for key, value in record.items()
        if not (isinstance(key, str) and key.startswith("_"))
    }


def _ordered_groups(keys: list[str]) -> list[str]:
    """Numeric order when every group key parses as a number, else lexical."""
    try:
        return sorted(keys, key=float)
    except ValueError:
        return sorted(keys)


def load_corpus(
    path: str | Path, group_by: str | None = None
) -> dict[str, ScoreSet]:
    """Load a corpus and aggregate it into one mean ScoreSet per group.

    Without ``group_by`` all records form the single group "all".  The
    result preserves group order (numeric when possible).  All records must
    address the same wheel kind; records with no score keys count as
    all-zero documents of that kind.
    """
    return corpus_from_text(path, read_source(path), group_by)


def corpus_from_text(
    path: str | Path, text: str, group_by: str | None = None
) -> dict[str, ScoreSet]:
    """Aggregate a corpus given as raw JSON-lines or JSON-array text."""
    records = _parse_records(path, text)
    if not records:
        raise EmptyCorpusError(f"{path}: corpus has no records")

    grouped: dict[str, list[int]] = {}
    for index, record in enumerate(records):
        key = _group_key(path, index, record, group_by) if group_by else "all"
        grouped.setdefault(key, []).append(index)

    parsed: dict[int, ScoreSet | None] = {}
    kinds: set[ScoreKind] = set()
    for index, record in enumerate(records):
        scores = _scores_of(record)
        if not scores:
            parsed[index] = None  # empty annotation; kind decided below
            continue
        try:
            parsed[index] = parse_scores(scores, fill_missing=True)
        except ScoreParseError as err:
            raise type(err)(f"{path}: record {index}: {err}") from None
        kinds.add(parsed[index].kind)

    if len(kinds) > 1:
        raise HeterogeneousKindsError(
            f"{path}: records mix wheel kinds: "
            + ", ".join(sorted(k.value for k in kinds))
        )
    kind = kinds.pop() if kinds else ScoreKind.BASIC_SCALAR
    zero = _zero_scores(kind)

    result: dict[str, ScoreSet] = {}
    for key in _ordered_groups(list(grouped)):
        members = [parsed[i] if parsed[i] is not None else zero for i in grouped[key]]
        result[key] = aggregate_corpus(members)
    return result


def _zero_scores(kind: ScoreKind) -> ScoreSet:
    zero = (
        IntensityTriple(0.0, 0.0, 0.0)
        if kind is ScoreKind.BASIC_INTENSITY
        else 0.0
    )
    return ScoreSet(kind, {slot: zero for slot in slots_for_kind(kind)})
