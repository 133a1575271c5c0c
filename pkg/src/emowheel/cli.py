"""Command line front end: render wheels, comparison rows and grids to SVG.

Subcommands:
  render   one score document -> one wheel
  compare  corpus + --group-by -> one row of wheels, titled per group
  grid     corpus (or several documents) -> small-multiple grid

Output is byte-identical across runs for fixed inputs and flags.  Errors
print a one-line diagnostic on stderr and exit with a documented code (see
EXIT_CODES); argparse usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .errors import (
    CorpusFormatError,
    EmowheelError,
    EmptyCorpusError,
    GridOverflowError,
    HeterogeneousKindsError,
    InputFileError,
    InvalidOptionCombinationError,
    InvalidScoreValueError,
    JsonFormatError,
    MixedKindsError,
    NonPositiveRatioError,
    OutOfRangeError,
    ScoreParseError,
    TitleMismatchError,
    TripleOverflowError,
    UnknownGroupFieldError,
    UnknownKeyError,
    WrongArityError,
)
from .ingest import corpus_from_text, load_scores, read_source, scores_from_text
from .layout import GridSpec, compose_grid
from .model import Emotion, ScoreSet
from .render import RenderOptions, render_wheel
from .scene import VectorDoc

__all__ = ["EXIT_CODES", "main"]

#: Documented exit codes, one per error family (2 is argparse usage).
EXIT_CODES: tuple[tuple[type[Exception], int], ...] = (
    (InputFileError, 3),
    (JsonFormatError, 4),
    (UnknownKeyError, 5),
    (MixedKindsError, 6),
    (WrongArityError, 7),
    (OutOfRangeError, 8),
    (TripleOverflowError, 9),
    (InvalidScoreValueError, 10),
    (EmptyCorpusError, 11),
    (HeterogeneousKindsError, 12),
    (UnknownGroupFieldError, 13),
    (CorpusFormatError, 14),
    (InvalidOptionCombinationError, 15),
    (GridOverflowError, 16),
    (TitleMismatchError, 17),
    (NonPositiveRatioError, 18),
)


def _exit_code(err: Exception) -> int:
    for cls, code in EXIT_CODES:
        if isinstance(err, cls):
            return code
    return 1


def _emotion_set(text: str) -> frozenset[Emotion]:
    emotions = set()
    for part in text.split(","):
        name = part.strip().lower()
        if not name:
            continue
        try:
            emotions.add(Emotion(name))
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"unknown emotion {name!r}; expected one of "
                + ", ".join(e.value for e in Emotion)
            ) from None
    return frozenset(emotions)


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0: {text}")
    return value


def _add_render_flags(parser: argparse.ArgumentParser, *, with_title: bool) -> None:
    parser.add_argument(
        "--coordinates",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="show grid, spokes and labels (--no-coordinates hides them)",
    )
    parser.add_argument(
        "--ratio",
        type=_positive_float,
        default=None,
        metavar="R",
        help="petal height/width ratio; lower is thicker (default 1)",
    )
    parser.add_argument(
        "--highlight",
        type=_emotion_set,
        default=None,
        metavar="EMOTIONS",
        help="comma-separated emotions to keep colored; the rest are grayed",
    )
    parser.add_argument(
        "--intensity-labels",
        type=_emotion_set,
        default=None,
        metavar="EMOTIONS",
        help="emotions whose three intensity scores are printed individually",
    )
    parser.add_argument("--font-size", type=_positive_float, default=None)
    parser.add_argument("--font-family", default=None)
    parser.add_argument(
        "--font-weight", choices=["light", "normal", "bold"], default=None
    )
    if with_title:
        parser.add_argument("--title", default=None, help="wheel title text")


def _options_from(args: argparse.Namespace, *, default_coordinates: bool = True) -> RenderOptions:
    kwargs: dict = {
        "show_coordinates": (
            args.coordinates if args.coordinates is not None else default_coordinates
        )
    }
    if args.ratio is not None:
        kwargs["height_width_ratio"] = args.ratio
    if args.highlight is not None:
        kwargs["highlight_emotions"] = args.highlight
    if args.intensity_labels is not None:
        kwargs["show_intensity_labels"] = args.intensity_labels
    if args.font_size is not None:
        kwargs["font_size"] = args.font_size
    if args.font_family is not None:
        kwargs["font_family"] = args.font_family
    if args.font_weight is not None:
        kwargs["font_weight"] = args.font_weight
    if getattr(args, "title", None) is not None:
        kwargs["title"] = args.title
    return RenderOptions(**kwargs)


def _write_output(doc: VectorDoc, path: str) -> None:
    svg = doc.to_svg()
    if path == "-":
        sys.stdout.write(svg)
        return
    try:
        Path(path).write_text(svg, encoding="utf-8")
    except OSError as err:
        raise InputFileError(f"cannot write {path}: {err}") from err


def _cmd_render(args: argparse.Namespace) -> int:
    scores = load_scores(args.input)
    doc = render_wheel(scores, _options_from(args))
    _write_output(doc, args.output)
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    groups = corpus_from_text(
        args.input, read_source(args.input), args.group_by
    )
    options = _options_from(args)
    wheels = [render_wheel(scores, options) for scores in groups.values()]
    spec = GridSpec(rows=1, cols=len(wheels), cell_titles=list(groups))
    _write_output(compose_grid(wheels, spec), args.output)
    return 0


def _grid_scoresets(args: argparse.Namespace) -> tuple[list[ScoreSet], list[str]]:
    """Score sets plus cell titles for the grid subcommand."""
    if len(args.inputs) > 1:
        sets = [load_scores(path) for path in args.inputs]
        titles = [_stem(path) for path in args.inputs]
        return sets, titles
    path = args.inputs[0]
    text = read_source(path)
    corpus = args.group_by is not None or Path(str(path)).suffix in (
        ".jsonl",
        ".ndjson",
    )
    if not corpus:
        try:
            corpus = isinstance(json.loads(text), list)
        except json.JSONDecodeError:
            corpus = True  # not a single JSON document; try JSON-lines
    if corpus:
        groups = corpus_from_text(path, text, args.group_by)
        return list(groups.values()), list(groups)
    return [scores_from_text(path, text)], [_stem(path)]


def _stem(path: str) -> str:
    return "stdin" if path == "-" else Path(path).stem


def _cmd_grid(args: argparse.Namespace) -> int:
    sets, titles = _grid_scoresets(args)
    n = len(sets)
    rows, cols = args.rows, args.cols
    if rows is None and cols is None:
        cols = math.isqrt(n - 1) + 1 if n > 1 else 1
    if cols is None:
        cols = -(-n // rows)
    if rows is None:
        rows = -(-n // cols)
    # Dense grids hide coordinates unless explicitly requested.
    options = _options_from(args, default_coordinates=n <= 4)
    wheels = [render_wheel(scores, options) for scores in sets]
    spec = GridSpec(rows=rows, cols=cols, cell_titles=titles)
    _write_output(compose_grid(wheels, spec), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emowheel",
        description=(
            "Render emotion wheels from JSON score documents to "
            "deterministic SVG."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    render = sub.add_parser(
        "render", help="render one score document to one wheel"
    )
    render.add_argument("input", help="score JSON file, or - for stdin")
    render.add_argument("-o", "--output", required=True, help="SVG file, or -")
    _add_render_flags(render, with_title=True)
    render.set_defaults(func=_cmd_render)

    compare = sub.add_parser(
        "compare", help="render grouped corpus means side by side"
    )
    compare.add_argument("input", help="corpus file (JSON-lines or array)")
    compare.add_argument("--group-by", required=True, metavar="FIELD")
    compare.add_argument("-o", "--output", required=True)
    _add_render_flags(compare, with_title=False)
    compare.set_defaults(func=_cmd_compare)

    grid = sub.add_parser(
        "grid", help="compose a small-multiple grid of wheels"
    )
    grid.add_argument(
        "inputs", nargs="+", help="one corpus file, or several score files"
    )
    grid.add_argument("--rows", type=int, default=None)
    grid.add_argument("--cols", type=int, default=None)
    grid.add_argument("--group-by", default=None, metavar="FIELD")
    grid.add_argument("-o", "--output", required=True)
    _add_render_flags(grid, with_title=False)
    grid.set_defaults(func=_cmd_grid)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EmowheelError as err:
        print(f"error: {err}", file=sys.stderr)
        return _exit_code(err)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
