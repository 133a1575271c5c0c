"""Composition of rendered wheels into rows and small-multiple grids.

Composition is non-destructive: every input document is embedded verbatim
inside a translated group, so extracting a cell's subtree yields exactly
the standalone wheel's elements (path data untouched).  Cells are uniform;
the padding around each wheel is 5% of the cell width on every side.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import GridOverflowError, TitleMismatchError
from .render import RenderOptions
from .scene import Element, GroupElement, TextElement, VectorDoc, fmt

__all__ = ["GridSpec", "compose_grid", "dyad_row_spec"]

_PAD_FRACTION = 0.05  # each side, of the cell width
_TITLE_BAND = 34.0  # extra cell height when cell titles are present
_TITLE_FONT_SIZE = 16.0


@dataclass(frozen=True)
class GridSpec:
    """Shape of a small-multiple grid.

    ``cell_titles``, when given, must name every wheel (row-major order).
    ``cell_options`` is advisory metadata for pipelines that render cells
    themselves (e.g. hiding coordinates in dense grids); composition of
    already-rendered documents does not consult it.
    """

    rows: int
    cols: int
    cell_titles: Sequence[str] | None = None
    cell_options: RenderOptions | None = None

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(
                f"grid must have positive shape, got {self.rows}x{self.cols}"
            )
        if self.cell_titles is not None:
            object.__setattr__(self, "cell_titles", tuple(self.cell_titles))


def dyad_row_spec(rows: int, cell_titles: Sequence[str] | None = None) -> GridSpec:
    """Preset for dyad series: each row holds the basic wheel plus the four
    dyad wheels (primary, secondary, tertiary, opposite)."""
    return GridSpec(rows=rows, cols=5, cell_titles=cell_titles)


def compose_grid(wheels: Sequence[VectorDoc], spec: GridSpec) -> VectorDoc:
    """Place wheels row-major into uniform cells.

    Wheels are embedded unscaled and centered in their cells, so aspect
    ratios are preserved exactly and a 1x1 grid is the input wheel modulo
    translation.  Trailing cells stay empty.
    """
    if not wheels:
        raise ValueError("compose_grid needs at least one wheel")
    if len(wheels) > spec.rows * spec.cols:
        raise GridOverflowError(
            f"{len(wheels)} wheels do not fit a {spec.rows}x{spec.cols} grid"
        )
    titles = spec.cell_titles
    if titles is not None and len(titles) != len(wheels):
        raise TitleMismatchError(
            f"{len(titles)} titles for {len(wheels)} wheels"
        )

    content_w = max(w.width for w in wheels)
    content_h = max(w.height for w in wheels)
    # pad = 5% of cell width per side  =>  cell = content / 0.9
    cell_w = content_w / (1.0 - 2.0 * _PAD_FRACTION)
    cell_h = content_h / (1.0 - 2.0 * _PAD_FRACTION)
    title_band = _TITLE_BAND if titles is not None else 0.0
    cell_h += title_band

    elements: list[Element] = []
    for index, wheel in enumerate(wheels):
        row, col = divmod(index, spec.cols)
        center_x = col * cell_w + cell_w / 2.0
        center_y = row * cell_h + title_band + (cell_h - title_band) / 2.0
        elements.append(
            GroupElement(
                id=f"cell-{index}",
                transform=f"translate({fmt(center_x)} {fmt(center_y)})",
                children=wheel.elements,
            )
        )
        if titles is not None:
            elements.append(
                TextElement(
                    id=f"cell-title-{index}",
                    x=center_x,
                    y=row * cell_h + title_band / 2.0,
                    content=titles[index],
                    font_size=_TITLE_FONT_SIZE,
                    font_weight="400",
                )
            )
    return VectorDoc(
        width=spec.cols * cell_w,
        height=spec.rows * cell_h,
        elements=tuple(elements),
        corner_origin=True,
    )
