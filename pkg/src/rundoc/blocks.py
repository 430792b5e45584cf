"""Rectangular block extraction and density/entropy characterization."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgumentError
from .features import entropy_horizontal
from .rle import RunMatrix, RunRow, black_pixel_count
from .segmentation import BLOCK, Segment


@dataclass(frozen=True)
class BlockCharacterization:
    """Absolute features of a block and their ratios to the whole document.

    A ratio is ``None`` when the document value is zero.
    """

    black_count: int
    area: int
    density: float
    ceq_total: float
    seq_total: float
    relative_density: float | None
    relative_ceq: float | None
    relative_seq: float | None

    FIELDS = ("black_count", "area", "density", "ceq_total", "seq_total",
              "relative_density", "relative_ceq", "relative_seq")

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.FIELDS}


def clip_row(runs: tuple[int, ...], col_start: int, col_end: int) -> RunRow:
    """Clip a run row to columns ``col_start..col_end`` (1-based, inclusive)."""
    out: list[int] = []
    lo, hi = col_start - 1, col_end  # half-open pixel interval
    x = 0
    for i, r in enumerate(runs):
        a, b = max(x, lo), min(x + r, hi)
        x += r
        if a < b:
            n = b - a
            color = i & 1
            if not out:
                out.extend([n] if color == 0 else [0, n])
            else:
                out.append(n)
        if x >= hi:
            break
    return RunRow(tuple(out), col_end - col_start + 1)


def extract_block(m: RunMatrix, rect: tuple[int, int, int, int]) -> Segment:
    """Cut ``rect = (row_start, row_end, col_start, col_end)`` out of ``m`` by splitting runs."""
    r0, r1, c0, c1 = rect
    if not (1 <= r0 <= r1 <= m.height and 1 <= c0 <= c1 <= m.width):
        raise InvalidArgumentError(
            f"rect {rect} outside document of {m.height} rows x {m.width} columns")
    rows = tuple(clip_row(row.runs, c0, c1) for row in m.rows[r0 - 1:r1])
    payload = RunMatrix(c1 - c0 + 1, r1 - r0 + 1, rows)
    return Segment(BLOCK, r0, r1, c0, c1, payload)


def _ratio(part: float, whole: float) -> float | None:
    return part / whole if whole > 0 else None


def characterize(block: RunMatrix, whole: RunMatrix) -> BlockCharacterization:
    area = block.width * block.height
    if area == 0:
        raise InvalidArgumentError("block has zero area")
    black = black_pixel_count(block)
    density = black / area
    ent = entropy_horizontal(block)
    doc_density = black_pixel_count(whole) / (whole.width * whole.height)
    doc_ent = entropy_horizontal(whole)
    return BlockCharacterization(
        black_count=black,
        area=area,
        density=density,
        ceq_total=ent.ceq_total,
        seq_total=ent.seq_total,
        relative_density=_ratio(density, doc_density),
        relative_ceq=_ratio(ent.ceq_total, doc_ent.ceq_total),
        relative_seq=_ratio(ent.seq_total, doc_ent.seq_total),
    )
