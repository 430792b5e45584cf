"""Line, word and character segmentation on run rows."""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidArgumentError
from .features import COLUMN, ProfileCurve, hpp, vpp
from .rle import RunMatrix

LINE = "line"
WORD = "word"
CHARACTER = "character"
BLOCK = "block"
KINDS = (LINE, WORD, CHARACTER, BLOCK)


@dataclass(frozen=True)
class Segment:
    """Rectangle with 1-based inclusive bounds and an optional run payload."""

    kind: str
    row_start: int
    row_end: int
    col_start: int
    col_end: int
    payload: RunMatrix | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidArgumentError(f"unknown segment kind {self.kind!r}")
        if not (1 <= self.row_start <= self.row_end and 1 <= self.col_start <= self.col_end):
            raise InvalidArgumentError(f"bad segment bounds {self.bounds}")
        if self.payload is not None and (
                self.payload.height != self.height or self.payload.width != self.width):
            raise InvalidArgumentError(
                f"payload is {self.payload.width}x{self.payload.height}, "
                f"segment is {self.width}x{self.height}")

    @property
    def bounds(self) -> tuple[int, int, int, int]:
        return (self.row_start, self.row_end, self.col_start, self.col_end)

    @property
    def height(self) -> int:
        return self.row_end - self.row_start + 1

    @property
    def width(self) -> int:
        return self.col_end - self.col_start + 1


def _spans(values: Sequence[int], threshold: int = 0) -> list[tuple[int, int]]:
    """Maximal 1-based index ranges whose values exceed ``threshold``."""
    spans = []
    start = None
    for i, v in enumerate(values, start=1):
        if v > threshold:
            if start is None:
                start = i
        elif start is not None:
            spans.append((start, i - 1))
            start = None
    if start is not None:
        spans.append((start, len(values)))
    return spans


def segment_lines(m: RunMatrix, blank_threshold: int = 0, with_payload: bool = False) -> list[Segment]:
    """Text lines as maximal row ranges whose black count exceeds ``blank_threshold``.

    A blank row is a single white run, so with the default threshold the
    profile minima are exactly the rows without ink.
    """
    if blank_threshold < 0:
        raise InvalidArgumentError("blank_threshold must be >= 0")
    lines = []
    for r0, r1 in _spans(vpp(m).values, blank_threshold):
        payload = m.select_rows(r0, r1) if with_payload else None
        lines.append(Segment(LINE, r0, r1, 1, m.width, payload))
    return lines


def line_gaps(lines: Sequence[Segment]) -> list[int]:
    """Blank rows between consecutive lines."""
    return [b.row_start - a.row_end - 1 for a, b in zip(lines, lines[1:])]


def column_occupancy(m: RunMatrix, rows: tuple[int, int]) -> ProfileCurve:
    """Black pixels per column within the 1-based inclusive row range ``rows``."""
    start, end = rows
    if not 1 <= start <= end <= m.height:
        raise InvalidArgumentError(f"row range {start}..{end} outside 1..{m.height}")
    return ProfileCurve(COLUMN, hpp(m.select_rows(start, end)).values)


def ink_gaps(occupancy: Sequence[int]) -> list[int]:
    """Widths of the blank column gaps strictly between inked columns."""
    spans = _spans(occupancy)
    return [b[0] - a[1] - 1 for a, b in zip(spans, spans[1:])]


def auto_word_space(occupancy: Sequence[int]) -> float:
    """Twice the median inter-character gap; 1 when the line has no gaps."""
    gaps = ink_gaps(occupancy)
    if not gaps:
        return 1.0
    return 2.0 * statistics.median(gaps)


def segment_words_chars(m: RunMatrix, line: Segment, word_space_threshold: float | None = None
                        ) -> tuple[list[Segment], list[Segment]]:
    """Split a line into words and characters by blank-column gaps.

    Scanning left to right, a gap narrower than ``word_space_threshold``
    separates two characters of the same word; a wider one starts a new
    word.  ``None`` picks :func:`auto_word_space` for this line.
    """
    occ = column_occupancy(m, (line.row_start, line.row_end)).values
    occ = occ[line.col_start - 1:line.col_end]
    if word_space_threshold is None:
        word_space_threshold = auto_word_space(occ)
    if word_space_threshold < 1:
        raise InvalidArgumentError("word_space_threshold must be >= 1")
    off = line.col_start - 1
    r0, r1 = line.row_start, line.row_end
    chars = [Segment(CHARACTER, r0, r1, a + off, b + off) for a, b in _spans(occ)]
    words = []
    if chars:
        w_start = chars[0].col_start
        for prev, cur in zip(chars, chars[1:]):
            if cur.col_start - prev.col_end - 1 >= word_space_threshold:
                words.append(Segment(WORD, r0, r1, w_start, prev.col_end))
                w_start = cur.col_start
        words.append(Segment(WORD, r0, r1, w_start, chars[-1].col_end))
    return words, chars
