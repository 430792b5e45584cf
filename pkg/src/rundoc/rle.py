"""Run-length data model for binary document images.

Every row of a document is stored as alternating white/black run lengths,
always starting with a white run (possibly of length zero when the row
begins with ink).  Pixels use 0 for white (background) and 1 for black.

Only :func:`decode_row` and :func:`decode_image` ever expand runs back into
pixels; they exist for I/O and test oracles.  Analysis code works on runs,
and vertical analyses go through :func:`scan_columns`, which walks all rows
in lock step with one cursor per row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CorruptRunError, InvalidArgumentError

WHITE = 0
BLACK = 1


class WorkCounter:
    """Tally of run elements visited by an analysis pass.

    Pass an instance as ``counter=`` to the functions that accept one.
    """

    def __init__(self):
        self.visits = 0

    def __repr__(self):
        return f"WorkCounter(visits={self.visits})"


@dataclass(frozen=True)
class BinaryImage:
    """Explicit pixel raster, shape ``(height, width)``, values 0/1."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.array(self.pixels, dtype=np.uint8, copy=True)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidArgumentError(
                f"pixels must be a non-empty 2-D array, got shape {arr.shape}")
        if arr.size and arr.max() > 1:
            raise InvalidArgumentError("pixels must be 0 or 1")
        arr.flags.writeable = False
        object.__setattr__(self, "pixels", arr)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BinaryImage":
        """Build from rows written as ``"0011..."`` strings."""
        return cls(np.array([[int(c) for c in line] for line in lines], dtype=np.uint8))

    def __eq__(self, other):
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)

    def __hash__(self):
        return hash((self.pixels.shape, self.pixels.tobytes()))


def _check_row(runs: tuple[int, ...], width: int, row=None) -> None:
    if not runs:
        raise CorruptRunError("empty run row", row)
    if runs[0] < 0:
        raise CorruptRunError(f"negative run {runs[0]}", row)
    for r in runs[1:]:
        if r <= 0:
            raise CorruptRunError(f"zero or negative run after index 0: {list(runs)}", row)
    total = sum(runs)
    if total != width:
        raise CorruptRunError(f"runs sum to {total}, expected width {width}", row)


@dataclass(frozen=True)
class RunRow:
    """One canonical run-length row; even indices white, odd indices black."""

    runs: tuple[int, ...]
    width: int

    def __post_init__(self):
        runs = tuple(int(r) for r in self.runs)
        object.__setattr__(self, "runs", runs)
        if self.width < 1:
            raise InvalidArgumentError(f"width must be >= 1, got {self.width}")
        _check_row(runs, self.width)

    @classmethod
    def blank(cls, width: int) -> "RunRow":
        return cls((width,), width)

    def __len__(self):
        return len(self.runs)

    def black_runs(self) -> tuple[int, ...]:
        return self.runs[1::2]

    def white_runs(self) -> tuple[int, ...]:
        return tuple(r for r in self.runs[0::2] if r > 0)


@dataclass(frozen=True)
class RunMatrix:
    """Whole binary image as a stack of canonical :class:`RunRow` objects."""

    width: int
    height: int
    rows: tuple[RunRow, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if self.height < 1 or self.width < 1:
            raise InvalidArgumentError(
                f"matrix dimensions must be >= 1, got {self.width}x{self.height}")
        if len(rows) != self.height:
            raise InvalidArgumentError(
                f"expected {self.height} rows, got {len(rows)}")
        for i, row in enumerate(rows, start=1):
            if row.width != self.width:
                raise CorruptRunError(
                    f"width {row.width} differs from matrix width {self.width}", i)

    @classmethod
    def from_runs(cls, width: int, runs: Iterable[Sequence[int]]) -> "RunMatrix":
        """Build from nested run lists, reporting the offending row on error."""
        rows = []
        for i, r in enumerate(runs, start=1):
            r = tuple(int(x) for x in r)
            _check_row(r, width, i)
            rows.append(RunRow(r, width))
        return cls(width, len(rows), tuple(rows))

    @classmethod
    def blank(cls, width: int, height: int) -> "RunMatrix":
        row = RunRow.blank(width)
        return cls(width, height, (row,) * height)

    def as_lists(self) -> list[list[int]]:
        return [list(r.runs) for r in self.rows]

    def total_runs(self) -> int:
        return sum(len(r.runs) for r in self.rows)

    def select_rows(self, start: int, end: int) -> "RunMatrix":
        """Rows ``start..end`` (1-based, inclusive) as a new matrix."""
        if not 1 <= start <= end <= self.height:
            raise InvalidArgumentError(
                f"row range {start}..{end} outside 1..{self.height}")
        return RunMatrix(self.width, end - start + 1, self.rows[start - 1:end])


@dataclass(frozen=True)
class ColumnSlice:
    column_index: int
    bits: tuple[int, ...]


def encode_row(bits: Sequence[int]) -> RunRow:
    """Run-length encode one row of 0/1 pixels.

    >>> encode_row([0, 0, 1, 1, 0]).runs
    (2, 2, 1)
    """
    bits = [int(b) for b in bits]
    if not bits:
        raise InvalidArgumentError("cannot encode an empty row")
    runs = []
    color = WHITE
    length = 0
    for b in bits:
        if b not in (0, 1):
            raise InvalidArgumentError(f"pixel value {b} is not 0 or 1")
        if b == color:
            length += 1
        else:
            runs.append(length)
            color = b
            length = 1
    runs.append(length)
    return RunRow(tuple(runs), len(bits))


def decode_row(row: RunRow) -> list[int]:
    if not isinstance(row, RunRow):
        raise InvalidArgumentError("decode_row expects a RunRow")
    _check_row(row.runs, row.width)
    out = []
    for i, r in enumerate(row.runs):
        out.extend([i & 1] * r)
    return out


def encode_image(img: BinaryImage) -> RunMatrix:
    rows = tuple(encode_row(line) for line in img.pixels.tolist())
    return RunMatrix(img.width, img.height, rows)


def decode_image(m: RunMatrix) -> BinaryImage:
    return BinaryImage(np.array([decode_row(r) for r in m.rows], dtype=np.uint8))


def canonicalize_padded(raw: Sequence[Sequence[int]], width: int) -> RunMatrix:
    """Strip the trailing zero padding of a rectangular run table.

    Zeros are legal only as the first (white) run or as trailing padding;
    an interior zero or a row sum different from ``width`` is corrupt.
    """
    rows = []
    for i, raw_row in enumerate(raw, start=1):
        runs = [int(x) for x in raw_row]
        while len(runs) > 1 and runs[-1] == 0:
            runs.pop()
        _check_row(tuple(runs), width, i)
        rows.append(RunRow(tuple(runs), width))
    return RunMatrix(width, len(rows), tuple(rows))


def scan_columns(m: RunMatrix, counter: WorkCounter | None = None) -> Iterator[ColumnSlice]:
    """Yield each pixel column of ``m``, left to right, without decoding.

    Every row keeps a cursor (current run index) and the count left in that
    run; each step pops one pixel off every row.  State is two lists of
    length ``height``.
    """
    rows = [r.runs for r in m.rows]
    idx = [0] * m.height
    left = [0] * m.height
    for i, runs in enumerate(rows):
        # a leading zero white run is consumed before the first pop
        k = 0
        while runs[k] == 0:
            k += 1
        idx[i] = k
        left[i] = runs[k]
    for col in range(1, m.width + 1):
        bits = []
        for i, runs in enumerate(rows):
            k = idx[i]
            bits.append(k & 1)
            n = left[i] - 1
            if n == 0 and k + 1 < len(runs):
                k += 1
                idx[i] = k
                n = runs[k]
                if counter is not None:
                    counter.visits += 1
            left[i] = n
        yield ColumnSlice(col, tuple(bits))


def black_pixel_count(m: RunMatrix, counter: WorkCounter | None = None) -> int:
    total = 0
    for row in m.rows:
        black = row.runs[1::2]
        if counter is not None:
            counter.visits += len(row.runs)
        total += sum(black)
    return total
