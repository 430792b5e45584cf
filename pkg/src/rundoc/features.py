"""Features computed straight from run rows.

Naming follows the document-analysis convention used throughout this
package: the *vertical* projection profile (``vpp``) has one value per
row, the *horizontal* projection profile (``hpp``) one value per column.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidArgumentError
from .rle import ColumnSlice, RunMatrix, RunRow, WorkCounter, scan_columns

ROW = "row"
COLUMN = "column"

BLACK = "black"
WHITE = "white"
COMBINED = "combined"
COLORS = (BLACK, WHITE, COMBINED)

#: Lower edge of each logarithmic run-length class; the last class is open.
LOG_BIN_EDGES = (1, 2, 3, 5, 9, 17, 33, 65, 129)
LOG_BIN_LABELS = ("1", "2", "3-4", "5-8", "9-16", "17-32", "33-64", "65-128", "129+")

#: Identifier written next to entropy values in serialized output.
ENTROPY_FORMULA = "ceq-seq-binary-v1"


@dataclass(frozen=True)
class ProfileCurve:
    direction: str
    values: tuple[int, ...]

    def __len__(self):
        return len(self.values)

    def total(self) -> int:
        return sum(self.values)


@dataclass(frozen=True)
class RunHistogram:
    color: str
    counts: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class LogHistogram:
    color: str
    bins: tuple[int, ...]

    def total(self) -> int:
        return sum(self.bins)

    def as_dict(self) -> dict[str, int]:
        return dict(zip(LOG_BIN_LABELS, self.bins))


@dataclass(frozen=True)
class TransitionStats:
    """0->1 (positive) and 1->0 (negative) transitions along one line.

    Positions are 1-based pixel indices of the first pixel after the
    transition.  A line that starts with ink has a positive transition at
    position 1.
    """

    line_length: int
    pos_positions: tuple[int, ...]
    neg_positions: tuple[int, ...]

    @property
    def pos_count(self) -> int:
        return len(self.pos_positions)

    @property
    def neg_count(self) -> int:
        return len(self.neg_positions)

    def positions(self) -> tuple[int, ...]:
        return tuple(sorted(self.pos_positions + self.neg_positions))


@dataclass(frozen=True)
class EntropyReport:
    direction: str
    ceq: tuple[float, ...]
    seq: tuple[float, ...]
    formula: str = ENTROPY_FORMULA

    @property
    def ceq_total(self) -> float:
        return math.fsum(self.ceq)

    @property
    def seq_total(self) -> float:
        return math.fsum(self.seq)


def vpp(m: RunMatrix, counter: WorkCounter | None = None) -> ProfileCurve:
    """Black pixels per row: the sum of each row's black runs."""
    values = []
    for row in m.rows:
        black = row.runs[1::2]
        if counter is not None:
            counter.visits += len(black)
        values.append(sum(black))
    return ProfileCurve(ROW, tuple(values))


def hpp(m: RunMatrix) -> ProfileCurve:
    """Black pixels per column, accumulated while popping columns off the runs."""
    return ProfileCurve(COLUMN, tuple(sum(s.bits) for s in scan_columns(m)))


def run_histogram(m: RunMatrix, color: str = BLACK) -> RunHistogram:
    if color not in COLORS:
        raise InvalidArgumentError(f"color must be one of {COLORS}, got {color!r}")
    counts: Counter[int] = Counter()
    for row in m.rows:
        runs = row.runs
        if color in (BLACK, COMBINED):
            counts.update(runs[1::2])
        if color in (WHITE, COMBINED):
            counts.update(r for r in runs[0::2] if r)
    return RunHistogram(color, dict(sorted(counts.items())))


def _log_bin_index(length: int) -> int:
    # class k holds lengths 2**(k-1)+1 .. 2**k, with 1 and 2 on their own
    return min((length - 1).bit_length(), len(LOG_BIN_EDGES) - 1)


def log_bin(h: RunHistogram) -> LogHistogram:
    bins = [0] * len(LOG_BIN_EDGES)
    for length, freq in h.counts.items():
        if length < 1:
            raise InvalidArgumentError(f"run length {length} cannot be binned")
        bins[_log_bin_index(length)] += freq
    return LogHistogram(h.color, tuple(bins))


def row_transitions(row: RunRow) -> TransitionStats:
    """Transitions of one row read directly off its run boundaries.

    Every run after the first starts a transition; its position is the sum
    of the preceding runs plus one.  Runs at odd index start black
    (positive transitions), runs at even index start white (negative).
    """
    pos, neg = [], []
    offset = 0
    runs = row.runs
    for i in range(1, len(runs)):
        offset += runs[i - 1]
        (pos if i & 1 else neg).append(offset + 1)
    return TransitionStats(row.width, tuple(pos), tuple(neg))


def _column_transitions(s: ColumnSlice) -> TransitionStats:
    pos, neg = [], []
    prev = 0
    for y, b in enumerate(s.bits, start=1):
        if b != prev:
            (pos if b else neg).append(y)
            prev = b
    return TransitionStats(len(s.bits), tuple(pos), tuple(neg))


def column_transitions(m: RunMatrix) -> list[TransitionStats]:
    return [_column_transitions(s) for s in scan_columns(m)]


def _plogp(p: float) -> float:
    return -p * math.log2(p) if p > 0 else 0.0


def binary_entropy(p: float) -> float:
    return _plogp(p) + _plogp(1.0 - p)


def ceq(t: TransitionStats) -> float:
    """Entropy of transition counts relative to the line length."""
    n = t.line_length
    return _plogp(t.pos_count / n) + _plogp(t.neg_count / n)


def seq(t: TransitionStats) -> float:
    """Sum of binary entropies of each transition's relative position."""
    n = t.line_length
    return math.fsum(binary_entropy(x / n) for x in t.positions())


def _report(direction: str, stats: Iterable[TransitionStats]) -> EntropyReport:
    c, s = [], []
    for t in stats:
        c.append(ceq(t))
        s.append(seq(t))
    return EntropyReport(direction, tuple(c), tuple(s))


def entropy_horizontal(m: RunMatrix) -> EntropyReport:
    return _report("horizontal", (row_transitions(r) for r in m.rows))


def entropy_vertical(m: RunMatrix) -> EntropyReport:
    # generator keeps only one column slice alive at a time
    return _report("vertical", (_column_transitions(s) for s in scan_columns(m)))


def transitions(m: RunMatrix, direction: str = "horizontal") -> Sequence[TransitionStats]:
    if direction == "horizontal":
        return [row_transitions(r) for r in m.rows]
    if direction == "vertical":
        return column_transitions(m)
    raise InvalidArgumentError(f"direction must be horizontal or vertical, got {direction!r}")
