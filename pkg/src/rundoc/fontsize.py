"""Font size detection from text-line height.

A least-squares line maps line height (pixels) to font size (points);
detection evaluates the line and snaps to the nearest trained size.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateFitError, InvalidArgumentError
from .rle import RunMatrix
from .segmentation import segment_lines


@dataclass(frozen=True)
class LineFeature:
    line_height: int
    ascender_height: int | None = None

    def __post_init__(self):
        if self.line_height < 1:
            raise InvalidArgumentError("line_height must be >= 1")
        if self.ascender_height is not None and not 0 <= self.ascender_height <= self.line_height:
            raise InvalidArgumentError("ascender_height must lie in [0, line_height]")


@dataclass(frozen=True)
class FontSizeModel:
    slope: float
    intercept: float
    known_sizes: tuple[float, ...]
    training_count: int

    def __post_init__(self):
        if not self.known_sizes:
            raise InvalidArgumentError("known_sizes must not be empty")
        object.__setattr__(self, "known_sizes", tuple(sorted(set(self.known_sizes))))

    def predict(self, line_height: float) -> float:
        return self.slope * line_height + self.intercept


def fit(samples: Iterable[tuple[LineFeature, float]]) -> FontSizeModel:
    """Ordinary least squares of font size on line height."""
    samples = list(samples)
    if len(samples) < 2:
        raise DegenerateFitError("need at least two samples")
    xs = [float(f.line_height) for f, _ in samples]
    ys = [float(s) for _, s in samples]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    if sxx == 0:
        raise DegenerateFitError("all training line heights are equal")
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    return FontSizeModel(slope, my - slope * mx, tuple(s for _, s in samples), n)


def detect(model: FontSizeModel, feature: LineFeature) -> tuple[float, float]:
    """Return ``(predicted, detected)``; ties between two sizes go to the smaller."""
    predicted = model.predict(feature.line_height)
    detected = min(model.known_sizes, key=lambda s: (round(abs(s - predicted), 9), s))
    return predicted, detected


def aggregate_max(samples: Iterable[tuple[LineFeature, float]]) -> list[tuple[LineFeature, float]]:
    """Collapse training samples to the tallest line seen for each font size.

    Lines without ascenders or descenders come out shorter than full lines
    of the same size; keeping the maximum per size removes that bias.
    """
    best: dict[float, LineFeature] = {}
    for feat, size in samples:
        cur = best.get(size)
        if cur is None or feat.line_height > cur.line_height:
            best[size] = feat
    return [(best[s], s) for s in sorted(best)]


def extract_line_features(m: RunMatrix, blank_threshold: int = 0) -> list[LineFeature]:
    return [LineFeature(seg.height) for seg in segment_lines(m, blank_threshold)]


def accuracy(model: FontSizeModel, samples: Sequence[tuple[LineFeature, float]]) -> float:
    if not samples:
        raise InvalidArgumentError("no samples to score")
    hits = sum(detect(model, f)[1] == s for f, s in samples)
    return hits / len(samples)


def confusion(model: FontSizeModel, samples: Sequence[tuple[LineFeature, float]]
              ) -> dict[float, dict[float, int]]:
    """Counts of detected size per true size."""
    table: dict[float, dict[float, int]] = defaultdict(lambda: defaultdict(int))
    for f, s in samples:
        table[s][detect(model, f)[1]] += 1
    return {s: dict(sorted(row.items())) for s, row in sorted(table.items())}
