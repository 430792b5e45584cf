"""Synthetic binary pages for tests and demos.

All generators take a ``numpy.random.Generator`` so results are
reproducible from a seed.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .rle import BinaryImage

SAMPLE_BITS = (
    "00000000000000",
    "00110000111110",
    "01111000111110",
    "01111000111110",
    "01111000111110",
    "00110000000000",
    "10000000000000",
    "10000000000000",
    "00100001111100",
    "01110001111100",
    "01111001111100",
    "01111100000000",
    "00000000000000",
)

SAMPLE_RUNS = (
    (14, 0, 0, 0, 0),
    (2, 2, 4, 5, 1),
    (1, 4, 3, 5, 1),
    (1, 4, 3, 5, 1),
    (1, 4, 3, 5, 1),
    (2, 2, 10, 0, 0),
    (0, 1, 13, 0, 0),
    (0, 1, 13, 0, 0),
    (2, 1, 4, 5, 2),
    (1, 3, 3, 5, 2),
    (1, 4, 2, 5, 2),
    (1, 5, 8, 0, 0),
    (14, 0, 0, 0, 0),
)


def sample_page() -> BinaryImage:
    """The 13 x 14 sample document used throughout the examples."""
    return BinaryImage.from_strings(SAMPLE_BITS)


def random_image(rng: np.random.Generator, height: int, width: int,
                 density: float = 0.5) -> BinaryImage:
    return BinaryImage((rng.random((height, width)) < density).astype(np.uint8))


def blobby_image(rng: np.random.Generator, height: int, width: int,
                 density: float = 0.3) -> BinaryImage:
    """Noise with horizontal and vertical structure: runs longer than one pixel,
    some blank rows and columns."""
    img = rng.random((height, width)) < density
    img |= np.roll(img, 1, axis=1) & (rng.random((height, width)) < 0.5)
    img &= rng.random((height, 1)) > 0.2
    img &= rng.random((1, width)) > 0.15
    return BinaryImage(img.astype(np.uint8))


def _glyph(rng: np.random.Generator, height: int, width: int) -> np.ndarray:
    g = rng.random((height, width)) < 0.55
    # a stem guarantees every glyph column range and the full height carry ink
    g[:, rng.integers(width)] = True
    g[0, :] |= ~g[0, :].any()
    return g


def text_line(rng: np.random.Generator, height: int, width: int,
              char_width: tuple[int, int] = (2, 6), char_gap: tuple[int, int] = (1, 2),
              word_gap: tuple[int, int] = (4, 7), margin: int = 2) -> np.ndarray:
    """One line of glyph boxes: ink touches the top and bottom rows."""
    line = np.zeros((height, width), dtype=bool)
    x = margin
    while True:
        n_chars = int(rng.integers(1, 6))
        for _ in range(n_chars):
            cw = int(rng.integers(char_width[0], char_width[1] + 1))
            if x + cw > width - margin:
                return line
            h = height if rng.random() < 0.4 else int(rng.integers(max(1, height // 2), height + 1))
            top = height - h if rng.random() < 0.5 else 0
            line[top:top + h, x:x + cw] = _glyph(rng, h, cw)
            x += cw + int(rng.integers(char_gap[0], char_gap[1] + 1))
        x += int(rng.integers(word_gap[0], word_gap[1] + 1))
    return line


def text_page(rng: np.random.Generator, width: int, line_heights: Sequence[int],
              line_gap: tuple[int, int] = (2, 5), margin: int = 2, **line_kw) -> BinaryImage:
    """Page of text lines with the given heights, separated by blank rows.

    Every line's first row and last row carry ink, so each segments to
    exactly its drawn height.
    """
    blocks = [np.zeros((margin, width), dtype=bool)]
    for i, h in enumerate(line_heights):
        line = text_line(rng, h, width, **line_kw)
        # pin the extent in case random glyphs missed the top or bottom row
        line[0, margin] = line[-1, margin] = True
        blocks.append(line)
        gap = margin if i == len(line_heights) - 1 else int(rng.integers(line_gap[0], line_gap[1] + 1))
        blocks.append(np.zeros((gap, width), dtype=bool))
    return BinaryImage(np.vstack(blocks).astype(np.uint8))


def sparse_page(rng: np.random.Generator, height: int, width: int,
                target_density: float = 0.04) -> BinaryImage:
    """Text-like page whose ink density stays at or below ``target_density``."""
    img = np.zeros((height, width), dtype=bool)
    y = 4
    while y + 12 < height:
        line = text_line(rng, 10, width, char_width=(3, 7), char_gap=(2, 3), word_gap=(8, 14))
        img[y:y + 10] = line
        y += 10 + int(rng.integers(10, 20))
    # thin the ink until the density target is met
    while img.mean() > target_density:
        img &= rng.random(img.shape) < 0.8
    return BinaryImage(img.astype(np.uint8))


def font_size_pages(rng: np.random.Generator, sizes: Sequence[float] = (8, 12, 16, 24),
                    lines_per_size: int = 100, band_width: float = 10.0,
                    px_per_point: float = 3.0, page_width: int = 80
                    ) -> list[tuple[BinaryImage, list[float]]]:
    """One page per font size with line heights drawn around ``px_per_point * size``.

    Heights get uniform noise of +/-10% of ``band_width``.  Returns
    ``(page, sizes_of_each_line)`` pairs.
    """
    pages = []
    for size in sizes:
        centre = px_per_point * size
        noise = rng.uniform(-0.1, 0.1, size=lines_per_size) * band_width
        heights = [max(1, int(round(centre + n))) for n in noise]
        pages.append((text_page(rng, page_width, heights), [size] * lines_per_size))
    return pages
