import numpy as np
import pytest

from rundoc import (BinaryImage, InvalidArgumentError, RunMatrix, column_occupancy,
                    encode_image, hpp, segment_lines, segment_words_chars)
from rundoc.segmentation import Segment, auto_word_space, ink_gaps, line_gaps
from rundoc.synthetic import text_page

import oracles


def test_sample_single_line(sample):
    lines = segment_lines(sample)
    assert [(s.row_start, s.row_end, s.col_start, s.col_end) for s in lines] == [(2, 12, 1, 14)]
    assert lines[0].kind == "line"


def test_two_lines_and_gap():
    rows = ["111", "010", "111", "000", "000", "100", "111", "001"]
    m = encode_image(BinaryImage.from_strings(rows))
    lines = segment_lines(m)
    assert [(s.row_start, s.row_end) for s in lines] == [(1, 3), (6, 8)]
    assert line_gaps(lines) == [2]


def test_blank_page_has_no_lines():
    assert segment_lines(RunMatrix.blank(10, 10)) == []


def test_blank_threshold_drops_specks():
    rows = ["0100000", "1111111", "0000000", "0000010"]
    m = encode_image(BinaryImage.from_strings(rows))
    assert [(s.row_start, s.row_end) for s in segment_lines(m, 1)] == [(2, 2)]
    with pytest.raises(InvalidArgumentError):
        segment_lines(m, -1)


def test_column_occupancy(sample):
    occ = column_occupancy(sample, (2, 12)).values
    assert [j for j, v in enumerate(occ, start=1) if v == 0] == [7, 14]
    assert column_occupancy(sample, (1, 13)) == hpp(sample)
    assert set(column_occupancy(sample, (13, 13)).values) == {0}
    with pytest.raises(InvalidArgumentError):
        column_occupancy(sample, (0, 3))
    with pytest.raises(InvalidArgumentError):
        column_occupancy(sample, (5, 14))


def test_column_occupancy_matches_crop(corpus):
    for px, m in corpus[:50]:
        r0, r1 = 1, max(1, m.height // 2)
        assert list(column_occupancy(m, (r0, r1)).values) == oracles.hpp(px[r0 - 1:r1])


def test_words_chars_sample(sample):
    line = segment_lines(sample)[0]
    words, chars = segment_words_chars(sample, line, 2)
    assert [(c.col_start, c.col_end) for c in chars] == [(1, 6), (8, 13)]
    assert [(w.col_start, w.col_end) for w in words] == [(1, 13)]
    assert all((c.row_start, c.row_end) == (2, 12) for c in chars)
    words, _ = segment_words_chars(sample, line, 1)
    assert [(w.col_start, w.col_end) for w in words] == [(1, 6), (8, 13)]


def test_solid_block_line():
    m = encode_image(BinaryImage(np.pad(np.ones((4, 5)), 1)))
    line = segment_lines(m)[0]
    words, chars = segment_words_chars(m, line, 3)
    assert len(words) == len(chars) == 1
    assert (chars[0].col_start, chars[0].col_end) == (2, 6)


def test_empty_line_region():
    m = RunMatrix.blank(6, 3)
    seg = Segment("line", 1, 3, 1, 6)
    assert segment_words_chars(m, seg, 2) == ([], [])


def test_auto_word_space():
    occ = [1, 0, 1, 0, 1, 0, 0, 0, 0, 1]
    assert ink_gaps(occ) == [1, 1, 4]
    assert auto_word_space(occ) == 2.0
    assert auto_word_space([0, 1, 1, 0]) == 1.0


def test_segment_invariants():
    with pytest.raises(InvalidArgumentError):
        Segment("line", 3, 2, 1, 1)
    with pytest.raises(InvalidArgumentError):
        Segment("blob", 1, 1, 1, 1)
    with pytest.raises(InvalidArgumentError):
        Segment("block", 1, 2, 1, 2, RunMatrix.blank(3, 2))


def synthetic_pages(n=100, seed=21):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        heights = [int(h) for h in rng.integers(3, 12, size=int(rng.integers(1, 6)))]
        yield text_page(rng, int(rng.integers(20, 90)), heights)


def test_pages_match_pixel_oracle():
    for img in synthetic_pages():
        px = img.pixels
        m = encode_image(img)
        lines = segment_lines(m)
        assert [(s.row_start, s.row_end) for s in lines] == oracles.segment_lines(px)
        for line in lines:
            for threshold in (1, 2, 3, 5):
                words, chars = segment_words_chars(m, line, threshold)
                ow, oc = oracles.segment_words_chars(px, line.row_start, line.row_end, threshold)
                assert [(w.col_start, w.col_end) for w in words] == ow
                assert [(c.col_start, c.col_end) for c in chars] == oc
                # partition and nesting
                occ = px[line.row_start - 1:line.row_end].sum(axis=0)
                covered = set()
                for c in chars:
                    covered |= set(range(c.col_start, c.col_end + 1))
                assert covered == {j + 1 for j in np.nonzero(occ)[0]}
                for a, b in zip(chars, chars[1:]):
                    assert a.col_end < b.col_start
                for c in chars:
                    assert sum(w.col_start <= c.col_start and c.col_end <= w.col_end
                               for w in words) == 1


def test_resegmenting_line_payload_is_idempotent():
    for img in list(synthetic_pages(20, seed=5)):
        m = encode_image(img)
        for line in segment_lines(m, with_payload=True):
            again = segment_lines(line.payload)
            assert len(again) == 1
            assert (again[0].row_start, again[0].row_end) == (1, line.payload.height)
