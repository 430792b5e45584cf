import tracemalloc

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rundoc import (BinaryImage, CorruptRunError, InvalidArgumentError, RunMatrix, RunRow,
                    WorkCounter, black_pixel_count, canonicalize_padded, decode_image,
                    decode_row, encode_image, encode_row, scan_columns)
from rundoc.synthetic import SAMPLE_BITS, SAMPLE_RUNS, sparse_page

from oracles import runs_of


def bits(s):
    return [int(c) for c in s]


@pytest.mark.parametrize("text, runs", [
    ("00110000111110", (2, 2, 4, 5, 1)),
    ("10000000000000", (0, 1, 13)),
    ("00000", (5,)),
    ("11111", (0, 5)),
])
def test_encode_row(text, runs):
    assert encode_row(bits(text)).runs == runs


def test_encode_row_rejects_empty():
    with pytest.raises(InvalidArgumentError):
        encode_row([])


@pytest.mark.parametrize("runs, text", [
    ((2, 2, 4, 5, 1), "00110000111110"),
    ((14,), "0" * 14),
    ((0, 3), "111"),
])
def test_decode_row(runs, text):
    assert decode_row(RunRow(runs, len(text))) == bits(text)


@pytest.mark.parametrize("runs, width", [
    ((2, 0, 3), 5),      # interior zero
    ((2, 2, 0), 4),      # trailing zero
    ((2, 2), 5),         # sum != width
    ((), 3),
])
def test_non_canonical_rows_rejected(runs, width):
    with pytest.raises(CorruptRunError):
        RunRow(runs, width)


def test_sample_encoding_matches_printed_table(sample):
    expected = canonicalize_padded(SAMPLE_RUNS, 14)
    assert sample == expected
    assert sample.height == 13 and sample.width == 14
    assert decode_image(sample) == BinaryImage.from_strings(SAMPLE_BITS)


def test_one_pixel_image():
    m = encode_image(BinaryImage(np.zeros((1, 1))))
    assert m.as_lists() == [[1]]


@pytest.mark.parametrize("raw, expected", [
    ([14, 0, 0, 0, 0], [14]),
    ([2, 1, 4, 5, 2], [2, 1, 4, 5, 2]),
    ([1, 5, 8, 0, 0], [1, 5, 8]),
    ([0, 1, 13, 0, 0], [0, 1, 13]),
])
def test_canonicalize_padded(raw, expected):
    assert canonicalize_padded([raw], 14).as_lists() == [expected]


def test_canonicalize_padded_names_row():
    with pytest.raises(CorruptRunError) as info:
        canonicalize_padded([[14], [2, 0, 12]], 14)
    assert info.value.row == 2
    with pytest.raises(CorruptRunError) as info:
        canonicalize_padded([[14], [14], [3, 3]], 14)
    assert info.value.row == 3


def test_dimension_mismatch():
    with pytest.raises(InvalidArgumentError):
        RunMatrix(3, 2, (RunRow((3,), 3),))
    with pytest.raises(CorruptRunError):
        RunMatrix(3, 2, (RunRow((3,), 3), RunRow((4,), 4)))


def test_image_round_trip_random(corpus):
    for px, m in corpus:
        assert decode_image(m) == BinaryImage(px)
        assert encode_image(decode_image(m)) == m
        for row, line in zip(m.rows, px):
            assert list(row.runs) == runs_of(line)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 24).flatmap(
    lambda w: st.lists(st.lists(st.integers(0, 1), min_size=w, max_size=w), min_size=1, max_size=24)))
def test_round_trip_property(rows):
    img = BinaryImage(np.array(rows))
    m = encode_image(img)
    assert decode_image(m) == img
    for row in m.rows:  # canonical form survives re-validation
        RunRow(row.runs, row.width)


def test_scan_columns_sample(sample, sample_px):
    slices = list(scan_columns(sample))
    assert len(slices) == 14
    assert [s.column_index for s in slices] == list(range(1, 15))
    col1 = slices[0].bits
    assert [i + 1 for i, b in enumerate(col1) if b] == [7, 8]
    assert not any(slices[6].bits)
    assert np.array_equal(np.array([s.bits for s in slices]).T, sample_px)


def test_scan_columns_blank():
    slices = list(scan_columns(RunMatrix.blank(3, 3)))
    assert [s.bits for s in slices] == [(0, 0, 0)] * 3


def test_scan_columns_reconstructs_random(corpus):
    for px, m in corpus:
        cols = np.array([s.bits for s in scan_columns(m)], dtype=np.uint8).T
        assert np.array_equal(cols, px)


def test_black_pixel_count(sample, corpus):
    assert black_pixel_count(sample) == 66
    assert black_pixel_count(RunMatrix.blank(5, 4)) == 0
    assert black_pixel_count(RunMatrix.from_runs(7, [[0, 7]])) == 7
    for px, m in corpus:
        assert black_pixel_count(m) == int(px.sum())


def test_work_counter_visits_runs_only():
    m = encode_image(sparse_page(np.random.default_rng(3), 400, 600))
    c = WorkCounter()
    black_pixel_count(m, counter=c)
    assert c.visits == m.total_runs()
    assert c.visits <= 0.2 * m.width * m.height


def test_scan_columns_memory_is_per_row():
    m = encode_image(sparse_page(np.random.default_rng(4), 200, 3000))
    tracemalloc.start()
    try:
        for _ in scan_columns(m):
            pass
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    # two cursors per row plus one column slice; far below one byte per pixel
    assert peak < 100 * m.height + 20_000
    assert peak < m.width * m.height / 10
