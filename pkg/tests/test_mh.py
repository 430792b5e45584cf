import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rundoc import (CorruptStreamError, MhBitstream, MhError, RunMatrix, RunRow,
                    UnexpectedEndError, WidthMismatchError, mh_decode, mh_encode,
                    read_mh_file, write_mh_file)
from rundoc import t4tables
from rundoc.errors import ParseError
from rundoc.mh import encode_row_bits, run_codewords


# Codeword lengths per run length, written out from the T.4 tables
# independently of rundoc.t4tables.
def _lengths(spec):
    out = {}
    for lengths, bits in spec:
        for n in lengths:
            out[n] = bits
    return out


R = range
WHITE_LEN = _lengths([
    ([0], 8), ([1], 6), (R(2, 8), 4), (R(8, 12), 5), (R(12, 18), 6), (R(18, 29), 7),
    (R(29, 64), 8),
    ([64, 128], 5), ([192, 1664], 6), ([256], 7), (R(320, 641, 64), 8),
    (R(704, 1601, 64), 9), ([1728], 9),
    ([1792, 1856, 1920], 11), (R(1984, 2561, 64), 12),
])
BLACK_LEN = _lengths([
    ([0], 10), ([1], 3), ([2, 3], 2), ([4], 3), ([5, 6], 4), ([7], 5), ([8, 9], 6),
    (R(10, 13), 7), ([13, 14], 8), ([15], 9), (R(16, 19), 10), (R(19, 26), 11),
    (R(26, 64), 12),
    ([64], 10), (R(128, 449, 64), 12), (R(512, 1729, 64), 13),
    ([1792, 1856, 1920], 11), (R(1984, 2561, 64), 12),
])


def oracle_chunks(n):
    chunks = []
    while n > 2623:
        chunks.append(2560)
        n -= 2560
    if n >= 64:
        chunks.append(n // 64 * 64)
    chunks.append(n % 64)
    return chunks


def oracle_row_bits(runs):
    table = (WHITE_LEN, BLACK_LEN)
    return sum(table[i % 2][c] for i, r in enumerate(runs) for c in oracle_chunks(r))


def test_tables_match_independent_lengths():
    assert {k: len(v) for k, v in t4tables.WHITE_CODES.items()} == WHITE_LEN
    assert {k: len(v) for k, v in t4tables.BLACK_CODES.items()} == BLACK_LEN


def test_tables_prefix_free_and_complete():
    t4tables.verify_tables()
    for table in (t4tables.WHITE_CODES, t4tables.BLACK_CODES):
        words = sorted(list(table.values()) + [t4tables.EOL])
        for a in words:
            for b in words:
                assert a == b or not b.startswith(a)


def test_verify_tables_catches_prefix(monkeypatch):
    broken = dict(t4tables.WHITE_CODES)
    broken[5] = "011"  # prefix of white 2 ("0111")
    monkeypatch.setattr(t4tables, "WHITE_CODES", broken)
    with pytest.raises(RuntimeError, match="prefix"):
        t4tables.verify_tables()


def test_verify_tables_catches_missing(monkeypatch):
    broken = dict(t4tables.BLACK_CODES)
    del broken[640]
    monkeypatch.setattr(t4tables, "BLACK_CODES", broken)
    with pytest.raises(RuntimeError, match="missing"):
        t4tables.verify_tables()


def test_all_white_1728_row():
    words = run_codewords(1728, 0)
    assert words == [t4tables.WHITE_MAKEUP[1728], t4tables.WHITE_TERMINATING[0]]
    m = RunMatrix.blank(1728, 1)
    assert mh_decode(mh_encode(m)) == m


def test_long_runs_chunk_greedily():
    assert run_codewords(6000, 1) == [t4tables.EXTENDED_MAKEUP[2560]] * 2 + [
        t4tables.BLACK_MAKEUP[832], t4tables.BLACK_TERMINATING[48]]
    m = RunMatrix.from_runs(12000, [[0, 6000, 6000], [12000]])
    for eol in (False, True):
        assert mh_decode(mh_encode(m, eol)) == m


def test_single_run_rows_exhaustive():
    for w in range(1, 2624):
        for runs in ([w], [0, w]):
            row = RunRow(tuple(runs), w)
            bits = encode_row_bits(row)
            assert len(bits) == oracle_row_bits(runs)
            m = RunMatrix(w, 1, (row,))
            assert mh_decode(mh_encode(m)) == m


def test_row_bit_length_matches_oracle(corpus):
    for _, m in corpus:
        for row in m.rows:
            assert len(encode_row_bits(row)) == oracle_row_bits(row.runs)


def test_sample_round_trip(sample):
    for eol in (False, True):
        bs = mh_encode(sample, eol)
        assert mh_decode(bs) == sample
    # open row count with EOL framing
    bs = mh_encode(sample, True)
    assert mh_decode(MhBitstream(bs.data, 14, None, True)) == sample


def test_random_round_trip(corpus):
    for _, m in corpus:
        for eol in (False, True):
            assert mh_decode(mh_encode(m, eol)) == m


def test_no_eol_rows_are_byte_aligned(sample):
    bs = mh_encode(sample)
    expected = sum(-(-len(encode_row_bits(r)) // 8) for r in sample.rows)
    assert len(bs.data) == expected


def test_zero_bits_are_corrupt():
    with pytest.raises(CorruptStreamError) as info:
        mh_decode(MhBitstream(b"\x00\x00", 14, 1))
    assert info.value.bit_offset == 0


def test_truncated_stream():
    bs = mh_encode(RunMatrix.blank(14, 3))
    with pytest.raises(UnexpectedEndError):
        mh_decode(MhBitstream(bs.data[:-1], 14, 3))


def test_row_overshoot_is_width_mismatch():
    bs = mh_encode(RunMatrix.blank(20, 1))
    with pytest.raises(WidthMismatchError):
        mh_decode(MhBitstream(bs.data, 10, 1))


def test_eol_mode_requires_eol():
    bs = mh_encode(RunMatrix.blank(14, 1), eol_mode=False)
    with pytest.raises(CorruptStreamError):
        mh_decode(MhBitstream(bs.data, 14, 1, True))


def test_eol_mode_skips_fill_bits():
    row = RunRow((3, 4, 7), 14)
    bits = "0000" + t4tables.EOL + encode_row_bits(row)
    bits += "0" * (-len(bits) % 8)
    data = int(bits, 2).to_bytes(len(bits) // 8, "big")
    assert mh_decode(MhBitstream(data, 14, None, True)).rows == (row,)


def test_decoder_merges_zero_length_runs():
    # white 3, black 0, white 2: decodes to a single white run of 5
    bits = (t4tables.WHITE_TERMINATING[3] + t4tables.BLACK_TERMINATING[0]
            + t4tables.WHITE_TERMINATING[2])
    bits += "0" * (-len(bits) % 8)
    data = int(bits, 2).to_bytes(len(bits) // 8, "big")
    assert mh_decode(MhBitstream(data, 5, 1)).as_lists() == [[5]]


@settings(max_examples=300, deadline=None)
@given(data=st.binary(max_size=64), width=st.integers(1, 300), rows=st.integers(1, 8),
       eol=st.booleans())
def test_fuzz_never_crashes(data, width, rows, eol):
    try:
        m = mh_decode(MhBitstream(data, width, rows, eol))
    except MhError:
        return
    assert m.width == width and m.height == rows


def test_header_round_trip(sample):
    bs = mh_encode(sample, True)
    blob = write_mh_file(bs)
    assert len(blob) == 16 + len(bs.data)
    assert blob[:4] == b"MH1 "
    assert int.from_bytes(blob[4:8], "little") == 14
    assert int.from_bytes(blob[8:12], "little") == 13
    assert blob[12] == 1
    assert read_mh_file(blob) == bs


@pytest.mark.parametrize("blob", [b"MH1 ", b"MH2 " + bytes(12), b"MH1 " + bytes(8) + b"\x05" + bytes(3)])
def test_header_errors(blob):
    with pytest.raises(ParseError):
        read_mh_file(blob)
