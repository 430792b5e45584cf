"""Modified Huffman (CCITT T.4, one-dimensional) coding of run rows.

Each row is written as alternating white/black codewords starting with
white.  Runs of 64 or more use makeup codewords followed by a terminating
codeword; runs longer than 2623 repeat the 2560 makeup code.

Two framings are supported:

* ``eol_mode=False``: rows are packed back to back, each padded with zero
  bits to a byte boundary.  Width and row count must be known to decode.
* ``eol_mode=True``: every row is preceded by the EOL codeword and the
  stream is zero-padded at the end.  Zero fill bits before an EOL are
  skipped, and the row count may be left open.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from . import t4tables
from .errors import (CorruptStreamError, EncodeRangeError, InvalidArgumentError,
                     ParseError, TruncatedError, UnexpectedEndError, WidthMismatchError)
from .rle import RunMatrix, RunRow

HEADER_MAGIC = b"MH1 "
_HEADER = struct.Struct("<4sIIB3x")
HEADER_SIZE = _HEADER.size

_ENCODE = (t4tables.WHITE_CODES, t4tables.BLACK_CODES)
_DECODE = tuple({code: run for run, code in table.items()} for table in _ENCODE)
_PREFIXES = tuple({code[:i] for code in table for i in range(1, len(code))}
                  for table in _DECODE)
_EOL = t4tables.EOL


@dataclass(frozen=True)
class MhBitstream:
    data: bytes
    width: int
    row_count: int | None
    eol_mode: bool = False


def run_codewords(run: int, color: int) -> list[str]:
    """Codewords for one run of ``color`` (0 white, 1 black)."""
    if not isinstance(run, int) or run < 0:
        raise EncodeRangeError(f"run length {run!r} is not encodable")
    table = _ENCODE[color]
    words = []
    while run > t4tables.MAX_MAKEUP + 63:
        words.append(table[t4tables.MAX_MAKEUP])
        run -= t4tables.MAX_MAKEUP
    if run >= 64:
        makeup = run - run % 64
        words.append(table[makeup])
        run -= makeup
    words.append(table[run])
    return words


def encode_row_bits(row: RunRow) -> str:
    return "".join(w for i, r in enumerate(row.runs) for w in run_codewords(r, i & 1))


def _pack(bits: str) -> bytes:
    if len(bits) % 8:
        bits += "0" * (8 - len(bits) % 8)
    return int(bits, 2).to_bytes(len(bits) // 8, "big") if bits else b""


def mh_encode(m: RunMatrix, eol_mode: bool = False) -> MhBitstream:
    if eol_mode:
        bits = "".join(_EOL + encode_row_bits(r) for r in m.rows)
        data = _pack(bits)
    else:
        data = b"".join(_pack(encode_row_bits(r)) for r in m.rows)
    return MhBitstream(data, m.width, m.height, eol_mode)


class _Reader:
    def __init__(self, data: bytes):
        self.bits = "".join(f"{b:08b}" for b in data)
        self.pos = 0

    def at_end(self):
        return self.pos >= len(self.bits)

    def align(self):
        self.pos = -(-self.pos // 8) * 8

    def read_code(self, color: int) -> int:
        decode, prefixes = _DECODE[color], _PREFIXES[color]
        start = self.pos
        bits = self.bits
        end = len(bits)
        cur = ""
        while True:
            if self.pos >= end:
                raise UnexpectedEndError("stream ended inside a codeword", start)
            cur += bits[self.pos]
            self.pos += 1
            run = decode.get(cur)
            if run is not None:
                return run
            if cur == _EOL:
                raise WidthMismatchError("EOL before the row reached its width", start)
            if cur not in prefixes and not _EOL.startswith(cur):
                name = "black" if color else "white"
                raise CorruptStreamError(f"no {name} codeword starts with {cur}", start)

    def read_eol(self) -> bool:
        """Skip fill zeros and consume one EOL; False on clean end of stream."""
        start = self.pos
        zeros = 0
        bits = self.bits
        while self.pos < len(bits) and bits[self.pos] == "0":
            zeros += 1
            self.pos += 1
        if self.pos >= len(bits):
            return False
        if zeros < 11:
            raise CorruptStreamError("expected EOL codeword", start)
        self.pos += 1
        return True


def _append_run(out: list[int], color: int, n: int) -> None:
    if n == 0:
        return
    if not out:
        out.extend([n] if color == 0 else [0, n])
    elif (len(out) - 1) % 2 == color:
        out[-1] += n
    else:
        out.append(n)


def _read_row(reader: _Reader, width: int) -> RunRow:
    row_start = reader.pos
    out: list[int] = []
    pos = 0
    color = 0
    while pos < width:
        code_start = reader.pos
        run = reader.read_code(color)
        total = run
        while run >= 64:
            run = reader.read_code(color)
            total += run
        if pos + total > width:
            raise WidthMismatchError(
                f"row overshoots width {width} (reaches {pos + total})", code_start)
        _append_run(out, color, total)
        pos += total
        color ^= 1
    if not out:
        raise WidthMismatchError("row has no pixels", row_start)
    return RunRow(tuple(out), width)


def mh_decode(bs: MhBitstream) -> RunMatrix:
    if bs.width < 1:
        raise InvalidArgumentError(f"width must be >= 1, got {bs.width}")
    if bs.row_count is None and not bs.eol_mode:
        raise InvalidArgumentError("row_count is required without EOL framing")
    reader = _Reader(bs.data)
    rows = []
    while bs.row_count is None or len(rows) < bs.row_count:
        if bs.eol_mode:
            if not reader.read_eol():
                if bs.row_count is None:
                    break
                raise UnexpectedEndError(
                    f"stream ended after {len(rows)} of {bs.row_count} rows", reader.pos)
        elif reader.at_end():
            raise UnexpectedEndError(
                f"stream ended after {len(rows)} of {bs.row_count} rows", reader.pos)
        rows.append(_read_row(reader, bs.width))
        if not bs.eol_mode:
            reader.align()
    if not rows:
        raise UnexpectedEndError("stream contains no rows", 0)
    return RunMatrix(bs.width, len(rows), tuple(rows))


def write_mh_file(bs: MhBitstream) -> bytes:
    """Serialize with the 16-byte ``MH1`` header (little-endian u32 width, height, u8 eol)."""
    if bs.row_count is None:
        raise InvalidArgumentError("row count must be known to write a header")
    return _HEADER.pack(HEADER_MAGIC, bs.width, bs.row_count, int(bs.eol_mode)) + bs.data


def read_mh_file(data: bytes) -> MhBitstream:
    if len(data) < HEADER_SIZE:
        raise TruncatedError("MH1 header is 16 bytes", len(data))
    magic, width, height, eol = _HEADER.unpack_from(data)
    if magic != HEADER_MAGIC:
        raise ParseError(f"bad magic {magic!r}", 0)
    if eol not in (0, 1):
        raise ParseError(f"eol flag must be 0 or 1, got {eol}", 12)
    if width < 1 or height < 1:
        raise ParseError(f"bad dimensions {width}x{height}", 4)
    return MhBitstream(bytes(data[HEADER_SIZE:]), width, height, bool(eol))
