"""Readers and writers: PBM (P1/P4), RLE1 text, CSV and SVG output,
font-size training data and model files.

Every reader takes ``bytes`` and either returns a complete object or raises
a :class:`~rundoc.errors.RunDocError` subclass; writers return ``bytes``
that depend only on their input.
"""

from __future__ import annotations

import csv
import io
from typing import Sequence

import numpy as np

from .blocks import BlockCharacterization
from .errors import CorruptFileError, CorruptRunError, ParseError, TruncatedError
from .features import EntropyReport, LogHistogram, LOG_BIN_LABELS, ProfileCurve, RunHistogram
from .fontsize import FontSizeModel, LineFeature
from .mh import HEADER_MAGIC
from .rle import BinaryImage, RunMatrix, canonicalize_padded
from .segmentation import Segment

MAX_PIXELS = 1 << 30
_WS = b" \t\r\n\v\f"
_P1_LINE = 70


def detect_format(data: bytes) -> str:
    """``"pbm"``, ``"rle1"`` or ``"mh1"`` from the leading magic bytes."""
    if data[:2] in (b"P1", b"P4"):
        return "pbm"
    if data[:4] in (b"RLE1",):
        return "rle1"
    if data[:4] == HEADER_MAGIC:
        return "mh1"
    raise ParseError(f"unrecognised magic {data[:4]!r}", 0)


# -- PBM -------------------------------------------------------------------

def _skip_ws(data: bytes, pos: int) -> int:
    while pos < len(data):
        c = data[pos:pos + 1]
        if c == b"#":
            while pos < len(data) and data[pos] not in b"\r\n":
                pos += 1
        elif c in _WS:
            pos += 1
        else:
            break
    return pos


def _read_uint(data: bytes, pos: int) -> tuple[int, int]:
    pos = _skip_ws(data, pos)
    start = pos
    while pos < len(data) and data[pos:pos + 1].isdigit():
        pos += 1
    if start == pos:
        if pos >= len(data):
            raise TruncatedError("header ended early", pos)
        raise ParseError(f"expected an integer, got {data[pos:pos + 1]!r}", pos)
    return int(data[start:pos]), pos


def read_pbm(data: bytes) -> BinaryImage:
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P1", b"P4"):
        raise ParseError(f"bad PBM magic {magic!r}", 0)
    width, pos = _read_uint(data, 2)
    height, pos = _read_uint(data, pos)
    if width < 1 or height < 1 or width * height > MAX_PIXELS:
        raise ParseError(f"unsupported dimensions {width}x{height}", pos)
    if magic == b"P4":
        if pos >= len(data) or data[pos] not in _WS:
            raise TruncatedError("missing whitespace before raster", pos)
        pos += 1
        row_bytes = (width + 7) // 8
        need = row_bytes * height
        if len(data) - pos < need:
            raise TruncatedError(
                f"raster needs {need} bytes, found {len(data) - pos}", len(data))
        raw = np.frombuffer(data, dtype=np.uint8, count=need, offset=pos)
        bits = np.unpackbits(raw.reshape(height, row_bytes), axis=1)[:, :width]
        return BinaryImage(bits)
    bits = np.empty(width * height, dtype=np.uint8)
    k = 0
    while k < bits.size:
        pos = _skip_ws(data, pos)
        if pos >= len(data):
            raise TruncatedError(f"raster has {k} of {bits.size} pixels", pos)
        c = data[pos]
        if c not in b"01":
            raise ParseError(f"unexpected byte {bytes([c])!r} in P1 raster", pos)
        bits[k] = c - 48
        k += 1
        pos += 1
    return BinaryImage(bits.reshape(height, width))


def write_pbm(img: BinaryImage, variant: str = "binary") -> bytes:
    """Serialize as P4 (``"binary"``) or P1 (``"ascii"``, lines of at most 70 digits)."""
    h, w = img.pixels.shape
    if variant == "binary":
        return b"P4\n%d %d\n" % (w, h) + np.packbits(img.pixels, axis=1).tobytes()
    if variant != "ascii":
        raise ValueError(f"variant must be 'binary' or 'ascii', got {variant!r}")
    out = [b"P1\n%d %d\n" % (w, h)]
    for row in img.pixels:
        digits = bytes(row + 48)
        for i in range(0, w, _P1_LINE):
            out.append(digits[i:i + _P1_LINE] + b"\n")
    return b"".join(out)


# -- RLE1 text -------------------------------------------------------------

def read_rle_text(data: bytes) -> RunMatrix:
    """Parse ``RLE1 <width> <height>`` followed by one run row per line.

    Rows may carry trailing zero padding as in a rectangular run table.
    """
    try:
        text = bytes(data).decode("ascii")
    except UnicodeDecodeError as exc:
        raise CorruptFileError(f"non-ASCII byte at offset {exc.start}") from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    head = lines[0].split() if lines else []
    if len(head) != 3 or head[0] != "RLE1":
        raise CorruptFileError("expected header 'RLE1 <width> <height>'", 1)
    try:
        width, height = int(head[1]), int(head[2])
    except ValueError:
        raise CorruptFileError("header dimensions must be integers", 1) from None
    if width < 1 or height < 1:
        raise CorruptFileError(f"bad dimensions {width}x{height}", 1)
    body = lines[1:]
    if len(body) != height:
        raise CorruptFileError(f"header declares {height} rows, file has {len(body)}",
                               len(lines) + 1 if len(body) < height else height + 2)
    raw = []
    for n, line in enumerate(body, start=2):
        try:
            raw.append([int(tok) for tok in line.split()])
        except ValueError:
            raise CorruptFileError(f"non-integer run in {line!r}", n) from None
    try:
        return canonicalize_padded(raw, width)
    except CorruptRunError as exc:
        raise CorruptFileError(str(exc), exc.row + 1) from None


def write_rle_text(m: RunMatrix) -> bytes:
    lines = [f"RLE1 {m.width} {m.height}"]
    lines.extend(" ".join(map(str, row.runs)) for row in m.rows)
    return ("\n".join(lines) + "\n").encode("ascii")


# -- CSV -------------------------------------------------------------------

def _cell(v) -> str:
    if v is None:
        return "undefined"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def emit_table(header: Sequence[str], records) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for rec in records:
        w.writerow([_cell(v) for v in rec])
    return buf.getvalue().encode("ascii")


def emit_csv(obj) -> bytes:
    """CSV with one header row for a curve, histogram, entropy report,
    block characterization or a sequence of segments."""
    if isinstance(obj, ProfileCurve):
        return emit_table([obj.direction, "black_count"], enumerate(obj.values, start=1))
    if isinstance(obj, RunHistogram):
        return emit_table(["run_length", "frequency"], obj.counts.items())
    if isinstance(obj, LogHistogram):
        return emit_table(["bin", "frequency"], zip(LOG_BIN_LABELS, obj.bins))
    if isinstance(obj, EntropyReport):
        recs = ((obj.direction, i, c, s, obj.formula)
                for i, (c, s) in enumerate(zip(obj.ceq, obj.seq), start=1))
        return emit_table(["direction", "line", "ceq", "seq", "formula"], recs)
    if isinstance(obj, BlockCharacterization):
        return emit_table(obj.FIELDS, [[getattr(obj, f) for f in obj.FIELDS]])
    if isinstance(obj, (list, tuple)) and all(isinstance(s, Segment) for s in obj):
        return emit_table(["kind", "row_start", "row_end", "col_start", "col_end"],
                          ((s.kind,) + s.bounds for s in obj))
    raise TypeError(f"cannot emit CSV for {type(obj).__name__}")


# -- SVG -------------------------------------------------------------------

_SVG_W, _SVG_H, _MARGIN = 640, 320, 40


def emit_svg(obj, title: str | None = None) -> bytes:
    """Standalone SVG: a polyline for a profile curve, bars for a histogram."""
    if isinstance(obj, ProfileCurve):
        values = list(obj.values)
        kind = "curve"
        title = title or f"{obj.direction} projection profile"
    elif isinstance(obj, RunHistogram):
        lengths = list(obj.counts)
        values = list(obj.counts.values())
        kind = "bars"
        title = title or f"{obj.color} run histogram"
    elif isinstance(obj, LogHistogram):
        lengths = list(LOG_BIN_LABELS)
        values = list(obj.bins)
        kind = "bars"
        title = title or f"{obj.color} log run histogram"
    else:
        raise TypeError(f"cannot emit SVG for {type(obj).__name__}")

    pw, ph = _SVG_W - 2 * _MARGIN, _SVG_H - 2 * _MARGIN
    x0, y0 = _MARGIN, _SVG_H - _MARGIN
    vmax = max(values, default=0) or 1
    n = max(len(values), 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_W}" height="{_SVG_H}" '
        f'viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f'<title>{title}</title>',
        f'<line x1="{x0}" y1="{y0}" x2="{x0 + pw}" y2="{y0}" stroke="black"/>',
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{_MARGIN}" stroke="black"/>',
        f'<text x="{x0 - 4}" y="{_MARGIN}" text-anchor="end" font-size="10">{vmax}</text>',
        f'<text x="{x0 - 4}" y="{y0}" text-anchor="end" font-size="10">0</text>',
    ]
    if kind == "curve":
        step = pw / max(n - 1, 1)
        pts = " ".join(f"{x0 + i * step:.2f},{y0 - v / vmax * ph:.2f}"
                       for i, v in enumerate(values))
        parts.append(f'<polyline fill="none" stroke="steelblue" points="{pts}"/>')
        parts.append(f'<text x="{x0 + pw}" y="{y0 + 14}" text-anchor="end" '
                     f'font-size="10">{len(values)}</text>')
    else:
        bw = pw / n
        for i, (label, v) in enumerate(zip(lengths, values)):
            bh = v / vmax * ph
            parts.append(f'<rect x="{x0 + i * bw:.2f}" y="{y0 - bh:.2f}" '
                         f'width="{bw * 0.9:.2f}" height="{bh:.2f}" fill="steelblue">'
                         f'<title>{label}: {v}</title></rect>')
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("ascii")


# -- font size data ----------------------------------------------------------

def _number(text: str):
    v = float(text)
    return int(v) if v.is_integer() else v


def read_training_csv(data: bytes) -> list[tuple[LineFeature, float]]:
    """Rows of ``line_height,ascender_height,font_size``; ascender may be blank."""
    rows = list(csv.reader(io.StringIO(bytes(data).decode("utf-8"))))
    if not rows or [c.strip() for c in rows[0]] != ["line_height", "ascender_height", "font_size"]:
        raise CorruptFileError("expected header line_height,ascender_height,font_size", 1)
    out = []
    for n, rec in enumerate(rows[1:], start=2):
        if not rec or not "".join(rec).strip():
            continue
        if len(rec) != 3:
            raise CorruptFileError(f"expected 3 fields, got {len(rec)}", n)
        try:
            asc = int(rec[1]) if rec[1].strip() else None
            out.append((LineFeature(int(rec[0]), asc), _number(rec[2])))
        except ValueError as exc:
            raise CorruptFileError(str(exc), n) from None
    return out


def write_model(model: FontSizeModel) -> bytes:
    sizes = ",".join(_cell(s) for s in model.known_sizes)
    text = (f"slope={model.slope!r}\nintercept={model.intercept!r}\n"
            f"known_sizes={sizes}\ntraining_count={model.training_count}\n")
    return text.encode("ascii")


def read_model(data: bytes) -> FontSizeModel:
    fields = {}
    for n, line in enumerate(bytes(data).decode("ascii").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise CorruptFileError(f"expected key=value, got {line!r}", n)
        fields[key.strip()] = value.strip()
    try:
        return FontSizeModel(
            slope=float(fields["slope"]),
            intercept=float(fields["intercept"]),
            known_sizes=tuple(_number(s) for s in fields["known_sizes"].split(",")),
            training_count=int(fields.get("training_count", 0)),
        )
    except KeyError as exc:
        raise CorruptFileError(f"model file lacks {exc.args[0]}") from None
    except ValueError as exc:
        raise CorruptFileError(str(exc)) from None
