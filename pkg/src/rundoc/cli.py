"""``rundoc`` command-line interface.

Exit status: 0 on success, 1 on usage errors, 2 on unreadable or invalid
data.  Diagnostics go to stderr; results go to ``--out`` or stdout, and
nothing is written unless every input was processed.
"""

from __future__ import annotations

import argparse
import sys

from . import blocks, features, fontsize, formats, mh, segmentation
from .errors import RunDocError
from .rle import decode_image, encode_image

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _rect(text: str) -> tuple[int, int, int, int]:
    parts = text.split(":")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected r1:r2:c1:c2")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError("rect bounds must be integers") from None


def _word_space(text: str):
    if text == "auto":
        return None
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a number or 'auto'") from None
    if v < 1:
        raise argparse.ArgumentTypeError("word space must be >= 1")
    return v


def load_matrix(path: str, args):
    with open(path, "rb") as fh:
        data = fh.read()
    fmt = args.format
    if fmt == "auto":
        fmt = formats.detect_format(data)
    if fmt == "pbm":
        return encode_image(formats.read_pbm(data))
    if fmt == "rle1":
        return formats.read_rle_text(data)
    if fmt == "mh1":
        return mh.mh_decode(mh.read_mh_file(data))
    # raw MH bitstream without header
    if args.width is None or (args.height is None and not args.eol):
        raise UsageError("raw MH input needs --width and, without --eol, --height")
    return mh.mh_decode(mh.MhBitstream(data, args.width, args.height, args.eol))


def _cmd_encode(m, args):
    return formats.write_rle_text(m)


def _cmd_decode(m, args):
    return formats.write_pbm(decode_image(m), "ascii" if args.ascii else "binary")


def _cmd_mh_encode(m, args):
    return mh.write_mh_file(mh.mh_encode(m, args.eol))


def _profile_out(curve, args):
    return formats.emit_svg(curve) if args.svg else formats.emit_csv(curve)


def _cmd_vpp(m, args):
    return _profile_out(features.vpp(m), args)


def _cmd_hpp(m, args):
    return _profile_out(features.hpp(m), args)


def _cmd_runhist(m, args):
    h = features.run_histogram(m, args.color)
    if args.log:
        h = features.log_bin(h)
    return _profile_out(h, args)


def _cmd_entropy(m, args):
    if args.direction == "h":
        return formats.emit_csv(features.entropy_horizontal(m))
    return formats.emit_csv(features.entropy_vertical(m))


def _cmd_segment_lines(m, args):
    return formats.emit_csv(segmentation.segment_lines(m, args.blank_threshold))


def _cmd_segment_words(m, args):
    segs = []
    for line in segmentation.segment_lines(m, args.blank_threshold):
        words, chars = segmentation.segment_words_chars(m, line, args.word_space)
        segs.append(line)
        segs.extend(words)
        segs.extend(chars)
    return formats.emit_csv(segs)


def _cmd_extract_block(m, args):
    return formats.write_rle_text(blocks.extract_block(m, args.rect).payload)


def _cmd_characterize(m, args):
    block = blocks.extract_block(m, args.rect).payload if args.rect else m
    return formats.emit_csv(blocks.characterize(block, m))


def _cmd_fontsize_detect(m, args):
    with open(args.model, "rb") as fh:
        model = formats.read_model(fh.read())
    rows = []
    for seg in segmentation.segment_lines(m, args.blank_threshold):
        predicted, detected = fontsize.detect(model, fontsize.LineFeature(seg.height))
        rows.append((seg.row_start, seg.row_end, seg.height, predicted, detected))
    return formats.emit_table(["row_start", "row_end", "line_height", "predicted", "detected"], rows)


def _cmd_plot(m, args):
    if args.what == "vpp":
        obj = features.vpp(m)
    elif args.what == "hpp":
        obj = features.hpp(m)
    else:
        obj = features.run_histogram(m, args.color)
        if args.what == "logrunhist":
            obj = features.log_bin(obj)
    return formats.emit_svg(obj)


def _fontsize_fit(args):
    samples = []
    for path in args.inputs:
        with open(path, "rb") as fh:
            samples.extend(formats.read_training_csv(fh.read()))
    if args.aggregate == "max":
        samples = fontsize.aggregate_max(samples)
    return [formats.write_model(fontsize.fit(samples))]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rundoc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, func, help, document=True):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("inputs", nargs="+", metavar="INPUT")
        sp.add_argument("--out", "-o", help="output file (default: stdout)")
        if document:
            sp.add_argument("--format", default="auto",
                            choices=["auto", "pbm", "rle1", "mh1", "mh"],
                            help="input format; auto reads the magic bytes")
            sp.add_argument("--width", type=int, help="width of a raw MH stream")
            sp.add_argument("--height", type=int, help="row count of a raw MH stream")
            sp.add_argument("--eol", action="store_true", help="EOL-framed MH stream")
        sp.set_defaults(func=func)
        return sp

    add("encode", _cmd_encode, "convert to RLE1 text")
    add("decode", _cmd_decode, "convert to PBM").add_argument(
        "--ascii", action="store_true", help="write P1 instead of P4")
    add("mh-encode", _cmd_mh_encode, "convert to an MH1 bitstream file")
    add("mh-decode", _cmd_encode, "convert an MH bitstream to RLE1 text")
    for name, func in (("vpp", _cmd_vpp), ("hpp", _cmd_hpp)):
        sp = add(name, func, f"{name} projection profile")
        sp.add_argument("--csv", action="store_true", help="CSV output (default)")
        sp.add_argument("--svg", action="store_true", help="SVG plot instead of CSV")
    sp = add("runhist", _cmd_runhist, "run-length histogram")
    sp.add_argument("--color", choices=features.COLORS, default="black")
    sp.add_argument("--log", action="store_true", help="logarithmic length classes")
    sp.add_argument("--svg", action="store_true")
    add("entropy", _cmd_entropy, "CEQ/SEQ entropy per line").add_argument(
        "--direction", choices=["h", "v"], default="h")
    add("segment-lines", _cmd_segment_lines, "text line segments").add_argument(
        "--blank-threshold", type=int, default=0)
    sp = add("segment-words", _cmd_segment_words, "line, word and character segments")
    sp.add_argument("--blank-threshold", type=int, default=0)
    sp.add_argument("--word-space", type=_word_space, default=None,
                    help="word gap threshold in pixels, or 'auto' (default)")
    add("extract-block", _cmd_extract_block, "cut a rectangle as RLE1 text").add_argument(
        "--rect", type=_rect, required=True, help="r1:r2:c1:c2, 1-based inclusive")
    add("characterize", _cmd_characterize, "density and entropy of a block").add_argument(
        "--rect", type=_rect, help="block bounds r1:r2:c1:c2 (default: whole page)")
    sp = add("fontsize-fit", None, "fit a font size model from training CSV", document=False)
    sp.add_argument("--aggregate", choices=["none", "max"], default="none")
    sp = add("fontsize-detect", _cmd_fontsize_detect, "detect font size per text line")
    sp.add_argument("--model", required=True)
    sp.add_argument("--blank-threshold", type=int, default=0)
    sp = add("plot", _cmd_plot, "SVG plot of a profile or histogram")
    sp.add_argument("--what", choices=["vpp", "hpp", "runhist", "logrunhist"], default="vpp")
    sp.add_argument("--color", choices=features.COLORS, default="black")
    sp.add_argument("--svg", action="store_true", help="accepted for symmetry; output is SVG")
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "svg", False) and getattr(args, "csv", False):
            raise UsageError("--csv and --svg are mutually exclusive")
        if args.command == "fontsize-fit":
            outputs = _fontsize_fit(args)
        else:
            outputs = [args.func(load_matrix(path, args), args) for path in args.inputs]
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except (RunDocError, OSError) as exc:
        sys.stderr.write(f"rundoc: {exc}\n")
        return EXIT_DATA
    payload = b"".join(outputs)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
