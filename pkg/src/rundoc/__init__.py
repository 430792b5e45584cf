"""Document image analysis on run-length compressed binary data.

Projection profiles, run histograms, transition entropy, line/word/character
segmentation, block extraction and font-size detection, all computed from
run rows without expanding the page back into pixels.
"""

from .blocks import BlockCharacterization, characterize, extract_block
from .errors import (CorruptFileError, CorruptRunError, CorruptStreamError,
                     DegenerateFitError, EncodeRangeError, InvalidArgumentError, MhError,
                     ParseError, RunDocError, TruncatedError, UnexpectedEndError,
                     WidthMismatchError)
from .features import (EntropyReport, LogHistogram, ProfileCurve, RunHistogram,
                       TransitionStats, entropy_horizontal, entropy_vertical, hpp, log_bin,
                       row_transitions, run_histogram, vpp)
from .fontsize import FontSizeModel, LineFeature, detect, extract_line_features, fit
from .formats import (emit_csv, emit_svg, read_pbm, read_rle_text, write_pbm,
                      write_rle_text)
from .mh import MhBitstream, mh_decode, mh_encode, read_mh_file, write_mh_file
from .rle import (BinaryImage, ColumnSlice, RunMatrix, RunRow, WorkCounter,
                  black_pixel_count, canonicalize_padded, decode_image, decode_row,
                  encode_image, encode_row, scan_columns)
from .segmentation import Segment, column_occupancy, segment_lines, segment_words_chars

__version__ = "0.1.0"
