"""
Lines, words and characters
===========================

Text lines come from runs of rows with ink; inside a line, blank-column
gaps separate characters, and gaps at least as wide as the word-space
threshold separate words.
"""

import numpy as np

from rundoc import encode_image, segment_lines, segment_words_chars
from rundoc.segmentation import auto_word_space, column_occupancy, line_gaps
from rundoc.synthetic import text_page

rng = np.random.default_rng(3)
m = encode_image(text_page(rng, 120, [9, 12, 7]))

lines = segment_lines(m)
print("lines:", [(l.row_start, l.row_end) for l in lines], "gaps:", line_gaps(lines))

for line in lines:
    occ = column_occupancy(m, (line.row_start, line.row_end)).values
    threshold = auto_word_space(occ)
    words, chars = segment_words_chars(m, line, threshold)
    print(f"rows {line.row_start}-{line.row_end}: threshold {threshold:g}, "
          f"{len(words)} words, {len(chars)} characters")
    print("   words:", [(w.col_start, w.col_end) for w in words])
