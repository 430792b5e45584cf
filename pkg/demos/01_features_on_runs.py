"""
Features straight from run-length data
======================================

Projection profiles, run histograms and transition entropy of a small
document, computed without expanding its rows back into pixels.
"""

from rundoc import (encode_image, entropy_horizontal, entropy_vertical, hpp, log_bin,
                    row_transitions, run_histogram, vpp)
from rundoc.synthetic import sample_page

# The 13 x 14 sample page.  Each row becomes alternating white/black run
# lengths, always starting with white.
m = encode_image(sample_page())
for i, row in enumerate(m.rows, start=1):
    print(f"{i:2d}: {' '.join(map(str, row.runs))}")

# Per-row black counts: just the sum of the odd-indexed (black) runs.
print("vpp:", vpp(m).values)

# Per-column black counts need vertical information, which the runs do not
# hold directly.  hpp walks all rows in lock step, popping one pixel per row
# per column.
print("hpp:", hpp(m).values)

# Run-length histograms and their logarithmic classes.
black = run_histogram(m, "black")
print("black runs:", black.counts)
print("log classes:", log_bin(black).as_dict())

# Transitions are read off run boundaries: the position of a transition is
# the sum of the preceding runs plus one.
t = row_transitions(m.rows[1])
print("row 2 transitions: +", t.pos_positions, " -", t.neg_positions)

# Entropy per row and per column.
h, v = entropy_horizontal(m), entropy_vertical(m)
print(f"horizontal CEQ total {h.ceq_total:.4f}, SEQ total {h.seq_total:.4f}")
print(f"vertical   CEQ total {v.ceq_total:.4f}, SEQ total {v.seq_total:.4f}")
