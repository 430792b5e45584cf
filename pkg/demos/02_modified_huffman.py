"""
Modified Huffman bitstreams
===========================

Fax-style T.4 one-dimensional coding of run rows, with and without EOL
framing, plus the 16-byte MH1 file header.
"""

import numpy as np

from rundoc import BinaryImage, encode_image, mh_decode, mh_encode, read_mh_file, write_mh_file

# A form-like page at fax width: ruled boxes and solid bars.
rng = np.random.default_rng(0)
px = np.zeros((400, 1728), dtype=np.uint8)
px[40:44, 100:1628] = 1
for y in range(80, 360, 40):
    px[y:y + 2, 100:1628] = 1
    for x in rng.integers(120, 1500, size=6):
        px[y - 20:y - 6, x:x + int(rng.integers(20, 120))] = 1
page = BinaryImage(px)
m = encode_image(page)
raw_bytes = page.width * page.height // 8
print(f"page {page.width}x{page.height}, {m.total_runs()} runs, {raw_bytes} bytes packed")

for eol in (False, True):
    bs = mh_encode(m, eol_mode=eol)
    assert mh_decode(bs) == m
    print(f"eol={eol!s:5}  {len(bs.data)} bytes  ({len(bs.data) / raw_bytes:.1%} of packed raster)")

# Files carry their own geometry.
blob = write_mh_file(mh_encode(m, eol_mode=True))
print("header:", blob[:16].hex(" "))
assert mh_decode(read_mh_file(blob)) == m
