"""
Cutting out a block
===================

A rectangle is extracted by clipping each row's runs to the column range;
the block is then described by its density and entropy, both absolutely
and relative to the whole page.
"""

from rundoc import characterize, encode_image, extract_block
from rundoc.synthetic import sample_page

m = encode_image(sample_page())

block = extract_block(m, (2, 6, 1, 7))
print("block runs:", block.payload.as_lists())

for name, value in characterize(block.payload, m).as_dict().items():
    print(f"{name:>17}: {value}")
