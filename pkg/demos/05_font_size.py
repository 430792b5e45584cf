"""
Font size from line height
==========================

Train a least-squares line from line height to point size on synthetic
pages, then detect sizes on unseen pages.  Narrow height bands separate
perfectly; as the bands widen and overlap, accuracy falls off.
"""

import numpy as np

from rundoc import encode_image, extract_line_features, fit
from rundoc.fontsize import accuracy, confusion
from rundoc.synthetic import font_size_pages


def samples(pages):
    out = []
    for page, sizes in pages:
        out.extend(zip(extract_line_features(encode_image(page)), sizes))
    return out


for band in (10, 80, 160):
    train = samples(font_size_pages(np.random.default_rng(1), band_width=band))
    test = samples(font_size_pages(np.random.default_rng(2), band_width=band))
    model = fit(train)
    print(f"band {band:3d}: size = {model.slope:.3f} * height + {model.intercept:.3f}, "
          f"accuracy {accuracy(model, test):.1%}")

print("confusion at band 160:", confusion(model, test))
