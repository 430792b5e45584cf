import numpy as np
import pytest

from rundoc import RunMatrix, encode_image
from rundoc.synthetic import SAMPLE_RUNS, blobby_image, random_image, sample_page


@pytest.fixture
def sample():
    return encode_image(sample_page())


@pytest.fixture
def sample_px():
    return sample_page().pixels


def random_corpus(n=200, seed=7, max_side=64):
    """Mixed-density random images, paired (pixels, RunMatrix)."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n):
        h = int(rng.integers(1, max_side + 1))
        w = int(rng.integers(1, max_side + 1))
        density = float(rng.choice([0.0, 0.02, 0.1, 0.3, 0.5, 0.8, 1.0]))
        img = blobby_image(rng, h, w, density) if i % 2 else random_image(rng, h, w, density)
        out.append((img.pixels, encode_image(img)))
    return out


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): exit criterion n")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    passed = call.excinfo is None
    prev = _acceptance.get(n, (title, True))
    _acceptance[n] = (title, prev[1] and passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        title, ok = _acceptance[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
