import os
import pathlib

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.register_profile("default", deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = pathlib.Path(__file__).parent / "data"

RANK_TWO_A = np.array([[2.0, 1.0], [2.0, 0.0], [3.0, 0.0], [0.0, 3.0]])
RANK_TWO_R = np.array([[2.0, 2.0, 1.0, 0.0], [3.0, 0.0, 0.0, 3.0]])


def random_matrix(rng, rows, cols, complex_=False):
    a = rng.uniform(-1, 1, (rows, cols))
    if complex_:
        a = a + 1j * rng.uniform(-1, 1, (rows, cols))
    return a


def _norm(x):
    scale = np.abs(x).max()
    return scale * np.linalg.norm(x / scale) if scale > 0 else 0.0


def rel_err(x, y):
    return _norm(x - y) / _norm(y)


def sign_err(x, y):
    """Distance from ``x`` to the nearer of ``y`` and ``-y``."""
    return min(np.abs(x - y).max(), np.abs(x + y).max())


# tiny magnitudes are flushed to zero so squared norms cannot underflow
finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False).map(
    lambda x: 0.0 if abs(x) < 1e-100 else x
)


@st.composite
def matrices(draw, max_rows=4, max_cols=4, rows=None, cols=None, allow_complex=True):
    rows = rows or draw(st.integers(1, max_rows))
    cols = cols or draw(st.integers(1, max_cols))
    re = draw(hnp.arrays(np.float64, (rows, cols), elements=finite))
    if allow_complex and draw(st.booleans()):
        im = draw(hnp.arrays(np.float64, (rows, cols), elements=finite))
        return re + 1j * im
    return re


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(number, passed, detail)``."""

    def record(number, passed, detail):
        CRITERIA[number] = (bool(passed), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        passed, detail = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
