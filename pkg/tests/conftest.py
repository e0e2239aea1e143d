import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cwpoly.ideal import MonomialIdeal  # noqa: E402

EXAMPLE_GENS = [(2, 0, 0, 0), (1, 0, 1, 0), (0, 0, 2, 0), (1, 1, 0, 1), (0, 1, 1, 1), (0, 2, 0, 2)]
# x1^2, x1x3, x1x2x4, x3^2, x2x3x4, x2^2x4^2
EXAMPLE_ORDER = [(2, 0, 0, 0), (1, 0, 1, 0), (1, 1, 0, 1), (0, 0, 2, 0), (0, 1, 1, 1), (0, 2, 0, 2)]


@pytest.fixture
def example_ideal():
    return MonomialIdeal.from_vectors(4, EXAMPLE_GENS)


@pytest.fixture
def two_squares():
    return MonomialIdeal.from_vectors(2, [(2, 0), (0, 2)])
