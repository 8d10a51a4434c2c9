import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from texsup import PlaneImage


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_image(rng, channels=1, height=16, width=16):
    return PlaneImage(rng.uniform(0.0, 255.0, size=(channels, height, width)))


@pytest.fixture
def random_gray(rng):
    return random_image(rng, 1)


@pytest.fixture
def random_rgb(rng):
    return random_image(rng, 3)
