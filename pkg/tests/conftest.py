import numpy as np
import pytest

from photoseal import standard_test_images
from photoseal.synth import photo_image


@pytest.fixture(scope="session")
def corpus():
    """The three benchmark images, generated once per test session."""
    return standard_test_images()


@pytest.fixture(scope="session")
def small_photo():
    """A small photo-like image for fast embed/verify cycles."""
    return photo_image(96, 120, seed=5)


@pytest.fixture()
def rng():
    return np.random.default_rng(42)


def random_image(rng, height=32, width=40):
    return rng.integers(0, 256, size=(height, width, 3), dtype=np.uint8)
