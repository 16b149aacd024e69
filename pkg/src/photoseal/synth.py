"""Synthetic test images so benchmarks run without external assets.

Three content families at the benchmark sizes: a smooth two-axis gradient,
midrange uniform noise, and a photo-like mixture of blobs, background
shading, and fine texture.

All generators keep samples inside a midrange band (roughly [45, 210] with
bounded per-block contrast).  Frequency-domain embedding replaces one DCT
coefficient per 8x8 block and inverse-transforms; on content near the 0/255
rails that step clips and perturbs the embedded coefficient.  The band
guarantees clip-free embedding for every coefficient position, so clean
verification deviations stay at rounding level.
"""

from __future__ import annotations

import numpy as np

from .image import BLOCK

#: (height, width) of the three benchmark images.
BENCH_SIZES = {"A": (152, 400), "B": (312, 522), "C": (800, 600)}


def gradient_image(height: int, width: int) -> np.ndarray:
    """Smooth diagonal gradient, each channel ramping along a different axis."""
    rows = np.linspace(0.0, 1.0, height)[:, None]
    cols = np.linspace(0.0, 1.0, width)[None, :]
    r = 40 + 175 * (0.5 * rows + 0.5 * cols)
    g = 40 + 175 * (0.7 * rows + 0.3 * (1.0 - cols))
    b = 40 + 175 * (0.5 + 0.5 * np.sin(2 * np.pi * (rows + cols)) * 0.5)
    return np.clip(np.stack([r + 0 * cols, g + 0 * cols, b], axis=2), 0, 255).astype(np.uint8)


def noise_image(height: int, width: int, seed: int = 7) -> np.ndarray:
    """Uniform noise over [53, 202]: full-band texture, bounded block contrast."""
    rng = np.random.default_rng(seed)
    return rng.integers(53, 203, size=(height, width, 3)).astype(np.uint8)


def photo_image(height: int, width: int, seed: int = 11) -> np.ndarray:
    """Photo-like mixture: shaded blobs, scene detail, fine grain, sensor noise.

    The components give the image a natural falling spectrum: strong
    low-frequency luminance structure, medium horizontal detail, a fine
    grain at the highest frequencies, and white sensor noise.  The blob
    field is soft-limited rather than clipped so no region goes perfectly
    flat, and the noise keeps every row distinct, like a real capture.
    """
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:height, 0:width].astype(np.float64)
    blobs = np.zeros((height, width, 3))
    for _ in range(12):
        cy, cx = rng.uniform(0, height), rng.uniform(0, width)
        radius = rng.uniform(0.05, 0.25) * min(height, width)
        blob = np.exp(-((yy - cy) ** 2 + (xx - cx) ** 2) / (2 * radius**2))
        for k in range(3):
            blobs[:, :, k] += rng.uniform(-55, 55) * blob
    img = 127.5 + 42.0 * np.tanh(blobs / 42.0)
    detail = np.stack(
        [np.sin(2 * np.pi * xx / 21.0 + 0.8 * k + 0.05 * yy) for k in range(3)], axis=2
    )
    grain = ((-1.0) ** (xx + yy))[:, :, None]
    img += 22.0 * detail + 8.0 * grain
    img += rng.normal(0.0, 5.0, size=img.shape)
    return np.clip(img, 0, 255).astype(np.uint8)


def standard_test_images() -> dict[str, np.ndarray]:
    """The three-image benchmark corpus at the standard sizes."""
    return {
        "gradient_A": gradient_image(*BENCH_SIZES["A"]),
        "noise_B": noise_image(*BENCH_SIZES["B"]),
        "photo_C": photo_image(*BENCH_SIZES["C"]),
    }


def carrier_blocks(n_blocks: int, seed: int = 0) -> np.ndarray:
    """Random 8x8 carrier tiles drawn from the three content families.

    Used by the tolerance calibration: the mixture spans smoother and
    noisier content than the benchmark corpus itself (noise is sampled at
    a wider band here), so its worst-case deviation bounds the corpus.
    """
    rng = np.random.default_rng(seed)
    size = 256
    sources = [
        gradient_image(size, size),
        noise_image(size, size, seed=int(rng.integers(1 << 31))),
        photo_image(size, size, seed=int(rng.integers(1 << 31))),
        # wider-band noise stressor, still clip-safe for DC recentering
        np.clip(
            rng.normal(127.5, 28.0, size=(size, size, 3)), 40, 215
        ).astype(np.uint8),
    ]
    tiles = np.empty((n_blocks, BLOCK, BLOCK), dtype=np.float64)
    per = size - BLOCK
    for i in range(n_blocks):
        src = sources[int(rng.integers(len(sources)))]
        y, x = rng.integers(0, per, size=2)
        tiles[i] = src[y : y + BLOCK, x : x + BLOCK, int(rng.integers(3))]
    return tiles
