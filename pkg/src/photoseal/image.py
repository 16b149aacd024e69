"""Image representation, channel split/merge, 8x8 block tiling, and lossless I/O.

Images are numpy arrays of shape (height, width, 3) and dtype uint8 with
channels in R, G, B order; channel planes are (height, width) uint8 arrays.
Coordinates are (row, col), 0-based.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import DecodeError, DimensionError

BLOCK = 8

#: Extensions accepted for stego output (lossless storage is required:
#: the watermark does not survive recompression).
LOSSLESS_EXTENSIONS = (".png", ".bmp")


def validate_image(image: np.ndarray) -> np.ndarray:
    """Check shape/dtype of an RGB image array and return it as uint8."""
    arr = np.asarray(image)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise DimensionError(f"expected (H, W, 3) RGB array, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionError("image must be at least 1x1")
    if arr.dtype != np.uint8:
        if np.issubdtype(arr.dtype, np.integer) and arr.min() >= 0 and arr.max() <= 255:
            arr = arr.astype(np.uint8)
        else:
            raise DimensionError(f"samples must be 8-bit integers, got dtype {arr.dtype}")
    return arr


def decompose(image: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split an RGB image into its red, green, and blue planes (copies)."""
    arr = validate_image(image)
    return arr[:, :, 0].copy(), arr[:, :, 1].copy(), arr[:, :, 2].copy()


def recompose(red: np.ndarray, green: np.ndarray, blue: np.ndarray) -> np.ndarray:
    """Stack three channel planes back into an RGB image."""
    if not (red.shape == green.shape == blue.shape):
        raise DimensionError("channel planes must share dimensions")
    return np.stack([red, green, blue], axis=2).astype(np.uint8)


@dataclass
class BlockGrid:
    """A channel plane tiled into 8x8 blocks, padded by edge replication.

    ``blocks`` has shape (block_rows, block_cols, 8, 8).  ``height`` and
    ``width`` record the original plane extent so :func:`reassemble` can
    crop the padding away again.
    """

    blocks: np.ndarray
    block_rows: int
    block_cols: int
    height: int
    width: int


def pad_to_block_multiple(plane: np.ndarray) -> BlockGrid:
    """Tile a plane into 8x8 blocks, replicating the last row/column as padding.

    Padding (rather than resampling) preserves every original sample, which
    a fragile watermark requires; :func:`reassemble` restores the plane
    bit-exactly.
    """
    plane = np.asarray(plane)
    if plane.ndim != 2 or plane.size == 0:
        raise DimensionError(f"expected nonempty 2-D plane, got shape {plane.shape}")
    h, w = plane.shape
    rows = -(-h // BLOCK)
    cols = -(-w // BLOCK)
    padded = np.pad(plane, ((0, rows * BLOCK - h), (0, cols * BLOCK - w)), mode="edge")
    blocks = padded.reshape(rows, BLOCK, cols, BLOCK).swapaxes(1, 2).copy()
    return BlockGrid(blocks=blocks, block_rows=rows, block_cols=cols, height=h, width=w)


def reassemble(grid: BlockGrid) -> np.ndarray:
    """Stitch a block grid back together and crop to the original extent."""
    rows, cols = grid.block_rows, grid.block_cols
    padded = grid.blocks.swapaxes(1, 2).reshape(rows * BLOCK, cols * BLOCK)
    return padded[: grid.height, : grid.width]


def load_image(path: str | Path) -> np.ndarray:
    """Read a PNG, BMP, or JPEG file as an (H, W, 3) uint8 array."""
    try:
        with Image.open(path) as img:
            return np.asarray(img.convert("RGB"))
    except (UnidentifiedImageError, OSError) as exc:
        raise DecodeError(f"cannot decode {path}: {exc}") from exc


def decode_image(data: bytes) -> np.ndarray:
    """Decode PNG/BMP/JPEG bytes as an (H, W, 3) uint8 array."""
    try:
        with Image.open(io.BytesIO(data)) as img:
            return np.asarray(img.convert("RGB"))
    except (UnidentifiedImageError, OSError) as exc:
        raise DecodeError(f"cannot decode image bytes: {exc}") from exc


def save_image(path: str | Path, image: np.ndarray) -> None:
    """Write an image losslessly; the extension must be .png or .bmp."""
    path = Path(path)
    if path.suffix.lower() not in LOSSLESS_EXTENSIONS:
        raise ValueError(
            f"stego output requires a lossless format {LOSSLESS_EXTENSIONS}, got {path.suffix!r}"
        )
    Image.fromarray(validate_image(image), mode="RGB").save(path)


def encode_png(image: np.ndarray) -> bytes:
    """Encode an image as PNG bytes (lossless)."""
    buf = io.BytesIO()
    Image.fromarray(validate_image(image), mode="RGB").save(buf, format="PNG")
    return buf.getvalue()
