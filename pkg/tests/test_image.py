import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from photoseal import decompose, pad_to_block_multiple, reassemble, recompose, save_image
from photoseal.errors import DecodeError, DimensionError
from photoseal.image import decode_image, encode_png, load_image

from conftest import random_image


def test_decompose_single_pixel():
    img = np.array([[[10, 20, 30]]], dtype=np.uint8)
    r, g, b = decompose(img)
    assert r.tolist() == [[10]] and g.tolist() == [[20]] and b.tolist() == [[30]]


def test_decompose_extremes():
    img = np.array([[[0, 0, 0], [255, 255, 255]]], dtype=np.uint8)
    r, g, b = decompose(img)
    for plane in (r, g, b):
        assert plane.tolist() == [[0, 255]]


def test_recompose_roundtrip(rng):
    img = random_image(rng)
    assert np.array_equal(recompose(*decompose(img)), img)


def test_decompose_rejects_bad_shape():
    with pytest.raises(DimensionError):
        decompose(np.zeros((4, 4), dtype=np.uint8))


def test_pad_aligned_plane_unchanged():
    plane = np.arange(64, dtype=np.uint8).reshape(8, 8)
    grid = pad_to_block_multiple(plane)
    assert grid.block_rows == grid.block_cols == 1
    assert np.array_equal(grid.blocks[0, 0], plane)


def test_pad_constant_plane_replicates():
    plane = np.full((5, 5), 7, dtype=np.uint8)
    grid = pad_to_block_multiple(plane)
    assert grid.blocks.shape == (1, 1, 8, 8)
    assert (grid.blocks == 7).all()


def test_pad_benchmark_size_a():
    # 152x400 plane -> 19x50 grid
    grid = pad_to_block_multiple(np.zeros((152, 400), dtype=np.uint8))
    assert (grid.block_rows, grid.block_cols) == (19, 50)


def test_pad_preserves_original_extent(rng):
    plane = rng.integers(0, 256, size=(13, 21), dtype=np.uint8)
    grid = pad_to_block_multiple(plane)
    stitched = grid.blocks.swapaxes(1, 2).reshape(grid.block_rows * 8, grid.block_cols * 8)
    assert np.array_equal(stitched[:13, :21], plane)


def test_reassemble_roundtrip_benchmark_size_b(rng):
    plane = rng.integers(0, 256, size=(312, 522), dtype=np.uint8)
    assert np.array_equal(reassemble(pad_to_block_multiple(plane)), plane)


@settings(max_examples=40, deadline=None)
@given(
    h=st.integers(min_value=1, max_value=40),
    w=st.integers(min_value=1, max_value=40),
    seed=st.integers(min_value=0, max_value=2**31),
)
def test_pad_reassemble_inverse_property(h, w, seed):
    plane = np.random.default_rng(seed).integers(0, 256, size=(h, w), dtype=np.uint8)
    assert np.array_equal(reassemble(pad_to_block_multiple(plane)), plane)


@settings(max_examples=40, deadline=None)
@given(
    h=st.integers(min_value=1, max_value=24),
    w=st.integers(min_value=1, max_value=24),
    seed=st.integers(min_value=0, max_value=2**31),
)
def test_decompose_recompose_inverse_property(h, w, seed):
    img = np.random.default_rng(seed).integers(0, 256, size=(h, w, 3), dtype=np.uint8)
    assert np.array_equal(recompose(*decompose(img)), img)


def test_png_roundtrip(tmp_path, rng):
    img = random_image(rng)
    save_image(tmp_path / "x.png", img)
    assert np.array_equal(load_image(tmp_path / "x.png"), img)


def test_bmp_roundtrip(tmp_path, rng):
    img = random_image(rng)
    save_image(tmp_path / "x.bmp", img)
    assert np.array_equal(load_image(tmp_path / "x.bmp"), img)


def test_save_rejects_lossy_extension(tmp_path, rng):
    with pytest.raises(ValueError, match="lossless"):
        save_image(tmp_path / "x.jpg", random_image(rng))


def test_jpeg_is_readable(tmp_path, rng):
    from PIL import Image

    img = random_image(rng)
    Image.fromarray(img).save(tmp_path / "x.jpg", quality=95)
    loaded = load_image(tmp_path / "x.jpg")
    assert loaded.shape == img.shape


def test_decode_image_bytes(rng):
    img = random_image(rng)
    assert np.array_equal(decode_image(encode_png(img)), img)


def test_decode_error_on_garbage():
    with pytest.raises(DecodeError):
        decode_image(b"not an image at all")
