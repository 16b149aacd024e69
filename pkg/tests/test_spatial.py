import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from photoseal import (
    DEFAULT_ROLES,
    build_modifier,
    compare,
    decompose,
    derive_cipher_key,
    embed_spatial,
    encrypt_plane,
    parse_scenario,
    substitute_bit,
)
from photoseal.crypto import PHOTO_ID_BITS
from photoseal.errors import ImageTooSmall, InvalidScenario
from photoseal.scenarios import ChannelRoles

from conftest import random_image


def test_substitute_bit_lsb():
    assert substitute_bit(0b01100100, 0b10110011, 1) == 0b01100101


def test_substitute_bit_identity_when_equal():
    for k in range(1, 9):
        assert substitute_bit(0b01100100, 0b01100100, k) == 0b01100100


def test_substitute_bit_msb():
    assert substitute_bit(0b00000000, 0b11111111, 8) == 0b10000000


def test_substitute_bit_rejects_bad_index():
    with pytest.raises(InvalidScenario):
        substitute_bit(0, 0, 0)
    with pytest.raises(InvalidScenario):
        substitute_bit(0, 0, 9)


@settings(max_examples=200, deadline=None)
@given(
    modified=st.integers(0, 255),
    modifier=st.integers(0, 255),
    bit=st.integers(1, 8),
)
def test_substitute_bit_contract(modified, modifier, bit):
    out = int(substitute_bit(modified, modifier, bit))
    mask = 1 << (bit - 1)
    assert out & mask == modifier & mask
    assert out & ~mask == modified & ~mask


def test_substitute_bit_vectorized(rng):
    a = rng.integers(0, 256, size=(5, 7), dtype=np.uint8)
    b = rng.integers(0, 256, size=(5, 7), dtype=np.uint8)
    out = substitute_bit(a, b, 4)
    expect = np.array(
        [[substitute_bit(int(x), int(y), 4) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
    )
    assert np.array_equal(out, expect)


def test_build_modifier_single_is_encrypted_blue(rng):
    img = random_image(rng)
    key = derive_cipher_key("cam")
    out = build_modifier(img, DEFAULT_ROLES, False, key)
    assert np.array_equal(out, encrypt_plane(img[:, :, 2], key))


def test_build_modifier_xor_arithmetic():
    img = np.zeros((4, 40, 3), dtype=np.uint8)
    img[:, :, 2] = 0xF0  # modifier (blue)
    img[:, :, 1] = 0x0F  # unprocessed (green)
    key = derive_cipher_key("cam")
    out = build_modifier(img, DEFAULT_ROLES, True, key)
    assert np.array_equal(out, encrypt_plane(np.full((4, 40), 0xFF, dtype=np.uint8), key))


def test_build_modifier_xor_identical_planes_gives_zero_plane(rng):
    img = random_image(rng)
    img[:, :, 1] = img[:, :, 2]
    key = derive_cipher_key("cam")
    out = build_modifier(img, DEFAULT_ROLES, True, key)
    assert np.array_equal(out, encrypt_plane(np.zeros(img.shape[:2], dtype=np.uint8), key))


def test_embed_rejects_small_image():
    img = np.zeros((10, 15, 3), dtype=np.uint8)  # 150 px < 160
    with pytest.raises(ImageTooSmall):
        embed_spatial(img, "cam", parse_scenario("s2"))


def test_embed_s2_changes_only_red_lsb_and_green_reserve(rng):
    img = random_image(rng, 20, 30)
    stego = embed_spatial(img, "cam", parse_scenario("s2"))
    dr = stego[:, :, 0].astype(int) - img[:, :, 0].astype(int)
    assert np.abs(dr).max() <= 1
    # blue untouched
    assert np.array_equal(stego[:, :, 2], img[:, :, 2])
    # green changes confined to the reserve LSBs
    dg = stego[:, :, 1] ^ img[:, :, 1]
    flat = dg.reshape(-1)
    assert (flat[:PHOTO_ID_BITS] <= 1).all()
    assert (flat[PHOTO_ID_BITS:] == 0).all()


def test_embed_s3_max_delta_is_128(rng):
    img = random_image(rng, 20, 30)
    stego = embed_spatial(img, "cam", parse_scenario("s3"))
    dr = np.abs(stego[:, :, 0].astype(int) - img[:, :, 0].astype(int))
    assert dr.max() <= 128
    assert dr.max() > 0  # some MSB flips on random content


def test_embedding_idempotent(rng):
    img = random_image(rng, 20, 30)
    for name in ("s1", "s2", "s3", "s4"):
        sc = parse_scenario(name)
        once = embed_spatial(img, "cam", sc)
        twice = embed_spatial(once, "cam", sc)
        assert np.array_equal(once, twice), name


def test_s2_psnr_analytic_bound(rng):
    """LSB embedding: per-pixel squared error <= 1 on one of three channels."""
    for _ in range(3):
        img = random_image(rng, 32, 40)
        stego = embed_spatial(img, "cam", parse_scenario("s2"))
        q = compare(img, stego)
        assert q.mse <= 1 / 3 + 1e-12
        assert q.psnr >= 10 * np.log10(255**2 * 3)  # 52.9 dB


def test_psnr_ordering_bit1_bit4_bit8(rng):
    img = random_image(rng, 48, 64)
    p = {}
    for name in ("s1", "s2", "s3"):
        p[name] = compare(img, embed_spatial(img, "cam", parse_scenario(name))).psnr
    assert p["s2"] > p["s1"] > p["s3"]


def test_custom_roles(rng):
    img = random_image(rng, 20, 30)
    roles = ChannelRoles(modifier=0, modified=1, unprocessed=2)
    stego = embed_spatial(img, "cam", parse_scenario("s2"), roles)
    assert np.array_equal(stego[:, :, 0], img[:, :, 0])  # modifier (red) untouched
    dg = np.abs(stego[:, :, 1].astype(int) - img[:, :, 1].astype(int))
    assert dg.max() <= 1


def test_roles_must_be_distinct():
    with pytest.raises(InvalidScenario):
        ChannelRoles(modifier=0, modified=0, unprocessed=1)
