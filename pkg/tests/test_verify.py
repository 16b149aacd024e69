import numpy as np
import pytest

from photoseal import (
    TamperMap,
    derive_photo_id,
    embed_frequency,
    embed_spatial,
    extract_photo_id,
    implant_photo_id,
    localize,
    parse_scenario,
    verify,
)
from photoseal.crypto import PHOTO_ID_BITS
from photoseal.errors import ImageTooSmall

from conftest import random_image


def test_implant_extract_roundtrip(rng):
    img = random_image(rng, 20, 30)
    pid = derive_photo_id("camera-7")
    assert extract_photo_id(implant_photo_id(img, pid)) == pid


def test_implant_changes_at_most_160_samples_by_one(rng):
    img = random_image(rng, 20, 30)
    out = implant_photo_id(img, derive_photo_id("cam"))
    delta = out.astype(int) - img.astype(int)
    assert np.abs(delta).max() <= 1
    assert np.count_nonzero(delta) <= PHOTO_ID_BITS
    assert np.count_nonzero(delta[:, :, 0]) == 0
    assert np.count_nonzero(delta[:, :, 2]) == 0


def test_implant_zero_digest_into_white_plane():
    from photoseal.crypto import PhotoId

    img = np.full((16, 16, 3), 0xFF, dtype=np.uint8)
    out = implant_photo_id(img, PhotoId(b"\x00" * 20))
    green = out[:, :, 1].reshape(-1)
    assert (green[:PHOTO_ID_BITS] == 0xFE).all()
    assert (green[PHOTO_ID_BITS:] == 0xFF).all()


def test_extract_is_pure_read(rng):
    img = random_image(rng, 20, 30)
    before = img.copy()
    extract_photo_id(img)
    assert np.array_equal(img, before)


def test_extract_rejects_small_image():
    with pytest.raises(ImageTooSmall):
        extract_photo_id(np.zeros((5, 5, 3), dtype=np.uint8))


@pytest.mark.parametrize("name", ["s1", "s2", "s3", "s4", "f1", "f2", "f3", "f4", "f5"])
def test_clean_stego_verifies_authentic(small_photo, name):
    sc = parse_scenario(name)
    embed = embed_spatial if sc.domain == "spatial" else embed_frequency
    stego = embed(small_photo, "camera-A", sc)
    rep = verify(stego, "camera-A", sc)
    assert rep.authentic
    assert rep.mismatch_count == 0
    assert rep.photo_id_ok
    assert rep.rects == []


def test_single_lsb_flip_localizes_exactly(small_photo):
    sc = parse_scenario("s2")
    stego = embed_spatial(small_photo, "cam", sc)
    tampered = stego.copy()
    tampered[10, 10, 0] ^= 1
    rep = verify(tampered, "cam", sc)
    assert not rep.authentic
    assert rep.mismatch_count == 1
    assert rep.tamper_map.grid[10, 10]
    assert rep.rects == [(10, 10, 1, 1)]
    assert rep.photo_id_ok  # photo ID untouched: content tamper only


def test_zeroed_reserve_region_breaks_photo_id(small_photo):
    sc = parse_scenario("s2")
    stego = embed_spatial(small_photo, "cam", sc)
    tampered = stego.copy()
    green = tampered[:, :, 1].reshape(-1)
    green[:PHOTO_ID_BITS] &= 0xFE
    rep = verify(tampered, "cam", sc)
    assert not rep.photo_id_ok
    assert not rep.authentic
    from photoseal.crypto import PhotoId

    assert rep.photo_id == PhotoId(b"\x00" * 20)


def test_wrong_camera_id_balanced_mismatch(small_photo):
    sc = parse_scenario("s2")
    stego = embed_spatial(small_photo, "camera-A", sc)
    rep = verify(stego, "camera-B", sc)
    assert not rep.authentic
    assert not rep.photo_id_ok
    assert abs(rep.mismatch_ratio - 0.5) < 0.05


def test_frequency_block_tamper_flags_block(small_photo):
    sc = parse_scenario("f4")
    stego = embed_frequency(small_photo, "cam", sc)
    tampered = stego.copy()
    tampered[16:24, 32:40, 0] = 0  # one full block of the carrier
    rep = verify(tampered, "cam", sc)
    assert not rep.authentic
    assert rep.tamper_map.granularity == "block"
    assert rep.tamper_map.grid[2, 4]


def test_frequency_rects_are_pixel_space(small_photo):
    sc = parse_scenario("f4")
    stego = embed_frequency(small_photo, "cam", sc)
    tampered = stego.copy()
    tampered[16:24, 32:40, 0] ^= 0x55
    rep = verify(tampered, "cam", sc)
    assert any(
        x <= 32 < x + w and y <= 16 < y + h for (x, y, w, h) in rep.rects
    )


def test_spatial_coverage_note_for_single_modifier(small_photo):
    rep = verify(
        embed_spatial(small_photo, "cam", parse_scenario("s2")), "cam", parse_scenario("s2")
    )
    assert rep.coverage_note is not None
    rep = verify(
        embed_spatial(small_photo, "cam", parse_scenario("s4")), "cam", parse_scenario("s4")
    )
    assert rep.coverage_note is None


def test_xor_dual_detects_green_plane_tamper(small_photo):
    """Single-modifier spatial cannot see green-plane edits; dual mode can."""
    s2, s4 = parse_scenario("s2"), parse_scenario("s4")
    for sc, detected in ((s2, False), (s4, True)):
        stego = embed_spatial(small_photo, "cam", sc)
        tampered = stego.copy()
        tampered[50, 50, 1] ^= 0x40  # green, outside reserve region
        rep = verify(tampered, "cam", sc)
        assert (not rep.authentic) == detected, sc


def test_report_json_shape(small_photo):
    sc = parse_scenario("f2")
    rep = verify(embed_frequency(small_photo, "cam", sc), "cam", sc)
    d = rep.to_dict()
    for key in (
        "authentic", "photo_id", "scenario", "mismatch_count",
        "mismatch_ratio", "rects", "saturated_blocks",
    ):
        assert key in d
    assert d["scenario"] == "f2"
    assert isinstance(d["photo_id"], str) and len(d["photo_id"]) == 40


def test_localize_empty():
    assert localize(TamperMap("pixel", np.zeros((5, 5), bool))) == []


def test_localize_single_cell():
    grid = np.zeros((6, 8), bool)
    grid[3, 5] = True
    assert localize(TamperMap("pixel", grid)) == [(5, 3, 1, 1)]


def test_localize_two_disjoint_clusters():
    grid = np.zeros((10, 10), bool)
    grid[0:2, 0:2] = True
    grid[6:8, 6:8] = True
    rects = sorted(localize(TamperMap("pixel", grid)))
    assert rects == [(0, 0, 2, 2), (6, 6, 2, 2)]


def test_localize_diagonal_cells_are_separate():
    # 4-connectivity: diagonal neighbours are distinct components
    grid = np.zeros((4, 4), bool)
    grid[0, 0] = grid[1, 1] = True
    assert len(localize(TamperMap("pixel", grid))) == 2


def test_clean_verification_over_random_images(rng):
    """No false positives on 30 random images across a scenario sample."""
    for name in ("s2", "s4", "f4"):
        sc = parse_scenario(name)
        embed = embed_spatial if sc.domain == "spatial" else embed_frequency
        for i in range(10):
            img = random_image(rng, 24, 32)
            rep = verify(embed(img, f"c{i}", sc), f"c{i}", sc)
            assert rep.authentic, (name, i)
