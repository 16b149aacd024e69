"""Originality test: re-derive the expected watermark, compare, localize.

Verification recomputes the cipher mask from the received image exactly as
the embedder did, then compares the watermark-carrying bits (spatial) or
the selected DCT coefficient of every 8x8 block (frequency, within an
absolute tolerance).  The image is authentic iff no cell mismatches and
the extracted photo ID equals the one derived from the camera ID.

Photo-ID disagreement and watermark mismatches are reported as separate
fields so an operator can tell "unknown device" from "tampered content".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from .crypto import PhotoId, derive_cipher_key, derive_photo_id
from .frequency import (
    coefficient_deviation,
    reembed_fixed_mask,
    tolerance_for,
)
from .image import BLOCK, validate_image
from .reserve import extract_photo_id, implant_photo_id, require_capacity
from .scenarios import (
    DEFAULT_ROLES,
    ChannelRoles,
    FreqScenario,
    SpatialScenario,
    scenario_name,
)
from .spatial import build_modifier

__all__ = [
    "TamperMap",
    "VerificationReport",
    "implant_photo_id",
    "extract_photo_id",
    "verify",
    "localize",
]

#: Neighbourhood used for grouping mismatch cells into rectangles.
_CROSS = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)


@dataclass
class TamperMap:
    """Boolean mismatch grid, per pixel (spatial) or per 8x8 block (frequency)."""

    granularity: str  # "pixel" or "block"
    grid: np.ndarray

    @property
    def mismatch_count(self) -> int:
        return int(np.count_nonzero(self.grid))

    @property
    def mismatch_ratio(self) -> float:
        return self.mismatch_count / self.grid.size


def localize(tamper_map: TamperMap) -> list[tuple[int, int, int, int]]:
    """Bounding rectangles (x, y, w, h) of 4-connected mismatch clusters,
    in the map's own cell coordinates."""
    labels, n = ndimage.label(tamper_map.grid, structure=_CROSS)
    rects = []
    for sl in ndimage.find_objects(labels):
        if sl is None:
            continue
        rows, cols = sl
        rects.append(
            (cols.start, rows.start, cols.stop - cols.start, rows.stop - rows.start)
        )
    return rects


@dataclass
class VerificationReport:
    """Outcome of an originality test.

    ``rects`` are pixel-space bounding rectangles of the mismatch clusters
    (block rectangles are scaled up and clipped to the image extent).
    ``saturated_blocks`` counts frequency blocks where re-embedding the
    expected coefficient would clip against [0, 255] -- the one legitimate
    source of large deviations on untampered images.  ``coverage_note``
    names any plane region the scenario cannot police.
    """

    authentic: bool
    photo_id: PhotoId
    photo_id_ok: bool
    scenario: str
    mismatch_count: int
    mismatch_ratio: float
    tamper_map: TamperMap
    rects: list[tuple[int, int, int, int]] = field(default_factory=list)
    saturated_blocks: int = 0
    tolerance: float | None = None
    coverage_note: str | None = None

    def to_dict(self) -> dict:
        return {
            "authentic": self.authentic,
            "photo_id": self.photo_id.hex,
            "photo_id_ok": self.photo_id_ok,
            "scenario": self.scenario,
            "mismatch_count": self.mismatch_count,
            "mismatch_ratio": self.mismatch_ratio,
            "rects": [{"x": x, "y": y, "w": w, "h": h} for x, y, w, h in self.rects],
            "saturated_blocks": self.saturated_blocks,
            "tolerance": self.tolerance,
            "coverage_note": self.coverage_note,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _pixel_rects(
    tamper_map: TamperMap, height: int, width: int
) -> list[tuple[int, int, int, int]]:
    rects = localize(tamper_map)
    if tamper_map.granularity == "pixel":
        return rects
    out = []
    for x, y, w, h in rects:
        px, py = x * BLOCK, y * BLOCK
        out.append((px, py, min(w * BLOCK, width - px), min(h * BLOCK, height - py)))
    return out


def verify(
    image: np.ndarray,
    camera_id: str | bytes,
    scenario: SpatialScenario | FreqScenario,
    roles: ChannelRoles = DEFAULT_ROLES,
    tolerance: float | None = None,
) -> VerificationReport:
    """Run the originality test against a directly supplied camera ID."""
    arr = require_capacity(validate_image(image))
    height, width = arr.shape[:2]

    found = extract_photo_id(arr, roles)
    photo_id_ok = found == derive_photo_id(camera_id)

    key = derive_cipher_key(camera_id)
    cipher = build_modifier(arr, roles, scenario.xor_dual, key)
    received = arr[:, :, roles.modified]

    saturated = 0
    coverage_note = None
    if scenario.domain == "spatial":
        mask = np.uint8(1 << (scenario.bit_index - 1))
        grid = (received & mask) != (cipher & mask)
        tamper_map = TamperMap("pixel", grid)
        tol = None
        if not scenario.xor_dual:
            coverage_note = (
                "single-modifier scenario: changes confined to the unprocessed "
                "plane outside the photo-ID reserve region are not detectable"
            )
    else:
        tol = float(tolerance) if tolerance is not None else tolerance_for(scenario.coeff_pos)
        deviation = coefficient_deviation(received, cipher, scenario.coeff_pos)
        over = deviation > tol
        if over.any():
            # clip-bound blocks re-embed to themselves bit-exactly; report
            # them as saturated rather than tampered
            fixed = reembed_fixed_mask(received, cipher, scenario.coeff_pos)
            saturated = int(np.count_nonzero(over & fixed))
            grid = over & ~fixed
        else:
            grid = over
        tamper_map = TamperMap("block", grid)
        if height % BLOCK or width % BLOCK:
            coverage_note = (
                f"right/bottom strip of {width % BLOCK}x{height % BLOCK} pixels "
                "holds no complete 8x8 block and carries no frequency watermark"
            )

    mismatches = tamper_map.mismatch_count
    return VerificationReport(
        authentic=photo_id_ok and mismatches == 0,
        photo_id=found,
        photo_id_ok=photo_id_ok,
        scenario=scenario_name(scenario),
        mismatch_count=mismatches,
        mismatch_ratio=tamper_map.mismatch_ratio,
        tamper_map=tamper_map,
        rects=_pixel_rects(tamper_map, height, width),
        saturated_blocks=saturated,
        tolerance=tol,
        coverage_note=coverage_note,
    )
