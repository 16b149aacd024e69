"""Spatial-domain embedding: one cipher bit substituted into every carrier byte.

The modifier plane (XORed with the unprocessed plane in dual mode) is
encrypted into a pseudorandom mask; bit ``bit_index`` of every modified-plane
byte is then replaced by the corresponding mask bit.  Bit 1 is the LSB,
bit 8 the MSB.
"""

from __future__ import annotations

import numpy as np

from .crypto import derive_cipher_key, derive_photo_id, encrypt_plane
from .errors import InvalidScenario
from .image import decompose, recompose, validate_image
from .reserve import implant_photo_id, require_capacity
from .scenarios import DEFAULT_ROLES, ChannelRoles, SpatialScenario


def substitute_bit(modified, modifier, bit_index: int):
    """Replace bit ``bit_index`` (1 = LSB .. 8 = MSB) of ``modified`` with the
    corresponding bit of ``modifier``; all other bits pass through.

    Accepts scalars or uint8 arrays of matching shape.
    """
    if not 1 <= int(bit_index) <= 8:
        raise InvalidScenario(f"bit index must be in 1..8, got {bit_index}")
    mask = np.uint8(1 << (bit_index - 1))
    keep = np.uint8(mask ^ 0xFF)
    modified = np.asarray(modified, dtype=np.uint8)
    modifier = np.asarray(modifier, dtype=np.uint8)
    return (modified & keep) | (modifier & mask)


def build_modifier(
    image: np.ndarray,
    roles: ChannelRoles = DEFAULT_ROLES,
    xor_dual: bool = False,
    key: bytes | None = None,
) -> np.ndarray:
    """Build the encrypted watermark mask from the modifier plane.

    Single mode encrypts the modifier plane directly; dual mode XORs the
    modifier and unprocessed planes first, then encrypts once.  XOR before
    encryption means verification only needs the same deterministic recipe.
    """
    if key is None or len(key) != 16:
        raise ValueError("a 16-byte cipher key is required")
    arr = validate_image(image)
    source = arr[:, :, roles.modifier]
    if xor_dual:
        source = source ^ arr[:, :, roles.unprocessed]
    return encrypt_plane(source, key)


def embed_spatial(
    image: np.ndarray,
    camera_id: str | bytes,
    scenario: SpatialScenario,
    roles: ChannelRoles = DEFAULT_ROLES,
) -> np.ndarray:
    """Implant the photo ID and the per-byte watermark bits; returns a new image.

    The photo ID goes in first so dual-modifier scenarios derive the cipher
    mask from exactly the unprocessed plane a verifier will receive.  This
    also makes embedding idempotent: a second pass recomputes the identical
    mask and rewrites the same bits.
    """
    arr = require_capacity(image)
    arr = implant_photo_id(arr, derive_photo_id(camera_id), roles)
    key = derive_cipher_key(camera_id)
    cipher = build_modifier(arr, roles, scenario.xor_dual, key)
    planes = list(decompose(arr))
    planes[roles.modified] = substitute_bit(planes[roles.modified], cipher, scenario.bit_index)
    return recompose(*planes)
