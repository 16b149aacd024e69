"""Photo-ID reserve region: the first 160 unprocessed-plane samples.

The 160 digest bits live in the LSBs of the first 160 samples of the
unprocessed plane in row-major order.  Keeping the identifier in-band
means verification needs no sidecar metadata, at the cost of 160
single-bit changes that show up in the quality metrics.
"""

from __future__ import annotations

import numpy as np

from .crypto import PHOTO_ID_BITS, PhotoId
from .errors import ImageTooSmall
from .image import decompose, recompose, validate_image
from .scenarios import DEFAULT_ROLES, ChannelRoles


def require_capacity(image: np.ndarray) -> np.ndarray:
    """Reject images with fewer pixels than the reserve region holds bits."""
    arr = validate_image(image)
    n = arr.shape[0] * arr.shape[1]
    if n < PHOTO_ID_BITS:
        raise ImageTooSmall(
            f"image has {n} pixels; embedding needs at least {PHOTO_ID_BITS}"
        )
    return arr


def implant_photo_id(
    image: np.ndarray, photo_id: PhotoId, roles: ChannelRoles = DEFAULT_ROLES
) -> np.ndarray:
    """Write the 160 digest bits into the reserve region LSBs; returns a copy."""
    arr = require_capacity(image)
    planes = list(decompose(arr))
    plane = planes[roles.unprocessed]
    flat = plane.reshape(-1)
    flat[:PHOTO_ID_BITS] = (flat[:PHOTO_ID_BITS] & 0xFE) | photo_id.bits()
    planes[roles.unprocessed] = flat.reshape(plane.shape)
    return recompose(*planes)


def extract_photo_id(image: np.ndarray, roles: ChannelRoles = DEFAULT_ROLES) -> PhotoId:
    """Read the 160 reserve-region LSBs back as a photo ID (pure read)."""
    arr = require_capacity(image)
    flat = arr[:, :, roles.unprocessed].reshape(-1)
    return PhotoId.from_bits(flat[:PHOTO_ID_BITS] & 1)
