"""Key material derived from camera IDs, and the deterministic plane cipher.

The camera ID is the device secret.  Two values are derived from it:

* the photo ID -- SHA-1 of the raw ID bytes, a public 160-bit device
  identifier implanted into every image and indexed by the register;
* the cipher key -- the first 16 bytes of SHA-256 of the same bytes,
  used to encrypt the modifier plane.

Plane encryption runs AES-128 in deterministic codebook (ECB) mode so the
embedder and the verifier compute identical ciphertexts with no shared
nonce channel.  The ciphertext acts as a keyed pseudorandom mask, not a
confidentiality envelope; block-pattern leakage is acceptable here.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np
from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

from .errors import InvalidCameraId

CAMERA_ID_MAX_BYTES = 256
PHOTO_ID_BITS = 160


@dataclass(frozen=True)
class PhotoId:
    """160-bit public device identifier (SHA-1 digest of the camera ID)."""

    digest: bytes

    def __post_init__(self):
        if len(self.digest) != PHOTO_ID_BITS // 8:
            raise ValueError(f"photo ID must be {PHOTO_ID_BITS} bits")

    @property
    def hex(self) -> str:
        """Canonical rendering: 40 uppercase hex characters."""
        return self.digest.hex().upper()

    def bits(self) -> np.ndarray:
        """Digest as 160 bits, most significant bit of each byte first."""
        return np.unpackbits(np.frombuffer(self.digest, dtype=np.uint8))

    @classmethod
    def from_bits(cls, bits: np.ndarray) -> "PhotoId":
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.shape != (PHOTO_ID_BITS,):
            raise ValueError(f"expected {PHOTO_ID_BITS} bits, got shape {bits.shape}")
        return cls(np.packbits(bits).tobytes())

    @classmethod
    def from_hex(cls, text: str) -> "PhotoId":
        return cls(bytes.fromhex(text))

    def __str__(self) -> str:
        return self.hex


def camera_id_bytes(camera_id: str | bytes) -> bytes:
    """Normalize a camera ID to raw bytes (UTF-8 for text) and validate length."""
    raw = camera_id.encode("utf-8") if isinstance(camera_id, str) else bytes(camera_id)
    if not 1 <= len(raw) <= CAMERA_ID_MAX_BYTES:
        raise InvalidCameraId(
            f"camera ID must be 1..{CAMERA_ID_MAX_BYTES} bytes, got {len(raw)}"
        )
    return raw


def derive_photo_id(camera_id: str | bytes) -> PhotoId:
    """SHA-1 digest of the camera-ID bytes."""
    return PhotoId(hashlib.sha1(camera_id_bytes(camera_id)).digest())


def derive_cipher_key(camera_id: str | bytes) -> bytes:
    """First 128 bits of SHA-256 of the camera-ID bytes.

    Hashing (rather than padding the raw ID) handles arbitrary ID lengths
    uniformly; the verifier reproduces the same construction.
    """
    return hashlib.sha256(camera_id_bytes(camera_id)).digest()[:16]


def encrypt_bytes(data: bytes, key: bytes) -> bytes:
    """AES-128-ECB over ``data`` zero-padded to a 16-byte multiple, truncated back."""
    if len(key) != 16:
        raise ValueError("cipher key must be 16 bytes")
    pad = (-len(data)) % 16
    enc = Cipher(algorithms.AES(key), modes.ECB()).encryptor()
    out = enc.update(data + b"\x00" * pad) + enc.finalize()
    return out[: len(data)]


def encrypt_plane(plane: np.ndarray, key: bytes) -> np.ndarray:
    """Encrypt a channel plane deterministically, preserving its shape.

    Samples are serialized row-major, ciphered with AES-128-ECB, and
    reshaped.  Identical (plane, key) inputs always produce identical
    output, which is what lets the verifier re-derive the mask.
    """
    plane = np.asarray(plane, dtype=np.uint8)
    if plane.size == 0:
        raise ValueError("plane must be nonempty")
    ct = encrypt_bytes(plane.tobytes(), key)
    return np.frombuffer(ct, dtype=np.uint8).reshape(plane.shape)
