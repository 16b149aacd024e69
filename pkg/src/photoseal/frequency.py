"""Frequency-domain embedding: per-block DCT coefficient substitution.

The cipher mask and the carrier plane are tiled into 8x8 blocks and
transformed with the orthonormal 2-D DCT-II (energy-preserving, which keeps
the verification tolerance analysis tractable).  One coefficient per block
is replaced, the blocks are inverse-transformed, rounded half-up, and
clipped back to [0, 255].

Rounding and clipping perturb the embedded coefficient, so the substitution
is iterated to a fixed point: substitute, inverse-transform, round, clip,
repeat until the block stops changing.  The iteration converges within a
dozen passes even on extreme content and pins the re-extracted coefficient
to within ~4 of its target (the 8-bit rounding ceiling).  A fixed point is
also what lets the verifier separate clip-bound blocks from tampered ones:
a clean stego block re-embeds to itself bit-exactly, a tampered one does not.

Only complete 8x8 blocks carry the watermark.  A partial boundary block
cannot: its padded cells are cropped away after embedding, so no verifier
could reconstruct the state the embedder transformed.  Images whose
dimensions are not multiples of 8 keep an unwatermarked right/bottom strip
(at most 7 pixels), surfaced in verification coverage notes.
"""

from __future__ import annotations

import numpy as np
import scipy.fft

from .crypto import derive_cipher_key, derive_photo_id
from .errors import DimensionError, InvalidScenario
from .image import BLOCK, decompose, recompose
from .reserve import implant_photo_id, require_capacity
from .scenarios import DEFAULT_ROLES, FREQ_POSITIONS, ChannelRoles, FreqScenario
from .spatial import build_modifier

#: Fallback verification tolerance for positions lacking a calibrated value.
DEFAULT_TOLERANCE = 6.0

#: Upper bound on fixed-point iterations (about 12 observed worst case).
MAX_EMBED_ITERATIONS = 32

#: Per-position tolerances produced by calibrate_all(); frozen at build time
#: and regenerated/cross-checked by the calibration test.
CALIBRATED_TOLERANCES: dict[tuple[int, int], float] = {
    (1, 1): 6.0000000000001705,
    (1, 2): 4.274145177536617,
    (3, 6): 3.2904434228582105,
    (8, 8): 2.8253512168728854,
}


def _check_blocks(arr: np.ndarray) -> np.ndarray:
    arr = np.asarray(arr, dtype=np.float64)
    if arr.ndim < 2 or arr.shape[-2:] != (BLOCK, BLOCK):
        raise DimensionError(f"expected trailing 8x8 dimensions, got shape {arr.shape}")
    return arr


def dct2_block(tile: np.ndarray) -> np.ndarray:
    """Orthonormal 2-D DCT-II of an 8x8 tile (or any (..., 8, 8) batch)."""
    return scipy.fft.dctn(_check_blocks(tile), axes=(-2, -1), norm="ortho")


def _idct2_real(block: np.ndarray) -> np.ndarray:
    return scipy.fft.idctn(_check_blocks(block), axes=(-2, -1), norm="ortho")


def round_half_up(x: np.ndarray) -> np.ndarray:
    """Round to nearest integer with halves toward +inf (numpy rounds to even)."""
    return np.floor(np.asarray(x) + 0.5)


def idct2_block(block: np.ndarray) -> np.ndarray:
    """Inverse transform, round half-up, clip to [0, 255]; returns uint8."""
    return np.clip(round_half_up(_idct2_real(block)), 0, 255).astype(np.uint8)


def _pos_index(pos: tuple[int, int]) -> tuple[int, int]:
    if tuple(pos) not in FREQ_POSITIONS:
        raise InvalidScenario(f"coefficient position must be one of {FREQ_POSITIONS}, got {pos}")
    return pos[0] - 1, pos[1] - 1


def substitute_coeff(
    modified: np.ndarray, modifier: np.ndarray, pos: tuple[int, int]
) -> np.ndarray:
    """Replace the coefficient at 1-based ``pos`` of ``modified`` with the
    modifier's; the other 63 coefficients are untouched."""
    r, c = _pos_index(pos)
    modified = _check_blocks(modified)
    modifier = _check_blocks(modifier)
    if modified.shape != modifier.shape:
        raise DimensionError("modified and modifier blocks must share shape")
    out = modified.copy()
    out[..., r, c] = modifier[..., r, c]
    return out


def full_blocks(plane: np.ndarray) -> np.ndarray:
    """View of the complete 8x8 tiles of a plane, shape (rows, cols, 8, 8)."""
    plane = np.asarray(plane)
    h, w = plane.shape
    rows, cols = h // BLOCK, w // BLOCK
    return (
        plane[: rows * BLOCK, : cols * BLOCK]
        .reshape(rows, BLOCK, cols, BLOCK)
        .swapaxes(1, 2)
    )


def cipher_targets(cipher_plane: np.ndarray, pos: tuple[int, int]) -> np.ndarray:
    """Expected coefficient per complete block, from the cipher mask."""
    r, c = _pos_index(pos)
    return dct2_block(full_blocks(cipher_plane))[..., r, c]


def _substitute_pass(blocks: np.ndarray, targets: np.ndarray, r: int, c: int) -> np.ndarray:
    spectra = dct2_block(blocks)
    spectra[..., r, c] = targets
    return np.clip(round_half_up(_idct2_real(spectra)), 0, 255).astype(np.uint8)


def embed_plane(
    modified_plane: np.ndarray, cipher_plane: np.ndarray, pos: tuple[int, int]
) -> tuple[np.ndarray, int]:
    """Iterate coefficient substitution to a fixed point on every full block.

    Returns the new plane and the count of blocks that needed more than one
    pass (the clip-affected ones).
    """
    r, c = _pos_index(pos)
    targets = cipher_targets(cipher_plane, pos)
    out = np.asarray(modified_plane, dtype=np.uint8).copy()
    blocks = full_blocks(out).copy()
    cur = _substitute_pass(blocks, targets, r, c)
    clipped = 0
    for _ in range(MAX_EMBED_ITERATIONS - 1):
        nxt = _substitute_pass(cur, targets, r, c)
        changed = (nxt != cur).any(axis=(-2, -1))
        if not clipped:
            clipped = int(np.count_nonzero(changed))
        if not changed.any():
            break
        cur = nxt
    rows, cols = cur.shape[:2]
    out[: rows * BLOCK, : cols * BLOCK] = cur.swapaxes(1, 2).reshape(rows * BLOCK, cols * BLOCK)
    return out, clipped


def embed_frequency(
    image: np.ndarray,
    camera_id: str | bytes,
    scenario: FreqScenario,
    roles: ChannelRoles = DEFAULT_ROLES,
) -> np.ndarray:
    """Implant the photo ID and the per-block coefficient watermark."""
    arr = require_capacity(image)
    arr = implant_photo_id(arr, derive_photo_id(camera_id), roles)
    key = derive_cipher_key(camera_id)
    cipher = build_modifier(arr, roles, scenario.xor_dual, key)
    planes = list(decompose(arr))
    planes[roles.modified], _ = embed_plane(planes[roles.modified], cipher, scenario.coeff_pos)
    return recompose(*planes)


def coefficient_deviation(
    received_plane: np.ndarray, cipher_plane: np.ndarray, pos: tuple[int, int]
) -> np.ndarray:
    """|DCT(received)[pos] - expected| per complete block, (rows, cols) grid."""
    r, c = _pos_index(pos)
    got = dct2_block(full_blocks(received_plane))[..., r, c]
    return np.abs(got - cipher_targets(cipher_plane, pos))


def reembed_fixed_mask(
    received_plane: np.ndarray, cipher_plane: np.ndarray, pos: tuple[int, int]
) -> np.ndarray:
    """Blocks that re-embed to themselves bit-exactly.

    Clean stego blocks are fixed points of the embedding map by
    construction, including the clip-bound ones whose coefficient the
    8-bit rails keep away from its target.  Content altered after
    embedding loses the property (unless its coefficient already agreed,
    in which case it is indistinguishable from clean).
    """
    r, c = _pos_index(pos)
    targets = cipher_targets(cipher_plane, pos)
    blocks = np.ascontiguousarray(full_blocks(received_plane))
    return (_substitute_pass(blocks, targets, r, c) == blocks).all(axis=(-2, -1))


def tolerance_for(pos: tuple[int, int]) -> float:
    """Calibrated tolerance for a position, or the generic default."""
    return CALIBRATED_TOLERANCES.get(tuple(pos), DEFAULT_TOLERANCE)


def calibrate_tolerance(pos: tuple[int, int], n_blocks: int = 1000, seed: int = 2024) -> float:
    """Measure the worst clean re-extraction deviation over random image blocks.

    Embeds random cipher coefficients into carrier blocks drawn from the
    synthetic content families, runs the full fixed-point pipeline, and
    returns 1.5x the maximum deviation between the re-extracted and the
    embedded coefficient.
    """
    from .synth import carrier_blocks

    r, c = _pos_index(pos)
    rng = np.random.default_rng(seed)
    carrier = carrier_blocks(n_blocks, seed=seed).astype(np.uint8)
    cipher = rng.integers(0, 256, size=(n_blocks, BLOCK, BLOCK)).astype(np.float64)
    targets = dct2_block(cipher)[:, r, c]
    cur = _substitute_pass(carrier, targets, r, c)
    for _ in range(MAX_EMBED_ITERATIONS - 1):
        nxt = _substitute_pass(cur, targets, r, c)
        if (nxt == cur).all():
            break
        cur = nxt
    deviation = np.abs(dct2_block(cur)[:, r, c] - targets)
    return 1.5 * float(deviation.max())


def calibrate_all(n_blocks: int = 1000, seed: int = 2024) -> dict[tuple[int, int], float]:
    """Calibrated tolerance for each of the four coefficient positions."""
    return {pos: calibrate_tolerance(pos, n_blocks, seed) for pos in FREQ_POSITIONS}
