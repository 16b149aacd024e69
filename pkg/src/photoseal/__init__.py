"""photoseal: fragile watermarking for image originality protection.

Implants a camera-derived secret originality identifier into RGB images,
verifies originality, localizes tampering, benchmarks embedding quality,
and serves the verification protocol over HTTP.

The watermark is fragile by design: any post-embedding modification of the
carrier content breaks it.  Stego images must therefore be stored
losslessly (PNG or BMP); JPEG recompression destroys the identifier.
"""

from .attacks import (
    AttackSpec,
    DetectionReport,
    apply_attack,
    load_campaign_config,
    run_campaign,
    zone_rect,
)
from .cidr import CidrRecord, CidrStore
from .crypto import (
    PhotoId,
    derive_cipher_key,
    derive_photo_id,
    encrypt_plane,
)
from .errors import (
    AlreadyRegistered,
    DecodeError,
    DimensionError,
    ImageTooSmall,
    InvalidCameraId,
    InvalidScenario,
    NotFound,
    PhotosealError,
    RegionError,
    StoreError,
)
from .frequency import (
    CALIBRATED_TOLERANCES,
    DEFAULT_TOLERANCE,
    calibrate_all,
    calibrate_tolerance,
    dct2_block,
    embed_frequency,
    idct2_block,
    substitute_coeff,
)
from .image import (
    BlockGrid,
    decompose,
    load_image,
    pad_to_block_multiple,
    reassemble,
    recompose,
    save_image,
)
from .metrics import QualityReport, compare, mae, mse, psnr, ssim, uiqi
from .reserve import extract_photo_id, implant_photo_id
from .scenarios import (
    DEFAULT_ROLES,
    SCENARIOS,
    ChannelRoles,
    FreqScenario,
    SpatialScenario,
    parse_scenario,
)
from .spatial import build_modifier, embed_spatial, substitute_bit
from .synth import gradient_image, noise_image, photo_image, standard_test_images
from .verify import TamperMap, VerificationReport, localize, verify

__version__ = "0.1.0"

__all__ = [
    "AttackSpec",
    "DetectionReport",
    "apply_attack",
    "load_campaign_config",
    "run_campaign",
    "zone_rect",
    "CidrRecord",
    "CidrStore",
    "PhotoId",
    "derive_cipher_key",
    "derive_photo_id",
    "encrypt_plane",
    "PhotosealError",
    "AlreadyRegistered",
    "DecodeError",
    "DimensionError",
    "ImageTooSmall",
    "InvalidCameraId",
    "InvalidScenario",
    "NotFound",
    "RegionError",
    "StoreError",
    "CALIBRATED_TOLERANCES",
    "DEFAULT_TOLERANCE",
    "calibrate_all",
    "calibrate_tolerance",
    "dct2_block",
    "embed_frequency",
    "idct2_block",
    "substitute_coeff",
    "BlockGrid",
    "decompose",
    "load_image",
    "pad_to_block_multiple",
    "reassemble",
    "recompose",
    "save_image",
    "QualityReport",
    "compare",
    "mae",
    "mse",
    "psnr",
    "ssim",
    "uiqi",
    "extract_photo_id",
    "implant_photo_id",
    "DEFAULT_ROLES",
    "SCENARIOS",
    "ChannelRoles",
    "FreqScenario",
    "SpatialScenario",
    "parse_scenario",
    "build_modifier",
    "embed_spatial",
    "substitute_bit",
    "gradient_image",
    "noise_image",
    "photo_image",
    "standard_test_images",
    "TamperMap",
    "VerificationReport",
    "localize",
    "verify",
]
