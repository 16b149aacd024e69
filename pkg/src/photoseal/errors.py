"""Exception types shared across the toolkit."""


class PhotosealError(Exception):
    """Base class for all toolkit errors."""


class InvalidCameraId(PhotosealError):
    """Camera ID is empty or longer than 256 bytes."""


class ImageTooSmall(PhotosealError):
    """Image has fewer pixels than the photo-ID reserve region needs."""


class InvalidScenario(PhotosealError):
    """Unknown scenario name, bit index, or coefficient position."""


class DimensionError(PhotosealError):
    """Arrays passed to a metric or transform have mismatched shapes."""


class RegionError(PhotosealError):
    """Attack region falls outside the image bounds."""


class DecodeError(PhotosealError):
    """Byte stream could not be decoded as an image."""


class AlreadyRegistered(PhotosealError):
    """Camera ID already present in the register."""


class NotFound(PhotosealError):
    """No register entry for the given photo ID."""


class StoreError(PhotosealError):
    """Register log file is unreadable or corrupt."""
