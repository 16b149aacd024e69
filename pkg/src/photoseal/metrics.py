"""Objective quality metrics comparing an original image against its stego copy.

Five metrics: mean absolute error, mean squared error, peak signal-to-noise
ratio, and the two HVS-oriented indices -- the universal image quality index
and the (global, single-window) structural similarity index.

Error metrics are pooled over all samples of all channels jointly; the HVS
indices are computed globally per channel and averaged.  Statistics use the
population convention (1/N), matching the test oracles.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError

#: Peak sample value for 8-bit images.
PEAK = 255.0

#: SSIM stabilizing constants (k1=0.01, k2=0.03 on the 8-bit dynamic range).
SSIM_C1 = (0.01 * PEAK) ** 2
SSIM_C2 = (0.03 * PEAK) ** 2


def _pair(x, v) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if x.shape != v.shape:
        raise DimensionError(f"shape mismatch: {x.shape} vs {v.shape}")
    if x.size == 0:
        raise DimensionError("inputs must be nonempty")
    return x, v


def mae(x, v) -> float:
    """Mean absolute error over all samples jointly."""
    x, v = _pair(x, v)
    return float(np.mean(np.abs(x - v)))


def mse(x, v) -> float:
    """Mean squared error over all samples jointly."""
    x, v = _pair(x, v)
    return float(np.mean((x - v) ** 2))


def psnr(x, v, peak: float = PEAK) -> float:
    """Peak signal-to-noise ratio in dB; +inf for identical inputs."""
    err = mse(x, v)
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(peak * peak / err)


def _uiqi_channel(x: np.ndarray, v: np.ndarray) -> float:
    xm, vm = x.mean(), v.mean()
    vx, vv = x.var(), v.var()
    cov = ((x - xm) * (v - vm)).mean()
    lum_den = xm * xm + vm * vm
    if vx == 0.0 and vv == 0.0:
        if xm == vm:
            return 1.0
        # constant planes with different levels: only luminance distortion applies
        return float(2.0 * xm * vm / lum_den)
    # combined form 4*cov*xm*vm / ((vx+vv)*(xm^2+vm^2)) avoids 0/0 when a
    # single plane is constant (cov is then 0 and the index is 0)
    if lum_den == 0.0:
        return 0.0
    return float(4.0 * cov * xm * vm / ((vx + vv) * lum_den))


def _ssim_channel(x: np.ndarray, v: np.ndarray) -> float:
    xm, vm = x.mean(), v.mean()
    vx, vv = x.var(), v.var()
    cov = ((x - xm) * (v - vm)).mean()
    return float(
        (2.0 * xm * vm + SSIM_C1)
        * (2.0 * cov + SSIM_C2)
        / ((xm * xm + vm * vm + SSIM_C1) * (vx + vv + SSIM_C2))
    )


def _per_channel(fn, x: np.ndarray, v: np.ndarray) -> list[float]:
    if x.ndim == 2:
        return [fn(x, v)]
    return [fn(x[..., k], v[..., k]) for k in range(x.shape[-1])]


def uiqi(x, v) -> float:
    """Universal image quality index: correlation x luminance x contrast,
    computed globally per channel and averaged. 1.0 means identical."""
    x, v = _pair(x, v)
    return float(np.mean(_per_channel(_uiqi_channel, x, v)))


def ssim(x, v) -> float:
    """Global structural similarity index per channel, averaged.

    Single-window form on the whole plane with the usual stabilizing
    constants (the contrast/structure constant folded in as c3 = c2/2).
    """
    x, v = _pair(x, v)
    return float(np.mean(_per_channel(_ssim_channel, x, v)))


@dataclass
class QualityReport:
    """All five metrics, joint plus per-channel breakdown."""

    mae: float
    mse: float
    psnr: float
    ssim: float
    uiqi: float
    mae_channels: tuple[float, ...]
    mse_channels: tuple[float, ...]
    psnr_channels: tuple[float, ...]
    ssim_channels: tuple[float, ...]
    uiqi_channels: tuple[float, ...]

    CSV_FIELDS = ("mae", "mse", "psnr", "ssim", "uiqi")

    def to_dict(self) -> dict:
        d = {name: getattr(self, name) for name in self.CSV_FIELDS}
        for name in self.CSV_FIELDS:
            d[f"{name}_channels"] = list(getattr(self, f"{name}_channels"))
        return d

    def to_json(self, **kwargs) -> str:
        # JSON has no Infinity literal; render identical-image PSNR as a string
        d = self.to_dict()
        if math.isinf(d["psnr"]):
            d["psnr"] = "inf"
        d["psnr_channels"] = ["inf" if math.isinf(p) else p for p in d["psnr_channels"]]
        return json.dumps(d, **kwargs)

    def csv_row(self) -> list[str]:
        return [f"{getattr(self, name):.6f}" for name in self.CSV_FIELDS]


def compare(x, v) -> QualityReport:
    """Compute the full metric bundle for an (original, processed) pair."""
    x, v = _pair(x, v)
    return QualityReport(
        mae=mae(x, v),
        mse=mse(x, v),
        psnr=psnr(x, v),
        ssim=ssim(x, v),
        uiqi=uiqi(x, v),
        mae_channels=tuple(_per_channel(lambda a, b: float(np.mean(np.abs(a - b))), x, v)),
        mse_channels=tuple(_per_channel(lambda a, b: float(np.mean((a - b) ** 2)), x, v)),
        psnr_channels=tuple(_per_channel(psnr, x, v)),
        ssim_channels=tuple(_per_channel(_ssim_channel, x, v)),
        uiqi_channels=tuple(_per_channel(_uiqi_channel, x, v)),
    )
