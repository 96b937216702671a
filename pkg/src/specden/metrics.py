"""Image-quality and regression metrics for judging denoising output.

All image metrics run on [0, 1] float buffers with peak = 1; dB values
for a 255 peak differ only by a constant offset. PSNR uses +inf as the
zero-error sentinel, which serializes to JSON null.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .imagecore import validate_image

__all__ = ["MetricReport", "rmse", "psnr", "ssim", "r_squared", "compare"]

_SSIM_WINDOW = 8
_SSIM_C1 = (0.01 * 1.0) ** 2
_SSIM_C2 = (0.03 * 1.0) ** 2


def _pair(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = validate_image(a, "first image")
    b = validate_image(b, "second image")
    if a.shape != b.shape:
        raise ValueError(f"image shapes differ: {a.shape} vs {b.shape}")
    return a, b


def rmse(a: np.ndarray, b: np.ndarray) -> float:
    """Root mean squared pixel difference."""
    a, b = _pair(a, b)
    return float(np.sqrt(np.mean((a - b) ** 2)))


def psnr(a: np.ndarray, b: np.ndarray, peak: float = 1.0) -> float:
    """Peak signal-to-noise ratio in dB; +inf when the images are equal."""
    if peak <= 0:
        raise ValueError(f"peak must be > 0, got {peak}")
    err = rmse(a, b)
    if err == 0.0:
        return math.inf
    return 20.0 * math.log10(peak / err)


def _window_sums(x: np.ndarray, k: int) -> np.ndarray:
    # k x k box sums at stride 1 via a zero-padded integral image
    h, w = x.shape
    s = np.zeros((h + 1, w + 1))
    np.cumsum(np.cumsum(x, axis=0), axis=1, out=s[1:, 1:])
    return s[k:, k:] - s[:-k, k:] - s[k:, :-k] + s[:-k, :-k]


def ssim(a: np.ndarray, b: np.ndarray) -> float:
    """Mean structural similarity over 8x8 sliding windows, stride 1.

    Window statistics are plain (maximum-likelihood) moments; the
    stabilizers are C1 = (0.01*peak)^2 and C2 = (0.03*peak)^2 with
    peak = 1.
    """
    a, b = _pair(a, b)
    k = _SSIM_WINDOW
    if a.shape[0] < k or a.shape[1] < k:
        raise ValueError(f"images must be at least {k}x{k} for ssim, got {a.shape}")
    n = float(k * k)
    mu_a = _window_sums(a, k) / n
    mu_b = _window_sums(b, k) / n
    var_a = _window_sums(a * a, k) / n - mu_a**2
    var_b = _window_sums(b * b, k) / n - mu_b**2
    cov = _window_sums(a * b, k) / n - mu_a * mu_b
    num = (2.0 * mu_a * mu_b + _SSIM_C1) * (2.0 * cov + _SSIM_C2)
    den = (mu_a**2 + mu_b**2 + _SSIM_C1) * (var_a + var_b + _SSIM_C2)
    return float(np.mean(num / den))


def r_squared(pred, obs) -> float:
    """Coefficient of determination 1 - SSE/SST of predictions vs observations."""
    pred = np.asarray(pred, dtype=np.float64).reshape(-1)
    obs = np.asarray(obs, dtype=np.float64).reshape(-1)
    if pred.shape != obs.shape:
        raise ValueError(f"length mismatch: {pred.size} vs {obs.size}")
    if obs.size < 2:
        raise ValueError(f"need at least 2 values, got {obs.size}")
    sst = float(np.sum((obs - obs.mean()) ** 2))
    if sst == 0.0:
        raise ValueError("observations have zero variance")
    sse = float(np.sum((obs - pred) ** 2))
    return 1.0 - sse / sst


@dataclass(frozen=True)
class MetricReport:
    """Bundle of quality metrics for one image pair."""

    rmse: float
    psnr: float
    ssim: float
    r_squared: float | None = None

    def __post_init__(self) -> None:
        if not self.rmse >= 0.0:
            raise ValueError(f"rmse must be >= 0, got {self.rmse}")
        if not -1.0 <= self.ssim <= 1.0:
            raise ValueError(f"ssim must be in [-1, 1], got {self.ssim}")
        if (self.rmse == 0.0) != math.isinf(self.psnr):
            raise ValueError("psnr must be infinite exactly when rmse is 0")
        if self.r_squared is not None and not self.r_squared <= 1.0:
            raise ValueError(f"r_squared must be <= 1, got {self.r_squared}")

    def to_json(self) -> str:
        """Single-line JSON with psnr_db null when the error is zero."""
        return json.dumps(
            {
                "rmse": self.rmse,
                "psnr_db": None if math.isinf(self.psnr) else self.psnr,
                "ssim": self.ssim,
            }
        )


def compare(a: np.ndarray, b: np.ndarray) -> MetricReport:
    """Evaluate rmse/psnr/ssim of ``a`` against reference ``b``."""
    return MetricReport(rmse=rmse(a, b), psnr=psnr(a, b), ssim=ssim(a, b))
