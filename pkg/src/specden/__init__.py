"""Edge-enhanced spectral image denoising.

The package splits into small layers: ``imagecore`` (I/O, validation,
reproducible noise), ``edge`` (Canny detection and edge-weighted blending),
``spectral`` (from-scratch 2D FFT, amplitude/phase decomposition, low-pass
amplitude filtering), ``metrics`` (RMSE / PSNR / SSIM / R^2), ``pipeline``
(the end-to-end denoiser and parameter sweeps), and ``cli`` (the ``specden``
command). ``synthetic`` provides deterministic test scenes.
"""

from .edge import CannyParams, GradientField, canny, enhance_edges, gaussian_blur, sobel_gradients
from .imagecore import (
    CorruptImageError,
    ImageIOError,
    NoiseSpec,
    SplitMix64,
    UnsupportedImageError,
    add_noise,
    load_image,
    save_image,
    validate_image,
)
from .metrics import MetricReport, compare, psnr, r_squared, rmse, ssim
from .pipeline import PipelineParams, SweepResult, denoise, sweep, sweep_to_csv
from .spectral import (
    MaskSpec,
    Spectrum,
    SpectrumSymmetryError,
    center_spectrum,
    decompose,
    fft2,
    filter_amplitude,
    ifft2,
    make_mask,
    reconstruct,
    recompose,
    uncenter_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "CannyParams",
    "CorruptImageError",
    "GradientField",
    "ImageIOError",
    "MaskSpec",
    "MetricReport",
    "NoiseSpec",
    "PipelineParams",
    "Spectrum",
    "SpectrumSymmetryError",
    "SplitMix64",
    "SweepResult",
    "UnsupportedImageError",
    "add_noise",
    "canny",
    "center_spectrum",
    "compare",
    "decompose",
    "denoise",
    "enhance_edges",
    "fft2",
    "filter_amplitude",
    "gaussian_blur",
    "ifft2",
    "load_image",
    "make_mask",
    "psnr",
    "r_squared",
    "reconstruct",
    "recompose",
    "rmse",
    "save_image",
    "sobel_gradients",
    "ssim",
    "sweep",
    "sweep_to_csv",
    "uncenter_spectrum",
    "validate_image",
]
