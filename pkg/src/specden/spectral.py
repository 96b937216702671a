"""2D Fourier transforms, amplitude/phase spectra, and low-pass filtering.

The forward transform is the unnormalized DFT
``F(u,v) = sum_{m,n} x(m,n) exp(-2*pi*i*(u*m/H + v*n/W))``, computed row
then column with hand-rolled 1D transforms: iterative radix-2
Cooley-Tukey when the length is a power of two, Bluestein's chirp-z
otherwise. Arbitrary dimensions are therefore exact, with no padding, and
every 1D transform uses a fixed summation order so results are
reproducible bit for bit. The inverse carries the 1/(H*W) factor.

Spectra are stored centered: the DC bin sits at index (H//2, W//2), which
makes radial masks natural. The centering permutation is only an
involution for even sizes, so centering and uncentering are distinct
operations here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .imagecore import validate_image

__all__ = [
    "Spectrum",
    "MaskSpec",
    "SpectrumSymmetryError",
    "fft2",
    "ifft2",
    "decompose",
    "recompose",
    "center_spectrum",
    "uncenter_spectrum",
    "make_mask",
    "filter_amplitude",
    "reconstruct",
    "conjugate_symmetry_residual",
    "spectrum_symmetry_residual",
    "mask_symmetry_residual",
]


class SpectrumSymmetryError(ValueError):
    """Reconstruction input is not conjugate-symmetric: the inverse
    transform would have a non-negligible imaginary part, which means a
    filter broke the symmetry that real images guarantee."""


# ---------------------------------------------------------------------------
# 1D transforms
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def _bitrev_indices(n: int) -> np.ndarray:
    idx = np.zeros(1, dtype=np.intp)
    while len(idx) < n:
        idx = np.concatenate([2 * idx, 2 * idx + 1])
    idx.flags.writeable = False
    return idx


@lru_cache(maxsize=64)
def _twiddles(size: int) -> np.ndarray:
    # exp(-2*pi*i*k/size) for k < size/2
    k = np.arange(size // 2)
    tw = np.exp((-2j * np.pi / size) * k)
    tw.flags.writeable = False
    return tw


def _fft_pow2(a: np.ndarray) -> np.ndarray:
    """Radix-2 DIT FFT along the last axis; length must be a power of two."""
    n = a.shape[-1]
    out = np.ascontiguousarray(a[..., _bitrev_indices(n)], dtype=np.complex128)
    size = 2
    while size <= n:
        half = size // 2
        tw = _twiddles(size)
        v = out.reshape(-1, n // size, size)
        t = v[..., half:] * tw
        e = v[..., :half]
        v[..., half:] = e - t
        v[..., :half] = e + t
        size *= 2
    return out


@lru_cache(maxsize=64)
def _bluestein_tables(n: int) -> tuple[np.ndarray, np.ndarray, int]:
    # Chirp exponents use k^2 mod 2n so angles stay in [0, 2*pi).
    m = 1 << (2 * n - 1).bit_length()
    k = np.arange(n, dtype=np.int64)
    chirp = np.exp((-1j * np.pi / n) * ((k * k) % (2 * n)))
    kernel = np.zeros(m, dtype=np.complex128)
    kernel[:n] = np.conj(chirp)
    kernel[m - n + 1 :] = np.conj(chirp[1:][::-1])
    kernel_fft = _fft_pow2(kernel)
    chirp.flags.writeable = False
    kernel_fft.flags.writeable = False
    return chirp, kernel_fft, m


def _fft_bluestein(a: np.ndarray) -> np.ndarray:
    """Arbitrary-length DFT along the last axis via chirp-z convolution."""
    n = a.shape[-1]
    chirp, kernel_fft, m = _bluestein_tables(n)
    buf = np.zeros(a.shape[:-1] + (m,), dtype=np.complex128)
    buf[..., :n] = a * chirp
    conv = _ifft_pow2(_fft_pow2(buf) * kernel_fft)
    return conv[..., :n] * chirp


def _ifft_pow2(a: np.ndarray) -> np.ndarray:
    return np.conj(_fft_pow2(np.conj(a))) / a.shape[-1]


def _fft_lastaxis(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    if n & (n - 1) == 0:
        return _fft_pow2(a)
    return _fft_bluestein(a)


# ---------------------------------------------------------------------------
# 2D transforms
# ---------------------------------------------------------------------------

def fft2(img: np.ndarray) -> np.ndarray:
    """Unnormalized forward 2D DFT of a real or complex 2D array."""
    a = np.asarray(img)
    if a.ndim != 2:
        raise ValueError(f"fft2 expects a 2D array, got shape {a.shape}")
    a = a.astype(np.complex128, copy=False)
    a = _fft_lastaxis(a)  # rows
    a = _fft_lastaxis(np.ascontiguousarray(a.T))  # columns
    return np.ascontiguousarray(a.T)


def ifft2(plane: np.ndarray) -> np.ndarray:
    """Inverse 2D DFT with 1/(H*W) normalization; ifft2(fft2(x)) == x."""
    a = np.asarray(plane)
    if a.ndim != 2:
        raise ValueError(f"ifft2 expects a 2D array, got shape {a.shape}")
    h, w = a.shape
    return np.conj(fft2(np.conj(a))) / (h * w)


# ---------------------------------------------------------------------------
# Amplitude/phase representation
# ---------------------------------------------------------------------------

def center_spectrum(plane: np.ndarray) -> np.ndarray:
    """Permute a standard-order plane so the DC bin lands at (H//2, W//2)."""
    return np.fft.fftshift(plane)


def uncenter_spectrum(plane: np.ndarray) -> np.ndarray:
    """Inverse of center_spectrum (they differ for odd sizes)."""
    return np.fft.ifftshift(plane)


@dataclass(frozen=True)
class Spectrum:
    """Centered amplitude and phase planes of a 2D DFT.

    amplitude is |F| >= 0 and phase is arg(F) in (-pi, pi], both indexed
    with DC at (H//2, W//2). Bins with zero amplitude carry phase 0.
    """

    amplitude: np.ndarray
    phase: np.ndarray

    def __post_init__(self):
        a, p = np.asarray(self.amplitude), np.asarray(self.phase)
        if a.ndim != 2 or a.shape != p.shape:
            raise ValueError(
                f"amplitude/phase must be matching 2D planes, got {a.shape} vs {p.shape}"
            )
        if not np.all(np.isfinite(a)) or not np.all(np.isfinite(p)):
            raise ValueError("spectrum planes must be finite")
        if a.min() < 0:
            raise ValueError("amplitude must be non-negative")
        if p.min() <= -np.pi or p.max() > np.pi:
            raise ValueError("phase must lie in (-pi, pi]")

    @property
    def shape(self) -> tuple[int, int]:
        return self.amplitude.shape


def decompose(plane: np.ndarray) -> Spectrum:
    """Split a standard-order complex plane into a centered Spectrum."""
    c = center_spectrum(np.asarray(plane, dtype=np.complex128))
    amplitude = np.abs(c)
    phase = np.arctan2(c.imag, c.real)
    phase[amplitude == 0.0] = 0.0  # zero bins get the zero-phase convention
    phase[phase == -np.pi] = np.pi  # keep the (-pi, pi] half-open range
    return Spectrum(amplitude=amplitude, phase=phase)


def recompose(spec: Spectrum) -> np.ndarray:
    """Rebuild the standard-order complex plane A * exp(i*phase)."""
    c = spec.amplitude * (np.cos(spec.phase) + 1j * np.sin(spec.phase))
    return uncenter_spectrum(c)


# ---------------------------------------------------------------------------
# Masks and filtering
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MaskSpec:
    """Low-pass mask shape: ideal, gaussian, or butterworth roll-off.

    cutoff_fraction scales the cutoff radius D0 relative to the largest
    distance from the spectrum center, sqrt((H/2)^2 + (W/2)^2).
    """

    kind: str = "ideal"
    cutoff_fraction: float = 0.3
    order: int = 2

    def __post_init__(self):
        if self.kind not in ("ideal", "gaussian", "butterworth"):
            raise ValueError(
                f"kind must be 'ideal', 'gaussian' or 'butterworth', got {self.kind!r}"
            )
        if not 0.0 < self.cutoff_fraction <= 1.0:
            raise ValueError(
                f"cutoff_fraction must be in (0, 1], got {self.cutoff_fraction}"
            )
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")


def make_mask(height: int, width: int, spec: MaskSpec) -> np.ndarray:
    """Build a centered radial low-pass mask with values in [0, 1].

    Radial symmetry in centered coordinates makes the mask invariant under
    the conjugate-symmetry index map, so filtering with it keeps real
    images real.
    """
    if height < 1 or width < 1:
        raise ValueError(f"mask dimensions must be positive, got {height}x{width}")
    du = np.arange(height) - height // 2
    dv = np.arange(width) - width // 2
    dist = np.sqrt(du[:, None] ** 2.0 + dv[None, :] ** 2.0)
    d0 = spec.cutoff_fraction * math.sqrt((height / 2.0) ** 2 + (width / 2.0) ** 2)
    if spec.kind == "ideal":
        return (dist <= d0).astype(np.float64)
    if spec.kind == "gaussian":
        return np.exp(-(dist**2) / (2.0 * d0**2))
    return 1.0 / (1.0 + (dist / d0) ** (2 * spec.order))


def filter_amplitude(
    spec: Spectrum,
    mask: np.ndarray,
    lam: float,
    preserve_dc: bool = False,
) -> Spectrum:
    """Scale the amplitude plane by mask * lam, leaving phase untouched.

    With preserve_dc, the DC bin keeps its original amplitude no matter
    what the mask and lam do, which pins mean brightness.
    """
    if not 0.0 < lam <= 1.0:
        raise ValueError(f"lam must be in (0, 1], got {lam}")
    mask = np.asarray(mask, dtype=np.float64)
    if mask.shape != spec.shape:
        raise ValueError(
            f"mask shape {mask.shape} does not match spectrum {spec.shape}"
        )
    if not np.all(np.isfinite(mask)) or mask.min() < 0.0 or mask.max() > 1.0:
        raise ValueError("mask values must lie in [0, 1]")
    amplitude = spec.amplitude * mask * lam
    if preserve_dc:
        h, w = spec.shape
        amplitude[h // 2, w // 2] = spec.amplitude[h // 2, w // 2]
    return Spectrum(amplitude=amplitude, phase=spec.phase)


def reconstruct(spec: Spectrum) -> np.ndarray:
    """Invert a Spectrum back to a [0, 1] image.

    The inverse transform of a conjugate-symmetric spectrum is real up to
    rounding; a residual imaginary part above 1e-6 (relative) means the
    amplitude plane was filtered asymmetrically and raises
    SpectrumSymmetryError. The real part is clamped to [0, 1].
    """
    out = ifft2(recompose(spec))
    scale = max(1.0, float(np.abs(out.real).max()))
    residue = float(np.abs(out.imag).max())
    if residue >= 1e-6 * scale:
        raise SpectrumSymmetryError(
            f"imaginary residue {residue:.3e} exceeds 1e-6 of peak {scale:.3e}; "
            "the spectrum is not conjugate-symmetric"
        )
    return np.clip(out.real, 0.0, 1.0)


# ---------------------------------------------------------------------------
# Symmetry diagnostics
# ---------------------------------------------------------------------------

def _conjugate_map(plane: np.ndarray) -> np.ndarray:
    h, w = plane.shape
    return plane[(-np.arange(h)) % h][:, (-np.arange(w)) % w]


def conjugate_symmetry_residual(plane: np.ndarray) -> float:
    """Max |F(u,v) - conj(F(-u mod H, -v mod W))| of a standard-order plane."""
    plane = np.asarray(plane, dtype=np.complex128)
    return float(np.abs(plane - np.conj(_conjugate_map(plane))).max())


def spectrum_symmetry_residual(spec: Spectrum) -> tuple[float, float]:
    """(amplitude, phase) symmetry residuals of a centered Spectrum.

    Amplitude should be even under the conjugate index map; phase odd.
    The phase check runs on unit phasors so the pi/-pi seam does not
    produce spurious residue.
    """
    amp = uncenter_spectrum(spec.amplitude)
    amp_residual = float(np.abs(amp - _conjugate_map(amp)).max())
    phasor = np.exp(1j * uncenter_spectrum(spec.phase))
    phase_residual = float(np.abs(phasor - np.conj(_conjugate_map(phasor))).max())
    return amp_residual, phase_residual


def mask_symmetry_residual(mask: np.ndarray) -> float:
    """Max asymmetry of a centered real mask under the conjugate index map."""
    m = uncenter_spectrum(np.asarray(mask, dtype=np.float64))
    return float(np.abs(m - _conjugate_map(m)).max())
