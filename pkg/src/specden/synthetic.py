"""Deterministic synthetic scenes for tests, demos, and benchmarks.

Everything here is a pure function of its arguments (noise comes from the
seeded portable generator), so fixtures regenerate bit-identically and no
binary test assets need to live in the repository.
"""

from __future__ import annotations

import numpy as np

from .imagecore import SplitMix64

__all__ = ["shapes_image", "step_image", "square_image", "textured_pair"]


def shapes_image(n: int = 128) -> np.ndarray:
    """Flat geometric shapes on a dark background, scaled to n x n.

    Piecewise-constant regions with sharp boundaries: a rectangle, a
    disc, a thin bar, and a small square, at distinct intensities.
    """
    if n < 16:
        raise ValueError(f"n must be >= 16, got {n}")
    img = np.full((n, n), 0.15)
    img[n * 5 // 32 : n * 15 // 32, n * 4 // 32 : n * 14 // 32] = 0.75
    yy, xx = np.ogrid[:n, :n]
    disc = (yy - n * 21 // 32) ** 2 + (xx - n * 21 // 32) ** 2 <= (n * 6 // 32) ** 2
    img[disc] = 0.95
    img[n * 25 // 32 : n * 28 // 32, n * 3 // 32 : n * 15 // 32] = 0.5
    img[n * 5 // 32 : n * 9 // 32, n * 20 // 32 : n * 29 // 32] = 0.35
    return img


def step_image(height: int = 64, width: int = 64, column: int | None = None) -> np.ndarray:
    """Vertical step edge: columns left of ``column`` are 0, the rest 1."""
    if column is None:
        column = width // 2
    img = np.zeros((height, width))
    img[:, column:] = 1.0
    return img


def square_image(n: int = 64, side: int = 16) -> np.ndarray:
    """White centered ``side`` x ``side`` square on black."""
    img = np.zeros((n, n))
    lo = (n - side) // 2
    img[lo : lo + side, lo : lo + side] = 1.0
    return img


def textured_pair(n: int = 96) -> tuple[np.ndarray, np.ndarray]:
    """Two structured scenes with independent noise texture.

    The first carries block/disc structure, the second diagonal stripes;
    both get seeded additive noise so their amplitude spectra are busy.
    Used to probe which of amplitude and phase carries structure.
    """
    yy, xx = np.ogrid[:n, :n]

    base_a = np.full((n, n), 0.25)
    base_a[n // 6 : n // 2, n // 6 : n // 2] = 0.85
    disc = (yy - 2 * n // 3) ** 2 + (xx - 2 * n // 3) ** 2 <= (n // 6) ** 2
    base_a[disc] = 0.65

    base_b = np.where(((yy + xx) // max(n // 12, 1)) % 2 == 0, 0.7, 0.3).astype(np.float64)

    noise_a = SplitMix64(101).normals(n * n).reshape(n, n)
    noise_b = SplitMix64(202).normals(n * n).reshape(n, n)
    img_a = np.clip(base_a + 0.12 * noise_a, 0.0, 1.0)
    img_b = np.clip(base_b + 0.12 * noise_b, 0.0, 1.0)
    return img_a, img_b
