"""Shared test helpers.

The naive double-sum DFT oracle lives here so the spectral unit tests and
the acceptance suite use one definition. It is built from the transform's
textbook formula with dense exponential matrices and never calls into the
package's FFT code, keeping the two routes independent.
"""

import subprocess
import sys

import numpy as np


def naive_dft2(x):
    """O(N^2) forward 2D DFT: F = E_H @ x @ E_W^T, unnormalized."""
    x = np.asarray(x, dtype=np.complex128)
    h, w = x.shape
    eh = np.exp(-2j * np.pi * np.outer(np.arange(h), np.arange(h)) / h)
    ew = np.exp(-2j * np.pi * np.outer(np.arange(w), np.arange(w)) / w)
    return eh @ x @ ew.T


def rand_image(rng, h, w, lo=0.0, hi=1.0):
    """Random image with entries in [lo, hi] from a numpy Generator."""
    return lo + (hi - lo) * rng.random((h, w))


def quantized(img):
    """Snap an image to the 8-bit grid, matching file round-trips."""
    return np.round(np.asarray(img) * 255.0) / 255.0


def run_cli(*args, **kwargs):
    """Run the CLI in a subprocess; returns CompletedProcess with text I/O."""
    return subprocess.run(
        [sys.executable, "-m", "specden.cli", *map(str, args)],
        capture_output=True,
        text=True,
        **kwargs,
    )
