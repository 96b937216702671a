"""Image buffers, PGM/PNG file I/O, and seeded synthetic noise.

Images are 2D float64 arrays with intensities in [0, 1]. Files are 8-bit
at the boundary (binary PGM P5 with maxval 255, or PNG); everything in
between stays floating point so quantization happens exactly once on save.

Noise injection uses SplitMix64, a tiny counter-based PRNG with a published
reference sequence, so noisy fixtures are bit-identical across platforms
and numpy versions. Gaussian variates come from Box-Muller on that stream.
"""

from __future__ import annotations

import math
import os
import zlib
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ImageIOError",
    "UnsupportedImageError",
    "CorruptImageError",
    "NoiseSpec",
    "SplitMix64",
    "validate_image",
    "load_image",
    "save_image",
    "add_noise",
]

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


class ImageIOError(Exception):
    """Base class for image file errors."""


class UnsupportedImageError(ImageIOError):
    """Recognized file, but a format/bit depth/extension we do not handle."""


class CorruptImageError(ImageIOError):
    """File claims a supported format but its contents do not parse."""


def validate_image(img: np.ndarray, name: str = "image") -> np.ndarray:
    """Check the [0,1] grayscale buffer contract and return the array.

    Raises ValueError on wrong rank, empty axes, non-finite values, or
    intensities outside [0, 1].
    """
    img = np.asarray(img)
    if img.ndim != 2:
        raise ValueError(f"{name} must be 2D, got shape {img.shape}")
    if img.shape[0] < 1 or img.shape[1] < 1:
        raise ValueError(f"{name} must have positive dimensions, got {img.shape}")
    if not np.all(np.isfinite(img)):
        raise ValueError(f"{name} contains non-finite values")
    if img.min() < 0.0 or img.max() > 1.0:
        raise ValueError(
            f"{name} intensities must lie in [0, 1], got "
            f"[{img.min()}, {img.max()}]"
        )
    return img.astype(np.float64, copy=False)


def _round_half_up_to_u8(img: np.ndarray) -> np.ndarray:
    # round(v*255) with halves going up, e.g. 0.5 -> 128
    return np.clip(np.floor(img * 255.0 + 0.5), 0, 255).astype(np.uint8)


# ---------------------------------------------------------------------------
# SplitMix64
# ---------------------------------------------------------------------------

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U53 = float(2.0**-53)


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood; the java.util reference mix).

    The k-th raw output is mix(seed + k*GAMMA) with all arithmetic mod 2**64,
    which makes the stream a pure function of (seed, k) and lets draws be
    vectorized without changing the sequence. ``uniforms`` maps the top 53
    bits to [0, 1); ``normals`` applies Box-Muller to consecutive uniform
    pairs, emitting the cosine then the sine variate of each pair.
    """

    def __init__(self, seed: int):
        if not 0 <= seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self._seed = np.uint64(seed)
        self._count = 0  # raw outputs consumed so far

    def raw(self, n: int) -> np.ndarray:
        """Next ``n`` raw uint64 outputs."""
        k = np.arange(self._count + 1, self._count + n + 1, dtype=np.uint64)
        self._count += n
        z = self._seed + k * _GAMMA  # wraps mod 2**64
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        return z ^ (z >> np.uint64(31))

    def uniforms(self, n: int) -> np.ndarray:
        """Next ``n`` doubles uniform on [0, 1)."""
        return (self.raw(n) >> np.uint64(11)).astype(np.float64) * _U53

    def normals(self, n: int) -> np.ndarray:
        """Next ``n`` standard normal doubles via Box-Muller.

        Consumes 2*ceil(n/2) raw outputs; pairs are (cos, sin) variates.
        """
        pairs = (n + 1) // 2
        u = (self.raw(2 * pairs) >> np.uint64(11)).astype(np.float64)
        u1 = (u[0::2] + 1.0) * _U53  # in (0, 1], keeps log() finite
        u2 = u[1::2] * _U53
        r = np.sqrt(-2.0 * np.log(u1))
        theta = 2.0 * np.pi * u2
        out = np.empty(2 * pairs)
        out[0::2] = r * np.cos(theta)
        out[1::2] = r * np.sin(theta)
        return out[:n]


# ---------------------------------------------------------------------------
# File I/O
# ---------------------------------------------------------------------------

def load_image(path: str | os.PathLike) -> np.ndarray:
    """Load a binary PGM (P5) or PNG file as a float64 image in [0, 1].

    8-bit samples map by v/255, 16-bit by v/65535; color PNGs are reduced
    to luma with weights 0.299/0.587/0.114. The format is detected from the
    file's magic bytes, not its extension.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    if data.startswith(b"P5"):
        return _decode_pgm(data)
    if data.startswith(_PNG_MAGIC):
        return _decode_png(path, data)
    raise UnsupportedImageError(
        f"{path}: not a binary PGM (P5) or PNG file"
    )


def save_image(img: np.ndarray, path: str | os.PathLike) -> None:
    """Write an image as binary PGM or 8-bit grayscale PNG, by extension.

    Pixels are quantized by round(v*255), halves up, clamped to [0, 255].
    """
    img = validate_image(img)
    ext = os.path.splitext(os.fspath(path))[1].lower()
    raster = _round_half_up_to_u8(img)
    if ext == ".pgm":
        h, w = raster.shape
        header = f"P5\n{w} {h}\n255\n".encode("ascii")
        with open(path, "wb") as fh:
            fh.write(header)
            fh.write(raster.tobytes())
    elif ext == ".png":
        from PIL import Image

        Image.fromarray(raster, mode="L").save(path, format="PNG")
    else:
        raise UnsupportedImageError(f"{path}: unknown extension {ext!r}")


def _decode_pgm(data: bytes) -> np.ndarray:
    # Header is "P5", width, height, maxval as whitespace-separated tokens,
    # with '#' comments allowed, then a single whitespace byte before the
    # raster.
    pos = 2
    tokens: list[int] = []
    while len(tokens) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos : pos + 1] == b"#":
            nl = data.find(b"\n", pos)
            if nl < 0:
                raise CorruptImageError("PGM: unterminated comment in header")
            pos = nl + 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise CorruptImageError("PGM: truncated header")
        try:
            tokens.append(int(data[start:pos]))
        except ValueError:
            raise CorruptImageError(
                f"PGM: non-numeric header token {data[start:pos]!r}"
            ) from None
    width, height, maxval = tokens
    if width < 1 or height < 1:
        raise CorruptImageError(f"PGM: bad dimensions {width}x{height}")
    if maxval != 255:
        raise UnsupportedImageError(f"PGM: only maxval 255 supported, got {maxval}")
    pos += 1  # exactly one whitespace byte after maxval
    raster = data[pos : pos + width * height]
    if len(raster) < width * height:
        raise CorruptImageError("PGM: raster shorter than header promises")
    samples = np.frombuffer(raster, dtype=np.uint8).reshape(height, width)
    return samples.astype(np.float64) / 255.0


def _decode_png(path, data: bytes) -> np.ndarray:
    from PIL import Image, UnidentifiedImageError
    import io

    try:
        with Image.open(io.BytesIO(data)) as im:
            im.load()
            mode = im.mode
            arr = np.asarray(im)
    except (UnidentifiedImageError, OSError, SyntaxError, zlib.error) as exc:
        raise CorruptImageError(f"{path}: undecodable PNG ({exc})") from exc
    if mode == "L":
        return arr.astype(np.float64) / 255.0
    if mode in ("I", "I;16", "I;16B"):
        return arr.astype(np.float64) / 65535.0
    if mode == "RGB":
        rgb = arr.astype(np.float64) / 255.0
        luma = rgb[..., 0] * 0.299 + rgb[..., 1] * 0.587 + rgb[..., 2] * 0.114
        return np.clip(luma, 0.0, 1.0)
    raise UnsupportedImageError(
        f"{path}: PNG mode {mode!r} not supported "
        "(need 8/16-bit grayscale or 8-bit RGB)"
    )


# ---------------------------------------------------------------------------
# Noise injection
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NoiseSpec:
    """Parameters for synthetic corruption of a clean image.

    kind: "gaussian" (additive N(0, sigma^2), clamped to [0,1]) or
    "salt_pepper" (round(density*N) distinct pixels forced to 0 or 1).
    The seed fully determines the output for a given image.
    """

    kind: str
    seed: int
    sigma: float = 0.1
    density: float = 0.05

    def __post_init__(self):
        if self.kind not in ("gaussian", "salt_pepper"):
            raise ValueError(f"kind must be 'gaussian' or 'salt_pepper', got {self.kind!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.sigma < 0 or not math.isfinite(self.sigma):
            raise ValueError(f"sigma must be >= 0, got {self.sigma}")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must be in [0, 1], got {self.density}")


def add_noise(img: np.ndarray, spec: NoiseSpec) -> np.ndarray:
    """Return a corrupted copy of ``img`` per ``spec``; the input is untouched."""
    img = validate_image(img)
    rng = SplitMix64(spec.seed)
    if spec.kind == "gaussian":
        noise = rng.normals(img.size).reshape(img.shape)
        return np.clip(img + spec.sigma * noise, 0.0, 1.0)
    # salt & pepper: partial Fisher-Yates picks distinct pixels, one raw
    # draw per swap; a second batch of draws picks salt vs pepper.
    n = img.size
    m = int(math.floor(spec.density * n + 0.5))
    out = img.copy()
    if m == 0:
        return out
    draws = rng.raw(m).tolist()
    idx = list(range(n))
    for k in range(m):
        j = k + draws[k] % (n - k)
        idx[k], idx[j] = idx[j], idx[k]
    chosen = np.array(idx[:m], dtype=np.intp)
    values = (rng.raw(m) & np.uint64(1)).astype(np.float64)
    out.reshape(-1)[chosen] = values
    return out
