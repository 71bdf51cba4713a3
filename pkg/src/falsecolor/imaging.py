"""Palette lookup on rasters, grayscale conversion and round-trip metrics.

Rasters are plain numpy arrays: gray images are ``(height, width)`` uint8,
color images ``(height, width, 3)`` uint8 and scalar fields
``(height, width)`` float.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .color import Palette, luminance
from .interpolation import quantize

__all__ = ["check_gray", "check_color", "check_field", "apply_palette",
           "to_grayscale", "normalize_field", "signed_indices", "apply_signed",
           "Comparison", "compare", "swatch"]

MIDPOINT = 127


def _check_2d(img, what):
    arr = np.asarray(img)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"{what} must be a non-empty 2-D array, got shape {arr.shape}")
    return arr


def check_gray(img) -> np.ndarray:
    arr = _check_2d(img, "gray image")
    if arr.dtype != np.uint8:
        if not np.issubdtype(arr.dtype, np.integer) or arr.min() < 0 or arr.max() > 255:
            raise ValueError("gray samples must be integers in [0, 255]")
        arr = arr.astype(np.uint8)
    return arr


def check_color(img) -> np.ndarray:
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3 or 0 in arr.shape:
        raise ValueError(f"color image must have shape (h, w, 3), got {arr.shape}")
    if arr.dtype != np.uint8:
        if not np.issubdtype(arr.dtype, np.integer) or arr.min() < 0 or arr.max() > 255:
            raise ValueError("color channels must be integers in [0, 255]")
        arr = arr.astype(np.uint8)
    return arr


def check_field(field) -> np.ndarray:
    arr = _check_2d(field, "scalar field").astype(float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("scalar field values must be finite")
    return arr


def apply_palette(gray, p: Palette) -> np.ndarray:
    """Replace every sample with the palette entry it indexes."""
    return p.entries[check_gray(gray)]


def to_grayscale(img) -> np.ndarray:
    """BT.601 luminance of each pixel, rounded half-up."""
    return quantize(luminance(check_color(img))).astype(np.uint8)


def normalize_field(field) -> np.ndarray:
    """Stretch ``[min, max]`` of the field onto 0..255.

    A constant field maps to 127 everywhere.
    """
    f = check_field(field)
    lo, hi = f.min(), f.max()
    if lo == hi:
        return np.full(f.shape, MIDPOINT, dtype=np.uint8)
    return quantize((f - lo) / (hi - lo) * 255.0).astype(np.uint8)


def signed_indices(field) -> np.ndarray:
    """Palette indices for signed data with zero pinned to index 127.

    Values are scaled by the largest magnitude ``A`` so that ``-A -> 0`` and
    ``+A -> 255``. Negating the field sends index ``k`` to ``255 - k`` when
    ``127.5 * (1 + v / A)`` is a whole number and to ``254 - k`` otherwise.
    """
    f = check_field(field)
    amp = np.abs(f).max()
    if amp == 0:
        return np.full(f.shape, MIDPOINT, dtype=np.uint8)
    idx = np.floor(127.5 * (1.0 + f / amp))
    return np.clip(idx, 0, 255).astype(np.uint8)


def apply_signed(field, p: Palette) -> np.ndarray:
    return p.entries[signed_indices(field)]


class Comparison(NamedTuple):
    max_abs_diff: int
    rmse: float


def compare(a, b) -> Comparison:
    a = check_gray(a).astype(np.int64)
    b = check_gray(b).astype(np.int64)
    if a.shape != b.shape:
        raise ValueError(f"image sizes differ: {a.shape[::-1]} vs {b.shape[::-1]}")
    diff = a - b
    return Comparison(int(np.abs(diff).max()), float(np.sqrt(np.mean(diff.astype(float) ** 2))))


def swatch(p: Palette, height: int = 32) -> np.ndarray:
    """A 256-pixel-wide strip where column ``i`` shows entry ``i``."""
    if height < 1:
        raise ValueError("swatch height must be positive")
    return np.broadcast_to(p.entries, (height, 256, 3)).copy()
