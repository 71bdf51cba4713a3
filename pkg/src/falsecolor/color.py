"""Color quantities used to judge palettes: luminance, value, hue and
whole-palette metrics.

Every function accepts a single color ``(r, g, b)`` or an array of colors
with the channels on the last axis. Channels are on the 0..255 scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

# ITU-R BT.601 weights.
RED_WEIGHT = 0.299
GREEN_WEIGHT = 0.587
BLUE_WEIGHT = 0.114

__all__ = [
    "Palette", "Curves", "luminance", "value", "normalized_luminance",
    "hue", "hues", "dynamic_range", "hue_range", "unwrapped_span",
    "curves_for",
]


def _channels(c):
    arr = np.asarray(c, dtype=float)
    if arr.shape[-1:] != (3,):
        raise ValueError(f"expected colors with 3 channels, got shape {arr.shape}")
    return arr[..., 0], arr[..., 1], arr[..., 2]


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def luminance(c):
    """BT.601 luminance ``0.299 r + 0.587 g + 0.114 b``, unrounded."""
    r, g, b = _channels(c)
    return _scalar_or_array(RED_WEIGHT * r + GREEN_WEIGHT * g + BLUE_WEIGHT * b)


def value(c):
    """HSV value, the largest channel."""
    r, g, b = _channels(c)
    return _scalar_or_array(np.maximum(np.maximum(r, g), b))


def normalized_luminance(c):
    """Luminance scaled by ``value / 255``.

    Dips in this quantity along a palette show up as dark bands even when
    the luminance itself keeps rising.
    """
    r, g, b = _channels(c)
    lum = RED_WEIGHT * r + GREEN_WEIGHT * g + BLUE_WEIGHT * b
    return _scalar_or_array(lum * np.maximum(np.maximum(r, g), b) / 255.0)


def hues(c) -> np.ndarray:
    """Hexcone hue in degrees, NaN where the color has zero chroma."""
    r, g, b = _channels(c)
    hi = np.maximum(np.maximum(r, g), b)
    lo = np.minimum(np.minimum(r, g), b)
    chroma = hi - lo
    with np.errstate(divide="ignore", invalid="ignore"):
        h = np.where(
            hi == r,
            np.mod((g - b) / chroma, 6.0),
            np.where(hi == g, (b - r) / chroma + 2.0, (r - g) / chroma + 4.0),
        )
    h = 60.0 * h
    # mod(-tiny, 6) can land on exactly 6.0
    h = np.where(h >= 360.0, h - 360.0, h)
    return np.where(chroma == 0, np.nan, h)


def hue(c) -> Optional[float]:
    """Hue of a single color in [0, 360), or None for grays."""
    h = hues(c)
    if np.ndim(h) != 0:
        raise ValueError("hue() takes a single color; use hues() for arrays")
    return None if np.isnan(h) else float(h)


class Palette:
    """A 256-entry table of 8-bit RGB colors indexed by color index.

    The entries are stored as a read-only ``(256, 3)`` uint8 array.
    """

    size = 256

    def __init__(self, entries):
        arr = np.asarray(entries)
        if arr.shape != (self.size, 3):
            raise ValueError(f"a palette needs shape (256, 3), got {arr.shape}")
        if not np.issubdtype(arr.dtype, np.integer):
            if not np.all(np.isfinite(arr)) or np.any(arr != np.round(arr)):
                raise ValueError("palette channels must be integers")
        if arr.min() < 0 or arr.max() > 255:
            raise ValueError("palette channels must lie in [0, 255]")
        self._entries = arr.astype(np.uint8)
        self._entries.setflags(write=False)

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def __len__(self):
        return self.size

    def __getitem__(self, i):
        if isinstance(i, (int, np.integer)):
            return tuple(int(v) for v in self._entries[i])
        return self._entries[i]

    def __iter__(self):
        return (tuple(int(v) for v in row) for row in self._entries)

    def __eq__(self, other):
        if not isinstance(other, Palette):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __hash__(self):
        return hash(self._entries.tobytes())

    def __repr__(self):
        return f"Palette(first={self[0]}, last={self[255]})"

    def reversed(self) -> "Palette":
        return Palette(self._entries[::-1])

    def luminance(self) -> np.ndarray:
        return luminance(self._entries)

    def normalized_luminance(self) -> np.ndarray:
        return normalized_luminance(self._entries)


def dynamic_range(p: Palette) -> float:
    """``(L_max - L_min) / 255`` over the palette entries."""
    lum = luminance(p.entries)
    return float((lum.max() - lum.min()) / 255.0)


def unwrapped_span(h) -> float:
    """Span of a hue sequence after unwrapping it through the 0/360 seam.

    NaN entries are skipped. Each consecutive step is taken as the shortest
    angular difference, so a sweep of 350 degrees through red reports 350.
    """
    h = np.asarray(h, dtype=float)
    h = h[~np.isnan(h)]
    if h.size < 2:
        return 0.0
    u = np.unwrap(h, period=360.0)
    return float(u.max() - u.min())


def hue_range(p: Palette) -> float:
    """Total hue swept by the palette in degrees, grays ignored."""
    return unwrapped_span(hues(p.entries))


@dataclass(frozen=True)
class Curves:
    """Per-index channel, luminance, normalized luminance and hue tables.

    ``hue`` holds NaN where the entry is achromatic.
    """

    index: np.ndarray
    rgb: np.ndarray
    luminance: np.ndarray
    normalized_luminance: np.ndarray
    hue: np.ndarray

    def __len__(self):
        return len(self.index)


def curves_for(p: Palette) -> Curves:
    e = p.entries
    return Curves(
        index=np.arange(Palette.size),
        rgb=e.copy(),
        luminance=luminance(e),
        normalized_luminance=normalized_luminance(e),
        hue=hues(e),
    )
