"""Turning a handful of control colors into a 256-entry palette.

Each channel is interpolated on its own, either piecewise-linearly or with
a Lagrange polynomial through all control points. Real-valued results are
clamped to [0, 255] and then rounded half-up to integers.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .color import Palette

__all__ = [
    "ControlPoint", "PaletteSpec", "SpecError", "METHODS",
    "lagrange4", "lagrange3", "lagrange3_mid", "lagrange", "linear_interp",
    "clamp", "quantize", "evaluate_spec", "build_palette",
]

METHODS = ("linear", "lagrange")
INDICES = np.arange(256, dtype=float)


class SpecError(ValueError):
    """Raised for palette specifications that break the construction rules."""


@dataclass(frozen=True)
class ControlPoint:
    index: int
    color: tuple[int, int, int]

    def __post_init__(self):
        if isinstance(self.index, bool) or not isinstance(self.index, (int, np.integer)):
            raise SpecError(f"control index must be an integer, got {self.index!r}")
        if not 0 <= self.index <= 255:
            raise SpecError(f"control index {self.index} outside [0, 255]")
        color = tuple(self.color)
        if len(color) != 3:
            raise SpecError(f"control color needs 3 channels, got {color!r}")
        for ch in color:
            if isinstance(ch, bool) or not isinstance(ch, (int, np.integer)):
                raise SpecError(f"channel values must be integers, got {ch!r}")
            if not 0 <= ch <= 255:
                raise SpecError(f"channel value {ch} outside [0, 255]")
        object.__setattr__(self, "index", int(self.index))
        object.__setattr__(self, "color", tuple(int(ch) for ch in color))


@dataclass(frozen=True)
class PaletteSpec:
    """Interpolation method plus control points ordered by index.

    The first point must sit at index 0 and the last at 255.
    """

    method: str
    points: tuple[ControlPoint, ...]

    def __post_init__(self):
        if self.method not in METHODS:
            raise SpecError(f"unknown method {self.method!r}; expected one of {METHODS}")
        points = tuple(
            p if isinstance(p, ControlPoint) else ControlPoint(*p) for p in self.points
        )
        object.__setattr__(self, "points", points)
        needed = 2 if self.method == "linear" else 3
        if len(points) < needed:
            raise SpecError(f"{self.method} interpolation needs at least {needed} points")
        idx = [p.index for p in points]
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise SpecError(f"control indices must be strictly increasing, got {idx}")
        if idx[0] != 0:
            raise SpecError("first control point must be at index 0")
        if idx[-1] != 255:
            raise SpecError("last control point must be at index 255")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(p.index for p in self.points)

    @property
    def colors(self) -> np.ndarray:
        return np.array([p.color for p in self.points], dtype=float)


def lagrange4(c0, c85, c170, c255, i):
    """Cubic through the nodes 0, 85, 170 and 255."""
    return (
        -(i - 85) * (i - 170) * (i - 255) / 3684750 * c0
        + i * (i - 170) * (i - 255) / 1228250 * c85
        - i * (i - 85) * (i - 255) / 1228250 * c170
        + i * (i - 85) * (i - 170) / 3684750 * c255
    )


def lagrange3(c0, cm, c255, m, i):
    """Quadratic through the nodes 0, ``m`` and 255."""
    if not 0 < m < 255:
        raise SpecError(f"middle node must lie strictly between 0 and 255, got {m}")
    return (
        (i - m) * (i - 255) / (255 * m) * c0
        + i * (i - 255) / (m * (m - 255)) * cm
        + i * (i - m) / (255 * (255 - m)) * c255
    )


def lagrange3_mid(c0, c127, c255, i):
    """:func:`lagrange3` with the middle node fixed at 127."""
    return (
        (i - 127) * (i - 255) / 32385 * c0
        - i * (i - 255) / 16256 * c127
        + i * (i - 127) / 32640 * c255
    )


def lagrange(nodes: Sequence[float], values: Sequence[float], i):
    """Lagrange polynomial through ``(nodes[k], values[k])`` evaluated at ``i``."""
    nodes = np.asarray(nodes, dtype=float)
    values = np.asarray(values, dtype=float)
    i = np.asarray(i, dtype=float)
    total = 0.0
    for j, xj in enumerate(nodes):
        basis = np.ones_like(i)
        for k, xk in enumerate(nodes):
            if k != j:
                basis = basis * (i - xk) / (xj - xk)
        total = total + np.multiply.outer(basis, values[j])
    return float(total) if np.ndim(total) == 0 else total


def linear_interp(indices: Sequence[int], values: Sequence[float], i):
    """Piecewise-linear interpolation of one channel between control points."""
    xs = np.asarray(indices, dtype=float)
    ys = np.asarray(values, dtype=float)
    i = np.asarray(i, dtype=float)
    k = np.clip(np.searchsorted(xs, i, side="right") - 1, 0, len(xs) - 2)
    x0, x1 = xs[k], xs[k + 1]
    y0, y1 = ys[k], ys[k + 1]
    out = y0 + (i - x0) / (x1 - x0) * (y1 - y0)
    # the blend already equals y0 at x0; this pins the right end of the last segment
    out = np.where(i == x1, y1, out)
    return float(out) if out.ndim == 0 else out


def clamp(x):
    """Clip to [0, 255]: negatives become 0, overshoots become 255."""
    out = np.minimum(255.0, np.maximum(0.0, np.asarray(x, dtype=float)))
    return float(out) if out.ndim == 0 else out


def quantize(x):
    """Round half-up to the nearest integer."""
    out = np.floor(np.asarray(x, dtype=float) + 0.5).astype(np.int64)
    return int(out) if out.ndim == 0 else out


def evaluate_spec(spec: PaletteSpec) -> np.ndarray:
    """Real-valued ``(256, 3)`` channels of a spec, before clamping.

    Lagrange specs on the nodes {0, 85, 170, 255} or {0, m, 255} go through
    the closed-form polynomials; any other node set uses the generic basis.
    """
    idx = spec.indices
    cols = spec.colors
    if spec.method == "linear":
        return np.stack([linear_interp(idx, cols[:, k], INDICES) for k in range(3)], axis=1)

    i = INDICES[:, None]
    if idx == (0, 85, 170, 255):
        return lagrange4(cols[0], cols[1], cols[2], cols[3], i)
    if len(idx) == 3:
        if idx[1] == 127:
            return lagrange3_mid(cols[0], cols[1], cols[2], i)
        return lagrange3(cols[0], cols[1], cols[2], idx[1], i)
    if len(idx) > 4:
        warnings.warn(
            f"Lagrange polynomial of degree {len(idx) - 1} may oscillate between "
            "control points; consider linear interpolation",
            stacklevel=2,
        )
    return lagrange(idx, cols, INDICES)


def build_palette(spec: PaletteSpec) -> Palette:
    """Interpolate, clamp and quantize every channel of every index."""
    return Palette(quantize(clamp(evaluate_spec(spec))))
