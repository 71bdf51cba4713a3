"""Checks that decide whether a palette survives grayscale reproduction."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .color import Palette, dynamic_range, hue_range

__all__ = [
    "Kind", "Violation", "ValidationReport", "DEFAULT_EPSILON",
    "direction_of", "check_monotone_luminance",
    "check_monotone_normalized_luminance", "find_dark_areas", "validate",
]

# Rounding channels to integers moves luminance by at most 0.5 per entry, so
# quantized palettes of a monotone design never step back by a full unit.
DEFAULT_EPSILON = 1.0


class Kind(str, enum.Enum):
    LUMINANCE_DECREASE = "luminance_decrease"
    NORMALIZED_LUMINANCE_DECREASE = "normalized_luminance_decrease"
    DARK_AREA = "dark_area"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Violation:
    """A defect at ``index``.

    For decreases the step is between ``index`` and ``index + 1``; for dark
    areas ``index`` is the first entry of the minimum.
    """

    index: int
    kind: Kind
    magnitude: float


@dataclass
class ValidationReport:
    direction: str
    luminance_monotone: bool
    normalized_luminance_monotone: bool
    violations: list[Violation]
    dynamic_range: float
    hue_range: float
    dark_areas: list[tuple[int, int]] = field(default_factory=list)
    epsilon: float = DEFAULT_EPSILON

    @property
    def ok(self) -> bool:
        return self.luminance_monotone and self.normalized_luminance_monotone


def direction_of(seq) -> str:
    """'increasing' unless the last value is below the first."""
    return "decreasing" if seq[-1] < seq[0] else "increasing"


def _steps_against(seq, epsilon: float, kind: Kind) -> list[Violation]:
    if epsilon < 0:
        raise ValueError("epsilon must be non-negative")
    seq = np.asarray(seq, dtype=float)
    steps = np.diff(seq)
    backwards = -steps if direction_of(seq) == "increasing" else steps
    return [
        Violation(int(i), kind, float(backwards[i]))
        for i in np.flatnonzero(backwards > epsilon)
    ]


def check_monotone_luminance(p: Palette, epsilon: float = DEFAULT_EPSILON) -> list[Violation]:
    """Adjacent luminance steps that go against the palette's direction by
    more than ``epsilon``. Equal neighbours are accepted."""
    return _steps_against(p.luminance(), epsilon, Kind.LUMINANCE_DECREASE)


def check_monotone_normalized_luminance(p: Palette, epsilon: float = DEFAULT_EPSILON) -> list[Violation]:
    return _steps_against(p.normalized_luminance(), epsilon, Kind.NORMALIZED_LUMINANCE_DECREASE)


def _local_minima(seq) -> list[tuple[int, int, float]]:
    # Collapse equal runs first so a flat-bottomed minimum counts once.
    seq = np.asarray(seq, dtype=float)
    starts = np.concatenate(([0], np.flatnonzero(np.diff(seq) != 0) + 1))
    ends = np.concatenate((starts[1:] - 1, [len(seq) - 1]))
    runs = seq[starts]
    found = []
    for k in range(1, len(runs) - 1):
        if runs[k] < runs[k - 1] and runs[k] < runs[k + 1]:
            depth = min(runs[k - 1], runs[k + 1]) - runs[k]
            found.append((int(starts[k]), int(ends[k]), float(depth)))
    return found


def find_dark_areas(p: Palette) -> list[tuple[int, int]]:
    """Index ranges (inclusive) where normalized luminance has a local minimum."""
    return [(a, b) for a, b, _ in _local_minima(p.normalized_luminance())]


def validate(p: Palette, epsilon: float = DEFAULT_EPSILON) -> ValidationReport:
    lum = check_monotone_luminance(p, epsilon)
    norm = check_monotone_normalized_luminance(p, epsilon)
    minima = _local_minima(p.normalized_luminance())
    dark = [Violation(a, Kind.DARK_AREA, depth) for a, _, depth in minima]
    if lum:
        direction = "neither"
    else:
        direction = direction_of(p.luminance())
    return ValidationReport(
        direction=direction,
        luminance_monotone=not lum,
        normalized_luminance_monotone=not norm,
        violations=lum + norm + dark,
        dynamic_range=dynamic_range(p),
        hue_range=hue_range(p),
        dark_areas=[(a, b) for a, b, _ in minima],
        epsilon=epsilon,
    )
