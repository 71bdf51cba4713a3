"""Built-in palettes and the eight corner colors of the RGB cube."""

from __future__ import annotations

from dataclasses import dataclass

from .color import luminance
from .interpolation import ControlPoint, PaletteSpec, quantize

__all__ = ["BasicColor", "BASIC_COLORS", "basic_colors", "six_point_linear",
           "builtin", "builtin_names"]

BASIC_COLORS = {
    "black": (0, 0, 0),
    "blue": (0, 0, 255),
    "red": (255, 0, 0),
    "magenta": (255, 0, 255),
    "green": (0, 255, 0),
    "cyan": (0, 255, 255),
    "yellow": (255, 255, 0),
    "white": (255, 255, 255),
}


@dataclass(frozen=True)
class BasicColor:
    name: str
    color: tuple[int, int, int]

    @property
    def luminance(self) -> float:
        return luminance(self.color)


def basic_colors() -> list[BasicColor]:
    """The eight cube corners, darkest first."""
    colors = [BasicColor(name, rgb) for name, rgb in BASIC_COLORS.items()]
    return sorted(colors, key=lambda c: c.luminance)


def six_point_linear() -> PaletteSpec:
    """Black, red, magenta, cyan, yellow and white, each placed at the index
    equal to its rounded luminance and joined by straight lines.

    Green and blue are not used.
    """
    names = ["black", "red", "magenta", "cyan", "yellow", "white"]
    points = [ControlPoint(quantize(luminance(BASIC_COLORS[n])), BASIC_COLORS[n]) for n in names]
    return PaletteSpec("linear", tuple(points))


def _spec(method, points):
    return PaletteSpec(method, tuple(ControlPoint(i, c) for i, c in points))


_K = BASIC_COLORS["black"]
_W = BASIC_COLORS["white"]

_BUILTINS = {
    "gray": lambda: _spec("linear", [(0, _K), (255, _W)]),
    "six-linear": six_point_linear,
    # gray zero with complementary dark/bright ends for signed data
    "diverging-by": lambda: _spec(
        "lagrange", [(0, (0, 0, 255)), (127, (127, 127, 127)), (255, (255, 255, 0))]
    ),
    "four-point-demo": lambda: _spec(
        "lagrange", [(0, _K), (85, (0, 0, 255)), (170, (255, 0, 128)), (255, _W)]
    ),
    # the usual blue-to-red rainbow; kept as a known failure
    "rainbow-ref": lambda: _spec(
        "linear",
        [(0, (0, 0, 255)), (64, (0, 255, 255)), (128, (0, 255, 0)),
         (191, (255, 255, 0)), (255, (255, 0, 0))],
    ),
    # luminance rises everywhere, but the desaturated gray at 233 reads as a
    # dark band after the bright yellow
    "demo-dark": lambda: _spec(
        "linear",
        [(0, _K), (100, (200, 60, 0)), (226, (255, 255, 0)),
         (233, (230, 230, 230)), (255, _W)],
    ),
}


def builtin_names() -> list[str]:
    return list(_BUILTINS)


def builtin(name: str) -> PaletteSpec:
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise KeyError(f"unknown palette {name!r}; known: {', '.join(_BUILTINS)}") from None
    return factory()
