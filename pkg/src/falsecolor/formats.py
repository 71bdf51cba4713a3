"""Text and binary codecs: palette specs, palette and curve CSVs, scalar
field CSVs and 8-bit PNM rasters.

Readers take ``str`` (text formats) or ``bytes`` (PNM) and writers return
the same, so callers own the file handles.
"""

from __future__ import annotations

import math
import re

import numpy as np

from .color import Curves, Palette
from .imaging import check_color, check_gray
from .interpolation import METHODS, ControlPoint, PaletteSpec, SpecError

__all__ = [
    "FormatError", "read_spec", "write_spec", "read_palette_csv",
    "write_palette_csv", "write_curves_csv", "read_field_csv",
    "write_field_csv", "read_pnm", "read_pgm", "read_ppm", "write_pgm",
    "write_ppm",
]

PALETTE_HEADER = "i,R,G,B"
CURVES_HEADER = "i,R,G,B,L,Lnorm,hue"
# Largest raster accepted from a header, in samples.
MAX_SAMPLES = 1 << 28


class FormatError(ValueError):
    """A document that cannot be decoded. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _int_token(tok, line, what):
    if not re.fullmatch(r"[+-]?\d+", tok):
        raise FormatError(f"{what} must be an integer, got {tok!r}", line)
    return int(tok)


# -- palette spec files -------------------------------------------------------

def read_spec(text: str) -> PaletteSpec:
    """Parse a ``method`` line followed by ``point <i> <r> <g> <b>`` lines."""
    method = None
    points = []
    last_line = 0
    for n, raw in enumerate(text.splitlines(), start=1):
        last_line = n
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        key = fields[0]
        if key == "method":
            if method is not None:
                raise FormatError("duplicate method line", n)
            if points:
                raise FormatError("method line must come before any point", n)
            if len(fields) != 2 or fields[1] not in METHODS:
                raise FormatError(f"expected 'method linear' or 'method lagrange', got {line!r}", n)
            method = fields[1]
        elif key == "point":
            if method is None:
                raise FormatError("point before method line", n)
            if len(fields) != 5:
                raise FormatError(f"expected 'point <index> <R> <G> <B>', got {line!r}", n)
            index = _int_token(fields[1], n, "index")
            rgb = tuple(_int_token(t, n, "channel") for t in fields[2:])
            if not 0 <= index <= 255:
                raise FormatError(f"index {index} outside [0, 255]", n)
            for ch in rgb:
                if not 0 <= ch <= 255:
                    raise FormatError(f"channel value {ch} outside [0, 255]", n)
            if points and index <= points[-1][1].index:
                raise FormatError(
                    f"index {index} does not follow {points[-1][1].index}; indices must increase", n
                )
            points.append((n, ControlPoint(index, rgb)))
        else:
            raise FormatError(f"unknown directive {key!r}", n)
    if method is None:
        raise FormatError("missing method line", last_line or 1)
    if not points or points[0][1].index != 0:
        raise FormatError("missing control point at index 0", points[0][0] if points else last_line)
    if points[-1][1].index != 255:
        raise FormatError("missing control point at index 255", points[-1][0])
    try:
        return PaletteSpec(method, tuple(p for _, p in points))
    except SpecError as exc:
        raise FormatError(str(exc), points[-1][0]) from exc


def write_spec(spec: PaletteSpec) -> str:
    lines = [f"method {spec.method}"]
    lines += [f"point {p.index} {p.color[0]} {p.color[1]} {p.color[2]}" for p in spec.points]
    return "\n".join(lines) + "\n"


# -- palette and curve tables -------------------------------------------------

def write_palette_csv(p: Palette) -> str:
    rows = [PALETTE_HEADER]
    rows += [f"{i},{r},{g},{b}" for i, (r, g, b) in enumerate(p)]
    return "\n".join(rows) + "\n"


def read_palette_csv(text: str) -> Palette:
    lines = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines or lines[0].replace(" ", "") != PALETTE_HEADER:
        raise FormatError(f"expected header {PALETTE_HEADER!r}", 1)
    rows = lines[1:]
    if len(rows) != 256:
        raise FormatError(f"expected 256 entries, found {len(rows)}")
    entries = np.empty((256, 3), dtype=np.uint8)
    for k, row in enumerate(rows):
        n = k + 2
        cells = [c.strip() for c in row.split(",")]
        if len(cells) != 4:
            raise FormatError(f"expected 4 columns, got {len(cells)}", n)
        i, r, g, b = (_int_token(c, n, "value") for c in cells)
        if i != k:
            raise FormatError(f"expected index {k}, got {i}", n)
        for ch in (r, g, b):
            if not 0 <= ch <= 255:
                raise FormatError(f"channel value {ch} outside [0, 255]", n)
        entries[k] = (r, g, b)
    return Palette(entries)


def write_curves_csv(c: Curves) -> str:
    rows = [CURVES_HEADER]
    for i, (r, g, b), lum, norm, h in zip(
        c.index, c.rgb, c.luminance, c.normalized_luminance, c.hue
    ):
        hue_txt = "" if math.isnan(h) else f"{h:.3f}"
        rows.append(f"{i},{r},{g},{b},{lum:.3f},{norm:.3f},{hue_txt}")
    return "\n".join(rows) + "\n"


# -- scalar fields ------------------------------------------------------------

def read_field_csv(text: str) -> np.ndarray:
    """A rectangular comma-separated grid of reals, one row per line."""
    rows = []
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        vals = []
        for cell in line.split(","):
            cell = cell.strip()
            try:
                v = float(cell)
            except ValueError:
                raise FormatError(f"not a number: {cell!r}", n) from None
            if not math.isfinite(v):
                raise FormatError(f"non-finite value {cell!r}", n)
            vals.append(v)
        if rows and len(vals) != len(rows[0]):
            raise FormatError(f"row has {len(vals)} values, expected {len(rows[0])}", n)
        rows.append(vals)
    if not rows:
        raise FormatError("empty field")
    return np.array(rows, dtype=float)


def write_field_csv(field) -> str:
    f = np.asarray(field, dtype=float)
    return "\n".join(",".join(repr(float(v)) for v in row) for row in f) + "\n"


# -- PNM ----------------------------------------------------------------------

_MAGIC = {b"P2": (1, False), b"P5": (1, True), b"P3": (3, False), b"P6": (3, True)}


def _header_tokens(data: bytes, count: int, pos: int):
    """Read ``count`` whitespace-separated tokens, skipping '#' comments.

    Returns the tokens and the offset just past the last one.
    """
    tokens = []
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos:pos + 1].isspace():
            pos += 1
        if pos < n and data[pos:pos + 1] == b"#":
            while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < n and not data[pos:pos + 1].isspace() and data[pos:pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise FormatError("truncated PNM header")
        tokens.append(data[start:pos])
    return tokens, pos


def read_pnm(data: bytes) -> np.ndarray:
    """Decode P2/P3/P5/P6 with maxval 255.

    Returns ``(h, w)`` uint8 for gray formats and ``(h, w, 3)`` for color.
    """
    magic = data[:2]
    if magic not in _MAGIC:
        raise FormatError(f"unsupported PNM magic {magic!r}")
    channels, binary = _MAGIC[magic]
    (w_tok, h_tok, max_tok), pos = _header_tokens(data, 3, 2)
    try:
        width, height, maxval = int(w_tok), int(h_tok), int(max_tok)
    except ValueError:
        raise FormatError("non-integer PNM header field") from None
    if width < 1 or height < 1:
        raise FormatError(f"invalid dimensions {width}x{height}")
    if width * height * channels > MAX_SAMPLES:
        raise FormatError(f"dimensions {width}x{height} too large")
    if maxval != 255:
        raise FormatError(f"unsupported maxval {maxval}; only 8-bit (255) images are accepted")
    count = width * height * channels
    if binary:
        # exactly one whitespace byte separates the header from the raster
        start = pos + 1
        payload = data[start:start + count]
        if len(payload) < count:
            raise FormatError(f"truncated payload: expected {count} bytes, got {len(payload)}")
        arr = np.frombuffer(payload, dtype=np.uint8).copy()
    else:
        body = re.sub(rb"#[^\r\n]*", b"", data[pos:]).split()
        if len(body) < count:
            raise FormatError(f"truncated payload: expected {count} samples, got {len(body)}")
        try:
            vals = np.array([int(t) for t in body[:count]])
        except ValueError:
            raise FormatError("non-integer sample in ASCII PNM") from None
        if vals.min() < 0 or vals.max() > 255:
            raise FormatError("sample outside [0, 255]")
        arr = vals.astype(np.uint8)
    shape = (height, width) if channels == 1 else (height, width, 3)
    return arr.reshape(shape)


def read_pgm(data: bytes) -> np.ndarray:
    img = read_pnm(data)
    if img.ndim != 2:
        raise FormatError("expected a grayscale PGM (P2/P5), got a color image")
    return img


def read_ppm(data: bytes) -> np.ndarray:
    img = read_pnm(data)
    if img.ndim != 3:
        raise FormatError("expected a color PPM (P3/P6), got a grayscale image")
    return img


def write_pgm(img) -> bytes:
    img = check_gray(img)
    h, w = img.shape
    return f"P5\n{w} {h}\n255\n".encode("ascii") + np.ascontiguousarray(img).tobytes()


def write_ppm(img) -> bytes:
    img = check_color(img)
    h, w, _ = img.shape
    return f"P6\n{w} {h}\n255\n".encode("ascii") + np.ascontiguousarray(img).tobytes()
