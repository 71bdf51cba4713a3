"""Command-line front end.

Exit status: 0 on success (and for ``validate``, a grayscale-safe palette),
1 when ``validate`` finds violations, 2 on usage, parse or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog, formats, imaging
from .color import curves_for, dynamic_range, hue_range
from .interpolation import build_palette
from .validation import DEFAULT_EPSILON, validate

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read_text(path):
    return Path(path).read_text(encoding="utf-8")


def _write_text(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _load_palette(path):
    return formats.read_palette_csv(_read_text(path))


def cmd_build(args):
    palette = build_palette(formats.read_spec(_read_text(args.spec)))
    _write_text(args.out, formats.write_palette_csv(palette))
    print(f"D={dynamic_range(palette):.3f} hue_range={hue_range(palette):.3f}")
    return EXIT_OK


def cmd_validate(args):
    palette = _load_palette(args.palette)
    eps = 0.0 if args.strict else args.epsilon
    if eps < 0:
        raise ValueError("epsilon must be non-negative")
    report = validate(palette, eps)
    yes_no = {True: "pass", False: "FAIL"}
    print(f"direction: {report.direction}")
    print(f"luminance monotone: {yes_no[report.luminance_monotone]}")
    print(f"normalized luminance monotone: {yes_no[report.normalized_luminance_monotone]}")
    print(f"epsilon: {eps:.3f}")
    print(f"D={report.dynamic_range:.3f}")
    print(f"hue_range={report.hue_range:.3f}")
    print(f"violations: {len(report.violations)}")
    for v in report.violations:
        print(f"  {v.index} {v.kind} {v.magnitude:.3f}")
    areas = ", ".join(f"{a}-{b}" for a, b in report.dark_areas) or "none"
    print(f"dark areas: {areas}")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_apply(args):
    palette = _load_palette(args.palette)
    gray = formats.read_pgm(Path(args.input).read_bytes())
    Path(args.out).write_bytes(formats.write_ppm(imaging.apply_palette(gray, palette)))
    return EXIT_OK


def cmd_apply_signed(args):
    palette = _load_palette(args.palette)
    field = formats.read_field_csv(_read_text(args.input))
    Path(args.out).write_bytes(formats.write_ppm(imaging.apply_signed(field, palette)))
    return EXIT_OK


def cmd_grayscale(args):
    color = formats.read_ppm(Path(args.input).read_bytes())
    Path(args.out).write_bytes(formats.write_pgm(imaging.to_grayscale(color)))
    return EXIT_OK


def cmd_compare(args):
    a = formats.read_pgm(Path(args.a).read_bytes())
    b = formats.read_pgm(Path(args.b).read_bytes())
    result = imaging.compare(a, b)
    print(f"max_abs_diff={result.max_abs_diff} rmse={result.rmse:.3f}")
    return EXIT_OK


def cmd_curves(args):
    palette = _load_palette(args.palette)
    _write_text(args.out, formats.write_curves_csv(curves_for(palette)))
    return EXIT_OK


def cmd_catalog(args):
    if args.list:
        for name in catalog.builtin_names():
            print(name)
        return EXIT_OK
    if not args.name or not args.out:
        raise ValueError("catalog needs --list or both --name and --out")
    _write_text(args.out, formats.write_spec(catalog.builtin(args.name)))
    return EXIT_OK


def cmd_swatch(args):
    palette = _load_palette(args.palette)
    Path(args.out).write_bytes(formats.write_ppm(imaging.swatch(palette, args.height)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="falsecolor", description="Design and check grayscale-safe false-color palettes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="materialize a palette spec into a 256-entry CSV")
    p.add_argument("--spec", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("validate", help="check luminance monotonicity and dark areas")
    p.add_argument("--palette", required=True)
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--strict", action="store_true", help="use epsilon = 0")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("apply", help="color a PGM image with a palette")
    p.add_argument("--palette", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("apply-signed", help="color a signed CSV field with zero at index 127")
    p.add_argument("--palette", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_apply_signed)

    p = sub.add_parser("grayscale", help="convert a PPM to BT.601 grayscale")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_grayscale)

    p = sub.add_parser("compare", help="difference metrics between two PGM images")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("curves", help="export per-index luminance and hue")
    p.add_argument("--palette", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("catalog", help="list or export built-in palette specs")
    p.add_argument("--list", action="store_true")
    p.add_argument("--name")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("swatch", help="render a palette as a 256-wide PPM strip")
    p.add_argument("--palette", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--height", type=int, default=32)
    p.set_defaults(func=cmd_swatch)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"falsecolor {args.command}: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
