"""False-color palettes whose luminance changes monotonically with the
color index, so that grayscale reproductions stay readable."""

from .catalog import basic_colors, builtin, builtin_names, six_point_linear
from .color import (Curves, Palette, curves_for, dynamic_range, hue, hue_range,
                    hues, luminance, normalized_luminance, value)
from .imaging import (apply_palette, apply_signed, compare, normalize_field,
                      to_grayscale)
from .interpolation import (ControlPoint, PaletteSpec, SpecError, build_palette,
                            clamp, evaluate_spec, lagrange, lagrange3,
                            lagrange3_mid, lagrange4, linear_interp, quantize)
from .validation import (ValidationReport, Violation, check_monotone_luminance,
                         check_monotone_normalized_luminance, find_dark_areas,
                         validate)

__version__ = "0.1.0"
