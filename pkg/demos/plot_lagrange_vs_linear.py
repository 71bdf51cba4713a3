"""
Line segments versus Lagrange polynomials
=========================================

Four control colors at indices 0, 85, 170 and 255, joined either by straight
lines or by the cubic through all four. The cubic is smoother but can leave
the channel range, so it is clamped before rounding.
"""

import numpy as np

from falsecolor import PaletteSpec, build_palette, builtin, curves_for, evaluate_spec, validate

lagrange_spec = builtin("four-point-demo")
linear_spec = PaletteSpec("linear", lagrange_spec.points)

real = evaluate_spec(lagrange_spec)
print("cubic channel range before clamping: %.1f .. %.1f" % (real.min(), real.max()))

for label, spec in [("linear", linear_spec), ("lagrange", lagrange_spec)]:
    p = build_palette(spec)
    r = validate(p)
    print(f"{label:9s} D={r.dynamic_range:.3f} hue range={r.hue_range:6.1f} "
          f"monotone L={r.luminance_monotone} L'={r.normalized_luminance_monotone}")

###############################################################################
# Plot channels and luminance when matplotlib is available.

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    for spec, style in [(linear_spec, "-"), (lagrange_spec, ":")]:
        c = curves_for(build_palette(spec))
        for k, color in enumerate("rgb"):
            ax1.plot(c.index, c.rgb[:, k], style, color=color)
        ax2.plot(c.index, c.luminance, style, color="k", label=f"L ({spec.method})")
        ax2.plot(c.index, c.normalized_luminance, style, color="0.5", label=f"L' ({spec.method})")
    ax1.set_xlabel("color index")
    ax1.set_ylabel("channel value")
    ax2.set_xlabel("color index")
    ax2.legend()
    fig.savefig("lagrange_vs_linear.png", dpi=100)
    print("wrote lagrange_vs_linear.png")
