"""
Signed data on a diverging palette
==================================

A quadratic through blue, mid gray and yellow. Zero lands on the gray entry,
negative values get darker and positive values brighter, so the sign is
still readable in grayscale.
"""

import numpy as np

from falsecolor import apply_signed, build_palette, builtin, to_grayscale
from falsecolor.formats import write_ppm

y, x = np.mgrid[-1:1:96j, -1:1:128j]
field = np.sin(3 * x) * np.exp(-2 * y ** 2)

p = build_palette(builtin("diverging-by"))
color = apply_signed(field, p)
gray = to_grayscale(color)

print("palette[127] =", p[127])
print("gray level at the most negative / central / most positive sample:",
      gray.flat[field.argmin()], gray[48, 64], gray.flat[field.argmax()])

with open("signed_field.ppm", "wb") as fh:
    fh.write(write_ppm(color))
print("wrote signed_field.ppm")
