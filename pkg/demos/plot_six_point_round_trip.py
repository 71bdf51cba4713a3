"""
A palette whose grayscale copy is the original image
====================================================

Black, red, magenta, cyan, yellow and white placed at the index equal to
their own luminance and joined by lines. Every entry then has a luminance
within one level of its index, so converting the false-color image back to
grayscale returns the input almost exactly.
"""

import numpy as np

from falsecolor import apply_palette, build_palette, builtin, compare, to_grayscale
from falsecolor.formats import write_pgm, write_ppm
from falsecolor.imaging import swatch

spec = builtin("six-linear")
print("control indices:", spec.indices)

p = build_palette(spec)
print("max |L_i - i| = %.3f" % np.max(np.abs(p.luminance() - np.arange(256))))

y, x = np.mgrid[0:1:120j, 0:1:160j]
image = np.round(255 * (0.5 + 0.5 * np.cos(6 * x) * np.cos(4 * y))).astype(np.uint8)

color = apply_palette(image, p)
back = to_grayscale(color)
print("round trip:", compare(image, back))

for name, data in [("six_in.pgm", write_pgm(image)), ("six_color.ppm", write_ppm(color)),
                   ("six_back.pgm", write_pgm(back)), ("six_swatch.ppm", write_ppm(swatch(p)))]:
    with open(name, "wb") as fh:
        fh.write(data)
    print("wrote", name)
