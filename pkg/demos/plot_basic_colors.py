"""
Luminance of the RGB cube corners
=================================

The eight corner colors of the 8-bit RGB cube, darkest first. A blue-to-red
rainbow has to pass through green, which is brighter than both ends, so its
grayscale copy cannot be monotone.
"""

from falsecolor import basic_colors

for c in basic_colors():
    print(f"{c.name:8s} {str(c.color):16s} L = {c.luminance:7.3f}")
