"""
Rising luminance can still hide a dark band
===========================================

``demo-dark`` climbs in luminance at every step, yet the washed-out gray
right after bright yellow looks darker than its neighbours. Normalized
luminance ``L * max(r, g, b) / 255`` catches the dip.
"""

from falsecolor import build_palette, builtin, find_dark_areas, validate

p = build_palette(builtin("demo-dark"))
report = validate(p)
print("luminance monotone:           ", report.luminance_monotone)
print("normalized luminance monotone:", report.normalized_luminance_monotone)
print("dark areas:", find_dark_areas(p))

lum, norm = p.luminance(), p.normalized_luminance()
for i in range(224, 240, 2):
    print(f"{i:3d} {str(p[i]):16s} L={lum[i]:7.2f} L'={norm[i]:7.2f}")
