"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line for each in
the terminal summary.
"""

from fractions import Fraction

import numpy as np
import pytest

from falsecolor import (apply_palette, apply_signed, basic_colors, build_palette, builtin, builtin_names,
                        check_monotone_luminance, check_monotone_normalized_luminance, clamp, compare,
                        dynamic_range, evaluate_spec, find_dark_areas, lagrange3, lagrange3_mid, lagrange4,
                        luminance, quantize, to_grayscale, validate)
from falsecolor.cli import main
from falsecolor.formats import (read_palette_csv, read_pgm, read_ppm, write_palette_csv, write_pgm, write_ppm,
                                write_spec)
from falsecolor.interpolation import PaletteSpec
from falsecolor.color import Palette

from conftest import lagrange_basis_table

I = np.arange(256)
TOL = 1e-9
RANDOM_CASES = 100


def criterion(number, title):
    return pytest.mark.criterion(number, title)


@criterion(1, "basic-color luminance table exact to 1e-9")
def test_basic_color_luminances():
    expected = [0, 29.07, 76.245, 105.315, 149.685, 178.755, 225.93, 255]
    got = [c.luminance for c in basic_colors()]
    assert np.max(np.abs(np.subtract(got, expected))) < TOL


@criterion(2, "cubic and quadratic closed forms match the generic Lagrange oracle (100 sets, 1e-9)")
def test_closed_forms_match_oracle():
    rng = np.random.default_rng(20261019)
    basis4 = lagrange_basis_table([0, 85, 170, 255])
    middles = rng.integers(1, 255, 20)
    for case in range(RANDOM_CASES):
        vals = rng.uniform(0, 255, 4)
        assert np.max(np.abs(lagrange4(*vals, I) - basis4 @ vals)) < TOL
        m = int(middles[case % len(middles)])
        basis3 = lagrange_basis_table([0, m, 255])
        assert np.max(np.abs(lagrange3(*vals[:3], m, I) - basis3 @ vals[:3])) < TOL
        k = vals[0]
        assert np.max(np.abs(lagrange4(k, k, k, k, I) - k)) < TOL
        assert np.max(np.abs(lagrange3(k, k, k, m, I) - k)) < TOL
        assert np.max(np.abs(lagrange3_mid(k, k, k, I) - k)) < TOL


@criterion(3, "middle-node-127 quadratic equals the general quadratic at m=127 (1e-9)")
def test_mid_form_is_general_form():
    rng = np.random.default_rng(3)
    for _ in range(RANDOM_CASES):
        a, b, c = rng.uniform(0, 255, 3)
        assert np.max(np.abs(lagrange3_mid(a, b, c, I) - lagrange3(a, b, c, 127, I))) < TOL


@criterion(4, "six-point linear palette: |L_i - i| <= 1, D = 1.000, ramp round trip <= 1")
def test_six_point_linear():
    p = build_palette(builtin("six-linear"))
    assert np.max(np.abs(p.luminance() - I)) <= 1.0
    assert f"{dynamic_range(p):.3f}" == "1.000"
    ramp = I.astype(np.uint8)[None, :]
    assert compare(to_grayscale(apply_palette(ramp, p)), ramp).max_abs_diff <= 1


@criterion(5, "quantization never reverses luminance by a full unit on monotone designs")
def test_quantization_bound():
    checked = []
    for name in builtin_names():
        spec = builtin(name)
        real_lum = luminance(clamp(evaluate_spec(spec)))
        if np.any(np.diff(real_lum) < 0):
            continue
        checked.append(name)
        lum = build_palette(spec).luminance()
        drops = -np.diff(lum)
        assert drops.max() < 1.0, name
        report = validate(build_palette(spec), 1.0)
        assert [v for v in report.violations if v.kind == "luminance_decrease"] == [], name
    assert {"gray", "six-linear", "diverging-by", "demo-dark"} <= set(checked)


@criterion(6, "rainbow reference fails luminance monotonicity; validate exits 1")
def test_rainbow_fails(tmp_path, capsys):
    p = build_palette(builtin("rainbow-ref"))
    assert len(check_monotone_luminance(p, 1.0)) >= 1
    path = tmp_path / "rainbow.csv"
    path.write_text(write_palette_csv(p))
    assert main(["validate", "--palette", str(path)]) == 1
    capsys.readouterr()


@criterion(7, "demo-dark: luminance passes, normalized luminance fails, dark area found")
def test_dark_area_signature():
    p = build_palette(builtin("demo-dark"))
    assert check_monotone_luminance(p, 1.0) == []
    assert check_monotone_normalized_luminance(p, 1.0)
    assert len(find_dark_areas(p)) >= 1


@criterion(8, "diverging palette: zero field is (127,127,127), extremes hit entries 0 and 255")
def test_diverging():
    p = build_palette(builtin("diverging-by"))
    assert np.all(apply_signed(np.zeros((4, 6)), p) == 127)
    out = apply_signed(np.array([[-3.5, 0.0, 3.5]]), p)
    assert tuple(out[0, 0]) == p[0]
    assert tuple(out[0, 2]) == p[255]
    lo, hi = luminance(p[0]), luminance(p[255])
    assert abs(lo - 29.07) < TOL and abs(hi - 225.93) < TOL
    assert lo < 127 < hi


@criterion(9, "adversarial Lagrange spec: overshoots clamped to [0, 255] before rounding")
def test_clamping():
    spec = PaletteSpec("lagrange", ((0, (255, 0, 0)), (85, (0, 255, 0)), (170, (255, 0, 255)), (255, (0, 255, 0))))
    real = evaluate_spec(spec)
    assert real.min() < 0 and real.max() > 255
    p = build_palette(spec)
    assert p.entries.min() >= 0 and p.entries.max() <= 255
    np.testing.assert_array_equal(p.entries, quantize(clamp(real)))
    below = real < 0
    above = real > 255
    assert np.all(p.entries[below] == 0) and np.all(p.entries[above] == 255)


@criterion(10, "PGM, PPM and palette CSV write/read are bit-exact (100 random cases each)")
def test_format_round_trips():
    rng = np.random.default_rng(10)
    for _ in range(RANDOM_CASES):
        h, w = rng.integers(1, 20, 2)
        gray = rng.integers(0, 256, (h, w), dtype=np.uint8)
        data = write_pgm(gray)
        assert np.array_equal(read_pgm(data), gray) and write_pgm(read_pgm(data)) == data
        color = rng.integers(0, 256, (h, w, 3), dtype=np.uint8)
        data = write_ppm(color)
        assert np.array_equal(read_ppm(data), color) and write_ppm(read_ppm(data)) == data
        p = Palette(rng.integers(0, 256, (256, 3)))
        text = write_palette_csv(p)
        assert read_palette_csv(text) == p and write_palette_csv(read_palette_csv(text)) == text


@criterion(11, "build is byte-deterministic; gray swatch column i is (i,i,i)")
def test_determinism(tmp_path, capsys):
    spec = tmp_path / "six.spec"
    spec.write_text(write_spec(builtin("six-linear")))
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["build", "--spec", str(spec), "--out", str(a)]) == 0
    assert main(["build", "--spec", str(spec), "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    gray = tmp_path / "gray.csv"
    gray.write_text(write_palette_csv(build_palette(builtin("gray"))))
    sw = tmp_path / "gray.ppm"
    assert main(["swatch", "--palette", str(gray), "--out", str(sw)]) == 0
    img = read_ppm(sw.read_bytes())
    assert img.shape == (32, 256, 3)
    assert np.array_equal(img, np.broadcast_to(I[None, :, None], img.shape))
    capsys.readouterr()
