from fractions import Fraction

import numpy as np
import pytest

from falsecolor import Palette, build_palette, builtin


def lagrange_oracle(nodes, values, x):
    """Exact Lagrange interpolation in rationals, term by term."""
    total = Fraction(0)
    for j, xj in enumerate(nodes):
        basis = Fraction(1)
        for k, xk in enumerate(nodes):
            if k != j:
                basis *= Fraction(x - xk) / Fraction(xj - xk)
        total += basis * Fraction(values[j])
    return total


_basis_cache = {}


def lagrange_basis_table(nodes):
    """(256, n) table of Lagrange basis values at every integer index.

    Built once per node set from exact rationals, then rounded to float, so
    evaluating a new set of node values is a single dot product.
    """
    key = tuple(nodes)
    if key not in _basis_cache:
        table = np.empty((256, len(nodes)))
        for i in range(256):
            for j in range(len(nodes)):
                unit = [1 if k == j else 0 for k in range(len(nodes))]
                table[i, j] = float(lagrange_oracle(nodes, unit, i))
        _basis_cache[key] = table
    return _basis_cache[key]


def unwrap_span_oracle(hues):
    """Step through defined hues one at a time, always taking the shortest turn."""
    seq = [h for h in hues if h is not None and h == h]
    if len(seq) < 2:
        return 0.0
    pos = seq[0]
    lo = hi = pos
    for prev, cur in zip(seq, seq[1:]):
        step = (cur - prev) % 360.0
        if step > 180.0:
            step -= 360.0
        pos += step
        lo, hi = min(lo, pos), max(hi, pos)
    return hi - lo


@pytest.fixture(scope="session")
def gray_palette():
    return Palette(np.repeat(np.arange(256)[:, None], 3, axis=1))


@pytest.fixture(scope="session")
def constant_palette():
    return Palette(np.full((256, 3), (40, 90, 200)))


@pytest.fixture(scope="session")
def catalog_palettes():
    from falsecolor import builtin_names

    return {name: build_palette(builtin(name)) for name in builtin_names()}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion check")


_criteria = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or report.failed:
        ok = report.passed and _criteria.get(marker, True)
        _criteria[marker] = ok


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {number:>2}. {title}")
