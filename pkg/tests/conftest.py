import pytest

from hilbsmooth.staircase import from_monomials


@pytest.fixture
def tetra():
    """{1, x1, x2, x3}."""
    return from_monomials([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)


@pytest.fixture
def cbox():
    """{1, x1, x2, x1x2, x3}."""
    return from_monomials([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)], 3)


@pytest.fixture
def fig2():
    return from_monomials([(0, 0), (1, 0), (0, 1), (0, 2)], 2)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
