from math import gcd

import pytest

from dualfsig import kernels

GRID_N = (2, 3, 4)
GRID_D = (2, 3, 4, 5)
GRID_P = (2, 3, 5, 7)


def grid_points(max_rank):
    """(n, d, p, e) on the acceptance grid with gcd(p, d) = 1 and p^(ne) <= max_rank."""
    for n in GRID_N:
        for d in GRID_D:
            for p in GRID_P:
                if gcd(p, d) != 1:
                    continue
                e = 1
                while p ** (n * e) <= max_rank:
                    yield n, d, p, e
                    e += 1


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    return kernels.available_backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
