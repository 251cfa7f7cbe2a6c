import itertools

import pytest
from hypothesis import HealthCheck, settings

from wpcount import _kernels

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SWEEP_QS = (2, 3, 4, 5, 7, 8, 9)


def sweep_weights(max_n=3, max_weight=6):
    for n in range(1, max_n + 1):
        yield from itertools.product(range(1, max_weight + 1), repeat=n + 1)


@pytest.fixture(params=sorted(_kernels.backends()))
def kernels(request):
    return _kernels.backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
