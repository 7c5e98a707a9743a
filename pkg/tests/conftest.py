from __future__ import annotations

import sys

import pytest
from hypothesis import HealthCheck, settings

from gf2cycles.gf2 import _kernels_numpy

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

KERNELS = [pytest.param(_kernels_numpy, id="numpy")]
try:
    from gf2cycles.gf2 import _kernels_numba
    KERNELS.append(pytest.param(_kernels_numba, id="numba"))
except ImportError:  # numba missing
    pass


@pytest.fixture(params=KERNELS)
def kernels(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
