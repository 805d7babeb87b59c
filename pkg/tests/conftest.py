import sys

import pytest
from hypothesis import HealthCheck, settings

from lctkit import parse_ideal

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def I0():
    return parse_ideal("x^4, y^7, z^14, y^6*z")


@pytest.fixture
def xy2z_ideal():
    return parse_ideal("x*y^2*z, x^5, y^6, z^5")


@pytest.fixture
def xyz_ideal():
    return parse_ideal("x*y*z, x^5, y^6, z^5")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[key])
