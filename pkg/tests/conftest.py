import dataclasses
import functools

import numpy as np
import pytest

from cavityfwm import aspelmeyer, steady_state

MW = 1e-3


@pytest.fixture(scope="session")
def params():
    return aspelmeyer()


def op_at(power_mw, **overrides):
    return steady_state(aspelmeyer(pump_power=power_mw * MW, **overrides))


def uncoupled(op):
    return dataclasses.replace(op, chi=0.0)


@pytest.fixture(scope="session")
def op1():
    return op_at(1.0)


@pytest.fixture(scope="session")
def op20():
    return op_at(20.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


TAU_MAX_US = 30.0
TAU_POINTS = 1201


@functools.lru_cache(maxsize=None)
def g2_series(power_mw, refine=0, temperature=0.0):
    """Cached total-band correlator series on the standard symmetric delay grid."""
    from cavityfwm import noise

    op = op_at(power_mw)
    spec = noise.noise_grid(op)
    for _ in range(refine):
        spec = spec.refined()
    taus = np.linspace(-TAU_MAX_US, TAU_MAX_US, TAU_POINTS) * 1e-6
    return noise.correlators(op, temperature, taus, grid=spec)


# Acceptance reporting: one PASS/FAIL line per criterion in the terminal summary.

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _CRITERIA[value] = ("PASS" if report.passed else "FAIL", report.nodeid)


@pytest.fixture(autouse=True)
def _criterion_tag(request):
    marker = request.node.get_closest_marker("criterion")
    if marker is not None:
        request.node.user_properties.append(("criterion", tuple(marker.args)))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), (outcome, _) in sorted(_CRITERIA.items()):
        terminalreporter.write_line(f"criterion {number:>2} {outcome}: {title}")
