import os
import random

import pytest
from hypothesis import settings

SEED = int(os.environ.get("DIAGCUBIC_SEED", "20190319"))

settings.register_profile("repro", derandomize=True, deadline=None, max_examples=60)
settings.load_profile(os.environ.get("DIAGCUBIC_HYPOTHESIS_PROFILE", "repro"))

_acceptance: dict[str, str] = {}


@pytest.fixture
def rng():
    return random.Random(SEED)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda n: int(n.split("_")[1])):
        terminalreporter.write_line(f"{name}: {_acceptance[name]}")
