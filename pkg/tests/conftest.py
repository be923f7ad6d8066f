import os

# the gmpy backend of mpmath is not needed and crashes on some builds
os.environ.setdefault("MPMATH_NOGMPY", "1")

import pytest  # noqa: E402

ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "invariant: module invariant and property checks")
    config.addinivalue_line("markers", "acceptance: numbered acceptance criteria")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


@pytest.fixture(scope="session")
def rng():
    import numpy as np

    return np.random.default_rng(20240601)
