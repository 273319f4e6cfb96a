import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240615)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[cid])
