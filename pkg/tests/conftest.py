import sys

import pytest

from rm3.curves import default_quartic


@pytest.fixture(scope="session")
def quartic():
    return default_quartic()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
    terminalreporter.write_line("criterion 7 [EXCLUDED] modular-form identification is not checked; no other criterion depends on it")
