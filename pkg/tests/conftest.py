import pytest

from gl11inv.gl11 import GL11
from gl11inv.superpoly import parse


@pytest.fixture
def P():
    """Parse text in the gl(1|1) alphabet."""
    return lambda text: parse(GL11, text)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
