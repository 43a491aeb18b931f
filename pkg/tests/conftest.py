import os

import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=50, deadline=None)
settings.register_profile("dev", max_examples=20, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


@pytest.fixture
def acceptance_report():
    def report(num, name, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {name} -- {detail}"
        ACCEPTANCE_LINES.append((num, line))
        print(line)
        return ok
    return report
