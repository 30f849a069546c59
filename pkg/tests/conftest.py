import sys

from hypothesis import settings

settings.register_profile("hardimer", database=None, max_examples=60, deadline=None)
settings.load_profile("hardimer")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # stdout of passing tests is captured; replay the acceptance verdicts
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "VERDICT_LINES", None) if module else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
