"""Shared pytest plumbing: surface the acceptance summary lines."""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance")
    if mod is None:
        return
    lines = getattr(mod, "RESULTS", [])
    if not lines:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria", sep="-")
    for line in lines:
        terminalreporter.write_line(line)
