"""Shared test plumbing: the acceptance scorecard.

Acceptance tests register one line per criterion; the terminal-summary hook
prints them after the run, so the scorecard shows regardless of pytest's
output capturing.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance scorecard")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
