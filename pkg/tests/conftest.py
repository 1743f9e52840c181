"""Shared pytest wiring.

The acceptance tests record one verdict line per criterion here; echoing
them from the terminal-summary hook keeps them visible on stdout whether
or not output capture is active.
"""

_verdict_lines = []


def record_verdict(line):
    _verdict_lines.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _verdict_lines:
        terminalreporter.section("acceptance criteria")
        for line in _verdict_lines:
            terminalreporter.write_line(line)
