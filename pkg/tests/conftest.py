"""Shared pytest plumbing.

test_acceptance records one line per criterion here; printing them from a
terminal-summary hook keeps them visible under pytest's output capture.
"""

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_lines:
        terminalreporter.write_line(line)
