"""Shared pytest plumbing: the acceptance-criteria summary section.

Acceptance tests call record_criterion before asserting, so every
criterion shows up with a pass/fail verdict in the terminal summary even
when one of them fails.
"""

_ACCEPTANCE_LINES: dict[int, str] = {}


def record_criterion(number: int, passed: bool, text: str) -> None:
    verdict = "PASS" if passed else "FAIL"
    _ACCEPTANCE_LINES[number] = f"criterion {number:>2}: {verdict}  {text}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(_ACCEPTANCE_LINES[number])
