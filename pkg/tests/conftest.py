"""Acceptance-line bookkeeping.

The acceptance tests each record one ``PASS``/``FAIL`` line; the terminal
summary hook prints them after the run so they are visible without -s.
"""

from __future__ import annotations

from contextlib import contextmanager

RESULTS: list[str] = []


@contextmanager
def criterion(number: int, description: str):
    """Record one acceptance line; failures re-raise after recording."""
    try:
        yield
    except BaseException as exc:
        reason = str(exc).strip().splitlines()[0] if str(exc).strip() else type(exc).__name__
        RESULTS.append(f"criterion {number} ({description}): FAIL - {reason}")
        raise
    RESULTS.append(f"criterion {number} ({description}): PASS")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(RESULTS):
        terminalreporter.write_line(line)
