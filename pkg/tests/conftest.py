"""Shared test plumbing.

The acceptance module reports one PASS/FAIL line per criterion; those lines
are buffered here and printed in the terminal summary so they survive
pytest's output capturing.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

acceptance_lines: list[str] = []


def record_acceptance(ok: bool, criterion: str) -> None:
    acceptance_lines.append(f"{'PASS' if ok else 'FAIL'}  {criterion}")


def pytest_terminal_summary(terminalreporter):
    if not acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_lines:
        terminalreporter.write_line(line)
