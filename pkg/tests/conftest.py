"""Shared pytest plumbing: the acceptance-criteria summary."""
from __future__ import annotations

from collections import OrderedDict

import pytest

_ACCEPTANCE: "OrderedDict[int, list[tuple[str, bool, str]]]" = OrderedDict()


@pytest.fixture
def acceptance():
    """Record ``(criterion, part, passed, detail)``; printed once per criterion at the end."""

    def record(criterion: int, part: str, passed: bool, detail: str) -> None:
        _ACCEPTANCE.setdefault(criterion, []).append((part, bool(passed), detail))
        print(f"criterion {criterion} [{part}]: {'PASS' if passed else 'FAIL'} - {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_ACCEPTANCE):
        parts = _ACCEPTANCE[criterion]
        ok = all(p for _, p, _ in parts)
        body = "; ".join(f"{name} {'PASS' if p else 'FAIL'} ({detail})" for name, p, detail in parts)
        terminalreporter.write_line(f"CRITERION {criterion}: {'PASS' if ok else 'FAIL'} - {body}")
