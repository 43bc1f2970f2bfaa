"""Prints one PASS/FAIL line per acceptance criterion after the run."""
from __future__ import annotations

from typing import Dict, List, Tuple

import pytest

_RESULTS: Dict[str, Tuple[int, str, str]] = {}


class _CriterionLog:
    def __init__(self, nodeid: str):
        self.nodeid = nodeid

    def start(self, num: int, label: str) -> None:
        _RESULTS[self.nodeid] = (num, label, "FAIL")

    def passed(self, num: int, label: str) -> None:
        _RESULTS[self.nodeid] = (num, label, "PASS")


@pytest.fixture
def criterion_log(request) -> _CriterionLog:
    return _CriterionLog(request.node.nodeid)


def pytest_terminal_summary(terminalreporter) -> None:
    if not _RESULTS:
        return
    rows: List[Tuple[int, str, str]] = sorted(_RESULTS.values(), key=lambda r: r[0])
    terminalreporter.section("acceptance criteria")
    for num, label, status in rows:
        terminalreporter.write_line(f"criterion {num} ({label}): {status}")
