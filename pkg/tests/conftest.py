import random

import pytest

from satlab.graph import make_graph

_CRITERIA: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion outcome for the end-of-run summary."""

    def record(name: str, ok: bool, detail: str = "") -> bool:
        _CRITERIA.append((name, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def random_graph(rng: random.Random, n: int, p: float | None = None):
    if p is None:
        p = rng.random()
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
