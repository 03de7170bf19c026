import pytest
from hypothesis import strategies as st

from fusscat.partition import SetPartition

_acceptance_lines = []


@pytest.fixture
def report():
    """Record a one-line verdict for the acceptance summary."""

    def record(criterion, description, ok):
        _acceptance_lines.append(f"{'PASS' if ok else 'FAIL'}  criterion {criterion}: {description}")
        assert ok, description

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@st.composite
def partitions(draw, max_n=8, n=None):
    """Arbitrary set partitions of [n] from restricted growth strings."""
    if n is None:
        n = draw(st.integers(0, max_n))
    labels = []
    top = -1
    for _ in range(n):
        b = draw(st.integers(0, top + 1))
        top = max(top, b)
        labels.append(b)
    blocks = {}
    for x, b in enumerate(labels, start=1):
        blocks.setdefault(b, []).append(x)
    return SetPartition(n, blocks.values())
