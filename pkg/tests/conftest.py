import pytest

from pbheap import LEAF, insert

_acceptance_lines = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion for the summary."""

    def record(name, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail else "")
        _acceptance_lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def build(values):
    h = LEAF
    for v in values:
        h = insert(h, v)
    return h

