import itertools

import pytest

from fixcircle.contractions import MultivaluedMap
from fixcircle.instances import example1, example2
from fixcircle.metric import MatrixSpace

_acceptance_lines: list[str] = []


@pytest.fixture
def record():
    """Collect one PASS/FAIL line per acceptance criterion for the summary."""

    def _record(tag: str, ok: bool, detail: str = "") -> bool:
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] {tag}" + (f"  ({detail})" if detail else ""))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def ex1():
    return example1()


@pytest.fixture(scope="session")
def ex2():
    return example2()


@pytest.fixture
def three_point():
    """a, b, c with d(a,b)=1, d(a,c)=d(b,c)=2; T(a)={a}, T(b)={c}, T(c)={c}."""
    space = MatrixSpace(["a", "b", "c"], [[0, 1, 2], [1, 0, 2], [2, 2, 0]])
    T = MultivaluedMap(space, {"a": ["a"], "b": ["c"], "c": ["c"]})
    return space, T


def all_subsets(labels):
    for k in range(1, len(labels) + 1):
        yield from itertools.combinations(labels, k)
