import random

import pytest

from projspace import AmbientSpace, field_from_order
from projspace.subspace import from_rows

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def ambient(q, n):
    return AmbientSpace(field_from_order(q), n)


def random_basis_rows(amb, rng):
    """Rows of a uniformly random invertible matrix, by rejection."""
    q, n = amb.q, amb.n
    while True:
        rows = [tuple(rng.randrange(q) for _ in range(n)) for _ in range(n)]
        if from_rows(amb, rows).dim == n:
            return rows


@pytest.fixture
def F2_3():
    return ambient(2, 3)


@pytest.fixture
def rng():
    return random.Random(1234)
