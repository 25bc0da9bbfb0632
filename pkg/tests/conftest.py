from __future__ import annotations

from pathlib import Path

import pytest

from pasmkit import Dims, Pasm

GOLDEN = Path(__file__).parent / "golden"

MSTAR_ROWS = [[1, 0, 0, 0], [0, 0, 1, 0], [-1, 1, 0, 0], [1, 0, -1, 1]]
TSTAR = [[1], [1, 3], [0, 2, 3], [0, 1, 2, 4]]
CSTAR = [[0, 0, 0, 0, 0], [1, 0, 0, 0, 0], [2, 1, 1, 0, 0], [2, 2, 1, 0, 0], [3, 2, 1, 1, 0]]
HSTAR = [[0, 1, 2, 3, 4], [1, 2, 3, 4, 3], [2, 3, 2, 3, 2], [3, 4, 3, 2, 3], [4, 3, 4, 3, 2]]


@pytest.fixture
def mstar() -> Pasm:
    return Pasm.from_rows(MSTAR_ROWS)


@pytest.fixture
def d44() -> Dims:
    return Dims(4, 4)


# One line per acceptance criterion, echoed in the terminal summary so the
# results show up whether or not output capture is on.
_CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        print(line)
        _CRITERIA.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA):
            terminalreporter.write_line(line)


# The matrices listed for PASM_{2,2} and PASM_{2,3}, in the printed order.
PRINTED_22 = [
    [[0, 0], [0, 0]], [[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]],
    [[0, 0], [0, 1]], [[1, 0], [0, 1]], [[0, 1], [1, 0]], [[1, 0], [-1, 1]],
]
PRINTED_23 = [
    [[0, 0, 0], [0, 0, 0]], [[1, 0, 0], [0, 0, 0]], [[0, 1, 0], [0, 0, 0]], [[0, 0, 1], [0, 0, 0]],
    [[0, 0, 0], [1, 0, 0]], [[0, 0, 0], [0, 1, 0]], [[0, 0, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0]],
    [[1, 0, 0], [0, 0, 1]], [[0, 1, 0], [1, 0, 0]], [[0, 1, 0], [0, 0, 1]], [[0, 0, 1], [1, 0, 0]],
    [[0, 0, 1], [0, 1, 0]], [[1, 0, 0], [-1, 1, 0]], [[1, 0, 0], [-1, 0, 1]], [[0, 1, 0], [0, -1, 1]],
    [[0, 1, 0], [1, -1, 1]],
]

# Count tables as printed; rows m (or n) = 1..6.
PRINTED_PASM_TABLE = [
    [2, 3, 4, 5, 6, 7],
    [3, 8, 17, 31, 51, 78],
    [4, 17, 62, 184, 462, 1022],
    [5, 31, 184, 924, 3809, 13197],
    [6, 51, 462, 3809, 26394, 150777],
    [7, 78, 1022, 13197, 150777, 1442764],
]
PRINTED_NT_TABLE = [
    [1, 1],
    [1, 5, 2],
    [1, 19, 35, 7],
    [1, 69, 425, 387, 42],
    [1, 251, 4845, 13861, 7007, 429],
    [1, 923, 55897, 458263, 709242, 210912, 7436],
]
