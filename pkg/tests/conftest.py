import json
from pathlib import Path

import pytest
from hypothesis import strategies as st

from glab.partitions import Partition, SkewShape
from glab.paths import NPath
from glab.tableaux import RSETableau, Tableau

DATA = Path(__file__).resolve().parent.parent / "testdata"


def load(name: str) -> dict:
    return json.loads((DATA / name).read_text())


def skew(d: dict) -> SkewShape:
    return SkewShape.from_json(d)


def rse(d: dict) -> RSETableau:
    return RSETableau(Tableau.from_json(d), d["level"])


def from_columns(cols, level=None):
    t = Tableau(tuple((0, tuple(_entries(c))) for c in cols))
    return t if level is None else RSETableau(t, level)


def _entries(col):
    from glab.tableaux import Entry
    return [Entry.parse(e) for e in col]


@pytest.fixture(scope="session")
def worked_example() -> NPath:
    return NPath.from_json(load("worked_example_npath.json"))


@st.composite
def partitions(draw, max_rows=4, max_cols=4):
    rows = draw(st.integers(0, max_rows))
    parts = sorted(draw(st.lists(st.integers(1, max_cols), min_size=rows, max_size=rows)), reverse=True)
    return Partition(parts)


@st.composite
def skew_shapes(draw, max_rows=4, max_cols=4, nonempty=True):
    lam = draw(partitions(max_rows, max_cols))
    if nonempty and not len(lam):
        lam = Partition((1,))
    inner = [draw(st.integers(0, p)) for p in lam.parts]
    for i in range(1, len(inner)):
        inner[i] = min(inner[i], inner[i - 1])
    return SkewShape(lam, Partition(inner))


# acceptance lines are collected here and echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
