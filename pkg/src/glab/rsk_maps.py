"""Row insertion and the level maps ``pu`` (level k+1 -> k) and ``pd`` (level k -> k+1).

Both maps act on full RSE-tableaux: the non-starred prefix of each row is the
RPP region (negative entries included), the starred suffix the elegant region.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import Cell, Partition, SkewShape
from .tableaux import NEG, STAR, Entry, RSETableau, Tableau, le, star, validate_rse

Rows = list[list[Entry]]


@dataclass(frozen=True)
class InsertionRecord:
    """One insertion (``forward``) or reverse insertion.

    ``path`` lists the cells touched, in the order visited.  For a reverse
    insertion ``value`` is the entry ejected from the top row and ``column``
    its position there.
    """

    value: Entry
    path: tuple[Cell, ...]
    forward: bool = True
    column: int | None = None

    def to_json(self) -> dict:
        d = {"kind": "insert" if self.forward else "reverse", "value": str(self.value), "path": [list(c) for c in self.path]}
        if self.column is not None:
            d["column"] = self.column
        return d


def row_insert(rows: Rows, first_row: int, x: Entry) -> InsertionRecord:
    """Insert ``x`` into ``rows[first_row - 1]`` and bump downwards, in place.

    ``x`` replaces the leftmost entry strictly greater than it; the bumped entry
    moves to the next row.  Rows are created as needed.
    """
    r = first_row - 1
    path = []
    value = x
    while True:
        if r == len(rows):
            rows.append([])
        row = rows[r]
        idx = next((c for c, e in enumerate(row) if e > value), None)
        if idx is None:
            row.append(value)
            path.append((r + 1, len(row)))
            return InsertionRecord(x, tuple(path))
        row[idx], value = value, row[idx]
        path.append((r + 1, idx + 1))
        r += 1


def reverse_insert(rows: Rows, row: int, top_row: int) -> InsertionRecord:
    """Remove the last cell of ``rows[row - 1]`` and bump upwards to ``top_row``, in place.

    The travelling value replaces the rightmost entry strictly smaller than it.
    Returns the value leaving ``top_row`` and the column it left from.
    """
    r = row - 1
    col = len(rows[r])
    value = rows[r].pop()
    path = [(row, col)]
    while r > top_row - 1:
        r -= 1
        line = rows[r]
        idx = max((c for c, e in enumerate(line) if e < value), default=None)
        if idx is None:
            raise ValueError(f"reverse insertion of {value} stuck in row {r + 1}")
        line[idx], value = value, line[idx]
        col = idx + 1
        path.append((r + 1, col))
    return InsertionRecord(value, tuple(path), forward=False, column=col)


def _split(t: RSETableau) -> tuple[Rows, dict[Cell, Entry], list[int]]:
    rows = t.rows()
    plain_rows = [[e for e in row if e.kind != STAR] for row in rows]
    stars = {(i, j): e for i, row in enumerate(rows, 1) for j, e in enumerate(row, 1) if e.kind == STAR}
    return plain_rows, stars, [len(r) for r in rows]


def _assemble(plain_rows: Rows, stars: dict[Cell, Entry], lengths: list[int]) -> Tableau:
    cells: dict[Cell, Entry] = {}
    for i, row in enumerate(plain_rows, 1):
        for j, e in enumerate(row, 1):
            cells[(i, j)] = e
    for c, e in stars.items():
        if c in cells:
            raise ValueError(f"cell {c} filled twice")
        cells[c] = e
    out = Tableau.from_cells(cells)
    got = [len(r) for r in out.rows()] if cells else []
    if got != [x for x in lengths if x]:
        raise ValueError(f"row lengths changed from {lengths} to {got}")
    return out


def shape_of(t: RSETableau) -> SkewShape:
    """Outer shape from the row lengths, inner shape from the negative entries."""
    rows = t.rows()
    return SkewShape(Partition(len(r) for r in rows), Partition(sum(1 for e in r if e.kind == NEG) for r in rows))


@dataclass(frozen=True)
class MapResult:
    """Output of ``pu`` or ``pd`` with its insertion log and validity verdict."""

    tableau: RSETableau
    records: tuple[InsertionRecord, ...] = ()
    violations: tuple[str, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "tableau": self.tableau.to_json(),
            "records": [r.to_json() for r in self.records],
            "valid": self.valid,
            "violations": list(self.violations),
        }


def pu_traced(t: RSETableau, shape: SkewShape | None = None, check: bool = True) -> MapResult:
    """``pu`` with its insertion records.

    Row ``k = level - 1`` loses its novel entries (those differing from the
    entry below, or with nothing below); the row is deleted, the rows below
    move up, and the novel entries are inserted from row ``k`` on.  Cells left
    over from the old plain region become ``k*``.
    """
    if t.level < 2:
        raise ValueError("pu needs level at least 2")
    if check:
        shape = shape or shape_of(t)
        problems = validate_rse(t, shape)
        if problems:
            raise ValueError(f"pu of an invalid RSE-tableau: {problems[0]}")
    k = t.level - 1
    rows, stars, lengths = _split(t)
    while len(rows) < k + 1:
        rows.append([])
    old = [len(r) for r in rows]
    top, below = rows[k - 1], rows[k]
    novel = [e for j, e in enumerate(top) if j >= len(below) or e != below[j]]
    del rows[k - 1]
    records = tuple(row_insert(rows, k, a) for a in sorted(novel))
    new = [len(r) for r in rows] + [0] * (len(old) - len(rows))
    for i, (a, b) in enumerate(zip(old, new), 1):
        if b > a:
            raise ValueError(f"insertion grew row {i} beyond its old length")
        for j in range(b + 1, a + 1):
            stars[(i, j)] = star(k)
    out = RSETableau(_assemble(rows, stars, lengths), k)
    violations = tuple(validate_rse(out, shape)) if check else ()
    return MapResult(out, records, violations)


def pu(t: RSETableau, shape: SkewShape | None = None, check: bool = True) -> RSETableau:
    return pu_traced(t, shape, check).tableau


def pd_traced(t: RSETableau, shape: SkewShape | None = None, check: bool = True) -> MapResult:
    """``pd`` with its reverse-insertion records and a skew-validity verdict.

    The ``k*`` cells are dropped.  For every column ``c <= lam_k`` without a
    ``k*``, right to left, the last plain cell of column ``c`` is reverse
    inserted up to row ``k``.  The ejected values fill a new row ``k`` at the
    columns they left; the remaining cells of that row copy the row below.
    """
    k = t.level
    if check or shape is not None:
        shape = shape or shape_of(t)
    if check:
        problems = validate_rse(t, shape)
        if problems:
            raise ValueError(f"pd of an invalid RSE-tableau: {problems[0]}")
    rows, stars, lengths = _split(t)
    kcols = {j for (i, j), e in stars.items() if e == star(k)}
    stars = {c: e for c, e in stars.items() if e != star(k)}
    lam_k = lengths[k - 1] if k <= len(lengths) else 0
    records = []
    for c in range(lam_k, 0, -1):
        if c in kcols:
            continue
        i = max(r for r in range(k, len(rows) + 1) if len(rows[r - 1]) >= c)
        if len(rows[i - 1]) != c:
            raise ValueError(f"column {c} does not end in a corner of the plain region")
        records.append(reverse_insert(rows, i, k))
    ejected = {rec.column: rec.value for rec in records}
    below = rows[k - 1] if k <= len(rows) else []
    new_row = []
    for j in range(1, lam_k + 1):
        if j in ejected:
            new_row.append(ejected[j])
        elif j <= len(below):
            new_row.append(below[j - 1])
        else:
            raise ValueError(f"no entry for cell ({k},{j})")
    rows = rows[: k - 1] + [new_row] + rows[k - 1:]
    while rows and not rows[-1]:
        rows.pop()
    out = RSETableau(_assemble(rows, stars, lengths), k + 1)
    violations = tuple(validate_rse(out, shape)) if shape is not None else ()
    return MapResult(out, tuple(records), violations)


def pd(t: RSETableau, shape: SkewShape | None = None, check: bool = True) -> RSETableau:
    """``pd`` without the verdict; the output may leave the skew family."""
    return pd_traced(t, shape, check).tableau


def pu_power(t: RSETableau, d: int, check: bool = False) -> RSETableau:
    for _ in range(d):
        t = pu(t, check=check)
    return t


def pd_power(t: RSETableau, d: int, check: bool = False) -> RSETableau:
    for _ in range(d):
        t = pd(t, check=check)
    return t


def pd_image_test(t: RSETableau, shape: SkewShape | None = None) -> bool:
    """Whether ``pd(t)`` stays in the skew family, decided at the seam.

    With ``s = mu_k`` this is ``col_{<=s}(t) <= pd(col_{>=s+1}(t))``; it holds
    trivially when row ``k`` has no inner cells.
    """
    shape = shape or shape_of(t)
    s = shape.inner.part(t.level)
    if s == 0:
        return True
    right = pd(t.col_ge(s + 1), check=False)
    return le(t.tableau.col_le(s), right.tableau)


def pd_image_test_direct(t: RSETableau, shape: SkewShape | None = None) -> bool:
    """Same question answered by running ``pd`` and validating the result."""
    shape = shape or shape_of(t)
    return pd_traced(t, shape, check=False).valid
