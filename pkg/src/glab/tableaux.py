"""Tableaux over the extended alphabet  1̄ < 2̄ < ... < 1 < 2 < ... < 1* < 2* < ...

A :class:`Tableau` is stored column by column.  Column ``j`` is a pair
``(start, entries)``: its cells are rows ``start + 1 .. start + len(entries)``.
Skew RSE-tableaux always carry their inner cells explicitly as negative
entries, so their columns start at row 1 and they can be read row by row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

from .partitions import Cell, Partition, SkewShape
from .polynomial import Monomial

NEG, PLAIN, STAR = 0, 1, 2
_SUFFIX = {NEG: "̄", PLAIN: "", STAR: "*"}


class Entry(NamedTuple):
    """An extended integer; tuple order is the alphabet order."""

    kind: int
    value: int

    def __str__(self) -> str:
        if self.kind == NEG:
            return f"-{self.value}"
        return f"{self.value}*" if self.kind == STAR else str(self.value)

    def pretty(self) -> str:
        return f"{self.value}{_SUFFIX[self.kind]}"

    @classmethod
    def parse(cls, text: str) -> Entry:
        text = text.strip()
        if text.startswith("-"):
            return neg(int(text[1:]))
        if text.endswith("*"):
            return star(int(text[:-1]))
        return plain(int(text))


def neg(i: int) -> Entry:
    return Entry(NEG, i)


def plain(i: int) -> Entry:
    return Entry(PLAIN, i)


def star(i: int) -> Entry:
    return Entry(STAR, i)


def E(text: str) -> Entry:
    """Shorthand parser, ``E("3*")``."""
    return Entry.parse(text)


Column = tuple[int, tuple[Entry, ...]]


@dataclass(frozen=True)
class Tableau:
    columns: tuple[Column, ...] = ()

    def __post_init__(self):
        cols = tuple((int(s), tuple(es)) for s, es in self.columns)
        object.__setattr__(self, "columns", cols)

    # -- construction -------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry | str | None]]) -> Tableau:
        """Build from left-justified rows; ``None`` marks an empty cell at the top of a column."""
        width = max((len(r) for r in rows), default=0)
        cols = []
        for j in range(width):
            start = 0
            entries: list[Entry] = []
            for i, row in enumerate(rows):
                if j >= len(row):
                    continue
                e = row[j]
                if e is None:
                    if entries:
                        raise ValueError(f"gap inside column {j + 1}")
                    start = i + 1
                    continue
                if i != start + len(entries):
                    raise ValueError(f"column {j + 1} is not contiguous")
                entries.append(Entry.parse(e) if isinstance(e, str) else e)
            cols.append((start, tuple(entries)))
        return cls(tuple(cols))

    @classmethod
    def from_cells(cls, cells: dict[Cell, Entry]) -> Tableau:
        if not cells:
            return cls()
        width = max(j for _, j in cells)
        cols = []
        for j in range(1, width + 1):
            rows = sorted(i for i, c in cells if c == j)
            if not rows:
                cols.append((0, ()))
                continue
            if rows != list(range(rows[0], rows[-1] + 1)):
                raise ValueError(f"column {j} is not contiguous")
            cols.append((rows[0] - 1, tuple(cells[(i, j)] for i in rows)))
        return cls(tuple(cols))

    # -- shape ---------------------------------------------------------
    @property
    def width(self) -> int:
        return len(self.columns)

    def column(self, j: int) -> Column:
        return self.columns[j - 1]

    def heights(self) -> tuple[int, ...]:
        """Outer composition: last occupied row of each column."""
        return tuple(s + len(es) for s, es in self.columns)

    def starts(self) -> tuple[int, ...]:
        """Inner composition: number of empty rows above each column."""
        return tuple(s for s, _ in self.columns)

    @property
    def num_rows(self) -> int:
        return max(self.heights(), default=0)

    def __len__(self) -> int:
        return sum(len(es) for _, es in self.columns)

    def cells(self) -> Iterator[tuple[Cell, Entry]]:
        for j, (s, es) in enumerate(self.columns, 1):
            for k, e in enumerate(es):
                yield (s + k + 1, j), e

    def cell_map(self) -> dict[Cell, Entry]:
        return dict(self.cells())

    def get(self, i: int, j: int) -> Entry | None:
        if not 1 <= j <= len(self.columns):
            return None
        s, es = self.columns[j - 1]
        k = i - s - 1
        return es[k] if 0 <= k < len(es) else None

    def is_full(self) -> bool:
        """All columns start at row 1."""
        return all(s == 0 for s, _ in self.columns)

    def outer_partition(self) -> Partition | None:
        """Outer shape as a partition (rows), or None if column heights increase somewhere."""
        h = self.heights()
        if any(a < b for a, b in zip(h, h[1:])):
            return None
        return Partition(h).conjugate() if h else Partition()

    def rows(self) -> list[list[Entry]]:
        """Rows of a full tableau, left-justified."""
        if not self.is_full():
            raise ValueError("rows() needs a tableau whose columns start at row 1")
        out: list[list[Entry]] = []
        for i in range(1, self.num_rows + 1):
            row = []
            for j in range(1, self.width + 1):
                e = self.get(i, j)
                if e is None:
                    break
                row.append(e)
            out.append(row)
        return out

    # -- slicing and gluing ---------------------------------------------
    def col_le(self, k: int) -> Tableau:
        return Tableau(self.columns[: max(k, 0)])

    def col_ge(self, k: int) -> Tableau:
        """Columns ``k, k+1, ...`` re-indexed from 1."""
        return Tableau(self.columns[max(k, 1) - 1:])

    def col_range(self, lo: int, hi: int) -> Tableau:
        """Columns ``lo..hi`` inclusive, re-indexed from 1."""
        return Tableau(self.columns[lo - 1: hi])

    def row_ge(self, k: int) -> Tableau:
        """Drop rows above ``k``; row indices are kept (columns start lower)."""
        cols = []
        for s, es in self.columns:
            drop = max(0, k - 1 - s)
            cols.append((max(s, k - 1), es[drop:]) if drop < len(es) else (s + len(es), ()))
        return Tableau(tuple(cols))

    def row_le(self, k: int) -> Tableau:
        return Tableau(tuple((s, es[: max(0, k - s)]) for s, es in self.columns))

    def __or__(self, other: Tableau) -> Tableau:
        return concat(self, other)

    # -- misc ------------------------------------------------------------
    def pretty(self) -> str:
        cm = self.cell_map()
        if not cm:
            return "(empty)"
        w = max(len(e.pretty()) for e in cm.values())
        lines = []
        for i in range(1, self.num_rows + 1):
            cells = [cm[(i, j)].pretty().rjust(w) if (i, j) in cm else " " * w for j in range(1, self.width + 1)]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.pretty()

    def to_json(self) -> dict:
        return {
            "shape": {"inner_columns": list(self.starts()), "outer_columns": list(self.heights())},
            "cells": [{"r": i, "c": j, "e": str(e)} for (i, j), e in sorted(self.cells(), key=lambda ce: (ce[0][1], ce[0][0]))],
        }

    @classmethod
    def from_json(cls, data: dict) -> Tableau:
        cells = {(c["r"], c["c"]): Entry.parse(c["e"]) for c in data["cells"]}
        t = cls.from_cells(cells)
        shape = data.get("shape", {})
        if "inner_columns" in shape:
            starts, heights = shape["inner_columns"], shape["outer_columns"]
            cols = list(t.columns) + [(0, ())] * (len(starts) - t.width)
            cols = [(s if not es else cs, es) for (cs, es), s in zip(cols, starts)]
            t = cls(tuple(cols))
            if t.heights() != tuple(heights):
                raise ValueError("cells do not match the declared shape")
        return t


def concat(t1: Tableau, t2: Tableau) -> Tableau:
    """Side-by-side gluing: the columns of ``t1`` followed by those of ``t2``."""
    return Tableau(t1.columns + t2.columns)


def is_rpp(t: Tableau) -> bool:
    """Weakly increasing along rows and down columns wherever both cells exist."""
    cm = t.cell_map()
    for (i, j), e in cm.items():
        right = cm.get((i, j + 1))
        if right is not None and right < e:
            return False
        below = cm.get((i + 1, j))
        if below is not None and below < e:
            return False
    return True


def le(t1: Tableau, t2: Tableau) -> bool:
    """``t1 <= t2``: the glued tableau is an RPP on a Young diagram.

    Both pieces are assumed to be RPPs themselves, so only the seam is checked.
    """
    if t1.width == 0 or t2.width == 0:
        return True
    s1, c1 = t1.columns[-1]
    s2, c2 = t2.columns[0]
    if s1 != 0 or s2 != 0 or len(c1) < len(c2):
        return False
    return all(a <= b for a, b in zip(c1, c2))


def is_ssyt_columns(t: Tableau) -> bool:
    return all(a < b for _, es in t.columns for a, b in zip(es, es[1:]))


# -- RPPs and weights -------------------------------------------------------

def skew_tableau(shape: SkewShape, values: dict[Cell, Entry]) -> Tableau:
    """Tableau on the cells of ``shape`` (inner cells left empty)."""
    mc = shape.inner.conjugate()
    cols = []
    for j in range(1, shape.outer.part(1) + 1):
        rows = range(mc.part(j) + 1, shape.outer.conjugate().part(j) + 1)
        cols.append((mc.part(j), tuple(values[(i, j)] for i in rows)))
    return Tableau(tuple(cols))


def fill_weakly_increasing(
    cells: Sequence[Cell],
    alphabet: Sequence[Entry],
    allowed: Callable[[Cell, Entry], bool] | None = None,
    fixed: dict[Cell, Entry] | None = None,
) -> Iterator[dict[Cell, Entry]]:
    """All fillings weakly increasing along rows and columns.

    ``cells`` must be listed column by column, top to bottom, leftmost column
    first; each cell's lower bound is the larger of its left and upper
    neighbours.  ``fixed`` cells are given and never enumerated.
    """
    alphabet = sorted(alphabet)
    fixed = dict(fixed or {})
    order = [c for c in cells if c not in fixed]
    filling = dict(fixed)

    def rec(k: int) -> Iterator[dict[Cell, Entry]]:
        if k == len(order):
            yield dict(filling)
            return
        i, j = order[k]
        lows = [filling[c] for c in ((i, j - 1), (i - 1, j)) if c in filling]
        low = max(lows) if lows else None
        for e in alphabet:
            if low is not None and e < low:
                continue
            if allowed is not None and not allowed((i, j), e):
                continue
            filling[(i, j)] = e
            yield from rec(k + 1)
        del filling[(i, j)]

    yield from rec(0)


def _column_order(shape: SkewShape) -> list[Cell]:
    return sorted(shape.cells(), key=lambda c: (c[1], c[0]))


def enumerate_rpp(shape: SkewShape, max_entry: int) -> list[Tableau]:
    """All RPPs of a skew shape with entries in ``1..max_entry``."""
    alphabet = [plain(v) for v in range(1, max_entry + 1)]
    return [skew_tableau(shape, f) for f in fill_weakly_increasing(_column_order(shape), alphabet)]


def enumerate_ssyt(shape: SkewShape, max_entry: int) -> list[Tableau]:
    return [t for t in enumerate_rpp(shape, max_entry) if is_ssyt_columns(t)]


def rpp_weight(t: Tableau) -> Monomial:
    """``prod x_i^{a_i} t_i^{b_i}`` over the plain cells.

    ``a_i`` counts columns containing ``i``; ``b_i`` counts cells in row ``i``
    whose entry repeats in the cell directly below.  Non-plain cells are ignored.
    """
    if not is_rpp(t):
        raise ValueError("rpp_weight of a tableau that is not an RPP")
    x: dict[int, int] = {}
    tt: dict[int, int] = {}
    for s, es in t.columns:
        for v in {e.value for e in es if e.kind == PLAIN}:
            x[v] = x.get(v, 0) + 1
        for k in range(len(es) - 1):
            if es[k].kind == PLAIN and es[k] == es[k + 1]:
                row = s + k + 1
                tt[row] = tt.get(row, 0) + 1
    return Monomial.from_maps(x, tt)


def star_weight(t: Tableau) -> Monomial:
    tt: dict[int, int] = {}
    for _, e in t.cells():
        if e.kind == STAR:
            tt[e.value] = tt.get(e.value, 0) + 1
    return Monomial.from_maps({}, tt)


def tableau_weight(t: Tableau) -> Monomial:
    """RPP weight of the plain part times ``t_a`` for every ``a*``."""
    return rpp_weight(t) * star_weight(t)


# -- RSE-tableaux -------------------------------------------------------------

@dataclass(frozen=True)
class RSETableau:
    """A full tableau (inner cells carry negative entries) together with its level."""

    tableau: Tableau
    level: int

    def __post_init__(self):
        if not self.tableau.is_full():
            raise ValueError("RSE-tableaux store their inner cells explicitly")
        if self.level < 1:
            raise ValueError("level must be positive")

    @property
    def width(self) -> int:
        return self.tableau.width

    def rows(self) -> list[list[Entry]]:
        return self.tableau.rows()

    def weight(self) -> Monomial:
        return tableau_weight(self.tableau)

    def col_le(self, k: int) -> RSETableau:
        return RSETableau(self.tableau.col_le(k), self.level)

    def col_ge(self, k: int) -> RSETableau:
        return RSETableau(self.tableau.col_ge(k), self.level)

    def with_level(self, level: int) -> RSETableau:
        return RSETableau(self.tableau, level)

    def pretty(self) -> str:
        lines = self.tableau.pretty().split("\n")
        if 1 <= self.level <= len(lines):
            lines[self.level - 1] += "  <- level"
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"level": self.level, **self.tableau.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> RSETableau:
        return cls(Tableau.from_json(data), data["level"])

    @classmethod
    def from_rows(cls, rows, level: int) -> RSETableau:
        return cls(Tableau.from_rows(rows), level)


def rse_weight(t: RSETableau, shape: SkewShape | None = None) -> Monomial:
    if shape is not None:
        problems = validate_rse(t, shape)
        if problems:
            raise ValueError(f"invalid RSE-tableau: {problems[0]}")
    return t.weight()


def with_negatives(t: Tableau) -> Tableau:
    """Fill the empty top of each column with ``ī`` in row ``i``."""
    return Tableau(tuple((0, tuple(neg(i) for i in range(1, s + 1)) + es) for s, es in t.columns))


def strip_negatives(t: Tableau) -> Tableau:
    cols = []
    for s, es in t.columns:
        k = 0
        while k < len(es) and es[k].kind == NEG:
            k += 1
        cols.append((s + k, es[k:]))
    return Tableau(tuple(cols))


def validate_rse(t: RSETableau, shape: SkewShape) -> list[str]:
    """Reasons why ``t`` is not a skew RSE-tableau of the given shape and level.

    An empty list means valid.  ``shape.outer`` fixes the outer diagram and
    ``shape.inner`` the cells that must hold negative entries.
    """
    k = t.level
    lam, mu = shape.outer, shape.inner
    lc, mc = lam.conjugate(), mu.conjugate()
    T = t.tableau
    problems: list[str] = []
    want = tuple(lc.part(j) for j in range(1, lam.part(1) + 1))
    if T.heights() != want:
        return [f"shape: column heights {T.heights()} differ from {want}"]
    cm = T.cell_map()
    for (i, j), e in sorted(cm.items()):
        in_mu = j <= mu.part(i)
        if in_mu and e != neg(i):
            problems.append(f"negative-cells: ({i},{j}) lies in the inner shape but holds {e}")
        elif not in_mu and e.kind == NEG:
            problems.append(f"negative-cells: ({i},{j}) holds {e} outside the inner shape")
        elif e.kind == STAR:
            a = e.value
            if not (mc.part(j) + 1 <= a <= i - 1):
                problems.append(f"star-bounds: {e} at ({i},{j}) outside [{mc.part(j) + 1}, {i - 1}]")
            if a > lc.part(j) - 1:
                problems.append(f"star-bounds: {e} at ({i},{j}) exceeds column height - 1")
            if a < k:
                problems.append(f"star-level: {e} at ({i},{j}) below level {k}")
            if i <= k:
                problems.append(f"star-rows: {e} at ({i},{j}) in a row at or above the level")
    for (i, j), e in cm.items():
        right = cm.get((i, j + 1))
        if right is not None and right < e:
            problems.append(f"rows: ({i},{j})={e} > ({i},{j + 1})={right}")
        if e.kind == STAR and right is not None and right.kind != STAR:
            problems.append(f"star-region: ({i},{j + 1}) follows a starred cell with {right}")
        below = cm.get((i + 1, j))
        if below is None:
            continue
        if below < e:
            problems.append(f"columns: ({i},{j})={e} > ({i + 1},{j})={below}")
        elif below == e and (e.kind == STAR or i >= k):
            problems.append(f"strict-columns: ({i},{j}) and ({i + 1},{j}) both hold {e}")
        if e.kind == STAR and below.kind != STAR:
            problems.append(f"star-region: ({i + 1},{j}) below a starred cell holds {below}")
    return problems


def is_valid_rse(t: RSETableau, shape: SkewShape) -> bool:
    return not validate_rse(t, shape)


def enumerate_rse_candidates(shape: SkewShape, max_entry: int) -> list[Tableau]:
    """Weakly increasing fillings of ``shape`` that could be RSE-tableaux at some level.

    Plain entries come from ``1..max_entry``; starred entries satisfy the
    column/row bounds, which do not depend on the level.  Inner cells are
    filled with negative entries.
    """
    lam, mu = shape.outer, shape.inner
    mc = mu.conjugate()
    alphabet = [plain(v) for v in range(1, max_entry + 1)] + [star(a) for a in range(1, len(lam))]

    def allowed(cell: Cell, e: Entry) -> bool:
        i, j = cell
        return e.kind != STAR or mc.part(j) + 1 <= e.value <= i - 1

    fixed = {(i, j): neg(i) for i, j in mu.cells()}
    out = []
    for f in fill_weakly_increasing(_column_order(SkewShape(lam)), alphabet, allowed, fixed):
        out.append(Tableau.from_cells(f))
    return out


def enumerate_rse(shape: SkewShape, level: int, max_entry: int, candidates: Iterable[Tableau] | None = None) -> list[RSETableau]:
    """All skew RSE-tableaux of ``shape`` at ``level`` with plain entries at most ``max_entry``."""
    if candidates is None:
        candidates = enumerate_rse_candidates(shape, max_entry)
    out = []
    for c in candidates:
        t = RSETableau(c, level)
        if not validate_rse(t, shape):
            out.append(t)
    return out
