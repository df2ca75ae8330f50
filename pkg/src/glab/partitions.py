"""Partitions, skew shapes and the block bookkeeping of an inner partition.

Cells are 1-based ``(row, column)`` pairs throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction; ``part(i)`` returns 0 past the
    last part.
    """

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def part(self, i: int) -> int:
        """1-based part lookup, 0 beyond the length."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1))

    def cells(self) -> list[Cell]:
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def contains(self, other: Partition) -> bool:
        """True iff ``other`` fits inside ``self``."""
        return contains(other, self)


def contains(mu: Partition, lam: Partition) -> bool:
    """``mu ⊆ lam`` part by part."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu.parts, lam.parts))


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``.

    Ordered by size, then reverse-lexicographically.
    """
    out: list[Partition] = []

    def rec(prefix: list[int], bound: int) -> None:
        out.append(Partition(prefix))
        if len(prefix) == rows:
            return
        for p in range(bound, 0, -1):
            prefix.append(p)
            rec(prefix, p)
            prefix.pop()

    rec([], cols)
    return sorted(out, key=lambda p: (p.size, [-x for x in p.parts]))


def subpartitions(lam: Partition) -> list[Partition]:
    """All ``mu ⊆ lam``, in the same order as :func:`partitions_in_box`."""
    return [mu for mu in partitions_in_box(len(lam), lam.part(1)) if contains(mu, lam)]


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not contains(self.inner, self.outer):
            raise ValueError(f"inner {self.inner} is not contained in outer {self.outer}")

    @classmethod
    def unchecked(cls, outer: Partition, inner: Partition) -> SkewShape:
        """Build a pair without the containment check (for vanishing tests)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "outer", outer)
        object.__setattr__(obj, "inner", inner)
        return obj

    @classmethod
    def parse(cls, text: str) -> SkewShape:
        """Parse ``"6,5,4,4,2/4,3,1"``; the inner part is optional."""
        outer, _, inner = text.strip().partition("/")
        return cls(_parse_parts(outer), _parse_parts(inner))

    @property
    def is_valid(self) -> bool:
        return contains(self.inner, self.outer)

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}" if len(self.inner) else str(self.outer)

    def cells(self) -> list[Cell]:
        return [(i, j) for i, j in self.outer.cells() if j > self.inner.part(i)]

    def to_json(self) -> dict:
        return {"outer": list(self.outer.parts), "inner": list(self.inner.parts)}

    @classmethod
    def from_json(cls, data: dict) -> SkewShape:
        return cls(Partition(data["outer"]), Partition(data.get("inner", ())))


def _parse_parts(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    try:
        return Partition(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}: {exc}") from None


def restrict(shape: SkewShape, mode: str, k: int) -> list[Cell]:
    """Cells of ``shape`` kept by ``row<=``, ``row>=``, ``col<=`` or ``col>=`` with bound ``k``."""
    if k < 1:
        raise ValueError("k must be positive")
    keep = {
        "row<=": lambda i, j: i <= k,
        "row>=": lambda i, j: i >= k,
        "col<=": lambda i, j: j <= k,
        "col>=": lambda i, j: j >= k,
    }[mode]
    return [c for c in shape.cells() if keep(*c)]


@dataclass(frozen=True)
class MuProfile:
    """Distinct parts of the inner partition and the induced column blocks.

    ``d[0] = n`` and ``d[r+1] = 0`` are stored, so ``d[i]`` uses the same index
    as in the block notation; ``m``, ``M`` and ``D`` are indexed from 1 with a
    dummy entry at index 0 (``M[0] = 0``).
    """

    n: int
    ell: int
    d: tuple[int, ...]
    m: tuple[int, ...]
    M: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.d) - 2

    def D(self, i: int) -> range:
        """Column block ``{d_i + 1, ..., d_{i-1}}``, for ``1 <= i <= r + 1``."""
        return range(self.d[i] + 1, self.d[i - 1] + 1)

    def block_of(self, column: int) -> int:
        for i in range(1, self.r + 2):
            if column in self.D(i):
                return i
        raise ValueError(f"column {column} outside 1..{self.n}")


def mu_profile(lam: Partition, mu: Partition) -> MuProfile:
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    n = lam.part(1)
    distinct = sorted(set(mu.parts), reverse=True)
    d = (n, *distinct, 0)
    m = [0] + [mu.parts.count(x) for x in distinct] + [len(lam) - len(mu)]
    M = [0]
    for x in m[1:]:
        M.append(M[-1] + x)
    return MuProfile(n=n, ell=len(lam), d=d, m=tuple(m), M=tuple(M))
