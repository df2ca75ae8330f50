"""Lattice paths on ``N x N_omega`` and their encoding as vertical tableaux.

A path starts at ``(start, 0)``, takes up steps ``(0, 1)`` and diagonal steps
``(1, 1)``, and runs up to ``(end, 2*omega)``.  It is stored as the set of
heights at which its diagonal steps end: finite heights ``h`` ("lower") and
heights ``omega + h`` ("upper").  At every height the path has one abscissa.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .partitions import MuProfile, Partition, mu_profile
from .polynomial import Monomial, Polynomial, permutation_sign, ZERO
from .tableaux import PLAIN, STAR, Tableau, plain, star

Height = tuple[int, int]  # (0, h) is the finite height h, (1, h) is omega + h
FINITE, OMEGA = 0, 1


@dataclass(frozen=True)
class Path:
    start: int
    lower: frozenset[int] = frozenset()
    upper: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "lower", frozenset(self.lower))
        object.__setattr__(self, "upper", frozenset(self.upper))
        if any(h < 1 for h in self.lower | self.upper):
            raise ValueError("diagonal step heights start at 1")

    @property
    def end(self) -> int:
        return self.start + len(self.lower) + len(self.upper)

    @property
    def steps(self) -> int:
        return len(self.lower) + len(self.upper)

    def heights(self) -> list[Height]:
        """Ending heights of the diagonal steps, in increasing order."""
        return [(FINITE, h) for h in sorted(self.lower)] + [(OMEGA, h) for h in sorted(self.upper)]

    def abscissa(self, y: Height) -> int:
        kind, h = y
        if kind == FINITE:
            return self.start + sum(1 for v in self.lower if v <= h)
        return self.start + len(self.lower) + sum(1 for v in self.upper if v <= h)

    def points(self, probe: Sequence[Height]) -> dict[Height, int]:
        return {y: self.abscissa(y) for y in probe}

    def weight(self) -> Monomial:
        return path_weight(self)

    def to_json(self) -> dict:
        return {"start": self.start, "lower": sorted(self.lower), "upper": sorted(self.upper)}

    @classmethod
    def from_json(cls, data: dict) -> Path:
        return cls(data["start"], frozenset(data.get("lower", ())), frozenset(data.get("upper", ())))

    def __str__(self) -> str:
        up = ",".join(f"w+{h}" for h in sorted(self.upper))
        low = ",".join(map(str, sorted(self.lower)))
        return f"Path({self.start}->{self.end}; {{{low}}} {{{up}}})"


def path_weight(p: Path) -> Monomial:
    return Monomial.from_maps({h: 1 for h in p.lower}, {h: 1 for h in p.upper})


def probe_heights(paths: Sequence[Path]) -> list[Height]:
    """Heights where two paths could first meet.

    Abscissae are constant between consecutive step heights, so it is enough
    to look at 0, every finite step height, omega + 0 and every upper step height.
    """
    finite = {0}
    upper = {0}
    for p in paths:
        finite |= p.lower
        upper |= p.upper
    return [(FINITE, h) for h in sorted(finite)] + [(OMEGA, h) for h in sorted(upper)]


def common_points(p: Path, q: Path) -> list[tuple[int, Height]]:
    """Shared points ``(abscissa, height)``, covering the top and bottom of every shared run.

    Two paths that meet stay together until one of them steps, so besides the
    probe heights we also look one below every step height.
    """
    heights = set(probe_heights((p, q)))
    for path in (p, q):
        heights |= {(FINITE, h - 1) for h in path.lower}
        heights |= {(OMEGA, h - 1) for h in path.upper}
    out = []
    for y in sorted(heights):
        a = p.abscissa(y)
        if a == q.abscissa(y):
            out.append((a, y))
    return out


def intersects(p: Path, q: Path) -> bool:
    if p.start == q.start or p.end == q.end:
        return True
    return any(p.abscissa(y) == q.abscissa(y) for y in probe_heights((p, q)))


def swap_tails(p: Path, q: Path, at: Height) -> tuple[Path, Path]:
    """Exchange the parts of ``p`` and ``q`` strictly above the common height ``at``."""
    if p.abscissa(at) != q.abscissa(at):
        raise ValueError(f"paths do not meet at height {at}")

    def split(path: Path) -> tuple[Path, Path]:
        kind, b = at
        if kind == FINITE:
            head = Path(path.start, {h for h in path.lower if h <= b}, ())
            tail = Path(0, {h for h in path.lower if h > b}, path.upper)
        else:
            head = Path(path.start, path.lower, {h for h in path.upper if h <= b})
            tail = Path(0, (), {h for h in path.upper if h > b})
        return head, tail

    ph, pt = split(p)
    qh, qt = split(q)
    return (Path(p.start, ph.lower | qt.lower, ph.upper | qt.upper),
            Path(q.start, qh.lower | pt.lower, qh.upper | pt.upper))


# -- the families L(i, j) ---------------------------------------------------

@dataclass(frozen=True)
class PathContext:
    """Start and end abscissae for a pair of partitions, with ``n = lam_1`` paths."""

    lam: Partition
    mu: Partition
    p: int
    n: int = field(init=False)
    lc: Partition = field(init=False)
    mc: Partition = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "n", self.lam.part(1))
        object.__setattr__(self, "lc", self.lam.conjugate())
        object.__setattr__(self, "mc", self.mu.conjugate())

    def start(self, i: int) -> int:
        return self.mc.part(i) + self.n - i

    def end(self, j: int) -> int:
        return self.lc.part(j) + self.n - j

    def end_index(self, x: int) -> int | None:
        for j in range(1, self.n + 1):
            if self.end(j) == x:
                return j
        return None

    def start_index(self, x: int) -> int | None:
        for i in range(1, self.n + 1):
            if self.start(i) == x:
                return i
        return None

    def upper_range(self, i: int, j: int) -> range:
        return range(self.mc.part(i) + 1, self.lc.part(j))

    def profile(self) -> MuProfile:
        return mu_profile(self.lam, self.mu)

    def in_L(self, path: Path, i: int, j: int) -> bool:
        return (path.start == self.start(i) and path.end == self.end(j)
                and all(1 <= h <= self.p for h in path.lower)
                and all(h in self.upper_range(i, j) for h in path.upper))


def enumerate_L(i: int, j: int, lam: Partition, mu: Partition, p: int) -> list[Path]:
    """All paths from ``A_i`` to ``B_j`` with lower heights in ``1..p``."""
    return _enumerate_L(PathContext(lam, mu, p), i, j)


def _enumerate_L(ctx: PathContext, i: int, j: int) -> list[Path]:
    k = ctx.end(j) - ctx.start(i)
    ups = list(ctx.upper_range(i, j))
    out = []
    if k < 0:
        return out
    for nl in range(max(0, k - len(ups)), min(k, ctx.p) + 1):
        for low in combinations(range(1, ctx.p + 1), nl):
            for up in combinations(ups, k - nl):
                out.append(Path(ctx.start(i), frozenset(low), frozenset(up)))
    return out


# -- n-paths ----------------------------------------------------------------

@dataclass(frozen=True)
class NPath:
    paths: tuple[Path, ...]
    lam: Partition
    mu: Partition

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))

    @property
    def n(self) -> int:
        return len(self.paths)

    def context(self, p: int = 0) -> PathContext:
        return PathContext(self.lam, self.mu, p)

    def __getitem__(self, i: int) -> Path:
        """1-based access, ``np[i]`` is ``p_i``."""
        return self.paths[i - 1]

    def type(self) -> tuple[int, ...]:
        return type_of(self)[0]

    def sign(self) -> int:
        return type_of(self)[1]

    def monomial(self) -> Monomial:
        m = Monomial()
        for path in self.paths:
            m = m * path_weight(path)
        return m

    def weight(self) -> Polynomial:
        return Polynomial.monomial(self.monomial(), self.sign())

    def replace(self, i: int, path: Path) -> NPath:
        ps = list(self.paths)
        ps[i - 1] = path
        return NPath(tuple(ps), self.lam, self.mu)

    def to_json(self) -> dict:
        pi, sgn = type_of(self)
        return {
            "lambda": list(self.lam.parts),
            "mu": list(self.mu.parts),
            "paths": [path.to_json() for path in self.paths],
            "type": list(pi),
            "sign": sgn,
        }

    @classmethod
    def from_json(cls, data: dict) -> NPath:
        return cls(tuple(Path.from_json(d) for d in data["paths"]), Partition(data["lambda"]), Partition(data.get("mu", ())))


def type_of(np: NPath) -> tuple[tuple[int, ...], int]:
    """The permutation ``pi`` with ``p_i`` ending at ``B_{pi(i)}``, and its sign."""
    ctx = np.context()
    if np.n != ctx.n:
        raise ValueError(f"expected {ctx.n} paths, got {np.n}")
    pi = []
    for i, path in enumerate(np.paths, 1):
        if path.start != ctx.start(i):
            raise ValueError(f"p_{i} starts at {path.start}, expected {ctx.start(i)}")
        j = ctx.end_index(path.end)
        if j is None:
            raise ValueError(f"p_{i} ends at {path.end}, which is no endpoint")
        pi.append(j)
    if len(set(pi)) != len(pi):
        raise ValueError(f"two paths share an endpoint: {pi}")
    return tuple(pi), permutation_sign(pi)


def in_family(np: NPath, p: int) -> bool:
    """``np`` lies in the union of the ``L(pi)``: every ``p_i`` belongs to ``L(i, pi(i))``."""
    try:
        pi, _ = type_of(np)
    except ValueError:
        return False
    ctx = np.context(p)
    return all(ctx.in_L(path, i, j) for (i, path), j in zip(enumerate(np.paths, 1), pi))


NONCROSSING, SEMI_NONCROSSING, CROSSING = "noncrossing", "semi-noncrossing", "crossing"


def blocks(profile: MuProfile) -> list[range]:
    """Column blocks ``D_1, ..., D_{r+1}`` (empty ones dropped)."""
    return [b for b in (profile.D(k) for k in range(1, profile.r + 2)) if len(b)]


def is_semi_noncrossing(np: NPath, profile: MuProfile | None = None) -> bool:
    profile = profile or mu_profile(np.lam, np.mu)
    for block in blocks(profile):
        for a, b in combinations(block, 2):
            if intersects(np[a], np[b]):
                return False
    return True


def is_noncrossing(np: NPath) -> bool:
    return not any(intersects(p, q) for p, q in combinations(np.paths, 2))


def classify(np: NPath, profile: MuProfile | None = None) -> str:
    if not is_semi_noncrossing(np, profile):
        return CROSSING
    return NONCROSSING if is_noncrossing(np) else SEMI_NONCROSSING


def enumerate_npaths(lam: Partition, mu: Partition, p: int, snc: bool = False) -> Iterator[NPath]:
    """All n-paths of every type; with ``snc`` only the semi-noncrossing ones.

    Backtracks over ``i = 1..n``, pruning any partial tuple with a crossing
    inside a block.
    """
    ctx = PathContext(lam, mu, p)
    n = ctx.n
    block_of = {}
    if snc:
        prof = ctx.profile()
        for k, block in enumerate(blocks(prof)):
            for c in block:
                block_of[c] = k
    fam = {(i, j): _enumerate_L(ctx, i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    chosen: list[Path] = []
    used = [False] * (n + 1)

    def rec(i: int) -> Iterator[NPath]:
        if i > n:
            yield NPath(tuple(chosen), lam, mu)
            return
        for j in range(1, n + 1):
            if used[j]:
                continue
            used[j] = True
            for path in fam[(i, j)]:
                if snc and any(block_of[a] == block_of[i] and intersects(chosen[a - 1], path) for a in range(1, i)):
                    continue
                chosen.append(path)
                yield from rec(i + 1)
                chosen.pop()
            used[j] = False

    if n == 0:
        yield NPath((), lam, mu)
        return
    yield from rec(1)


def path_sum(lam: Partition, mu: Partition, p: int, filter: str = "all") -> Polynomial:
    """Signed weight sum over all n-paths (``"all"``) or the semi-noncrossing ones (``"snc"``).

    For ``"all"`` the sum over each product set ``L(1, pi_1) x ... x L(n, pi_n)``
    is taken factor by factor; every factor is still a sum over enumerated paths.
    """
    if filter == "snc":
        total: dict[Monomial, int] = {}
        for np in enumerate_npaths(lam, mu, p, snc=True):
            m, s = np.monomial(), np.sign()
            total[m] = total.get(m, 0) + s
        return Polynomial(total)
    if filter != "all":
        raise ValueError(f"unknown filter {filter!r}")
    ctx = PathContext(lam, mu, p)
    n = ctx.n
    sums = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            acc: dict[Monomial, int] = {}
            for path in _enumerate_L(ctx, i, j):
                m = path_weight(path)
                acc[m] = acc.get(m, 0) + 1
            sums[(i, j)] = Polynomial(acc)
    total_poly = ZERO
    for perm in permutations(range(1, n + 1)):
        term = Polynomial.const(permutation_sign(perm))
        for i, j in enumerate(perm, 1):
            term = term * sums[(i, j)]
            if not term:
                break
        total_poly = total_poly + term
    return total_poly


# -- vertical tableaux and the Tab bijection -----------------------------------

def tab(np: NPath) -> Tableau:
    return tab_of_paths(np.paths)


def tab_of_paths(paths: Sequence[Path]) -> Tableau:
    """Column ``i`` records the steps of ``p_i``: ``h`` for finite, ``h*`` for upper heights.

    The step of ``p_i`` ending at ``(a, h)`` fills row ``a - n + i``, so column
    ``i`` occupies rows ``start_i - n + i + 1 .. end_i - n + i``.
    """
    n = len(paths)
    cols = []
    for i, path in enumerate(paths, 1):
        entries = tuple(plain(h) for h in sorted(path.lower)) + tuple(star(h) for h in sorted(path.upper))
        cols.append((path.start - n + i, entries))
    return Tableau(tuple(cols))


def tab_inverse(t: Tableau, lam: Partition, mu: Partition) -> NPath:
    """The n-path whose tableau is ``t`` (plain and starred entries only)."""
    return NPath(paths_from_columns(t, lam.part(1)), lam, mu)


def paths_from_columns(t: Tableau, n: int) -> tuple[Path, ...]:
    """Read column ``i`` of a vertical tableau back as the path ``p_i``."""
    if t.width != n:
        raise ValueError(f"tableau has {t.width} columns, expected {n}")
    paths = []
    for i, (s, es) in enumerate(t.columns, 1):
        if any(a >= b for a, b in zip(es, es[1:])):
            raise ValueError(f"column {i} is not strictly increasing")
        if any(e.kind not in (PLAIN, STAR) for e in es):
            raise ValueError(f"column {i} holds a negative entry")
        if s + n - i < 0:
            raise ValueError(f"column {i} starts above row {i - n}")
        paths.append(Path(s + n - i, frozenset(e.value for e in es if e.kind == PLAIN),
                          frozenset(e.value for e in es if e.kind == STAR)))
    return tuple(paths)


def pi_lambda_heights(lam: Partition, pi: Sequence[int]) -> tuple[int, ...]:
    """Column heights ``lam'_{pi_j} - pi_j + j`` of the vertical diagram ``pi(lam)``."""
    lc = lam.conjugate()
    return tuple(lc.part(pj) - pj + j for j, pj in enumerate(pi, 1))
