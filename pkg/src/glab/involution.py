"""The sign-reversing involution on semi-noncrossing n-paths, with a full trace.

Outline.  ``T = Tab(p)`` (inner cells filled with negatives) is cut into
column blocks ``T_{r+1} | ... | T_1``.  Starting from ``U_1 = T_1`` the blocks
are glued back one at a time after raising the level of the right part,
``U_{i+1} = T_{i+1} | pd^{m_i}(U_i)``, as long as the seam is weakly increasing.
If every gluing succeeds ``p`` is fixed.  Otherwise the lower part of
``V = T_{k+1} | pd^{m_k}(U_k)`` is read as an auxiliary n-path ``q``; its last
crossing inside the allowed column range is resolved by a tail swap and the
pieces are put back together.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from .partitions import MuProfile, Partition, SkewShape, mu_profile
from .paths import (FINITE, Height, NPath, Path, common_points, is_semi_noncrossing, paths_from_columns,
                    pi_lambda_heights, swap_tails, tab, tab_inverse, tab_of_paths, type_of)
from .rsk_maps import pd, pd_image_test, pu
from .tableaux import RSETableau, Tableau, concat, le, strip_negatives, validate_rse, with_negatives

log = logging.getLogger(__name__)


class InvolutionError(RuntimeError):
    """An internal consistency check failed; ``trace`` holds the partial record."""

    def __init__(self, message: str, trace: InvolutionTrace):
        super().__init__(message)
        self.trace = trace


@dataclass
class LedgerRow:
    """Gluing step ``i``: ``pd^{m_i}(U_i)`` and whether ``T_{i+1}`` fits to its left."""

    i: int
    U: RSETableau
    raised: RSETableau
    fits: bool
    shortcut_agrees: bool

    def to_json(self) -> dict:
        return {"i": self.i, "U": self.U.to_json(), "pd_U": self.raised.to_json(),
                "fits": self.fits, "shortcut_agrees": self.shortcut_agrees}


@dataclass
class InvolutionTrace:
    input: NPath
    tableau: Tableau | None = None
    blocks: list[Tableau] = field(default_factory=list)  # blocks[i - 1] is T_i
    ledger: list[LedgerRow] = field(default_factory=list)
    outcome: str = "pending"
    k: int | None = None
    gamma_columns: tuple[int, ...] = ()
    s: int | None = None
    q: tuple[Path, ...] = ()
    crossing: tuple[int, Height] | None = None
    swapped: tuple[int, int] | None = None
    ties: list[tuple[int, int]] = field(default_factory=list)
    q_swapped: tuple[Path, ...] = ()
    T_tilde: RSETableau | None = None
    U_tilde: RSETableau | None = None
    pu_chain: list[RSETableau] = field(default_factory=list)
    T_prime: Tableau | None = None
    output: NPath | None = None

    @property
    def gamma(self) -> Partition | None:
        """``gamma`` as a partition, when its column heights weakly decrease."""
        c = self.gamma_columns
        if not c or any(a < b for a, b in zip(c, c[1:])):
            return None
        return Partition(c).conjugate()

    def to_json(self) -> dict:
        out: dict = {
            "input": self.input.to_json(),
            "type": list(type_of(self.input)[0]),
            "tableau": self.tableau.to_json() if self.tableau else None,
            "blocks": [b.to_json() for b in self.blocks],
            "ledger": [row.to_json() for row in self.ledger],
            "outcome": self.outcome,
        }
        if self.outcome == "Swapped":
            a, b = self.crossing
            out.update({
                "k": self.k,
                "gamma": list(self.gamma.parts) if self.gamma else None,
                "gamma_columns": list(self.gamma_columns),
                "s": self.s,
                "q": [p.to_json() for p in self.q],
                "crossing": {"a": a, "b": height_json(b)},
                "swapped": list(self.swapped),
                "ties": [list(t) for t in self.ties],
                "q_swapped": [p.to_json() for p in self.q_swapped],
                "T_tilde": self.T_tilde.to_json(),
                "U_tilde": self.U_tilde.to_json(),
                "pu_chain": [t.to_json() for t in self.pu_chain],
                "T_prime": self.T_prime.to_json(),
            })
        out["output"] = self.output.to_json() if self.output else None
        out["output_type"] = list(type_of(self.output)[0]) if self.output else None
        return out


def height_json(y: Height):
    kind, h = y
    return h if kind == FINITE else f"w+{h}"


def _blocks(T: Tableau, prof: MuProfile) -> list[Tableau]:
    return [T.col_range(prof.d[i] + 1, prof.d[i - 1]) for i in range(1, prof.r + 2)]


def phi(np: NPath) -> tuple[NPath, InvolutionTrace]:
    """Apply the involution; returns the image and the trace of every step."""
    trace = InvolutionTrace(np)
    lam, mu = np.lam, np.mu
    prof = mu_profile(lam, mu)
    if not is_semi_noncrossing(np, prof):
        raise ValueError("input n-path is not semi-noncrossing")
    n, M, m, d, r = prof.n, prof.M, prof.m, prof.d, prof.r

    T = with_negatives(tab(np))
    trace.tableau = T
    blocks = _blocks(T, prof)
    trace.blocks = blocks

    # gluing ledger
    U = RSETableau(blocks[0], 1)
    failed = None
    for i in range(1, r + 1):
        raised = pd_power_nocheck(U, m[i])
        fits = le(blocks[i], raised.tableau)
        shortcut = pd_power_nocheck(RSETableau(T.col_ge(d[i] + 1), 1), M[i - 1])
        trace.ledger.append(LedgerRow(i, U, raised, fits, shortcut == U))
        if not fits:
            failed = i
            break
        U = RSETableau(concat(blocks[i], raised.tableau), M[i] + 1)

    if failed is None:
        trace.outcome = "Fixed"
        trace.output = np
        return np, trace

    k = failed
    trace.outcome = "Swapped"
    trace.k = k
    lo = d[k + 1]  # V covers global columns lo+1 .. n
    V = concat(blocks[k], trace.ledger[-1].raised.tableau)
    heights = T.heights()
    gamma = tuple(heights[j - 1] if j <= lo else min(M[k], heights[j - 1]) for j in range(1, n + 1))
    trace.gamma_columns = gamma

    cols = []
    for j in range(1, n + 1):
        if j <= lo:
            cols.append((gamma[j - 1], ()))
        else:
            _, es = V.column(j - lo)
            cols.append((gamma[j - 1], es[gamma[j - 1]:]))
    q = paths_from_columns(Tableau(tuple(cols)), n)
    trace.q = q

    s = max((j for j in range(d[k] + 1, n + 1) if heights[j - 1] > M[k]), default=None)
    trace.s = s
    if s is None:
        raise InvolutionError("no column above the cut in the swap range", trace)

    best = None
    hits: list[tuple[int, int]] = []
    for i, j in combinations(range(lo + 1, s + 1), 2):
        for a, y in common_points(q[i - 1], q[j - 1]):
            key = (y, a)
            if best is None or key > best:
                best, hits = key, [(i, j)]
            elif key == best:
                hits.append((i, j))
    if best is None:
        raise InvolutionError("auxiliary n-path has no crossing in range", trace)
    y, a = best
    i, j = hits[0]
    if len(hits) > 1:
        trace.ties = hits
        log.warning("crossing (%s, %s) shared by pairs %s; using %s", a, y, hits, (i, j))
    trace.crossing = (a, y)
    trace.swapped = (i, j)
    qi, qj = swap_tails(q[i - 1], q[j - 1], y)
    q2 = list(q)
    q2[i - 1], q2[j - 1] = qi, qj
    trace.q_swapped = tuple(q2)

    lower = tab_of_paths(q2)
    new_cols = []
    for g in range(lo + 1, n + 1):
        _, top = V.column(g - lo)
        _, bottom = lower.column(g)
        new_cols.append((0, top[: gamma[g - 1]] + bottom))
    rebuilt = Tableau(tuple(new_cols))
    width = d[k] - lo
    T_tilde = RSETableau(rebuilt.col_le(width), 1)
    U_tilde = RSETableau(rebuilt.col_ge(width + 1), M[k] + 1)
    trace.T_tilde, trace.U_tilde = T_tilde, U_tilde

    chain = [U_tilde]
    for _ in range(M[k]):
        chain.append(pu(chain[-1], check=False))
    trace.pu_chain = chain

    left = T.col_le(lo)
    T_prime = concat(concat(left, T_tilde.tableau), chain[-1].tableau)
    trace.T_prime = T_prime
    try:
        out = tab_inverse(strip_negatives(T_prime), lam, mu)
        type_of(out)
    except ValueError as exc:
        raise InvolutionError(f"rebuilt tableau is not an n-path: {exc}", trace) from None
    trace.output = out
    return out, trace


def pd_power_nocheck(t: RSETableau, d: int) -> RSETableau:
    for _ in range(d):
        t = pd(t, check=False)
    return t


def fixed_by_levels(np: NPath) -> bool:
    """Fixed-point test without running the involution.

    ``Tab(p)`` must be a level-1 RSE-tableau of shape ``lam/mu`` that survives
    ``ell - 1`` applications of ``pd``, each one checked at the seam first.
    """
    shape = SkewShape(np.lam, np.mu)
    t = RSETableau(with_negatives(tab(np)), 1)
    if t.tableau.heights() != pi_lambda_heights(np.lam, range(1, np.n + 1)) or validate_rse(t, shape):
        return False
    for _ in range(len(np.lam) - 1):
        if not pd_image_test(t, shape):
            return False
        t = pd(t, shape, check=False)
    return True


def is_fixed_point(np: NPath) -> bool:
    """Fixed-point verdict, computed by running ``phi`` and by the level test; they must agree."""
    by_phi = phi(np)[1].outcome == "Fixed"
    by_levels = fixed_by_levels(np)
    if by_phi != by_levels:
        raise AssertionError(f"fixed-point verdicts disagree: phi says {by_phi}, level test says {by_levels}")
    return by_phi
