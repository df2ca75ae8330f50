"""Both sides of every identity, and an exhaustive checker over a box of shapes.

Each identity is a function ``(lam, mu, config) -> (ok, detail)``.  The runner
applies the selected identities to every pair ``mu ⊆ lam`` with ``lam`` in the
box and collects a JSON-ready report.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

from .involution import fixed_by_levels, phi
from .partitions import Partition, SkewShape, contains, partitions_in_box, subpartitions
from .paths import enumerate_npaths, in_family, is_semi_noncrossing, path_sum
from .polynomial import (Monomial, Polynomial, ZERO, binomial_jt_entry, determinant, elementary_symmetric,
                         specialize_t, t_vars, x_vars)
from .rsk_maps import pd, pd_image_test, pd_image_test_direct, pu, pu_traced
from .tableaux import (RSETableau, concat, enumerate_rpp, enumerate_rse, enumerate_rse_candidates, enumerate_ssyt,
                       rpp_weight, with_negatives)

# -- the two sides -----------------------------------------------------------

def jt_entry(i: int, j: int, lam: Partition, mu: Partition, p: int) -> Polynomial:
    """``e_{lam'_i - mu'_j - i + j}(x_1..x_p, t_{mu'_j + 1}..t_{lam'_i - 1})``."""
    lc, mc = lam.conjugate(), mu.conjugate()
    k = lc.part(i) - mc.part(j) - i + j
    return elementary_symmetric(k, x_vars(p) + t_vars(mc.part(j) + 1, lc.part(i) - 1))


def jt_matrix(lam: Partition, mu: Partition, p: int, n: int | None = None) -> list[list[Polynomial]]:
    n = max(lam.part(1), mu.part(1)) if n is None else n
    return [[jt_entry(i, j, lam, mu, p) for j in range(1, n + 1)] for i in range(1, n + 1)]


def jt_determinant(lam: Partition, mu: Partition, p: int, n: int | None = None) -> Polynomial:
    """Determinant of the ``n x n`` entry matrix.

    ``n`` defaults to ``max(lam_1, mu_1)``: when ``mu ⊄ lam`` the matrix has to
    reach the offending column of ``mu`` for the determinant to vanish.
    """
    return determinant(jt_matrix(lam, mu, p, n))


def schur_jt_determinant(lam: Partition, mu: Partition, p: int) -> Polynomial:
    """Classical dual Jacobi-Trudi determinant ``det e_{lam'_i - mu'_j - i + j}(x)``."""
    lc, mc = lam.conjugate(), mu.conjugate()
    n = lam.part(1)
    xs = x_vars(p)
    return determinant([[elementary_symmetric(lc.part(i) - mc.part(j) - i + j, xs) for j in range(1, n + 1)]
                        for i in range(1, n + 1)])


def binomial_determinant(lam: Partition, mu: Partition, p: int) -> Polynomial:
    n = lam.part(1)
    return determinant([[binomial_jt_entry(i, j, lam, mu, p) for j in range(1, n + 1)] for i in range(1, n + 1)])


def _sum_monomials(ms) -> Polynomial:
    acc: dict[Monomial, int] = {}
    for m in ms:
        acc[m] = acc.get(m, 0) + 1
    return Polynomial(acc)


def gpoly_by_rpp(lam: Partition, mu: Partition, p: int) -> Polynomial:
    """Weight generating function of RPPs of ``lam/mu`` with entries at most ``p``; 0 if ``mu ⊄ lam``."""
    if not contains(mu, lam):
        return ZERO
    return _sum_monomials(rpp_weight(r) for r in enumerate_rpp(SkewShape(lam, mu), p))


def ssyt_sum(lam: Partition, mu: Partition, p: int) -> Polynomial:
    return _sum_monomials(rpp_weight(r) for r in enumerate_ssyt(SkewShape(lam, mu), p))


def rse_image(lam: Partition, mu: Partition, p: int) -> set[RSETableau]:
    """``pu^{ell-1}`` of every top-level RSE-tableau, i.e. of every RPP with negatives filled in."""
    ell = len(lam)
    out = set()
    for r in enumerate_rpp(SkewShape(lam, mu), p):
        t = RSETableau(with_negatives(r), max(ell, 1))
        for _ in range(ell - 1):
            t = pu(t, check=False)
        out.add(t)
    return out


def rse_fixed_sum(lam: Partition, mu: Partition, p: int) -> Polynomial:
    """Weight sum over the image set of ``pu^{ell-1}`` (each image counted once)."""
    return _sum_monomials(t.weight() for t in rse_image(lam, mu, p))


# -- identities ----------------------------------------------------------------

@dataclass(frozen=True)
class VerifyConfig:
    rows: int = 4
    cols: int = 4
    p: int = 2
    identities: tuple[str, ...] = ()
    jobs: int = 1
    mutation: str | None = None  # "sign-flip" corrupts the RPP oracle

    def selected(self) -> tuple[str, ...]:
        return self.identities or DEFAULT_IDENTITIES


Result = tuple[bool, str]


def _oracle(lam: Partition, mu: Partition, cfg: VerifyConfig) -> Polynomial:
    g = gpoly_by_rpp(lam, mu, cfg.p)
    if cfg.mutation == "sign-flip" and g:
        m, c = g.sorted_terms()[0]
        g = g - Polynomial.monomial(m, 2 * c)
    return g


def _diff(name_a: str, a: Polynomial, name_b: str, b: Polynomial) -> str:
    return f"{name_a} - {name_b} = {a - b}"


def check_jt(lam, mu, cfg) -> Result:
    det, g = jt_determinant(lam, mu, cfg.p), _oracle(lam, mu, cfg)
    return (det == g, "" if det == g else _diff("det", det, "rpp", g))


def check_paths(lam, mu, cfg) -> Result:
    det = jt_determinant(lam, mu, cfg.p)
    every = path_sum(lam, mu, cfg.p, "all")
    snc = path_sum(lam, mu, cfg.p, "snc")
    if every != snc:
        return False, _diff("all", every, "snc", snc)
    if snc != det:
        return False, _diff("snc", snc, "det", det)
    return True, ""


def check_rse(lam, mu, cfg) -> Result:
    image = rse_fixed_sum(lam, mu, cfg.p)
    g = _oracle(lam, mu, cfg)
    if image != g:
        return False, _diff("image", image, "rpp", g)
    snc = path_sum(lam, mu, cfg.p, "snc")
    if image != snc:
        return False, _diff("image", image, "snc", snc)
    return True, ""


def check_binomial(lam, mu, cfg) -> Result:
    det = binomial_determinant(lam, mu, cfg.p)
    g = specialize_t(_oracle(lam, mu, cfg), 1)
    return (det == g, "" if det == g else _diff("binomial det", det, "rpp at t=1", g))


def check_schur(lam, mu, cfg) -> Result:
    classical = schur_jt_determinant(lam, mu, cfg.p)
    at0 = specialize_t(jt_determinant(lam, mu, cfg.p), 0)
    ssyt = ssyt_sum(lam, mu, cfg.p)
    rpp0 = specialize_t(_oracle(lam, mu, cfg), 0)
    ok = classical == at0 == ssyt == rpp0
    return ok, "" if ok else f"classical={classical}; det@t0={at0}; ssyt={ssyt}; rpp@t0={rpp0}"


def check_minor(lam, mu, cfg) -> Result:
    """Enlarging the matrix by one row and column leaves the determinant unchanged."""
    a = jt_determinant(lam, mu, cfg.p)
    b = jt_determinant(lam, mu, cfg.p, lam.part(1) + 1)
    return (a == b, "" if a == b else _diff("n", a, "n+1", b))


def check_pupd(lam, mu, cfg) -> Result:
    """Level maps on every RSE-tableau of the shape.

    ``pd . pu = id``, ``pu . pd = id`` on the image, weights kept, ``pu`` injective,
    ``pu`` splits off the first ``mu_k`` columns, and the seam test agrees with validation.
    """
    shape = SkewShape(lam, mu)
    cands = enumerate_rse_candidates(shape, cfg.p)
    for k in range(1, len(lam) + 1):
        level = enumerate_rse(shape, k, cfg.p, cands)
        for t in level:
            inside = pd_image_test(t, shape)
            if inside != pd_image_test_direct(t, shape):
                return False, f"seam test disagrees at level {k}: {t.rows()}"
            if inside and pu(pd(t, shape), shape) != t:
                return False, f"pu(pd(T)) != T at level {k}: {t.rows()}"
        if k == 1:
            continue
        images = set()
        for t in level:
            res = pu_traced(t, shape)
            if not res.valid:
                return False, f"pu left the family at level {k}: {res.violations[0]}"
            u = res.tableau
            if u.weight() != t.weight():
                return False, f"pu changed the weight at level {k}: {t.rows()}"
            if pd(u, shape) != t:
                return False, f"pd(pu(T)) != T at level {k}: {t.rows()}"
            for cut in range(1, mu.part(k - 1) + 1):
                glued = RSETableau(concat(t.tableau.col_le(cut), pu(t.col_ge(cut + 1), check=False).tableau), k - 1)
                if glued != u:
                    return False, f"pu does not split after column {cut} at level {k}: {t.rows()}"
            if u in images:
                return False, f"pu not injective at level {k}: {u.rows()}"
            images.add(u)
    return True, ""


def check_involution(lam, mu, cfg) -> Result:
    """Involution, sign reversal, weight preservation and the fixed-point set on every SNC n-path."""
    image = rse_image(lam, mu, cfg.p)
    fixed_tabs = set()
    for np in enumerate_npaths(lam, mu, cfg.p, snc=True):
        out, trace = phi(np)
        if trace.outcome == "Fixed":
            if out != np:
                return False, f"fixed outcome changed the n-path: {np.to_json()}"
            t = RSETableau(trace.tableau, 1)
            if t not in image:
                return False, f"fixed point outside the image: {np.to_json()}"
            fixed_tabs.add(t)
            if not fixed_by_levels(np):
                return False, f"level test rejects a fixed point: {np.to_json()}"
            continue
        if fixed_by_levels(np):
            return False, f"level test accepts a moved n-path: {np.to_json()}"
        if out.sign() != -np.sign() or out.monomial() != np.monomial():
            return False, f"sign or weight not reversed: {np.to_json()}"
        if not in_family(out, cfg.p) or not is_semi_noncrossing(out):
            return False, f"image leaves the semi-noncrossing family: {np.to_json()}"
        if phi(out)[0] != np:
            return False, f"not an involution: {np.to_json()}"
    if fixed_tabs != image:
        return False, f"{len(image - fixed_tabs)} image tableaux are not fixed points"
    return True, ""


IDENTITIES: dict[str, Callable[[Partition, Partition, VerifyConfig], Result]] = {
    "jt": check_jt,
    "paths": check_paths,
    "rse": check_rse,
    "binomial": check_binomial,
    "schur": check_schur,
    "minor": check_minor,
    "pupd": check_pupd,
    "involution": check_involution,
}
DEFAULT_IDENTITIES = tuple(IDENTITIES)


# -- runner ------------------------------------------------------------------

@dataclass
class ShapeReport:
    outer: list[int]
    inner: list[int]
    results: dict[str, dict] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.results.values())


@dataclass
class Report:
    config: dict
    shapes: list[ShapeReport]
    vanishing: dict
    seconds: float

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.shapes) and self.vanishing["ok"]

    def first_failure(self) -> dict | None:
        for s in self.shapes:
            for name, r in s.results.items():
                if not r["ok"]:
                    return {"outer": s.outer, "inner": s.inner, "identity": name, "detail": r["detail"]}
        if not self.vanishing["ok"]:
            return {"identity": "vanishing", "detail": self.vanishing["detail"]}
        return None

    def summary(self) -> dict[str, tuple[int, int]]:
        """identity -> (passed, total)"""
        out: dict[str, list[int]] = {}
        for s in self.shapes:
            for name, r in s.results.items():
                c = out.setdefault(name, [0, 0])
                c[0] += r["ok"]
                c[1] += 1
        return {k: (v[0], v[1]) for k, v in out.items()}

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
            "summary": {k: {"passed": a, "total": b} for k, (a, b) in self.summary().items()},
            "vanishing": self.vanishing,
            "first_failure": self.first_failure(),
            "shapes": [asdict(s) for s in self.shapes],
        }


def box_pairs(rows: int, cols: int) -> list[tuple[Partition, Partition]]:
    """Every ``(lam, mu)`` with ``mu ⊆ lam``, ``lam`` nonempty inside the box."""
    return [(lam, mu) for lam in partitions_in_box(rows, cols) if len(lam) for mu in subpartitions(lam)]


def check_shape(lam: Partition, mu: Partition, cfg: VerifyConfig) -> ShapeReport:
    rep = ShapeReport(list(lam.parts), list(mu.parts))
    for name in cfg.selected():
        t0 = time.perf_counter()
        try:
            ok, detail = IDENTITIES[name](lam, mu, cfg)
        except Exception as exc:  # a crash is a failed check, reported with the shape
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        rep.results[name] = {"ok": ok, "seconds": round(time.perf_counter() - t0, 4), "detail": detail}
    return rep


def check_vanishing(cfg: VerifyConfig) -> dict:
    """The determinant is 0 whenever ``mu ⊄ lam`` (with ``mu`` also in the box)."""
    count = 0
    for lam in partitions_in_box(cfg.rows, cfg.cols):
        if not len(lam):
            continue
        for mu in partitions_in_box(cfg.rows, cfg.cols):
            if contains(mu, lam):
                continue
            count += 1
            det = jt_determinant(lam, mu, cfg.p)
            if det:
                return {"ok": False, "checked": count, "detail": f"{lam}/{mu}: det = {det}"}
    return {"ok": True, "checked": count, "detail": ""}


def _check_pair(args):
    lam, mu, cfg = args
    return check_shape(lam, mu, cfg)


def run_box(cfg: VerifyConfig, progress: Callable[[ShapeReport], None] | None = None) -> Report:
    unknown = [i for i in cfg.identities if i not in IDENTITIES]
    if unknown:
        raise ValueError(f"unknown identities {unknown}; choose from {sorted(IDENTITIES)}")
    t0 = time.perf_counter()
    pairs = box_pairs(cfg.rows, cfg.cols)
    jobs = [(lam, mu, cfg) for lam, mu in pairs]
    shapes: list[ShapeReport] = []
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            for rep in pool.map(_check_pair, jobs, chunksize=4):
                shapes.append(rep)
                if progress:
                    progress(rep)
    else:
        for job in jobs:
            rep = _check_pair(job)
            shapes.append(rep)
            if progress:
                progress(rep)
    vanishing = check_vanishing(cfg) if "jt" in cfg.selected() else {"ok": True, "checked": 0, "detail": "skipped"}
    return Report(asdict(cfg), shapes, vanishing, time.perf_counter() - t0)
