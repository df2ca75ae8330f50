import random
from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import load, skew_shapes
from glab.partitions import Partition, mu_profile
from glab.paths import (CROSSING, FINITE, NONCROSSING, OMEGA, SEMI_NONCROSSING, NPath, Path, classify,
                        common_points, enumerate_L, enumerate_npaths, intersects, path_sum, path_weight,
                        paths_from_columns, pi_lambda_heights, swap_tails, tab, tab_inverse, tab_of_paths, type_of)
from glab.polynomial import Monomial, Polynomial, elementary_symmetric, t_vars, x_vars
from glab.tableaux import STAR, E, Tableau


def test_anchor_path():
    d = load("path_weight_anchor.json")
    p = Path.from_json(d["path"])
    assert p.end == d["end"]
    assert str(path_weight(p)) == d["weight"]


def test_trivial_weights():
    assert path_weight(Path(4)) == Monomial()
    assert path_weight(Path(0, {3})) == Monomial.from_maps({3: 1})


def test_abscissa():
    p = Path(2, {2, 5}, {1, 4, 5})
    assert [p.abscissa((FINITE, h)) for h in range(7)] == [2, 2, 3, 3, 3, 4, 4]
    assert [p.abscissa((OMEGA, h)) for h in range(7)] == [4, 5, 5, 5, 6, 7, 7]


def test_intersections():
    p = Path(3, {1, 2})
    assert intersects(p, p)
    assert not intersects(Path(0, {1}), Path(3, {1, 2}))
    # shared start
    assert intersects(Path(4, {1}), Path(4, {2}, {3}))


def test_common_points_cover_whole_runs():
    # both at abscissa 1 from height 1 until q steps at height 4
    p, q = Path(0, {1}), Path(1, {4})
    heights = [y for _, y in common_points(p, q)]
    assert (FINITE, 3) in heights and (FINITE, 4) not in heights


def test_swap_tails_exchanges_endpoints():
    p, q = Path(0, {1, 2}, {2}), Path(1, {2}, {1, 3})
    a, y = max(common_points(p, q), key=lambda c: (c[1], c[0]))
    p2, q2 = swap_tails(p, q, y)
    assert (p2.start, q2.start) == (p.start, q.start)
    assert (p2.end, q2.end) == (q.end, p.end)
    assert path_weight(p2) * path_weight(q2) == path_weight(p) * path_weight(q)
    with pytest.raises(ValueError):
        swap_tails(Path(0), Path(5), (FINITE, 0))


@pytest.mark.parametrize("lam,mu", [((3, 3, 2), (1,)), ((4, 2, 2, 1), (2, 1)), ((2, 2), ()), ((3, 1), (3,))])
def test_family_sums_are_elementary(lam, mu):
    lam, mu = Partition(lam), Partition(mu)
    lc, mc = lam.conjugate(), mu.conjugate()
    n = lam.part(1)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            total = Polynomial()
            for path in enumerate_L(i, j, lam, mu, 2):
                total = total + Polynomial.monomial(path_weight(path))
            k = lc.part(j) - mc.part(i) - j + i
            assert total == elementary_symmetric(k, x_vars(2) + t_vars(mc.part(i) + 1, lc.part(j) - 1))


def test_zero_steps_single_path():
    lam = Partition((1,))
    paths = enumerate_L(1, 1, lam, lam, 2)
    assert paths == [Path(1)] and path_weight(paths[0]) == Monomial()


def test_worked_example_classification(worked_example):
    assert type_of(worked_example) == ((3, 2, 4, 1, 5, 6), 1)
    assert classify(worked_example) == SEMI_NONCROSSING


def test_classify_small():
    single = NPath((Path(0, {1}),), Partition((1,)), Partition())
    assert classify(single) == NONCROSSING
    lam, mu = Partition((2, 2)), Partition()
    # one block holds both paths; they meet at (1, 1)
    crossing = NPath((Path(1, {2}, {1}), Path(0, {1, 2})), lam, mu)
    assert crossing.type() == (1, 2)
    assert (1, (FINITE, 1)) in common_points(*crossing.paths)
    assert classify(crossing) == CROSSING


def test_tab_of_vertical_example():
    d = load("vertical_tableau_example.json")
    n = d["n"]
    cols = [(a, tuple(E(c["e"]) for c in sorted(d["cells"], key=lambda c: c["r"]) if c["c"] == j))
            for j, a in enumerate(d["alpha"], 1)]
    t = Tableau(tuple(cols))
    assert t.starts() == tuple(d["alpha"]) and t.heights() == tuple(d["beta"])
    # read the paths back and re-encode
    paths = paths_from_columns(t, n)
    assert [p.start for p in paths] == [a + n - i for i, a in enumerate(d["alpha"], 1)]
    assert tab_of_paths(paths) == t
    # the third and fourth paths share the starting point (4, 0)
    assert paths[2].start == paths[3].start == 4 and intersects(paths[2], paths[3])


def test_tab_worked_example(worked_example):
    t = tab(worked_example)
    assert t.starts() == (6, 3, 3, 1, 1, 0)
    assert t.heights() == pi_lambda_heights(worked_example.lam, (3, 2, 4, 1, 5, 6))
    assert tab_inverse(t, worked_example.lam, worked_example.mu) == worked_example


def test_tab_of_vertical_paths_is_empty():
    lam = Partition((2, 2))
    np = NPath((Path(3), Path(2)), lam, lam)
    assert len(tab(np)) == 0


def test_tab_inverse_rejects_bad_columns():
    lam = Partition((1,))
    with pytest.raises(ValueError):
        tab_inverse(Tableau.from_rows([["2"], ["1"]]), lam, Partition())
    with pytest.raises(ValueError):
        tab_inverse(Tableau.from_rows([["1", "1"]]), lam, Partition())


def test_type_rejects_foreign_endpoints():
    with pytest.raises(ValueError):
        type_of(NPath((Path(0, {1, 2}),), Partition((1,)), Partition()))


def test_json_round_trip(worked_example):
    d = worked_example.to_json()
    assert d["type"] == [3, 2, 4, 1, 5, 6] and d["sign"] == 1
    assert NPath.from_json(d) == worked_example


@settings(max_examples=25, deadline=None)
@given(skew_shapes(3, 3), st.integers(1, 2), st.integers(0, 10 ** 6))
def test_tab_round_trip_and_type_shape(shape, p, seed):
    """Round trip through the tableau, and type read off from the outer shape."""
    nps = list(enumerate_npaths(shape.outer, shape.inner, p))
    rng = random.Random(seed)
    for np in rng.sample(nps, min(len(nps), 40)):
        t = tab(np)
        assert tab_inverse(t, np.lam, np.mu) == np
        assert t.starts() == tuple(shape.inner.conjugate().part(j) for j in range(1, np.n + 1))
        pi = np.type()
        assert t.heights() == pi_lambda_heights(np.lam, pi)
        # heights determine the type: no other permutation gives the same diagram
        others = [s for s in permutations(range(1, np.n + 1)) if pi_lambda_heights(np.lam, s) == t.heights()]
        assert others == [pi]
        # every entry h (or h*) of the tableau is one diagonal step at that height
        xs, ts = Counter(), Counter()
        for _, e in t.cells():
            (ts if e.kind == STAR else xs)[e.value] += 1
        assert Monomial.from_maps(xs, ts) == np.monomial()


@settings(max_examples=15, deadline=None)
@given(skew_shapes(3, 3), st.integers(1, 2))
def test_cancellation(shape, p):
    assert path_sum(shape.outer, shape.inner, p, "all") == path_sum(shape.outer, shape.inner, p, "snc")


def test_full_enumeration_matches_factored_sum():
    lam, mu = Partition((3, 2, 1)), Partition((1,))
    direct = Polynomial()
    for np in enumerate_npaths(lam, mu, 2):
        direct = direct + np.weight()
    assert direct == path_sum(lam, mu, 2, "all")


def test_empty_inner_snc_is_noncrossing():
    lam = Partition((3, 2))
    for np in enumerate_npaths(lam, Partition(), 2, snc=True):
        assert classify(np, mu_profile(lam, Partition())) == NONCROSSING
