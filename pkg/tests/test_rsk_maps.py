import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import load, rse, skew, skew_shapes
from glab.partitions import Partition, SkewShape
from glab.rsk_maps import (pd, pd_image_test, pd_image_test_direct, pd_power, pd_traced, pu, pu_power, pu_traced,
                           reverse_insert, row_insert)
from glab.tableaux import (RSETableau, concat, enumerate_rpp, enumerate_rse, enumerate_rse_candidates, is_rpp,
                           is_ssyt_columns, plain, with_negatives, Tableau)


class TestInsertion:
    def test_bump_path(self):
        rows = [[plain(1), plain(2), plain(2)], [plain(2), plain(3)], [plain(4)]]
        rec = row_insert(rows, 1, plain(1))
        assert [[e.value for e in r] for r in rows] == [[1, 1, 2], [2, 2], [3], [4]]
        assert rec.path == ((1, 2), (2, 2), (3, 1), (4, 1))

    @settings(max_examples=60)
    @given(st.lists(st.integers(1, 4), max_size=8), st.integers(1, 4))
    def test_insert_then_reverse(self, word, x):
        rows: list = []
        for v in word:
            row_insert(rows, 1, plain(v))
        before = [list(r) for r in rows]
        assert is_ssyt_columns(Tableau.from_rows(rows)) and is_rpp(Tableau.from_rows(rows))
        rec = row_insert(rows, 1, plain(x))
        cols = [c for _, c in rec.path]
        assert all(a >= b for a, b in zip(cols, cols[1:]))  # bumping moves weakly left
        back = reverse_insert(rows, rec.path[-1][0], 1)
        assert back.value == plain(x)
        assert [r for r in rows if r] == before


class TestKnownPairs:
    def test_straight_pair(self):
        d = load("level_maps_straight.json")
        upper, lower = rse(d["upper"]), rse(d["lower"])
        shape = skew(d["skew"])
        assert pu(upper, shape) == lower
        assert pd(lower, shape) == upper

    def test_skew_pair(self):
        d = load("level_maps_skew.json")
        upper, lower = rse(d["upper"]), rse(d["lower"])
        shape = skew(d["skew"])
        assert pu(upper, shape) == lower
        assert pd(lower, shape) == upper
        assert pd_image_test(lower, shape) and pd_image_test_direct(lower, shape)

    def test_pd_can_leave_the_family(self):
        d = load("pd_leaves_family.json")
        t, shape = rse(d["input"]), skew(d["skew"])
        res = pd_traced(t, shape)
        assert res.tableau == rse(d["output"])
        assert not res.valid
        assert not pd_image_test(t, shape)

    def test_no_novel_entries(self):
        # rows 1 and 2 agree cellwise: row 1 disappears, its cells turn into 1*
        t = RSETableau.from_rows([["1", "2"], ["1", "2"], ["3", "3"]], 2)
        shape = SkewShape(Partition((2, 2, 2)))
        out = pu_traced(t, shape)
        assert out.records == ()
        assert out.tableau.rows() == RSETableau.from_rows([["1", "2"], ["3", "3"], ["1*", "1*"]], 1).rows()
        assert out.valid

    def test_level_checks(self):
        t = RSETableau.from_rows([["1"]], 1)
        with pytest.raises(ValueError):
            pu(t)
        with pytest.raises(ValueError):
            pd(RSETableau.from_rows([["2", "1"]], 1))

    def test_empty_inner_row_is_always_inside(self):
        t = RSETableau.from_rows([["1", "2"], ["2", "1*"]], 1)
        assert pd_image_test(t, SkewShape(Partition((2, 2))))


def test_powers():
    d = load("level_maps_straight.json")
    t = rse(d["upper"])
    assert pu_power(t, 0) == t
    assert pd_power(pu_power(t, 2), 2) == t


def _levels(shape, p):
    cands = enumerate_rse_candidates(shape, p)
    return {k: enumerate_rse(shape, k, p, cands) for k in range(1, len(shape.outer) + 1)}


@settings(max_examples=20, deadline=None)
@given(skew_shapes(3, 3), st.integers(1, 2))
def test_round_trips_and_weights(shape, p):
    levels = _levels(shape, p)
    for k, ts in levels.items():
        if k == 1:
            continue
        images = {pu(t, shape) for t in ts}
        assert len(images) == len(ts)
        for t in ts:
            u = pu_traced(t, shape)
            assert u.valid and u.tableau.weight() == t.weight()
            assert pd(u.tableau, shape) == t
        # the image is exactly where the seam test says pd stays inside
        assert images == {t for t in levels[k - 1] if pd_image_test(t, shape)}


@settings(max_examples=20, deadline=None)
@given(skew_shapes(3, 3), st.integers(1, 2))
def test_column_splitting(shape, p):
    for k, ts in _levels(shape, p).items():
        if k == 1:
            continue
        for t in ts:
            for s in range(1, shape.inner.part(k - 1) + 1):
                glued = concat(t.tableau.col_le(s), pu(t.col_ge(s + 1), check=False).tableau)
                assert RSETableau(glued, k - 1) == pu(t, shape)
        # d-fold version: the cut may go up to mu_{k-1} for every d < k
        for d in range(1, k):
            for t in ts:
                for s in range(1, shape.inner.part(k - 1) + 1):
                    glued = concat(t.tableau.col_le(s), pu_power(t.col_ge(s + 1), d).tableau)
                    assert glued == pu_power(t, d).tableau


@settings(max_examples=20, deadline=None)
@given(skew_shapes(3, 3), st.integers(1, 2))
def test_full_descent_covers_rpps(shape, p):
    """``pu^{ell-1}`` maps the top level (plain RPPs) injectively into level 1."""
    ell = len(shape.outer)
    rpps = enumerate_rpp(shape, p)
    images = {pu_power(RSETableau(with_negatives(r), ell), ell - 1) for r in rpps}
    assert len(images) == len(rpps)
    level1 = set(enumerate_rse(shape, 1, p))
    assert images <= level1
