import json

import pytest
from hypothesis import given, settings

from conftest import partitions, skew_shapes
from glab.partitions import Partition, contains
from glab.polynomial import Polynomial, specialize_t
from glab.verify import (IDENTITIES, VerifyConfig, binomial_determinant, box_pairs, check_shape, check_vanishing,
                         gpoly_by_rpp, jt_determinant, jt_entry, jt_matrix, rse_fixed_sum, run_box,
                         schur_jt_determinant, ssyt_sum)

x1, x2 = (Polynomial.var(("x", i)) for i in (1, 2))
t1 = Polynomial.var(("t", 1))


def test_single_entry_example():
    # lam' = (2, 2), mu'_2 = 0: degree 2 - 0 - 1 + 2 = 3 in the three variables x1, x2, t1
    assert jt_entry(1, 2, Partition((2, 2)), Partition((1,)), 2) == x1 * x2 * t1


def test_single_box():
    assert jt_determinant(Partition((1,)), Partition(), 2) == x1 + x2
    assert gpoly_by_rpp(Partition((1,)), Partition(), 2) == x1 + x2


def test_hook_by_hand():
    # fillings a b / c with a <= b, a <= c over {1, 2}:
    # 11/1, 11/2, 12/1, 12/2, 22/2
    g = gpoly_by_rpp(Partition((2, 1)), Partition(), 2)
    assert len(g.terms) == 5
    assert g == x1 ** 2 * t1 + x1 ** 2 * x2 + x1 * x2 * t1 + x1 * x2 ** 2 + x2 ** 2 * t1
    assert jt_determinant(Partition((2, 1)), Partition(), 2) == g


def test_matrix_size_covers_wide_inner_shape():
    # with a 1x1 matrix this would be e_0 = 1; the 2x2 matrix gives 0
    assert len(jt_matrix(Partition((1,)), Partition((2,)), 2)) == 2
    assert jt_determinant(Partition((1,)), Partition((2,)), 2) == Polynomial()


@pytest.mark.parametrize("lam,mu", [((2,), (1, 1)), ((3, 1), (2, 2)), ((2, 2, 2, 1), (3,)), ((1, 1), (1, 1, 1))])
def test_vanishing(lam, mu):
    assert jt_determinant(Partition(lam), Partition(mu), 2) == Polynomial()


def test_classical_limit():
    lam, mu = Partition((3, 2, 2)), Partition((1,))
    g = gpoly_by_rpp(lam, mu, 2)
    assert specialize_t(g, 0) == schur_jt_determinant(lam, mu, 2) == ssyt_sum(lam, mu, 2)
    assert specialize_t(jt_determinant(lam, mu, 2), 0) == ssyt_sum(lam, mu, 2)


def test_binomial_form_single_box():
    assert binomial_determinant(Partition((1,)), Partition(), 3) == x1 + x2 + Polynomial.var(("x", 3))


@settings(max_examples=30, deadline=None)
@given(skew_shapes(4, 3))
def test_determinant_equals_rpp_sum(shape):
    lam, mu = shape.outer, shape.inner
    g = gpoly_by_rpp(lam, mu, 2)
    assert jt_determinant(lam, mu, 2) == g
    assert binomial_determinant(lam, mu, 2) == specialize_t(g, 1)


@settings(max_examples=30, deadline=None)
@given(partitions(3, 3), partitions(3, 3))
def test_outside_containment_is_zero(lam, mu):
    if not len(lam) or contains(mu, lam):
        return
    assert gpoly_by_rpp(lam, mu, 2) == Polynomial()
    assert jt_determinant(lam, mu, 2) == Polynomial()


@settings(max_examples=10, deadline=None)
@given(skew_shapes(3, 3))
def test_fixed_point_sum(shape):
    assert rse_fixed_sum(shape.outer, shape.inner, 2) == gpoly_by_rpp(shape.outer, shape.inner, 2)


def test_box_pairs_count():
    # partitions in a 2x2 box: (), 1, 2, 11, 21, 22 with 1, 2, 3, 3, 5, 6 subpartitions
    assert len(box_pairs(2, 2)) == 2 + 3 + 3 + 5 + 6


def test_check_shape_runs_every_identity():
    rep = check_shape(Partition((2, 2, 1)), Partition((1,)), VerifyConfig())
    assert set(rep.results) == set(IDENTITIES)
    assert rep.ok, rep.results


def test_exceptions_become_failures(monkeypatch):
    def boom(lam, mu, cfg):
        raise RuntimeError("no")
    monkeypatch.setitem(IDENTITIES, "jt", boom)
    rep = check_shape(Partition((1,)), Partition(), VerifyConfig(identities=("jt",)))
    assert not rep.ok and "RuntimeError" in rep.results["jt"]["detail"]


def test_small_box_report():
    report = run_box(VerifyConfig(rows=2, cols=2))
    assert report.ok
    data = json.loads(json.dumps(report.to_json()))
    assert data["ok"] and data["first_failure"] is None
    assert data["summary"]["jt"] == {"passed": 19, "total": 19}
    assert data["vanishing"]["checked"] > 0


def test_mutation_is_caught():
    report = run_box(VerifyConfig(rows=2, cols=2, identities=("jt",), mutation="sign-flip"))
    assert not report.ok
    bad = report.first_failure()
    assert bad["identity"] == "jt" and bad["outer"] == [1]


def test_unknown_identity():
    with pytest.raises(ValueError):
        run_box(VerifyConfig(rows=1, cols=1, identities=("nope",)))


def test_vanishing_report():
    assert check_vanishing(VerifyConfig(rows=2, cols=3))["ok"]


def test_parallel_matches_serial():
    serial = run_box(VerifyConfig(rows=2, cols=2, identities=("jt", "paths")))
    parallel = run_box(VerifyConfig(rows=2, cols=2, identities=("jt", "paths"), jobs=2))
    strip = lambda r: [(s.outer, s.inner, {k: v["ok"] for k, v in s.results.items()}) for s in r.shapes]
    assert strip(serial) == strip(parallel)
