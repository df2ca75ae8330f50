import pytest
from hypothesis import given

from conftest import partitions, skew_shapes
from glab.partitions import (Partition, SkewShape, contains, mu_profile, partitions_in_box, restrict,
                             subpartitions)


def test_conjugate_examples():
    assert Partition((4, 3, 1)).conjugate() == Partition((3, 2, 2, 1))
    assert Partition().conjugate() == Partition()
    assert Partition((5, 5)).conjugate() == Partition((2, 2, 2, 2, 2))


def test_trailing_zeros_and_lookup():
    lam = Partition((3, 1, 0, 0))
    assert lam.parts == (3, 1)
    assert lam.part(2) == 1 and lam.part(7) == 0
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_contains():
    assert contains(Partition((4, 3, 1)), Partition((6, 5, 4, 4, 2)))
    assert contains(Partition(), Partition((2, 1)))
    assert not contains(Partition((3,)), Partition((2, 2)))


def test_skew_shape_rejects_non_nested():
    with pytest.raises(ValueError):
        SkewShape(Partition((2, 2)), Partition((3,)))
    assert not SkewShape.unchecked(Partition((2, 2)), Partition((3,))).is_valid


def test_parse():
    sh = SkewShape.parse("6,5,4,4,2/4,3,1")
    assert sh.outer.parts == (6, 5, 4, 4, 2) and sh.inner.parts == (4, 3, 1)
    assert SkewShape.parse("2,1").inner == Partition()
    with pytest.raises(ValueError):
        SkewShape.parse("2,x")


def test_restrict_matches_direct_cell_lists():
    sh = SkewShape.parse("6,5,4,4,2/4,3,1")
    # row >= 2: rows 2..5 of the skew diagram, listed by hand
    expected_rows = {(2, 4), (2, 5), (3, 2), (3, 3), (3, 4), (4, 1), (4, 2), (4, 3), (4, 4), (5, 1), (5, 2)}
    assert set(restrict(sh, "row>=", 2)) == expected_rows
    expected_cols = {(1, 5), (1, 6), (2, 4), (2, 5), (3, 3), (3, 4), (4, 3), (4, 4)}
    assert set(restrict(sh, "col>=", 3)) == expected_cols
    assert set(restrict(sh, "col>=", 1)) == set(sh.cells())


def test_mu_profile_worked_example():
    prof = mu_profile(Partition((6, 6, 5, 5, 5, 5, 5, 5, 4)), Partition((5, 3, 3, 1, 1, 1)))
    assert prof.d == (6, 5, 3, 1, 0)
    assert prof.m[1:] == (1, 2, 3, 3)
    assert prof.M[1:] == (1, 3, 6, 9)
    assert [list(prof.D(i)) for i in range(1, 5)] == [[6], [4, 5], [2, 3], [1]]


def test_mu_profile_small_cases():
    prof = mu_profile(Partition((2, 2)), Partition((1,)))
    assert prof.d == (2, 1, 0) and prof.m[1:] == (1, 1) and prof.M[1:] == (1, 2)
    assert list(prof.D(1)) == [2] and list(prof.D(2)) == [1]
    empty = mu_profile(Partition((3, 1)), Partition())
    assert empty.r == 0 and empty.m[1] == 2 and list(empty.D(1)) == [1, 2, 3]
    with pytest.raises(ValueError):
        mu_profile(Partition((1,)), Partition((2,)))


def test_box_enumeration_counts():
    # partitions in an a x b box number C(a+b, a)
    assert len(partitions_in_box(4, 4)) == 70
    assert len(partitions_in_box(3, 3)) == 20
    assert len(set(partitions_in_box(3, 4))) == 35


@given(partitions(6, 6))
def test_conjugation_is_an_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


@given(skew_shapes(5, 5))
def test_profile_partitions_columns(sh):
    prof = mu_profile(sh.outer, sh.inner)
    cols = [c for i in range(1, prof.r + 2) for c in prof.D(i)]
    assert sorted(cols) == list(range(1, prof.n + 1))
    assert sum(prof.m[1:]) == len(sh.outer) == prof.M[-1]
    mc = sh.inner.conjugate()
    for i in range(1, prof.r + 2):
        assert all(mc.part(j) == prof.M[i - 1] for j in prof.D(i))


@given(partitions(5, 5), partitions(5, 5))
def test_containment_via_conjugates(mu, lam):
    assert contains(mu, lam) == contains(mu.conjugate(), lam.conjugate())


def test_subpartitions_are_contained():
    lam = Partition((3, 2, 2))
    subs = subpartitions(lam)
    assert all(contains(mu, lam) for mu in subs)
    assert len(subs) == len(set(subs)) == sum(1 for mu in partitions_in_box(3, 3) if contains(mu, lam))
