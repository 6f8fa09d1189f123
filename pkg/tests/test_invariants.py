"""Closed-form bounds and semigroup cones, with brute-force cross-checks."""

import itertools

import pytest

from sepcurve import (SemigroupCone, check_partition_against_theory,
                      gabard_bound, genus_of_degree, harnack_bound,
                      m2_sepgon_range, semigroup_cones)
from sepcurve.pencil import DegreePartition


def test_harnack_bound_values():
    assert harnack_bound(5) == 7
    assert harnack_bound(4) == 4
    assert harnack_bound(2) == 1
    assert harnack_bound(1) == 1
    assert genus_of_degree(6) == 10
    with pytest.raises(ValueError):
        harnack_bound(0)


def test_gabard_bound_values():
    assert gabard_bound(6, 5) == 6
    assert gabard_bound(0, 1) == 1
    assert gabard_bound(3, 4) == 4
    with pytest.raises(ValueError):
        gabard_bound(3, 5)
    with pytest.raises(ValueError):
        gabard_bound(3, 0)


def test_gabard_m2_specialization():
    for g in range(2, 40):
        assert gabard_bound(g, g - 1) == g


def test_sepgon_range():
    assert m2_sepgon_range(6) == {5, 6}
    assert m2_sepgon_range(3) == {2, 3}
    assert m2_sepgon_range(10) == {9, 10}
    with pytest.raises(ValueError):
        m2_sepgon_range(1)


def test_cone_lists_by_case():
    base = semigroup_cones(6, "unknown")
    assert [c.anchor for c in base] == [(4, 3, 3, 3, 3)]
    low = semigroup_cones(6, "g-1")
    assert [c.anchor for c in low] == [(4, 3, 3, 3, 3), (3, 3, 3, 3, 3)]
    high = semigroup_cones(6, "g")
    assert [c.anchor for c in high] == [(4, 3, 3, 3, 3), (4, 2, 2, 2, 2)]
    assert high[1].membership((4, 2, 2, 2, 2))
    assert not high[1].membership((3, 3, 3, 3, 3))
    with pytest.raises(ValueError):
        semigroup_cones(6, "sometimes")


def test_cone_membership_brute_force_g4():
    # every vector with entries <= 6 against componentwise comparison
    for case in ("unknown", "g-1", "g"):
        for cone in semigroup_cones(4, case):
            assert cone.length == 3
            for v in itertools.product(range(7), repeat=3):
                expect = all(vi >= ai for vi, ai in zip(v, cone.anchor))
                assert cone.membership(v) == expect


def test_membership_monotone_and_closed():
    cone = SemigroupCone((4, 2, 2))
    assert cone.membership((4, 2, 2))
    assert cone.membership((5, 2, 3))
    assert not cone.membership((3, 9, 9))
    # componentwise sums of members land in the doubled-anchor cone
    doubled = cone.doubled()
    for v in ((4, 2, 2), (5, 3, 2)):
        for w in ((4, 2, 4), (6, 2, 2)):
            s = tuple(a + b for a, b in zip(v, w))
            assert doubled.membership(s)
    with pytest.raises(ValueError):
        cone.membership((1, 2))


def test_partition_report_quintic(sep_topology):
    rep = check_partition_against_theory(
        sep_topology, DegreePartition((2, 1, 1, 1, 1)))
    assert rep.consistent
    assert rep.total == 6
    assert dict(rep.cone_membership) == {(4, 3, 3, 3, 3): False,
                                         (4, 2, 2, 2, 2): False}

    rep = check_partition_against_theory(
        sep_topology, DegreePartition((4, 2, 2, 2, 2)))
    assert rep.consistent
    assert dict(rep.cone_membership)[(4, 2, 2, 2, 2)] is True

    rep = check_partition_against_theory(
        sep_topology, DegreePartition((1, 1, 1, 1, 1)))
    assert not rep.consistent
    assert any("gonality" in f for f in rep.flags)

    rep = check_partition_against_theory(
        sep_topology, DegreePartition((2, 2, 1, 1, 0)))
    assert not rep.consistent
    assert any("not covered" in f for f in rep.flags)
