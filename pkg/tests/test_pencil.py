"""Pencil construction, total-reality certification, base loci, and degree
partitions."""

import pytest

from sepcurve import (Pencil, PencilError, ProjectivePoint, Q, TernaryForm,
                      base_locus_on_curve, build_pencil, certify_totally_real,
                      compute_topology, degree_partition, get_fixture,
                      intersect_member)
from sepcurve.pencil import (PencilParameter, member_intersection_points,
                             rational_points_on_components,
                             regular_parameter_candidates)

CIRCLE = get_fixture("circle").form
X = TernaryForm(1, {(1, 0, 0): 1})
Y = TernaryForm(1, {(0, 1, 0): 1})
X_MINUS_2Z = TernaryForm(1, {(1, 0, 0): 1, (0, 0, 1): -2})
Z = TernaryForm(1, {(0, 0, 1): 1})


def test_interior_line_pencil_totally_real():
    # lines through (0, 0), inside the circle: every member meets the circle
    P = Pencil(1, X, Y, ())
    cert = certify_totally_real(CIRCLE, P)
    assert cert.totally_real
    assert cert.witness is None
    for _par, real, total in cert.per_interval_counts:
        assert real == total == 2


def test_exterior_line_pencil_not_totally_real():
    # lines through (2, 0), outside the circle: tangent cone bounds a gap
    P = Pencil(1, X_MINUS_2Z, Y, ())
    cert = certify_totally_real(CIRCLE, P)
    assert not cert.totally_real
    assert cert.witness is not None
    member = P.member(cert.witness)
    real, total = intersect_member(CIRCLE, member)
    assert real < total


def test_intersect_member_bezout():
    (real, total) = intersect_member(CIRCLE, X)  # x = 0 meets circle twice
    assert (real, total) == (2, 2)
    real, total = intersect_member(CIRCLE, X_MINUS_2Z)
    assert (real, total) == (0, 2)
    # tangent line y = 1: double contact counts with multiplicity
    tangent = TernaryForm(1, {(0, 1, 0): 1, (0, 0, 1): -1})
    real, total = intersect_member(CIRCLE, tangent)
    assert (real, total) == (2, 2)


def test_build_pencil_dimensions():
    pts = [ProjectivePoint.affine(0, 0)]
    P = build_pencil(pts, 1)
    assert P.k == 1
    for gen in (P.f, P.g):
        assert gen.evaluate(pts[0]) == 0
    with pytest.raises(PencilError):
        build_pencil([ProjectivePoint.affine(0, 0),
                      ProjectivePoint.affine(1, 1)], 1)


def test_pencil_member_combination():
    P = Pencil(1, X, Y, ())
    m = P.member(PencilParameter(lam=Q(3)))
    assert m.coeffs == {(0, 1, 0): Q(1), (1, 0, 0): Q(3)}
    assert P.member(PencilParameter(infinite=True)) is P.f


def test_quintic_pencil_certificate(sep_fixture, quintic_pencil,
                                    quintic_certificate):
    cert = quintic_certificate
    assert cert.totally_real
    d_times_k = 5 * 2
    assert len(cert.per_interval_counts) == \
        len(cert.critical_parameters) * 2 + 2
    for _par, real, total in cert.per_interval_counts:
        assert real == total == d_times_k


def test_base_locus_exactly_the_construction_points(sep_fixture,
                                                    quintic_pencil):
    pts = base_locus_on_curve(sep_fixture.form, quintic_pencil)
    assert len(pts) == 4
    assert set(pts) == set(quintic_pencil.base_points)
    for pt in pts:
        assert isinstance(pt, ProjectivePoint)
        assert sep_fixture.form.evaluate(pt) == 0


def test_degree_partition_shape(sep_fixture, sep_topology, quintic_pencil,
                                quintic_certificate):
    dp = degree_partition(sep_fixture.form, sep_topology, quintic_pencil,
                          quintic_certificate)
    entries = tuple(dp)
    assert len(entries) == 5
    assert sum(entries) == 10 - 4  # d*k minus base points on the curve
    assert all(e >= 1 for e in entries)


def test_partition_parameter_independent(sep_fixture, sep_topology,
                                         quintic_pencil,
                                         quintic_certificate):
    C, T, P = sep_fixture.form, sep_topology, quintic_pencil
    tallies = []
    taken = 0
    for par in regular_parameter_candidates(quintic_certificate):
        try:
            points, _ = member_intersection_points(C, T, P, par)
        except Exception:
            continue
        tally = [0] * len(T.components)
        for (comp, _i, _r, _x) in points:
            tally[comp] += 1
        tallies.append(tuple(tally))
        taken += 1
        if taken == 3:
            break
    assert taken >= 2
    assert len(set(tallies)) == 1


def test_rational_points_found_on_every_component(sep_fixture, sep_topology):
    found = rational_points_on_components(sep_fixture.form, sep_topology)
    for ci, pts in found.items():
        assert pts, f"component {ci} has no rational point"
        for pt in pts:
            assert sep_fixture.form.evaluate(pt) == 0


def test_certificate_deterministic():
    P = Pencil(1, X_MINUS_2Z, Y, ())
    a = certify_totally_real(CIRCLE, P)
    b = certify_totally_real(CIRCLE, P)
    assert a == b
