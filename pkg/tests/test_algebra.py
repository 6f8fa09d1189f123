"""Exact polynomial and projective-geometry arithmetic."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepcurve import ProjectivePoint, Q, TernaryForm, UniPoly
from sepcurve.algebra import (interpolation_space, monomial_exponents, rank,
                              resultant, resultant_upoly, transform_inverse,
                              evaluation_matrix)

small_q = st.fractions(min_value=-10, max_value=10, max_denominator=6)
coeff_lists = st.lists(st.integers(-12, 12), min_size=0, max_size=7)


@settings(max_examples=120, deadline=None)
@given(coeff_lists, coeff_lists)
def test_unipoly_ring_identities(a, b):
    p, q = UniPoly(a), UniPoly(b)
    assert (p + q).coeffs == (q + p).coeffs
    assert (p * q).coeffs == (q * p).coeffs
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree
    x0 = Q(3, 7)
    assert (p * q)(x0) == p(x0) * q(x0)
    assert (p + q)(x0) == p(x0) + q(x0)


@settings(max_examples=80, deadline=None)
@given(coeff_lists, coeff_lists)
def test_gcd_divides_both(a, b):
    p, q = UniPoly(a), UniPoly(b)
    g = p.gcd(q)
    if g.is_zero():
        assert p.is_zero() and q.is_zero()
        return
    for f in (p, q):
        quo, rem = divmod(f, g)
        assert rem.is_zero()


def test_compose_linear():
    p = UniPoly([1, -3, 0, 2])
    a, b = Q(2, 3), Q(-5, 4)
    shifted = p.compose_linear(a, b)
    for x in (Q(0), Q(1), Q(-7, 2)):
        assert shifted(x) == p(a * x + b)


def test_resultant_multiplicative():
    rng = random.Random(5)
    for _ in range(30):
        f = UniPoly([rng.randint(-5, 5) for _ in range(3)] + [1])
        g = UniPoly([rng.randint(-5, 5) for _ in range(2)] + [1])
        h = UniPoly([rng.randint(-5, 5) for _ in range(2)] + [1])
        assert resultant(f * g, h) == resultant(f, h) * resultant(g, h)


def test_resultant_common_root():
    f = UniPoly([-1, 1]) * UniPoly([2, 1])
    g = UniPoly([-1, 1]) * UniPoly([5, 1])
    assert resultant(f, g) == 0
    g2 = UniPoly([7, 1])
    assert resultant(f, g2) != 0


def test_projective_point_normalization():
    p = ProjectivePoint(2, 4, 2)
    q = ProjectivePoint(1, 2, 1)
    assert p == q
    r = ProjectivePoint(3, 6, 0)
    assert r == ProjectivePoint(Q(1, 2), 1, 0)
    with pytest.raises(ValueError):
        ProjectivePoint(0, 0, 0)


def test_ternary_form_evaluate_and_transform():
    F = TernaryForm(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -1})
    assert F.evaluate(ProjectivePoint.affine(1, 0)) == 0
    assert F.evaluate(ProjectivePoint.affine(0, 0)) == -1
    m = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    G = F.transform(m)
    # G(v) = F(m v)
    for pt in (ProjectivePoint.affine(2, 3), ProjectivePoint(1, 0, 0)):
        x, y, z = pt.coords()
        mx = (x + y, y, z)
        assert G.evaluate(pt) == F.evaluate(ProjectivePoint(*mx))


def test_transform_inverse_round_trip():
    m = ((1, 2, 0), (0, 1, 3), (1, 0, 1))
    minv = transform_inverse(m)
    F = TernaryForm(3, {(3, 0, 0): 2, (1, 1, 1): -5, (0, 0, 3): 7})
    assert F.transform(m).transform(minv).coeffs == F.coeffs


def test_restrict_to_line():
    F = TernaryForm(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -1})
    p0 = ProjectivePoint.affine(0, 0)
    p1 = ProjectivePoint.affine(1, 0)
    h = F.restrict_to_line(p0, p1)       # s^2 - 1
    assert h.coeffs == (Q(-1), Q(0), Q(1))


def test_interpolation_dimensions():
    # degree-k forms have (k+1)(k+2)/2 coefficients; generic points drop
    # the dimension one by one
    rng = random.Random(3)
    pts = []
    for _ in range(4):
        pts.append(ProjectivePoint.affine(Q(rng.randint(-9, 9), 7),
                                          Q(rng.randint(-9, 9), 5)))
    basis = interpolation_space(pts, 2)
    assert len(basis) == 6 - 4
    for f in basis:
        for p in pts:
            assert f.evaluate(p) == 0
    with pytest.raises(ValueError):
        interpolation_space([pts[0], pts[0]], 2)


def test_evaluation_matrix_rank():
    pts = [ProjectivePoint.affine(i, i * i) for i in range(5)]
    m = evaluation_matrix(pts, 2)
    assert rank(m) == 5  # points on a parabola are generic for conics
    assert len(monomial_exponents(2)) == 6
