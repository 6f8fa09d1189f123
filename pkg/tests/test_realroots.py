"""Real-root machinery against the independent Descartes-bisection oracle
and its own interval contracts."""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import count_distinct_real_roots
from sepcurve import (AlgebraicNumber, Q, UniPoly, count_real_roots,
                      isolate_roots, refine_interval, sign_at,
                      square_free_part)
from sepcurve.realroots import simplest_rational_between


def test_count_known_polynomials():
    assert count_real_roots(UniPoly([-1, 0, 1])) == 2
    assert count_real_roots(UniPoly([1, 0, 1])) == 0
    assert count_real_roots(UniPoly([0, 0, 1])) == 1       # double root once
    assert count_real_roots(UniPoly([0, -1, 0, 1])) == 3
    assert count_real_roots(UniPoly([5])) == 0


def test_count_on_intervals_open_semantics():
    p = UniPoly([0, -1, 0, 1])  # roots -1, 0, 1
    assert count_real_roots(p, (Q(-1), Q(1))) == 1   # open interval
    assert count_real_roots(p, (Q(-2), Q(2))) == 3
    assert count_real_roots(p, (Q(0), None)) == 1
    assert count_real_roots(p, (None, Q(0))) == 1


def test_against_oracle_sample():
    rng = random.Random(11)
    for _ in range(300):
        deg = rng.randint(1, 10)
        coeffs = [rng.randint(-20, 20) for _ in range(deg + 1)]
        if all(c == 0 for c in coeffs):
            coeffs[-1] = 1
        assert count_real_roots(UniPoly(coeffs)) \
            == count_distinct_real_roots(coeffs), coeffs


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=2, max_size=9))
def test_against_oracle_hypothesis(coeffs):
    if all(c == 0 for c in coeffs):
        coeffs = coeffs + [1]
    assert count_real_roots(UniPoly(coeffs)) \
        == count_distinct_real_roots(coeffs)


def test_isolation_contract():
    rng = random.Random(23)
    for _ in range(100):
        deg = rng.randint(1, 8)
        coeffs = [rng.randint(-9, 9) for _ in range(deg + 1)]
        if all(c == 0 for c in coeffs):
            coeffs[-1] = 1
        p = UniPoly(coeffs)
        ivs = isolate_roots(p)
        assert len(ivs) == count_real_roots(p)
        # intervals are sorted, disjoint, each containing one distinct root
        for a, b in zip(ivs, ivs[1:]):
            assert a.high < b.low or (a.high <= b.low and a.is_exact())
        for iv in ivs:
            assert iv.multiplicity >= 1
            if iv.is_exact():
                assert p(iv.low) == 0
            else:
                assert count_real_roots(p, (iv.low, iv.high)) == 1
        # the squarefree part has the same distinct roots
        assert len(isolate_roots(square_free_part(p))) == len(ivs)


def test_multiplicities_exact():
    # (x-1)^2 (x+2)^3 x
    p = UniPoly([-1, 1]) * UniPoly([-1, 1]) \
        * UniPoly([2, 1]) * UniPoly([2, 1]) * UniPoly([2, 1]) \
        * UniPoly([0, 1])
    ivs = isolate_roots(p)
    got = sorted((iv.multiplicity) for iv in ivs)
    assert got == [1, 2, 3]


def test_refine_interval_narrows():
    p = UniPoly([-2, 0, 1])  # sqrt(2)
    (iv,) = [i for i in isolate_roots(p) if i.high > 0]
    tight = refine_interval(p, iv, Q(1, 10 ** 9))
    assert tight.width() <= Q(1, 10 ** 9)
    assert tight.low ** 2 < 2 < tight.high ** 2


def test_algebraic_number_signs():
    p = UniPoly([-2, 0, 1])
    (iv,) = [i for i in isolate_roots(p) if i.high > 0]
    a = AlgebraicNumber(p, iv.low, iv.high)
    assert a.sign_of(UniPoly([-1, 1])) == 1      # sqrt2 - 1 > 0
    assert a.sign_of(UniPoly([-2, 0, 1])) == 0   # its own polynomial
    assert a.sign_of(UniPoly([0, -3, 0, 1])) == -1  # x^3-3x at sqrt2 < 0
    assert a.compare_to(Q(3, 2)) < 0
    assert a.compare_to(Q(1)) > 0


def test_simplest_rational():
    assert simplest_rational_between(Q(1, 3), Q(1, 2)) == Q(2, 5)
    assert simplest_rational_between(Q(-1), Q(1)) == 0
    assert simplest_rational_between(Q(5, 2), Q(7, 2)) == 3
    v = simplest_rational_between(Q(141421, 100000), Q(141422, 100000))
    assert Q(141421, 100000) < v < Q(141422, 100000)


def test_sign_at():
    p = UniPoly([-1, 0, 1])
    assert sign_at(p, Q(0)) == -1
    assert sign_at(p, Q(2)) == 1
    assert sign_at(p, Q(1)) == 0
