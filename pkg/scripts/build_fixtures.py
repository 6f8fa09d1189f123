"""Construct the quintic fixtures with rational marked points on every
component, verify their topology, and print frozen coefficient tables.

Construction: smooth a product of low-degree curves, then correct the
quintic along two lines so its restrictions there acquire rational roots
(the marked points), preserving the topology.
"""
import sys, time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fractions import Fraction as F

from sepcurve.algebra import TernaryForm, UniPoly, Q
from sepcurve.realroots import (isolate_roots, refine_interval,
                                simplest_rational_between)
from sepcurve.topology import compute_topology


def mul(a, b):
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, F(0)) + F(c1) * F(c2)
    return out


def add(*ds):
    out = {}
    for d in ds:
        for k, c in d.items():
            out[k] = out.get(k, F(0)) + F(c)
    return {k: v for k, v in out.items() if v}


def to_form(d, fxy):
    return TernaryForm(d, {(i, j, d - i - j): Q(c) for (i, j), c in fxy.items()})


def rational_roots_near(q: UniPoly, expect: int, width=Q(1, 1 << 6)):
    """Simple distinct rationals, one inside each (refined) isolating
    interval of q's real roots."""
    ivs = isolate_roots(q)
    assert len(ivs) == expect, (len(ivs), expect)
    out = []
    for iv in ivs:
        assert iv.multiplicity == 1
        if iv.is_exact():
            out.append(iv.low)
            continue
        iv = refine_interval(q, iv, width)
        out.append(simplest_rational_between(iv.low, iv.high))
    assert len(set(out)) == expect
    return out


def poly_from_roots(roots, lc):
    p = UniPoly([lc])
    for r in roots:
        p = p * UniPoly([-r, Q(1)])
    return p


def restrict_vertical(Fq: TernaryForm, x0: Q) -> UniPoly:
    """F(x0, y, 1) as a UniPoly in y."""
    d = Fq.degree
    coeffs = [Q(0)] * (d + 1)
    for (i, j, k), c in Fq.coeffs.items():
        coeffs[j] += c * x0 ** i
    return UniPoly(coeffs)


def restrict_horizontal(Fq: TernaryForm, y0: Q) -> UniPoly:
    """F(x, y0, 1) as a UniPoly in x."""
    d = Fq.degree
    coeffs = [Q(0)] * (d + 1)
    for (i, j, k), c in Fq.coeffs.items():
        coeffs[i] += c * y0 ** j
    return UniPoly(coeffs)


def mark_vertical(Fq: TernaryForm, x0: Q, n_roots: int):
    """Correct F so that F(x0, y, 1) has all-rational roots.  The correction
    is a binary form in (x - x0*z, z)-free coordinates: it depends only on
    (y, z) scaled by nothing, i.e. we add (A - q)(y, z) homogenized, which is
    constant along every vertical line; topology must be re-verified."""
    d = Fq.degree
    q = restrict_vertical(Fq, x0)
    assert q.degree == d
    roots = rational_roots_near(q, n_roots)
    A = poly_from_roots(roots, q.lc)
    diff = (A - q).coeffs  # ascending in y
    corr = {}
    for j, c in enumerate(diff):
        if c:
            corr[(0, j, d - j)] = Q(c)
    out = TernaryForm(d, add(dict(Fq.coeffs), corr))
    # vertical-line corrections shift every fiber identically only when the
    # correction has no x dependence; that is the case here
    check = restrict_vertical(out, x0)
    assert check == A
    return out, roots


def mark_horizontal(Fq: TernaryForm, y0: Q, x0: Q, n_roots: int):
    """Correct F so that F(x, y0, 1) has all-rational roots, without touching
    the restriction to the line x = x0.  The correction is divisible by
    (x - x0*z), which pins the new restriction's value at the crossing."""
    d = Fq.degree
    q = restrict_horizontal(Fq, y0)  # degree may drop if (1:0:0) is on F
    roots = rational_roots_near(q, n_roots)
    # leading coefficient chosen so the corrected restriction agrees with the
    # old one at x = x0 (the crossing with the already-marked line)
    val = q(x0)
    denom = Q(1)
    for r in roots:
        denom *= (x0 - r)
    assert denom != 0
    lc = val / denom
    A2 = poly_from_roots(roots, lc)
    diff = A2 - q  # poly in x, vanishes at x0
    quot, rem = divmod(diff, UniPoly([-x0, Q(1)]))
    assert rem.is_zero()
    # ternary correction: (x - x0*z) * S(x, z) homogenized to degree d
    corr = {}
    for i, c in enumerate(quot.coeffs):
        if c:
            corr[(i + 1, 0, d - i - 1)] = corr.get((i + 1, 0, d - i - 1), Q(0)) + c
            corr[(i, 0, d - i)] = corr.get((i, 0, d - i), Q(0)) - x0 * c
    out = TernaryForm(d, add(dict(Fq.coeffs), corr))
    assert restrict_horizontal(out, y0) == A2
    assert restrict_vertical(out, x0) == restrict_vertical(Fq, x0)
    return out, roots


def report(name, Fq, marked):
    t0 = time.time()
    T = compute_topology(Fq)
    dt = time.time() - t0
    kinds = sorted(c.kind for c in T.components)
    print(f"== {name}: {len(T.components)} comps {kinds} nesting {T.nesting}"
          f" ({dt:.1f}s)")
    for c in T.components:
        print(f"   comp {c.index} {c.kind} witness"
              f" ({float(c.witness.x):.3f}, {float(c.witness.y):.3f})")
    sw = T.sweep
    from sepcurve.algebra import ProjectivePoint
    from sepcurve.realroots import AlgebraicNumber
    for (x, y) in marked:
        assert Fq.evaluate(ProjectivePoint.affine(x, y)) == 0, (x, y)
        pt = sw.from_original(ProjectivePoint.affine(x, y))
        cx, cy = pt.x, pt.y
        xa = AlgebraicNumber.exact(cx)
        comp, _, _ = sw.locate(xa, UniPoly([cy]), UniPoly([Q(1)]))
        print(f"   marked ({x}, {y}) -> comp {comp} [{T.components[comp].kind}]")
    return T


def build_nonconvex():
    L1 = {(0, 1): 1, (0, 0): 1}
    L2 = {(1, 0): 3, (0, 1): -2, (0, 0): 4}
    L3 = {(1, 0): -3, (0, 1): -2, (0, 0): 4}
    E = {(2, 0): 1, (0, 2): 1, (0, 0): -16}
    C = add(mul(mul(mul(L1, L2), L3), E), {(0, 0): F(1)})
    Fq = to_form(5, C)
    Fq, r1 = mark_vertical(Fq, Q(0), 5)
    Fq, r2 = mark_horizontal(Fq, Q(-2), Q(0), 4)
    marked = [(Q(0), r) for r in r1] + [(s, Q(-2)) for s in r2]
    return Fq, marked


def build_convex():
    L = {(0, 1): 1, (0, 0): 4}
    Q1 = {(2, 0): 1, (0, 2): 2, (0, 0): -4}
    Q2 = {(2, 0): 2, (0, 2): 1, (0, 0): -4}
    C = add(mul(mul(L, Q1), Q2), {(0, 0): F(1)})
    Fq = to_form(5, C)
    Fq, r1 = mark_vertical(Fq, Q(0), 5)
    Fq, r2 = mark_horizontal(Fq, Q(0), Q(0), 4)
    marked = [(Q(0), r) for r in r1] + [(s, Q(0)) for s in r2]
    return Fq, marked


def dump(name, Fq, marked):
    print(f"--- frozen {name} ---")
    for key in sorted(Fq.coeffs):
        c = Fq.coeffs[key]
        print(f"    {key}: Q({c.numerator}, {c.denominator}),")
    print("  marked:")
    for (x, y) in marked:
        print(f"    (Q({x.numerator}, {x.denominator}),"
              f" Q({y.numerator}, {y.denominator})),")


if __name__ == "__main__":
    Fq, marked = build_nonconvex()
    T = report("nonconvex quintic", Fq, marked)
    dump("nonconvex", Fq, marked)
    Fq2, marked2 = build_convex()
    T2 = report("convex quintic", Fq2, marked2)
    dump("convex", Fq2, marked2)
