"""Topology of the real locus of a smooth plane projective curve.

The algorithm is an affine-chart sweep: pick a projective chart in which the
curve is in generic position, isolate the critical x-values (roots of the
y-discriminant), read off the fiber structure between consecutive criticals,
connect branches across each critical using the exact rank of the tangency
point, and glue across the line at infinity.  All verdicts are exact; the
only floating point anywhere is absent.

Chart genericity (checked, with seeded retries):
  * F(0,1,0) != 0, so the dehomogenized curve has constant y-leading
    coefficient and no vertical asymptote escapes through (0:1:0);
  * F(x,y,0) squarefree, so each real point at infinity is a single
    transverse crossing with its own asymptotic slope; branches glue across
    infinity with the slope order reversed, and any component crossing an
    even nonzero number of times (an affinely unbounded oval) forces a chart
    retry so that interior parity tests stay valid;
  * Disc_y of the dehomogenized curve squarefree, so every critical value
    carries exactly one ordinary vertical tangency (a complex double root
    would force a double discriminant root);
  * the first subresultant S1 = a1(x)*y + a0(x) of (p, p_y) has
    gcd(Disc, a1) = 1, so the tangency y-coordinate is -a0/a1 at every
    critical value;
  * the leading coefficients of the generalized Sturm chain of (p, p_y) in y
    share no root with Disc, so the chain specializes soundly at criticals.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import (
    BiPoly, ProjectivePoint, Q, TernaryForm, UniPoly, resultant,
    resultant_upoly, subresultant_prs, transform_inverse,
)
from .realroots import (
    AlgebraicNumber, IsolatingInterval, QInterval, compare_algebraic,
    count_real_roots, isolate_roots, poly_interval, refine_interval, sign_at,
    simplest_rational_between, square_free_part,
)

MAX_CHART_RETRIES = 16


class SingularCurveError(ValueError):
    pass


class GenericPositionError(RuntimeError):
    pass


class LocateError(RuntimeError):
    """Raised when a point cannot be assigned to a branch (caller may
    re-sample its parameter)."""


# ---------------------------------------------------------------------------
# smoothness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmoothnessVerdict:
    smooth: bool
    witness: Optional[ProjectivePoint] = None  # a singular point, when found

    def __bool__(self):
        return self.smooth


def _binary_resultant(g1: TernaryForm, g2: TernaryForm):
    """Resultant of two binary forms in (x, y) given as z-free TernaryForms."""
    def as_upoly(g):
        out = [Q(0)] * (g.degree + 1)
        for (a, b, c), v in g.coeffs.items():
            if c != 0:
                raise ValueError("not a binary form")
            out[b] += v
        return UniPoly(out), g.degree
    p1, d1 = as_upoly(g1)
    p2, d2 = as_upoly(g2)
    if p1.is_zero() or p2.is_zero():
        return Q(0)
    return resultant(p1, p2, d1, d2)


def _z_coefficient_lists(f: TernaryForm):
    """Coefficients of z^k as BiPoly in (x, y), ascending in k."""
    out = [dict() for _ in range(f.degree + 1)]
    for (a, b, c), v in f.coeffs.items():
        out[c][(a, b)] = out[c].get((a, b), Q(0)) + v
    return out


def _res_z_binary(fa: TernaryForm, fb: TernaryForm):
    """Res_z(fa, fb) dehomogenized at x = 1 (a UniPoly in t = y), plus the
    formal degree of the underlying binary form."""
    ca = [BiPoly(d) if d else BiPoly({}) for d in _z_coefficient_lists(fa)]
    cb = [BiPoly(d) if d else BiPoly({}) for d in _z_coefficient_lists(fb)]

    def at_x1(bp: BiPoly) -> UniPoly:
        out = {}
        for (a, b), v in bp.coeffs.items():
            out[b] = out.get(b, Q(0)) + v
        if not out:
            return UniPoly()
        coeffs = [Q(0)] * (max(out) + 1)
        for b, v in out.items():
            coeffs[b] = v
        return UniPoly(coeffs)

    pa = [at_x1(c) for c in ca]
    pb = [at_x1(c) for c in cb]
    res = resultant_upoly(pa, pb, fa.degree, fb.degree)
    return res, fa.degree * fb.degree


def _random_transform(rng: random.Random):
    while True:
        m = [[Q(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        if det != 0:
            return m


def _identity():
    return [[Q(1 if i == j else 0) for j in range(3)] for i in range(3)]


def check_smooth(F: TernaryForm, seed: int = 0) -> SmoothnessVerdict:
    """Decide smoothness of the projective curve F = 0 over the complex
    numbers.

    A nonzero resultant of the two z-eliminated partial-pairs certifies that
    the three partials have no common projective zero (smooth).  The test is
    repeated over random coordinate changes; if every attempt yields zero the
    curve is reported singular, with a rational singular point when one can
    be found by inspecting the common factor of the eliminants.
    """
    if F.degree < 2:
        return SmoothnessVerdict(True)  # lines are smooth
    rng = random.Random(seed)
    m = _identity()
    for attempt in range(MAX_CHART_RETRIES):
        G = F.transform(m)
        gx, gy, gz = G.partial(0), G.partial(1), G.partial(2)
        try:
            r1, d1 = _res_z_binary(gx, gy)
            r2, d2 = _res_z_binary(gx, gz)
            if not r1.is_zero() and not r2.is_zero():
                r = resultant(r1, r2, d1, d2)
                if r != 0:
                    return SmoothnessVerdict(True)
        except ValueError:
            pass
        m = _random_transform(rng)
    return SmoothnessVerdict(False, _singular_witness(F))


def _singular_witness(F: TernaryForm) -> Optional[ProjectivePoint]:
    """Hunt a rational common zero of the three partials (best effort)."""
    fx, fy, fz = F.partial(0), F.partial(1), F.partial(2)

    def vanishes(pt):
        return all(f.evaluate(pt) == 0 for f in (fx, fy, fz))

    for pt in (ProjectivePoint(1, 0, 0), ProjectivePoint(0, 1, 0),
               ProjectivePoint(0, 0, 1), ProjectivePoint(1, 1, 1),
               ProjectivePoint(1, -1, 0), ProjectivePoint(1, 0, -1),
               ProjectivePoint(0, 1, -1), ProjectivePoint(1, 1, 0),
               ProjectivePoint(1, 0, 1), ProjectivePoint(0, 1, 1)):
        if vanishes(pt):
            return pt
    # search candidate x:y ratios from the common factor of the eliminants
    try:
        r1, _ = _res_z_binary(fx, fy)
        r2, _ = _res_z_binary(fx, fz)
        if r1.is_zero() or r2.is_zero():
            return None
        g = r1.gcd(r2)
        for iv in isolate_roots(g) if g.degree > 0 else []:
            if iv.is_exact():
                t = iv.low  # candidate point (1 : t : z)
                uz = UniPoly()  # solve for z on fx(1, t, z) etc.
                polys = []
                for f in (fx, fy, fz):
                    coeffs = [Q(0)] * (f.degree + 1)
                    for (a, b, c), v in f.coeffs.items():
                        coeffs[c] += v * t ** b
                    polys.append(UniPoly(coeffs))
                gz_ = polys[0]
                for q in polys[1:]:
                    if gz_.is_zero():
                        gz_ = q
                    elif not q.is_zero():
                        gz_ = gz_.gcd(q)
                if not gz_.is_zero() and gz_.degree > 0:
                    for jv in isolate_roots(gz_):
                        if jv.is_exact() and vanishes(ProjectivePoint(1, t, jv.low)):
                            return ProjectivePoint(1, t, jv.low)
    except ValueError:
        pass
    return None


# ---------------------------------------------------------------------------
# generalized Sturm chain in y over Q[x]
# ---------------------------------------------------------------------------

def _ylist_trim(f):
    f = list(f)
    while f and f[-1].is_zero():
        f.pop()
    return f


def _ylist_primitive(f):
    """Divide a y-coefficient list by its positive rational content."""
    num_gcd = 0
    den_lcm = 1
    for up in f:
        for c in up.coeffs:
            if c != 0:
                num_gcd = math.gcd(num_gcd, abs(c.numerator))
                den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    if num_gcd == 0:
        return f
    s = Q(den_lcm, num_gcd)
    return [UniPoly([c * s for c in up.coeffs]) for up in f]


def _ylist_even_prem(a, b):
    """lc(b)^e * (a mod b) with e even, so the scale is positive wherever
    lc(b)(x) != 0."""
    da, db = len(a) - 1, len(b) - 1
    lcb = b[-1]
    delta = da - db + 1
    r = list(a)
    e = delta
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lcr = r[-1]
        s = dr - db
        r = [c * lcb for c in r]
        for j in range(db + 1):
            r[s + j] = r[s + j] - lcr * b[j]
        r = _ylist_trim(r[:dr])
        e -= 1
    if not r:
        return []
    for _ in range(e):
        r = [c * lcb for c in r]
    if delta % 2 == 1:
        r = [c * lcb for c in r]
    return r


def _shares_real_root(a: UniPoly, b: UniPoly) -> bool:
    if a.is_zero() or b.is_zero():
        return True  # degenerate; treat as a conflict
    if a.degree < 1 or b.degree < 1:
        return False
    g = a.gcd(b)
    return g.degree > 0 and count_real_roots(g) > 0


def sturm_chain_y(p_ylist):
    """Generalized Sturm chain of (p, dp/dy) with coefficients in Q[x].

    Every element equals the corresponding signed-remainder chain element of
    the specialization p(x0, .) up to a factor that is positive whenever no
    chain leading coefficient vanishes at x0."""
    f0 = _ylist_trim(p_ylist)
    if len(f0) < 2:
        raise ValueError("needs positive y-degree")
    f1 = _ylist_trim([f0[k] * Q(k) for k in range(1, len(f0))])
    chain = [_ylist_primitive(f0), _ylist_primitive(f1)]
    while len(chain[-1]) > 1:
        nxt = _ylist_even_prem(chain[-2], chain[-1])
        if not nxt:
            break
        neg = [UniPoly([-c for c in up.coeffs]) for up in nxt]
        chain.append(_ylist_primitive(neg))
    return chain


def _ylist_eval_y(f, c: Fraction) -> UniPoly:
    """f(x, c) as a UniPoly in x."""
    acc = UniPoly()
    for up in reversed(f):
        acc = UniPoly([v * c for v in acc.coeffs]) + up
    return acc


def _variations(signs) -> int:
    v, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


# ---------------------------------------------------------------------------
# the sweep
# ---------------------------------------------------------------------------

@dataclass
class _Segment:
    interval: int
    rank: int


@dataclass
class Component:
    kind: str                      # "oval" | "pseudo-line"
    witness: ProjectivePoint       # original coordinates; interior point for
                                   # ovals, on-curve-adjacent for pseudo-line
    trace: list                    # ProjectivePoints in original coordinates,
                                   # ordered along the component (rendering /
                                   # orientation bookkeeping only)
    index: int
    segments: list = field(default_factory=list)   # chart bookkeeping
    walk: list = field(default_factory=list)       # [(interval, rank, dir)]
    chart_witness: tuple = None                    # (x, y) in sweep chart


@dataclass(frozen=True)
class MclassLabel:
    i: int


@dataclass
class CurveTopology:
    degree: int
    genus: int
    components: list               # list[Component]
    nesting: list                  # parent oval index or None, per component
    sweep: "Sweep" = None          # exact machinery, reused by pencil/orientation

    @property
    def component_count(self) -> int:
        return len(self.components)

    def ovals(self):
        return [c for c in self.components if c.kind == "oval"]

    def pseudo_line(self) -> Optional[Component]:
        for c in self.components:
            if c.kind == "pseudo-line":
                return c
        return None


class Sweep:
    """Generic-chart sweep data for one smooth curve; all queries exact."""

    def __init__(self, F: TernaryForm, seed: int = 0):
        self.F_original = F
        rng = random.Random(seed)
        m = _identity()
        last_err = None
        for attempt in range(MAX_CHART_RETRIES):
            try:
                self._build(F, m)
                self.chart = m
                self.chart_inv = transform_inverse(m)
                return
            except GenericPositionError as e:
                last_err = e
                m = _random_transform(rng)
        raise GenericPositionError(
            f"generic-position failure after {MAX_CHART_RETRIES} charts: {last_err}")

    # -- chart construction -------------------------------------------------

    def _build(self, F: TernaryForm, m):
        G = F.transform(m)
        d = G.degree
        self.d = d
        if G.coefficient_of_y() == 0:
            raise GenericPositionError("curve passes through (0:1:0)")
        finf = G.infinity_restriction()
        if finf.degree != d:
            raise GenericPositionError("degenerate restriction at infinity")
        if square_free_part(finf).degree != finf.degree:
            raise GenericPositionError("non-reduced intersection with infinity")
        # squarefree finf: each real point at infinity is a single transverse
        # crossing with its own asymptotic slope (r == d mod 2 automatically)
        self.n_inf = count_real_roots(finf)
        self.G = G
        self.p = G.dehomogenize()
        py = self.p.partial_y()
        ylist = self.p.y_coefficients(d)
        self.chain = sturm_chain_y(ylist)
        self.chain_lc = [f[-1] for f in self.chain]
        # discriminant-in-y: resultant of (p, p_y) with formal degrees
        D = resultant_upoly(ylist, py.y_coefficients(d - 1), d, d - 1)
        if D.is_zero():
            raise GenericPositionError("vanishing y-discriminant (singular?)")
        Dsf = square_free_part(D)
        if d >= 2 and Dsf.degree != D.degree:
            # complex multiple roots are harmless; a real multiple root of the
            # discriminant breaks the one-ordinary-tangency analysis
            repeated = D.gcd(D.derivative())
            if repeated.degree > 0 and count_real_roots(repeated) > 0:
                raise GenericPositionError("repeated real discriminant root")
        self.D = Dsf
        # first subresultant of (p, p_y): S1 = a1(x) y + a0(x)
        if d >= 2:
            prs = subresultant_prs(ylist, py.y_coefficients(d - 1))
            s1 = None
            for f in prs:
                if len(f) == 2:
                    s1 = f
                    break
            if s1 is None:
                raise GenericPositionError("no linear subresultant")
            self.a0, self.a1 = s1[0], s1[1]
            if _shares_real_root(self.a1, Dsf):
                raise GenericPositionError("a1 shares a real root with Disc")
            for f in self.chain[:-1]:
                if _shares_real_root(f[-1], Dsf):
                    raise GenericPositionError(
                        "chain lc shares a real root with Disc")
        else:
            self.a0 = self.a1 = UniPoly.const(1)
        self._isolate_criticals()
        self._sample_fibers()
        self._connect()

    def _isolate_criticals(self):
        self.criticals = []
        if self.D.degree > 0:
            for iv in isolate_roots(self.D):
                alg = AlgebraicNumber(self.D, iv.low, iv.high)
                self.criticals.append(alg)
        # refine to pairwise-disjoint closed intervals with gaps
        cs = self.criticals
        for i in range(len(cs) - 1):
            while cs[i].hi >= cs[i + 1].lo:
                cs[i].refine()
                cs[i + 1].refine()

    def _sample_fibers(self):
        cs = self.criticals
        k = len(cs)
        self.samples = []
        for i in range(k + 1):
            if k == 0:
                s = Q(0)
            elif i == 0:
                s = cs[0].lo - 1
            elif i == k:
                s = cs[k - 1].hi + 1
            else:
                a, b = cs[i - 1].hi, cs[i].lo
                while not a < b:
                    cs[i - 1].refine()
                    cs[i].refine()
                    a, b = cs[i - 1].hi, cs[i].lo
                s = simplest_rational_between(a, b)
            self.samples.append(s)
        self.fibers = []
        for s in self.samples:
            q = self.p.eval_x(s)
            if q.degree != self.d:
                raise GenericPositionError("fiber degree drop at sample")
            roots = isolate_roots(q)
            if any(iv.multiplicity != 1 for iv in roots):
                raise GenericPositionError("multiple fiber root at sample")
            roots = _strictly_separate(q, roots)
            self.fibers.append(roots)
        r = self.n_inf
        if len(self.fibers[0]) != r or len(self.fibers[-1]) != r:
            raise GenericPositionError("unbounded branch count mismatch")

    # -- chain queries at an algebraic x ------------------------------------

    def _chain_signs_at(self, xa: AlgebraicNumber, c: Fraction):
        out = []
        for f in self.chain:
            u = _ylist_eval_y(f, c)
            out.append(xa.sign_of(u) if not u.is_zero() else 0)
        return out

    def _chain_signs_neg_inf(self, xa: AlgebraicNumber):
        out = []
        for f in self.chain:
            lc = f[-1]
            s = xa.sign_of(lc)
            if (len(f) - 1) % 2 == 1:
                s = -s
            out.append(s)
        return out

    def _check_chain_valid_at(self, xa: AlgebraicNumber, allow_last_zero: bool):
        for idx, lc in enumerate(self.chain_lc):
            s = xa.sign_of(lc)
            if s == 0:
                if allow_last_zero and idx == len(self.chain_lc) - 1 \
                        and len(self.chain[idx]) == 1:
                    continue
                raise LocateError("chain leading coefficient vanishes")

    def fiber_count_below(self, xa: AlgebraicNumber, c: Fraction) -> int:
        """Distinct roots of p(xa, .) in (-inf, c]; caller ensures validity."""
        v_inf = _variations(self._chain_signs_neg_inf(xa))
        v_c = _variations(self._chain_signs_at(xa, c))
        return v_inf - v_c

    def fiber_count_between(self, xa: AlgebraicNumber, a: Fraction,
                            b: Fraction) -> int:
        """Distinct roots of p(xa, .) in (a, b]."""
        va = _variations(self._chain_signs_at(xa, a))
        vb = _variations(self._chain_signs_at(xa, b))
        return va - vb

    def _fiber_value_sign(self, xa: AlgebraicNumber, c: Fraction) -> int:
        """Sign of p(xa, c)."""
        u = _ylist_eval_y(self.p.y_coefficients(self.d), c)
        return xa.sign_of(u)

    def rank_of_fiber_point(self, xa: AlgebraicNumber, y_num: UniPoly,
                            y_den: UniPoly, allow_last_zero: bool = False) -> int:
        """Rank (0-based, among distinct fiber roots) of the on-curve point
        with y-coordinate y_num(xa)/y_den(xa).

        Certified: finds rationals A < y* < B, both off the fiber, with
        exactly one distinct fiber root in (A, B]; the rank is then the
        distinct-root count in (-inf, A]."""
        self._check_chain_valid_at(xa, allow_last_zero)
        if xa.sign_of(y_den) == 0:
            raise LocateError("y-coordinate denominator vanishes")
        pad_num = 1
        for _ in range(256):
            iv = xa.interval()
            den_iv = poly_interval(y_den, iv)
            if den_iv.contains_zero():
                xa.refine()
                continue
            y_iv = poly_interval(y_num, iv) / den_iv
            pad = (y_iv.width() + Q(1, 1 << 20)) * Q(pad_num, 7)
            A, B = y_iv.lo - pad, y_iv.hi + pad
            if self._fiber_value_sign(xa, A) == 0 or \
                    self._fiber_value_sign(xa, B) == 0:
                pad_num = pad_num % 5 + 2  # vary the pad to dodge exact roots
                continue
            if self.fiber_count_between(xa, A, B) == 1:
                return self.fiber_count_below(xa, A)
            xa.refine()
        raise LocateError("fiber rank refinement did not converge")

    # -- branch connection --------------------------------------------------

    def _connect(self):
        k = len(self.criticals)
        segments = []
        for i, fiber in enumerate(self.fibers):
            for j in range(len(fiber)):
                segments.append((i, j))
        seg_index = {s: n for n, s in enumerate(segments)}
        parent = list(range(len(segments)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        # endpoint adjacency for the trace walk: (i, j, side) -> (i, j, side)
        edges = {}

        def add_edge(e1, e2):
            if e1 in edges or e2 in edges:
                raise GenericPositionError("conflicting branch connection")
            edges[e1] = e2
            edges[e2] = e1
            union(seg_index[(e1[0], e1[1])], seg_index[(e2[0], e2[1])])

        self.crit_rank = []
        for t, xa in enumerate(self.criticals):
            nl = len(self.fibers[t])
            nr = len(self.fibers[t + 1])
            if abs(nl - nr) != 2:
                raise GenericPositionError("fiber count step != 2 at critical")
            rho = self.rank_of_fiber_point(
                xa, UniPoly([-c for c in self.a0.coeffs]), self.a1,
                allow_last_zero=True)
            self.crit_rank.append(rho)
            if nl > nr:
                add_edge((t, rho, "R"), (t, rho + 1, "R"))
                for j in range(nl):
                    if j in (rho, rho + 1):
                        continue
                    jr = j if j < rho else j - 2
                    add_edge((t, j, "R"), (t + 1, jr, "L"))
            else:
                add_edge((t + 1, rho, "L"), (t + 1, rho + 1, "L"))
                for j in range(nl):
                    jr = j if j < rho else j + 2
                    add_edge((t, j, "R"), (t + 1, jr, "L"))
        # Unbounded branch i at the far left (slope order ascending) crosses
        # the line at infinity into the far-right branch of reversed rank:
        # the slope order of the n_inf transverse crossings flips across
        # infinity.
        for i in range(self.n_inf):
            add_edge((0, i, "L"), (k, self.n_inf - 1 - i, "R"))
        # every segment endpoint must be matched
        for (i, j) in segments:
            for side in ("L", "R"):
                if (i, j, side) not in edges:
                    raise GenericPositionError("dangling branch endpoint")
        self._edges = edges
        groups = {}
        for n, s in enumerate(segments):
            groups.setdefault(find(n), []).append(s)
        self.component_segments = [sorted(g) for g in
                                   sorted(groups.values(), key=lambda g: min(g))]
        self.comp_of = {}
        for ci, segs in enumerate(self.component_segments):
            for s in segs:
                self.comp_of[s] = ci
        # infinity crossings per component; ovals must stay affinely bounded
        # in this chart so the interior parity test is valid
        self.inf_crossings = [0] * len(self.component_segments)
        for i in range(self.n_inf):
            self.inf_crossings[self.comp_of[(0, i)]] += 1
        for ci, cnt in enumerate(self.inf_crossings):
            if cnt and cnt % 2 == 0:
                raise GenericPositionError("unbounded oval in chart")

    # -- walks and sample geometry ------------------------------------------

    def walk(self, comp_index: int):
        """Cyclic segment walk of a component: [(interval, rank, dir)] with
        dir = +1 when traversed left-to-right."""
        start = self.component_segments[comp_index][0]
        out = []
        seg, enter = start, "L"
        while True:
            out.append((seg[0], seg[1], 1 if enter == "L" else -1))
            leave = "R" if enter == "L" else "L"
            nxt = self._edges[(seg[0], seg[1], leave)]
            seg, enter = (nxt[0], nxt[1]), nxt[2]
            if seg == start and enter == "L":
                break
            if len(out) > 4 * len(self.comp_of):
                raise GenericPositionError("walk failed to close")
        return out

    def interval_of(self, x: Fraction) -> int:
        """Interval index of a rational non-critical x."""
        idx = 0
        for t, xa in enumerate(self.criticals):
            c = xa.compare_to(x)
            if c == 0:
                raise LocateError("x hits a critical value")
            if c < 0:
                idx = t + 1
        return idx

    def interval_of_algebraic(self, xa: AlgebraicNumber) -> int:
        idx = 0
        for t, c in enumerate(self.criticals):
            s = compare_algebraic(c, xa)
            if s == 0:
                raise LocateError("x-coordinate equals a critical value")
            if s < 0:
                idx = t + 1
        return idx

    def segment_x_range(self, interval: int):
        """Rational (lo, hi) bounds strictly inside the interval's closure,
        suitable for sampling (may touch the critical isolating bounds)."""
        k = len(self.criticals)
        if k == 0:
            return (Q(-2), Q(2))
        lo = self.criticals[interval - 1].hi if interval > 0 else self.samples[0] - 1
        hi = self.criticals[interval].lo if interval < k else self.samples[k] + 1
        return (lo, hi)

    def fiber_at(self, x: Fraction):
        """(interval index, isolating intervals of p(x, .)) for rational
        non-critical x; uses cached fibers at sample points."""
        for i, s in enumerate(self.samples):
            if s == x:
                return i, self.fibers[i]
        i = self.interval_of(x)
        q = self.p.eval_x(x)
        roots = _strictly_separate(q, isolate_roots(q))
        if len(roots) != len(self.fibers[i]):
            raise LocateError("fiber count mismatch inside an interval")
        return i, roots

    def locate(self, xa: AlgebraicNumber, y_num: UniPoly, y_den: UniPoly):
        """(component index, interval, rank) of the on-curve point with
        coordinates (xa, y_num(xa)/y_den(xa))."""
        if xa.is_exact():
            i, roots = self.fiber_at(xa.value())
            yv = y_num(xa.value()) / y_den(xa.value())
            for j, iv in enumerate(roots):
                q = self.p.eval_x(xa.value())
                if iv.is_exact():
                    if iv.low == yv:
                        return self.comp_of[(i, j)], i, j
                elif iv.low < yv < iv.high and sign_at(q, yv) == 0:
                    return self.comp_of[(i, j)], i, j
            raise LocateError("rational point not found on fiber")
        i = self.interval_of_algebraic(xa)
        rank = self.rank_of_fiber_point(xa, y_num, y_den)
        return self.comp_of[(i, rank)], i, rank

    # -- chart mapping -------------------------------------------------------

    def to_original(self, pt: ProjectivePoint) -> ProjectivePoint:
        return pt.transform(self.chart)

    def from_original(self, pt: ProjectivePoint) -> ProjectivePoint:
        return pt.transform(self.chart_inv)

    # -- oval membership -----------------------------------------------------

    def point_in_component(self, comp_index: int, x: Fraction, y: Fraction) -> bool:
        """Whether the off-curve chart point (x, y) lies inside the given
        oval (odd upward-ray crossing parity).  x must be non-critical."""
        i, roots = self.fiber_at(x)
        q = self.p.eval_x(x)
        above = 0
        for j, iv in enumerate(roots):
            if self.comp_of[(i, j)] != comp_index:
                continue
            if _root_above(q, iv, y):
                above += 1
        return above % 2 == 1


def _root_above(q: UniPoly, iv: IsolatingInterval, y: Fraction) -> bool:
    """Whether the root isolated by iv is > y (y must not be that root)."""
    while True:
        if iv.is_exact():
            if iv.low == y:
                raise LocateError("membership query point lies on the curve")
            return iv.low > y
        if y <= iv.low:
            return True
        if y >= iv.high:
            return False
        if sign_at(q, y) == 0:
            raise LocateError("membership query point lies on the curve")
        iv = refine_interval(q, iv, iv.width() / 2)


def _strictly_separate(q: UniPoly, roots):
    """Refine isolating intervals until closed intervals are pairwise
    disjoint with nonempty gaps."""
    roots = list(roots)
    changed = True
    while changed:
        changed = False
        for a in range(len(roots) - 1):
            if roots[a].high >= roots[a + 1].low:
                roots[a] = refine_interval(q, roots[a], roots[a].width() / 4)
                roots[a + 1] = refine_interval(q, roots[a + 1],
                                               roots[a + 1].width() / 4)
                if roots[a].high >= roots[a + 1].low:
                    changed = True
    return roots




# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def compute_topology(F: TernaryForm, seed: int = 0) -> CurveTopology:
    verdict = check_smooth(F, seed)
    if not verdict.smooth:
        raise SingularCurveError("curve is singular")
    d = F.degree
    genus = (d - 1) * (d - 2) // 2
    sweep = Sweep(F, seed)
    components = _assemble_components(sweep)
    if len(components) > genus + 1:
        raise GenericPositionError("Harnack violation (topology bug)")
    nesting = _nesting_forest(sweep, components)
    return CurveTopology(d, genus, components, nesting, sweep)


def _assemble_components(sweep: Sweep):
    comps = []
    for ci, segs in enumerate(sweep.component_segments):
        walk = sweep.walk(ci)
        kind = "pseudo-line" if sweep.inf_crossings[ci] % 2 == 1 else "oval"
        trace = _component_trace(sweep, walk)
        comps.append(Component(kind=kind, witness=None, trace=trace,
                               index=ci, segments=segs, walk=walk))
    for comp in comps:
        wx, wy = _chart_witness(sweep, comp)
        comp.chart_witness = (wx, wy)
        comp.witness = sweep.to_original(ProjectivePoint.affine(wx, wy))
    return comps


def _component_trace(sweep: Sweep, walk, samples_per_segment: int = 4):
    pts = []
    for (i, j, direction) in walk:
        lo, hi = sweep.segment_x_range(i)
        xs = [lo + (hi - lo) * Q(t, samples_per_segment + 1)
              for t in range(1, samples_per_segment + 1)]
        if direction < 0:
            xs = list(reversed(xs))
        for x in xs:
            try:
                _, roots = sweep.fiber_at(x)
            except LocateError:
                continue
            iv = roots[j]
            iv = refine_interval(sweep.p.eval_x(x), iv, Q(1, 1 << 20))
            y = iv.midpoint()
            pts.append(sweep.to_original(ProjectivePoint.affine(x, y)))
    return pts


def _chart_witness(sweep: Sweep, comp: Component):
    """Chart-coordinate witness: interior point for ovals (odd own-crossing
    parity above), adjacent sample for the pseudo-line."""
    if comp.kind == "oval":
        # find an interval where the oval has >= 2 branches
        by_interval = {}
        for (i, j) in comp.segments:
            by_interval.setdefault(i, []).append(j)
        for i, ranks in sorted(by_interval.items()):
            if len(ranks) >= 2:
                ranks.sort()
                jtop = ranks[-1]
                s = sweep.samples[i]
                roots = sweep.fibers[i]
                c = _gap_rational(sweep.p.eval_x(s), roots, jtop - 1, jtop)
                return s, c
        raise GenericPositionError("oval with no two-branch fiber")
    # pseudo-line: rational point adjacent to some branch, preferring the
    # sample of smallest magnitude so the witness stays near the origin
    (i, j) = min(comp.segments, key=lambda s_: (abs(sweep.samples[s_[0]]), s_))
    s = sweep.samples[i]
    roots = sweep.fibers[i]
    if j > 0:
        c = _gap_rational(sweep.p.eval_x(s), roots, j - 1, j)
    else:
        c = roots[0].low - 1
    return s, c


def _gap_rational(q: UniPoly, roots, j_lo: int, j_hi: int) -> Fraction:
    """A rational strictly between the roots of ranks j_lo < j_hi."""
    a, b = roots[j_lo], roots[j_hi]
    while True:
        lo = a.low if a.is_exact() else a.high
        hi = b.high if b.is_exact() else b.low
        if lo < hi:
            return simplest_rational_between(lo, hi)
        a = refine_interval(q, a, a.width() / 4) if not a.is_exact() else a
        b = refine_interval(q, b, b.width() / 4) if not b.is_exact() else b


def _nesting_forest(sweep: Sweep, components):
    n = len(components)
    contains = [[False] * n for _ in range(n)]
    for bi, b in enumerate(components):
        if b.kind != "oval":
            continue
        for ai, a in enumerate(components):
            if ai == bi or a.kind != "oval":
                continue
            wx, wy = a.chart_witness
            contains[bi][ai] = sweep.point_in_component(bi, wx, wy)
    parents = [None] * n
    for ai, a in enumerate(components):
        if a.kind != "oval":
            continue
        containers = [bi for bi in range(n) if contains[bi][ai]]
        if not containers:
            continue
        # the immediate parent is the container contained in all others
        best = None
        for bi in containers:
            if all(bi == ci or contains[ci][bi] for ci in containers):
                best = bi
        if best is None:
            raise GenericPositionError("inconsistent nesting order")
        parents[ai] = best
    return parents


def interior_witness(T: CurveTopology, oval: Component) -> ProjectivePoint:
    if oval.kind != "oval":
        raise ValueError("witness requested for a non-oval component")
    return oval.witness


def classify_m_label(T: CurveTopology) -> MclassLabel:
    l = len(T.components)
    if l > T.genus + 1:
        raise ValueError("Harnack violation")
    return MclassLabel(T.genus + 1 - l)
