"""Real pencils of plane curves and exact total-reality certification.

A pencil is spanned by two degree-k forms f, g; its members are g + lam*f
for finite lam plus the member f at lam = infinity.  Total reality against a
smooth curve C means every member meets C in real points only; the
certificate reduces the quantifier over all real lam to finitely many exact
checks:

* R(x, lam) = Res_y(C, g + lam*f) collects the x-coordinates of all member
  intersections; the real-intersection count can change only at real roots
  of the x-discriminant of R or of its x-leading coefficient (collisions or
  escapes to the chart's infinity), so one exact count per parameter
  interval plus counts near every critical parameter and at lam = infinity
  decide the verdict for every real member.
* Each per-member count is independently certified by ``intersect_member``:
  after a generic projective transform every non-real intersection point has
  a non-real x-coordinate, which is verified through the first subresultant
  of the pair (a vanishing principal coefficient over a real root would
  betray several intersections sharing an x); the count is then the
  multiplicity sum of the real roots of the elimination resultant.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (ProjectivePoint, Q, TernaryForm, UniPoly,
                      interpolation_space, resultant, resultant_upoly,
                      subresultant_prs, transform_inverse)
from .realroots import (AlgebraicNumber, IsolatingInterval, count_real_roots,
                        exact_rational_root, isolate_roots, poly_interval,
                        refine_interval, simplest_rational_between, sign_at,
                        square_free_part, squarefree_decomposition)
from .topology import (CurveTopology, GenericPositionError, LocateError,
                       MAX_CHART_RETRIES, Sweep, _random_transform,
                       _shares_real_root, check_smooth, compute_topology)


class PencilError(Exception):
    """Raised when a pencil operation cannot be completed exactly."""


@dataclass(frozen=True)
class PencilParameter:
    """A point of the real parameter line: member g + lam*f for finite lam,
    or the member f at infinity."""
    lam: Fraction = None
    infinite: bool = False

    def __str__(self):
        return "infinity" if self.infinite else str(self.lam)


@dataclass(frozen=True)
class Pencil:
    k: int
    f: TernaryForm
    g: TernaryForm
    base_points: tuple

    def __post_init__(self):
        if self.f.degree != self.k or self.g.degree != self.k:
            raise PencilError("generator degree mismatch")
        for p in self.base_points:
            if self.f.evaluate(p) != 0 or self.g.evaluate(p) != 0:
                raise PencilError("base point does not annihilate a generator")

    def member(self, par: PencilParameter) -> TernaryForm:
        if par.infinite:
            return self.f
        return _combine(self.g, self.f, par.lam)


@dataclass(frozen=True)
class TotalRealityCertificate:
    verdict: str  # "totally-real" | "not-totally-real"
    critical_parameters: tuple  # IsolatingInterval, sorted
    per_interval_counts: tuple  # (PencilParameter, real count, total d*k)
    witness: PencilParameter = None

    @property
    def totally_real(self) -> bool:
        return self.verdict == "totally-real"


@dataclass(frozen=True)
class DegreePartition:
    entries: tuple  # one count per component index of the topology

    def __iter__(self):
        return iter(self.entries)

    def total(self) -> int:
        return sum(self.entries)


def _combine(g: TernaryForm, f: TernaryForm, lam: Fraction) -> TernaryForm:
    """g + lam*f (degree-k member in the finite chart)."""
    out = dict(g.coeffs)
    for key, c in f.coeffs.items():
        out[key] = out.get(key, Q(0)) + lam * c
    out = {k: v for k, v in out.items() if v != 0}
    if not out:
        raise PencilError("pencil member degenerates to zero")
    return TernaryForm(g.degree, out)


def build_pencil(points, k: int) -> Pencil:
    pts = tuple(points)
    basis = interpolation_space(pts, k)
    if len(basis) < 2:
        raise PencilError("no pencil through these points")
    return Pencil(k, basis[0], basis[1], pts)


# ---------------------------------------------------------------------------
# per-member exact real intersection counting
# ---------------------------------------------------------------------------

def _identity3():
    return [[Q(1), Q(0), Q(0)], [Q(0), Q(1), Q(0)], [Q(0), Q(0), Q(1)]]


def intersect_member(C: TernaryForm, member: TernaryForm, seed: int = 0):
    """(real intersection count with multiplicity, total d*k).

    Sound for any transform that passes the internal checks; the random
    retries only hunt for a chart in which the checks hold."""
    d, k = C.degree, member.degree
    total = d * k
    rng = random.Random(seed)
    last = None
    for attempt in range(MAX_CHART_RETRIES):
        m = _identity3() if attempt == 0 else _random_transform(rng)
        try:
            return _intersect_in_chart(C.transform(m), member.transform(m),
                                       d, k), total
        except GenericPositionError as e:
            last = e
    raise PencilError(f"intersection chart retries exhausted: {last}")


def _intersect_in_chart(CT: TernaryForm, MT: TernaryForm, d: int, k: int) -> int:
    if CT.coefficient_of_y() == 0:
        raise GenericPositionError("curve passes through (0:1:0)")
    p = CT.dehomogenize().y_coefficients(d)
    q = MT.dehomogenize().y_coefficients(k)
    rx = resultant_upoly(p, q, d, k)
    if rx.is_zero():
        raise GenericPositionError("identically zero resultant (shared factor)")
    if rx.degree != d * k:
        raise GenericPositionError("resultant degree drop (infinity escape)")
    sf = square_free_part(rx)
    # the first subresultant certifies that over every real root there is a
    # single intersection point, necessarily with real y
    if d * k > 1:
        s1 = None
        for f in subresultant_prs(p, q):
            if len(f) == 2:
                s1 = f
                break
        if s1 is None:
            raise GenericPositionError("no linear subresultant")
        a1 = s1[1]
        if _shares_real_root(a1, sf):
            raise GenericPositionError("several intersections share an x")
    # multiplicity-weighted real-root count; no isolation needed
    if sf.degree == rx.degree:
        return count_real_roots(sf)
    return sum(m * count_real_roots(f)
               for f, m in squarefree_decomposition(rx))


# ---------------------------------------------------------------------------
# certification over the whole parameter line
# ---------------------------------------------------------------------------

def _lagrange_interpolate(nodes, values) -> UniPoly:
    """UniPoly through the given rational (node, value) pairs."""
    acc = UniPoly()
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        if yi == 0:
            continue
        num = UniPoly([yi])
        den = Q(1)
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            num = num * UniPoly([-xj, Q(1)])
            den *= (xi - xj)
        acc = acc + num * UniPoly([Q(1) / den])
    return acc


def _pencil_resultant(CT: TernaryForm, fT: TernaryForm, gT: TernaryForm):
    """R(x, lam) = Res_y(CT, gT + lam*fT) as a list of UniPoly in lam,
    index = power of x; computed by interpolation in lam."""
    d, k = CT.degree, fT.degree
    dk = d * k
    p = CT.dehomogenize().y_coefficients(d)
    nodes = [Q(t) for t in range(d + 2)]
    evals = []
    for t in nodes:
        q = _combine(gT, fT, t).dehomogenize().y_coefficients(k)
        evals.append(resultant_upoly(p, q, d, k))
    cols = []
    for i in range(dk + 1):
        vals = [e.coeffs[i] if i <= e.degree else Q(0) for e in evals]
        cols.append(_lagrange_interpolate(nodes[:d + 1], vals[:d + 1]))
    # the resultant is degree <= d in the member's coefficients, hence in lam;
    # the extra node cross-checks the interpolation degree bound
    extra = nodes[d + 1]
    for i in range(dk + 1):
        want = evals[d + 1].coeffs[i] if i <= evals[d + 1].degree else Q(0)
        if cols[i](extra) != want:
            raise PencilError("parameter-degree bound violated in resultant")
    return cols


def _deflate_base_fibers(cols, bxs):
    """Divide the x-polynomial with UniPoly-in-lam coefficients by the
    product of (x - bx) over the base fibers bx; base points lying on the
    curve belong to every member, so their fibers divide R for all lam."""
    for bx in bxs:
        n = len(cols) - 1
        quo = [None] * n
        quo[n - 1] = cols[n]
        for i in range(n - 2, -1, -1):
            quo[i] = cols[i + 1] + quo[i + 1] * bx
        rem = cols[0] + quo[0] * bx
        if not rem.is_zero():
            raise GenericPositionError("base fiber does not divide resultant")
        cols = quo
    return cols


def _critical_lambda_poly(cols, bxs=()) -> UniPoly:
    """Polynomial in lam whose real roots contain every parameter where the
    real-intersection count can change.  The fixed base fibers are deflated
    from R first (with them the x-discriminant vanishes identically whenever
    two base points share an x); the factors are then the x-discriminant of
    the moving part M, the x-leading coefficient (escapes to chart
    infinity), and M evaluated at each base fiber (a moving point colliding
    with a base point)."""
    lc = cols[-1]
    cols = _deflate_base_fibers(cols, bxs)
    dk = len(cols) - 1
    dlam = max((c.degree for c in cols), default=0)
    bound = dlam * (2 * dk - 1) + 1
    nodes = []
    values = []
    t = 0
    while len(nodes) <= bound:
        lam = Q(t)
        r = UniPoly([c(lam) for c in cols])
        if r.degree == dk:
            dr = r.derivative()
            values.append(resultant(r, dr, dk, dk - 1))
            nodes.append(lam)
        t += 1
        if t > 4 * bound + 16:
            raise PencilError("could not collect discriminant samples")
    disc = _lagrange_interpolate(nodes, values)
    if disc.is_zero():
        raise GenericPositionError("identically vanishing parameter discriminant")
    crit = disc
    if lc.degree >= 1:
        crit = crit * lc
    for bx in bxs:
        at_base = UniPoly()
        for j, c in enumerate(cols):
            at_base = at_base + c * (bx ** j)
        if at_base.is_zero():
            raise GenericPositionError("base fiber absorbs moving intersections")
        if at_base.degree >= 1:
            crit = crit * at_base
    return crit


def certify_totally_real(C: TernaryForm, P: Pencil,
                         seed: int = 0) -> TotalRealityCertificate:
    d, k = C.degree, P.k
    if not k < d:
        raise PencilError("pencil degree must be smaller than the curve degree")
    dk = d * k
    rng = random.Random(seed)
    on_curve = [bp for bp in P.base_points if C.evaluate(bp) == 0]
    crit = None
    last = None
    for attempt in range(MAX_CHART_RETRIES):
        m = _identity3() if attempt == 0 else _random_transform(rng)
        CT, fT, gT = C.transform(m), P.f.transform(m), P.g.transform(m)
        if CT.coefficient_of_y() == 0:
            continue
        m_inv = transform_inverse(m)
        base_t = [bp.transform(m_inv) for bp in on_curve]
        if any(not bp.is_affine() for bp in base_t):
            continue
        try:
            cols = _pencil_resultant(CT, fT, gT)
            crit = _critical_lambda_poly(cols, [bp.x for bp in base_t])
            break
        except GenericPositionError as e:
            last = e
            crit = None
    if crit is None:
        raise PencilError(f"no usable chart for the parameter sweep: {last}")

    # strictly separated isolating intervals for the critical parameters, so
    # that each open interval between consecutive criticals gets its own
    # guaranteed sample in the gap between the isolating intervals
    crit_sf = square_free_part(crit)
    ivs = list(isolate_roots(crit_sf)) if crit.degree >= 1 else []
    changed = True
    while changed:
        changed = False
        for i in range(len(ivs) - 1):
            if ivs[i].high >= ivs[i + 1].low:
                ivs[i] = refine_interval(crit_sf, ivs[i], ivs[i].width() / 4)
                ivs[i + 1] = refine_interval(crit_sf, ivs[i + 1],
                                             ivs[i + 1].width() / 4)
                changed = True
    crit_ivs = tuple(ivs)
    # sample parameters: one inside every open interval between consecutive
    # critical parameters, one inside every critical isolating interval
    # (evaluating exactly at rational criticals), and the member at infinity
    params = []
    if crit_ivs:
        params.append(PencilParameter(lam=Q(math.floor(crit_ivs[0].low)) - 1))
        for i, iv in enumerate(crit_ivs):
            inner = iv.low if iv.is_exact() else \
                simplest_rational_between(iv.low, iv.high)
            params.append(PencilParameter(lam=inner))
            if i + 1 < len(crit_ivs):
                s = simplest_rational_between(iv.high, crit_ivs[i + 1].low)
                if sign_at(crit_sf, s) == 0:
                    # endpoint of the gap was itself an exact critical value
                    s = (iv.high + crit_ivs[i + 1].low) / 2
                params.append(PencilParameter(lam=s))
            else:
                params.append(PencilParameter(lam=Q(math.ceil(iv.high)) + 1))
    else:
        params.append(PencilParameter(lam=Q(0)))
    params.append(PencilParameter(infinite=True))

    counts = []
    witness = None
    for par in params:
        real, total = intersect_member(C, P.member(par), seed)
        counts.append((par, real, total))
        if real != total:
            # one non-real member already refutes total reality
            witness = par
            break
    verdict = "totally-real" if witness is None else "not-totally-real"
    return TotalRealityCertificate(verdict, crit_ivs, tuple(counts), witness)


# ---------------------------------------------------------------------------
# degree partitions
# ---------------------------------------------------------------------------

def _subresultant_s1(p, q):
    for f in subresultant_prs(p, q):
        if len(f) == 2:
            return f
    return None


def degree_partition(C: TernaryForm, T: CurveTopology, P: Pencil,
                     cert: TotalRealityCertificate) -> DegreePartition:
    if not cert.totally_real:
        raise PencilError("degree partition requires a totally-real pencil")
    last = None
    for par in regular_parameter_candidates(cert):
        try:
            points, _ = member_intersection_points(C, T, P, par)
        except (GenericPositionError, LocateError) as e:
            last = e
            continue
        entries = [0] * len(T.components)
        for (comp, _i, _rank, _xa) in points:
            entries[comp] += 1
        return DegreePartition(tuple(entries))
    raise PencilError(f"no clean regular parameter for the partition: {last}")


def regular_parameter_candidates(cert: TotalRealityCertificate):
    """Finite parameters worth trying as regular values, simplest first:
    huge rationals make the elimination resultants needlessly expensive."""
    regulars = [c[0] for c in cert.per_interval_counts if not c[0].infinite]
    extra = [r.lam + Q(1, 97) for r in regulars] + [Q(311, 100), Q(-731, 100)]
    candidates = regulars + [PencilParameter(lam=e) for e in extra]
    candidates.sort(key=lambda c: c.lam.numerator.bit_length()
                    + c.lam.denominator.bit_length())
    return candidates


def member_intersection_points(C: TernaryForm, T: CurveTopology, P: Pencil,
                               par: PencilParameter):
    """Moving intersection points of a member with the curve, located in the
    sweep chart.

    Returns (points, (y_num, y_den)) where points is a list of
    (component, interval, rank, x AlgebraicNumber) and the point's
    y-coordinate is y_num(x)/y_den(x).  Raises GenericPositionError when the
    parameter is not clean enough (multiple roots, base-fiber collisions,
    chart escapes)."""
    sweep = T.sweep
    base_chart = [sweep.from_original(pt) for pt in P.base_points
                  if C.evaluate(pt) == 0]
    for bp in base_chart:
        if not bp.is_affine():
            raise GenericPositionError("base point at sweep-chart infinity")
    d, k = C.degree, P.k
    dk = d * k
    member = P.member(par)
    MT = member.transform(sweep.chart)
    p = sweep.p.y_coefficients(d)
    q = MT.dehomogenize().y_coefficients(k)
    rx = resultant_upoly(p, q, d, k)
    if rx.is_zero() or rx.degree != dk:
        raise GenericPositionError("member escapes the sweep chart")
    s1 = _subresultant_s1(p, q)
    if s1 is None:
        raise GenericPositionError("no linear subresultant for the member")
    a0, a1 = s1[0], s1[1]

    # every base point contributes a fixed linear factor to rx; deflate them
    # and insist the remaining (moving) roots stay clear of the base fibers
    moving = rx
    for bp in base_chart:
        quo, rem = divmod(moving, UniPoly([-bp.x, Q(1)]))
        if not rem.is_zero():
            raise GenericPositionError("base factor does not divide")
        moving = quo
    for bp in base_chart:
        if moving(bp.x) == 0:
            raise GenericPositionError("moving intersection over a base fiber")

    y_num = UniPoly([-c for c in a0.coeffs])
    y_den = a1
    points = []
    for iv in isolate_roots(moving):
        if iv.multiplicity != 1:
            raise GenericPositionError("multiple moving intersection")
        if iv.is_exact():
            xa = AlgebraicNumber.exact(iv.low)
        else:
            xa = AlgebraicNumber(square_free_part(moving), iv.low, iv.high)
        comp, i, rank = sweep.locate(xa, y_num, y_den)
        points.append((comp, i, rank, xa))
    if len(points) != dk - len(base_chart):
        raise GenericPositionError("moving intersection count mismatch")
    return points, (y_num, y_den)


# ---------------------------------------------------------------------------
# base locus
# ---------------------------------------------------------------------------

def base_locus_on_curve(C: TernaryForm, P: Pencil, seed: int = 0) -> list:
    """Real points of V(f) ∩ V(g) ∩ C; rational points exactly, irrational
    ones as (x isolating interval, y isolating interval) boxes."""
    rng = random.Random(seed)
    last = None
    for attempt in range(MAX_CHART_RETRIES):
        m = _identity3() if attempt == 0 else _random_transform(rng)
        try:
            pts = _base_locus_chart(C.transform(m), P.f.transform(m),
                                    P.g.transform(m))
        except GenericPositionError as e:
            last = e
            continue
        out = []
        for item in pts:
            if isinstance(item, ProjectivePoint):
                # CT(v) = C(m v), so chart points return through m itself
                out.append(item.transform(m))
            else:
                out.append(BaseLocusBox(chart=m, x_interval=item[0],
                                        y_interval=item[1]))
        return out
    raise PencilError(f"base locus chart retries exhausted: {last}")


@dataclass(frozen=True)
class BaseLocusBox:
    """Isolating box for an irrational base point, in the coordinates of the
    chart transform that produced it."""
    chart: tuple
    x_interval: IsolatingInterval
    y_interval: tuple  # rational (lo, hi) bounds for the y-coordinate


def _base_locus_chart(CT, fT, gT) -> list:
    k = fT.degree
    pf = fT.dehomogenize().y_coefficients(k)
    pg = gT.dehomogenize().y_coefficients(k)
    rx = resultant_upoly(pf, pg, k, k)
    if rx.is_zero():
        raise GenericPositionError("pencil generators share a factor")
    if rx.degree != k * k:
        raise GenericPositionError("base point at chart infinity")
    s1 = _subresultant_s1(pf, pg)
    if s1 is None:
        raise GenericPositionError("no linear subresultant for the generators")
    a0, a1 = s1[0], s1[1]
    if _shares_real_root(a1, square_free_part(rx)):
        raise GenericPositionError("stacked base points in this chart")
    d = CT.degree
    pc = CT.dehomogenize().y_coefficients(d)
    # C(x, -a0/a1) * a1^d: vanishes at exactly the base x-coords lying on C
    n = UniPoly()
    for j, cj in enumerate(pc):
        n = n + cj * _upow(UniPoly([-c for c in a0.coeffs]), j) \
            * _upow(a1, d - j)
    out = []
    for iv in isolate_roots(rx):
        ex = exact_rational_root(square_free_part(rx), iv)
        if ex is not None:
            y = -a0(ex) / a1(ex)
            if sign_at(n, ex) == 0:
                out.append(ProjectivePoint.affine(ex, y))
            continue
        xa = AlgebraicNumber(square_free_part(rx), iv.low, iv.high)
        if xa.sign_of(n) == 0:
            while True:
                xiv = xa.interval()
                den_iv = poly_interval(a1, xiv)
                if not den_iv.contains_zero():
                    break
                xa.refine()
            y_iv = poly_interval(UniPoly([-c for c in a0.coeffs]), xiv) / den_iv
            out.append((IsolatingInterval(xiv.lo, xiv.hi, iv.multiplicity),
                        (y_iv.lo, y_iv.hi)))
    return out


def _upow(p: UniPoly, e: int) -> UniPoly:
    out = UniPoly([Q(1)])
    for _ in range(e):
        out = out * p
    return out


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchAttempt:
    base_points: tuple
    outcome: str  # "certified" | "not-totally-real" | error text


@dataclass(frozen=True)
class SearchOutcome:
    pencils: tuple  # (Pencil, TotalRealityCertificate) certified totally-real
    attempts: tuple  # SearchAttempt, in order

    @property
    def success(self) -> bool:
        return bool(self.pencils)


def _simple_rationals():
    """Deterministic stream of simple rationals: 0, 1, -1, 2, -2, 1/2, ..."""
    yield Q(0)
    for den in (1, 2, 3, 4):
        for num in range(1, 4 * den + 1):
            if Fraction(num, den).denominator != den:
                continue
            yield Q(num, den)
            yield Q(-num, den)


def rational_points_on_components(C: TernaryForm, T: CurveTopology,
                                  per_component: int = 2,
                                  denominator_bound: int = 1 << 20):
    """Exact rational points on each real component, found by scanning
    vertical and horizontal lines with simple rational offsets.  Returns
    {component index: [ProjectivePoint, ...]} (possibly short)."""
    sweep = T.sweep
    found = {i: [] for i in range(len(T.components))}

    def record(comp, pt):
        lst = found[comp]
        if len(lst) < per_component and all(q != pt for q in lst):
            lst.append(pt)

    def done():
        return all(len(v) >= per_component for v in found.values())

    d = C.degree
    for x0 in _simple_rationals():
        if done():
            break
        # vertical line x = x0 in the original coordinates, mapped into the
        # sweep chart only for component lookup
        fiber = _restrict_line(C, x0, vertical=True)
        if not fiber.is_zero() and fiber.degree >= 1:
            for iv in isolate_roots(fiber):
                y0 = exact_rational_root(square_free_part(fiber), iv,
                                         denominator_bound)
                if y0 is None:
                    continue
                pt = ProjectivePoint.affine(x0, y0)
                comp = _component_of_point(T, pt)
                if comp is not None:
                    record(comp, pt)
        fiber = _restrict_line(C, x0, vertical=False)
        if not fiber.is_zero() and fiber.degree >= 1:
            for iv in isolate_roots(fiber):
                x1 = exact_rational_root(square_free_part(fiber), iv,
                                         denominator_bound)
                if x1 is None:
                    continue
                pt = ProjectivePoint.affine(x1, x0)
                comp = _component_of_point(T, pt)
                if comp is not None:
                    record(comp, pt)
    return found


def _restrict_line(C: TernaryForm, c0, vertical: bool) -> UniPoly:
    d = C.degree
    coeffs = [Q(0)] * (d + 1)
    for (a, b, cc), v in C.coeffs.items():
        if vertical:
            coeffs[b] += v * c0 ** a
        else:
            coeffs[a] += v * c0 ** b
    return UniPoly(coeffs)


def _component_of_point(T: CurveTopology, pt: ProjectivePoint):
    sweep = T.sweep
    cp = sweep.from_original(pt)
    if not cp.is_affine():
        return None
    try:
        comp, _, _ = sweep.locate(AlgebraicNumber.exact(cp.x),
                                  UniPoly([cp.y]), UniPoly([Q(1)]))
        return comp
    except LocateError:
        return None


def search_totally_real_pencil(C: TernaryForm, T: CurveTopology,
                               strategy=None, degree: int = None,
                               budget: int = 50, seed: int = 0,
                               want: int = 1) -> SearchOutcome:
    """Search base-point configurations for a certified totally real pencil.

    strategy: optional {component: [points]} candidate map; default scans for
    rational points on the components.  Returns after `want` certified
    pencils or when the budget of certification attempts is exhausted."""
    d = C.degree
    if d < 4:
        raise PencilError("search requires degree >= 4")
    if not T.components:
        raise PencilError("no real components")
    k = degree if degree is not None else d - 3
    g = T.genus
    dim = (k + 1) * (k + 2) // 2
    n_base = min(g - 2, dim - 2)
    if n_base < 1:
        raise PencilError("pencil degree leaves no room for base points")

    candidates = strategy if strategy is not None else \
        rational_points_on_components(C, T, per_component=2)
    comp_ids = [i for i in sorted(candidates) if candidates[i]]
    if len(comp_ids) < n_base:
        return SearchOutcome((), (SearchAttempt(
            (), f"only {len(comp_ids)} components carry candidate points,"
                f" need {n_base}"),))

    pencils = []
    attempts = []
    spent = 0
    # ovals first: the paper's recipe places base points one per oval
    order = sorted(comp_ids,
                   key=lambda i: (T.components[i].kind != "oval", i))
    for combo in itertools.combinations(order, n_base):
        for choice in itertools.product(*(candidates[i] for i in combo)):
            if spent >= budget or len(pencils) >= want:
                break
            spent += 1
            pts = tuple(choice)
            try:
                P = build_pencil(pts, k)
                cert = certify_totally_real(C, P, seed)
            except PencilError as e:
                attempts.append(SearchAttempt(pts, f"error: {e}"))
                continue
            if cert.totally_real:
                pencils.append((P, cert))
                attempts.append(SearchAttempt(pts, "certified"))
            else:
                attempts.append(SearchAttempt(pts, "not-totally-real"))
        if spent >= budget or len(pencils) >= want:
            break
    return SearchOutcome(tuple(pencils), tuple(attempts))
