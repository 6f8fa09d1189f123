"""Complex orientations from totally real pencils, oval signs, and the
quintic convex-position criterion.

A certified totally real pencil restricts on the real locus to a covering of
the real parameter circle; pulling back the parameter orientation orients
every component.  Operationally the orientation is read off locally: at a
moving intersection point of a regular member, the sign of the parameter's
derivative along the component's stored walk direction decides whether the
walk runs forward or backward.  The two global choices differ by one
simultaneous flip (reversing both generators of the pencil).

Oval signs compare an oval against twice the pseudo-line in the homology of
the Moebius band complementing the oval's interior.  The comparison is
computed through the orientation double cover (the sphere): a straight line
through an interior point of the oval lifts to an arc from the lifted point
to its antipode, and the class of a closed curve in the twice-punctured
sphere is its signed crossing count with that arc.  Crossings picked up
after the arc wraps through the line at infinity count with an extra minus
sign, because the antipodal identification reverses the chart handedness.
Both the oval and the full lift of the pseudo-line are rank-one classes
there; their ratio is the wanted sign, independent of the chosen line,
interior point, chart, and global orientation flip.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .algebra import ProjectivePoint, Q, TernaryForm, UniPoly
from .pencil import (Pencil, PencilError, TotalRealityCertificate,
                     member_intersection_points, regular_parameter_candidates)
from .realroots import (AlgebraicNumber, isolate_roots, refine_interval,
                        simplest_rational_between, square_free_part)
from .topology import (CurveTopology, GenericPositionError, LocateError,
                       _gap_rational, compute_topology)


# which relative homology sign is called "positive" (Definition-level
# convention; anchored so the separating quintic fixture splits into three
# negative ovals and one positive one)
_POSITIVE_CLASS = -1


@dataclass(frozen=True)
class ComponentOrientation:
    """Per-component direction relative to the stored walk order.

    The tuple is only defined up to reversing every flag at once (the two
    complex orientations)."""
    flags: tuple  # "forward" | "backward" per component index

    def flipped(self) -> "ComponentOrientation":
        flip = {"forward": "backward", "backward": "forward"}
        return ComponentOrientation(tuple(flip[f] for f in self.flags))

    def agrees_up_to_flip(self, other: "ComponentOrientation") -> bool:
        return self.flags == other.flags or self.flipped().flags == other.flags

    def sign(self, comp_index: int) -> int:
        return 1 if self.flags[comp_index] == "forward" else -1


@dataclass(frozen=True)
class OvalSign:
    """Per-oval flag for odd-degree curves; invariant under the global
    orientation flip."""
    signs: tuple  # (component index, "positive" | "negative") pairs

    def of(self, comp_index: int) -> str:
        for i, s in self.signs:
            if i == comp_index:
                return s
        raise KeyError(comp_index)

    def count(self, sign: str) -> int:
        return sum(1 for _, s in self.signs if s == sign)


@dataclass(frozen=True)
class TriangleWitness:
    distinguished_oval: int
    vertex_ovals: tuple       # the three oval component indices
    vertices: tuple           # interior witness points, original coordinates
    lines: tuple              # the three exact linear TernaryForms, original


@dataclass(frozen=True)
class QuinticVerdict:
    position: str                 # "convex" | "non-convex" | "inapplicable"
    separating_conclusion: str    # "separating" | "non-separating" | "unknown"
    triangle_witness: Optional[TriangleWitness] = None


class OrientationError(RuntimeError):
    """Raised when an orientation or sign cannot be extracted consistently."""


# ---------------------------------------------------------------------------
# induced orientation
# ---------------------------------------------------------------------------

def _sign_form_at(form: TernaryForm, xa: AlgebraicNumber,
                  y_num: UniPoly, y_den: UniPoly) -> int:
    """Exact sign of the dehomogenized form at the curve point
    (xa, y_num(xa)/y_den(xa))."""
    cols = form.dehomogenize().y_coefficients()
    deg = len(cols) - 1
    acc = UniPoly()
    num_pow = UniPoly([Q(1)])
    den_pows = [UniPoly([Q(1)])]
    for _ in range(deg):
        den_pows.append(den_pows[-1] * y_den)
    for j, cj in enumerate(cols):
        if not cj.is_zero():
            acc = acc + cj * num_pow * den_pows[deg - j]
        num_pow = num_pow * y_num
    s = xa.sign_of(acc)
    if deg % 2 == 1:
        s *= xa.sign_of(y_den)
    return s


def _walk_direction_map(component):
    return {(i, rank): direction for (i, rank, direction) in component.walk}


def _direction_signs_at(C, T, P, par):
    """{component: walk-direction sign of the parameter increase} at one
    regular parameter, checked for internal consistency."""
    sweep = T.sweep
    points, (y_num, y_den) = member_intersection_points(C, T, P, par)
    m = sweep.chart
    CT = C.transform(m)
    fT, gT = P.f.transform(m), P.g.transform(m)
    # lam = -g/f along the curve; d lam/dt has the sign of
    # -(W1*Fy - W2*Fx)/Fy along the tangent (1, y'), W = f grad(g) - g grad(f)
    w1 = fT.mul(gT.partial(0)).add(gT.mul(fT.partial(0)).scale(-1))
    w2 = fT.mul(gT.partial(1)).add(gT.mul(fT.partial(1)).scale(-1))
    fy = CT.partial(1)
    steep = w1.mul(fy).add(w2.mul(CT.partial(0)).scale(-1))
    walk_dirs = [_walk_direction_map(c) for c in T.components]
    out = {}
    for (comp, i, rank, xa) in points:
        s_steep = _sign_form_at(steep, xa, y_num, y_den)
        s_fy = _sign_form_at(fy, xa, y_num, y_den)
        if s_steep == 0 or s_fy == 0:
            raise GenericPositionError("degenerate direction sample")
        d_walk = walk_dirs[comp][(i, rank)]
        s = -d_walk * s_steep * s_fy
        if comp in out and out[comp] != s:
            raise OrientationError(
                "inconsistent motion direction on one component")
        out[comp] = s
    if len(out) != len(T.components):
        raise GenericPositionError("component missed by a regular member")
    return out


def induced_orientation(C: TernaryForm, T: CurveTopology, P: Pencil,
                        cert: TotalRealityCertificate) -> ComponentOrientation:
    """Orientation of every component pulled back from the parameter line
    through the certified pencil; cross-checked at two regular parameters."""
    if not cert.totally_real:
        raise PencilError("orientation requires a totally-real certificate")
    results = []
    last = None
    for par in regular_parameter_candidates(cert):
        try:
            results.append(_direction_signs_at(C, T, P, par))
        except (GenericPositionError, LocateError) as e:
            last = e
            continue
        if len(results) == 2:
            break
    if len(results) < 2:
        raise OrientationError(
            f"could not sample two regular parameters: {last}")
    if results[0] != results[1]:
        raise OrientationError("direction flags disagree between parameters")
    flags = tuple("forward" if results[0][i] > 0 else "backward"
                  for i in range(len(T.components)))
    return ComponentOrientation(flags)


# ---------------------------------------------------------------------------
# crossing bookkeeping along straight chart lines
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Crossing:
    component: int
    interval: int
    rank: int
    s: object            # AlgebraicNumber, line parameter
    s_low: object        # rational bounds with fixed sign
    s_high: object
    walk_dir: int
    det_sign: int        # sign of det(line direction, walk tangent)


def _line_restriction(CT: TernaryForm, pa: ProjectivePoint,
                      pb: ProjectivePoint) -> UniPoly:
    h = CT.restrict_to_line(pa, pb)
    if h.is_zero() or h.degree != CT.degree:
        raise GenericPositionError("line meets the curve at chart infinity")
    if h.gcd(h.derivative()).degree > 0:
        raise GenericPositionError("line tangent to the curve")
    return h


def _locate_on_line(sweep, pa, pb, h, iv):
    """(component, interval, rank) of the curve point at line parameter root
    iv of the squarefree restriction h."""
    dx = pb.x - pa.x
    dy = pb.y - pa.y
    if dx != 0:
        lo = pa.x + iv.low * dx
        hi = pa.x + iv.high * dx
        if iv.is_exact():
            xa = AlgebraicNumber.exact(lo)
        else:
            hx = h.compose_linear(1 / dx, -pa.x / dx)
            xa = AlgebraicNumber(hx.monic(), min(lo, hi), max(lo, hi))
        y_num = UniPoly([pa.y - pa.x * dy / dx, dy / dx])
        return sweep.locate(xa, y_num, UniPoly([Q(1)]))
    # vertical chart line: x is exactly rational, match the fiber rank by
    # interval refinement in y
    i, roots = sweep.fiber_at(pa.x)
    if iv.is_exact():
        yv = pa.y + iv.low * dy
        xa = AlgebraicNumber.exact(pa.x)
        return sweep.locate(xa, UniPoly([yv]), UniPoly([Q(1)]))
    q = sweep.p.eval_x(pa.x)
    cand = list(range(len(roots)))
    cur = iv
    for _ in range(256):
        ylo = pa.y + cur.low * dy
        yhi = pa.y + cur.high * dy
        if ylo > yhi:
            ylo, yhi = yhi, ylo
        alive = []
        for j in cand:
            r = roots[j]
            if not (r.high < ylo or yhi < r.low):
                alive.append(j)
        if len(alive) == 1:
            j = alive[0]
            return sweep.comp_of[(i, j)], i, j
        if not alive:
            raise LocateError("line root matches no fiber root")
        cand = alive
        cur = refine_interval(h, cur, cur.width() / 4)
        roots = [refine_interval(q, r, max(r.width() / 4, Q(0)))
                 if not r.is_exact() else r for r in roots]
    raise LocateError("could not separate fiber roots in y")


def _refine_off_zero(h, iv):
    while not iv.is_exact() and iv.low <= 0 <= iv.high:
        iv = refine_interval(h, iv, iv.width() / 4)
    return iv


def _line_crossings(T, CT, pa, pb):
    """All transverse crossings of the chart segment line through pa, pb with
    the curve, with exact location and orientation data."""
    sweep = T.sweep
    h = _line_restriction(CT, pa, pb)
    fy_line = CT.partial(1).restrict_to_line(pa, pb)
    dh = h.derivative()
    walk_dirs = [_walk_direction_map(c) for c in T.components]
    out = []
    for iv in isolate_roots(h):
        iv = _refine_off_zero(h, iv)
        comp, i, rank = _locate_on_line(sweep, pa, pb, h, iv)
        if iv.is_exact():
            sa = AlgebraicNumber.exact(iv.low)
        else:
            sa = AlgebraicNumber(h.monic(), iv.low, iv.high)
        s_fy = sa.sign_of(fy_line)
        s_dh = sa.sign_of(dh)
        if s_fy == 0:
            raise GenericPositionError("line crossing at a vertical tangent")
        if s_dh == 0:
            raise GenericPositionError("non-transverse line crossing")
        d_walk = walk_dirs[comp].get((i, rank))
        if d_walk is None:
            raise LocateError("crossing off the component walk")
        # det(line direction, walk tangent) = -walk_dir * h'(s) / Fy
        det_sign = -d_walk * s_dh * s_fy
        out.append(_Crossing(comp, i, rank, sa, iv.low, iv.high,
                             d_walk, det_sign))
    return out


# ---------------------------------------------------------------------------
# oval signs
# ---------------------------------------------------------------------------

def _relative_class(T, CT, oval_index: int, j_index: int,
                    orient: ComponentOrientation) -> int:
    """Sign c with [oval] = 2c[J] in the Moebius band around the oval,
    via signed crossings of a line through the oval's interior."""
    sweep = T.sweep
    comp = T.components[oval_index]
    px, py = comp.chart_witness
    pa = ProjectivePoint.affine(px, py)
    last = None
    for vx, vy in ((1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1),
                   (1, -2), (-2, 1), (3, 1), (1, 3)):
        pb = ProjectivePoint.affine(px + vx, py + vy)
        try:
            crossings = _line_crossings(T, CT, pa, pb)
        except (GenericPositionError, LocateError) as e:
            last = e
            continue
        i_oval = 0
        i_j = 0
        for c in crossings:
            sgn = c.det_sign
            positive_arm = c.s_low > 0
            if c.component == oval_index and positive_arm:
                i_oval += sgn
            if c.component == j_index:
                i_j += sgn if positive_arm else -sgn
        if abs(i_oval) != 1 or abs(i_j) != 1:
            raise OrientationError(
                f"degenerate crossing ledger: oval {i_oval}, J {i_j}")
        return (i_oval * orient.sign(oval_index)
                * i_j * orient.sign(j_index))
    raise OrientationError(f"no usable line direction: {last}")


def oval_signs(T: CurveTopology, orient: ComponentOrientation) -> OvalSign:
    """Positive/negative flags for the ovals of an odd-degree curve
    (Moebius-band homology comparison against twice the pseudo-line)."""
    if T.degree % 2 == 0:
        raise OrientationError("oval signs need an odd-degree curve")
    jl = T.pseudo_line()
    if jl is None:
        raise OrientationError("no pseudo-line present")
    if any(p is not None for p in T.nesting):
        raise OrientationError("sign convention for nested ovals unspecified")
    chart_form = T.sweep.G
    signs = []
    for comp in T.components:
        if comp.kind != "oval":
            continue
        c = _relative_class(T, chart_form, comp.index, jl.index, orient)
        signs.append((comp.index,
                      "positive" if c == _POSITIVE_CLASS else "negative"))
    return OvalSign(tuple(signs))


# ---------------------------------------------------------------------------
# quintic convex position
# ---------------------------------------------------------------------------

def _chart_line_form(pa: ProjectivePoint, pb: ProjectivePoint) -> TernaryForm:
    """Linear form vanishing on the chart line through two affine points."""
    a = pa.y - pb.y
    b = pb.x - pa.x
    c = pa.x * pb.y - pb.x * pa.y
    return TernaryForm(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})


def _region_class(l1, l2, l3, x, y):
    """Projective region label of a chart point: the sign vector of the three
    linear forms up to a simultaneous flip."""
    p = ProjectivePoint.affine(x, y)
    signs = tuple(1 if f.evaluate(p) > 0 else -1 if f.evaluate(p) < 0 else 0
                  for f in (l1, l2, l3))
    if 0 in signs:
        raise GenericPositionError("sample point on an arrangement line")
    if signs[0] < 0:
        signs = tuple(-s for s in signs)
    return signs


def _arc_sample(pa, pb, finite: bool, avoid_forms):
    """A rational point on the chosen arc of the line through pa, pb, off the
    other arrangement lines."""
    for t in ((Q(1, 2), Q(1, 3), Q(2, 3), Q(1, 5), Q(4, 5)) if finite
              else (Q(2), Q(-1), Q(3), Q(-2), Q(5))):
        x = pa.x + t * (pb.x - pa.x)
        y = pa.y + t * (pb.y - pa.y)
        p = ProjectivePoint.affine(x, y)
        if all(f.evaluate(p) != 0 for f in avoid_forms):
            return x, y
    raise GenericPositionError("no clean sample on the arc")


def _segment_side(T, chart_form, pa, pb, j_index):
    """Which arc of the chart line through pa, pb avoids the pseudo-line:
    'finite', 'infinite', or None when both arcs cross it."""
    crossings = _line_crossings(T, chart_form, pa, pb)
    finite_j = infinite_j = 0
    for c in crossings:
        if c.component != j_index:
            continue
        # refine until the crossing parameter is cleanly inside or outside
        # the unit parameter interval (endpoints are interior oval points,
        # never on the curve, so no crossing sits at 0 or 1)
        iv_low, iv_high, sa = c.s_low, c.s_high, c.s
        while not (iv_high < 0 or iv_low > 1 or (iv_low > 0 and iv_high < 1)):
            sa.refine()
            qi = sa.interval()
            iv_low, iv_high = qi.lo, qi.hi
        if iv_low > 0 and iv_high < 1:
            finite_j += 1
        else:
            infinite_j += 1
    if finite_j == 0:
        return "finite"
    if infinite_j == 0:
        return "infinite"
    return None


def _component_crossing_count(T, chart_form, pa, pb, comp_index):
    return sum(1 for c in _line_crossings(T, chart_form, pa, pb)
               if c.component == comp_index)


def non_convex_position(T: CurveTopology):
    """Decide Definition-level convex/non-convex position of the four ovals
    of a five-component quintic; returns (position, TriangleWitness|None)."""
    if T.degree != 5 or len(T.components) != 5:
        raise OrientationError("position defined for 5-component quintics")
    ovals = [c for c in T.components if c.kind == "oval"]
    if len(ovals) != 4:
        raise OrientationError("need exactly four ovals and a pseudo-line")
    if any(p is not None for p in T.nesting):
        raise OrientationError("position undefined for nested ovals")
    jl = T.pseudo_line()
    chart_form = T.sweep.G
    oval_pts = [_interior_points(T, ov) for ov in ovals]
    errors = []
    for dist in range(4):
        others = [o for o in range(4) if o != dist]
        settled = False
        err = None
        # the verdict does not depend on the interior points chosen, so the
        # first degeneracy-free witness tuple decides this configuration
        for combo in itertools.product(*(oval_pts[o] for o in others)):
            try:
                verdict = _try_triangle(T, chart_form, ovals, others, dist,
                                        combo, oval_pts[dist], jl.index)
            except (GenericPositionError, LocateError) as e:
                err = e
                continue
            settled = True
            break
        if settled and verdict is not None:
            return "non-convex", verdict
        if not settled:
            errors.append(err)
    if errors:
        # a degenerate configuration may have masked the triangle; refuse to
        # conclude convexity from an incomplete scan
        raise GenericPositionError(f"witness degeneracy: {errors[0]}")
    return "convex", None


def _interior_points(T, comp, limit: int = 3):
    """A few rational interior points of an oval, chart coordinates: the
    stored witness plus gap rationals below the oval's top branch over
    alternative x samples."""
    sweep = T.sweep
    out = [comp.chart_witness]
    by_interval = {}
    for (i, j) in comp.segments:
        by_interval.setdefault(i, []).append(j)
    for i in sorted(by_interval):
        if len(out) >= limit:
            break
        if len(by_interval[i]) < 2:
            continue
        lo, hi = sweep.segment_x_range(i)
        mid = simplest_rational_between(lo, hi)
        cands = [mid]
        if lo < mid:
            cands.append(simplest_rational_between(lo, mid))
        if mid < hi:
            cands.append(simplest_rational_between(mid, hi))
        for x in cands:
            if len(out) >= limit:
                break
            try:
                ii, roots = sweep.fiber_at(x)
            except LocateError:
                continue
            own = [j for j in range(len(roots))
                   if sweep.comp_of.get((ii, j)) == comp.index]
            if len(own) < 2:
                continue
            y = _gap_rational(sweep.p.eval_x(x), roots, own[-1] - 1, own[-1])
            if (x, y) not in out:
                out.append((x, y))
    return out


def _try_triangle(T, chart_form, ovals, others, dist, vertex_pts, dist_pts,
                  j_index):
    sweep = T.sweep
    a, b, c = [ProjectivePoint.affine(x, y) for (x, y) in vertex_pts]
    # degenerate witnesses: collinear interior points
    det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if det == 0:
        raise GenericPositionError("collinear interior witnesses")
    pairs = [(a, b), (b, c), (c, a)]
    forms = [_chart_line_form(p, q) for p, q in pairs]
    arcs = []
    for (p, q) in pairs:
        side = _segment_side(T, chart_form, p, q, j_index)
        if side is None:
            return None  # no segment avoiding the pseudo-line on this line
        arcs.append(side)
    # adjacency classes of the regions touching each selected arc
    candidates = None
    for idx, ((p, q), side) in enumerate(zip(pairs, arcs)):
        avoid = [forms[k] for k in range(3) if k != idx]
        x, y = _arc_sample(p, q, side == "finite", avoid)
        # the sample lies on line idx; the two regions adjacent across the
        # arc are its sign vector completed with either sign at slot idx
        pt = ProjectivePoint.affine(x, y)
        s_other = [1 if f.evaluate(pt) > 0 else -1
                   for k, f in enumerate(forms) if k != idx]
        pair = set()
        for s_own in (1, -1):
            vec = []
            it = iter(s_other)
            for k in range(3):
                vec.append(s_own if k == idx else next(it))
            if vec[0] < 0:
                vec = [-v for v in vec]
            pair.add(tuple(vec))
        candidates = pair if candidates is None else (candidates & pair)
    if not candidates or len(candidates) != 1:
        return None
    triangle_class = next(iter(candidates))
    dist_class = None
    for (wx, wy) in dist_pts:
        try:
            dist_class = _region_class(*forms, wx, wy)
            break
        except GenericPositionError:
            continue
    if dist_class is None:
        raise GenericPositionError("distinguished witness on every line")
    if dist_class != triangle_class:
        return None
    # the distinguished oval must avoid all three lines entirely
    for (p, q) in pairs:
        if _component_crossing_count(T, chart_form, p, q,
                                     ovals[dist].index) != 0:
            return None
    chart_inv = sweep.chart_inv
    return TriangleWitness(
        distinguished_oval=ovals[dist].index,
        vertex_ovals=tuple(ovals[o].index for o in others),
        vertices=tuple(sweep.to_original(p) for p in (a, b, c)),
        lines=tuple(f.transform(chart_inv) for f in forms))


def classify_quintic(C: TernaryForm, seed: int = 0) -> QuinticVerdict:
    """Smooth quintic classification through the convex-position criterion:
    non-convex ovals force a separating curve and conversely."""
    if C.degree != 5:
        raise ValueError("classification defined for quintics")
    T = compute_topology(C, seed)
    if len(T.components) != 5 or len(T.ovals()) != 4 \
            or any(p is not None for p in T.nesting):
        return QuinticVerdict("inapplicable", "unknown")
    position, witness = non_convex_position(T)
    conclusion = "separating" if position == "non-convex" else "non-separating"
    return QuinticVerdict(position, conclusion, witness)
