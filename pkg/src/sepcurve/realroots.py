"""Exact real-root isolation and counting for univariate rational polynomials.

Sturm sequences are computed over primitive integer coefficient lists with
content stripped at every step; all scalings are by positive integers so the
sign-variation property is preserved.  Interval endpoints are rationals;
exact rational roots collapse to point intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import Q, UniPoly

NEG_INF = None  # sentinel spelling for interval endpoints
POS_INF = None


# ---------------------------------------------------------------------------
# integer kernel
# ---------------------------------------------------------------------------

def _content(ints) -> int:
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return g or 1


def _primitive(ints):
    g = _content(ints)
    return [v // g for v in ints]


def _int_deriv(ints):
    return [i * c for i, c in enumerate(ints)][1:]


def _int_sign_at(ints, num: int, den: int) -> int:
    """Sign of p(num/den) for den > 0, via homogeneous Horner evaluation."""
    total = 0
    dpow = 1
    for c in reversed(ints):
        total = total * num + c * dpow
        dpow *= den
    return (total > 0) - (total < 0)


def _sign_at_q(ints, x: Fraction) -> int:
    return _int_sign_at(ints, x.numerator, x.denominator)


def _int_prem_neg(a, b):
    """Primitive -(a mod b) scaled by a positive constant (Sturm step)."""
    da, db = len(a) - 1, len(b) - 1
    lcb = b[-1]
    e = da - db + 1
    r = list(a)
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lcr = r[-1]
        s = dr - db
        r = [c * lcb for c in r]
        for j in range(db + 1):
            r[s + j] -= lcr * b[j]
        r = r[:dr]
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if not r:
        return []
    # r == lcb^k * (a mod b) with k = (da-db+1) - e; fix overall sign so the
    # result is a positive multiple of (a mod b), then negate.
    k = (da - db + 1) - e
    if lcb < 0 and k % 2 == 1:
        r = [-c for c in r]
    return _primitive([-c for c in r])


def _sturm_chain_int(ints):
    """Sturm chain of a primitive integer polynomial (itself not nec. squarefree:
    then the chain ends at a gcd-related element, still usable via quotients —
    callers pass squarefree input for counting)."""
    chain = [_primitive(ints)]
    d = _int_deriv(ints)
    if d:
        chain.append(_primitive(d))
    while len(chain) >= 2 and len(chain[-1]) > 0:
        nxt = _int_prem_neg(chain[-2], chain[-1])
        if not nxt:
            break
        chain.append(nxt)
    return chain


def _variations(signs) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _chain_variations_at(chain, x: Optional[Fraction], at_plus_inf=False) -> int:
    signs = []
    for ints in chain:
        if x is not None:
            signs.append(_sign_at_q(ints, x))
        else:
            lc = ints[-1]
            s = (lc > 0) - (lc < 0)
            if not at_plus_inf and (len(ints) - 1) % 2 == 1:
                s = -s
            signs.append(s)
    return _variations(signs)


# ---------------------------------------------------------------------------
# public surface
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SturmChain:
    """p, p', then negated (positively scaled, primitive) remainders."""

    polynomials: tuple

    @staticmethod
    def of(p: UniPoly) -> "SturmChain":
        if p.is_zero():
            raise ValueError("zero polynomial")
        chain = _sturm_chain_int(p.primitive_int_coeffs())
        return SturmChain(tuple(UniPoly.from_int_coeffs(c) for c in chain))

    def variations(self, x: Optional[Fraction], at_plus_inf=False) -> int:
        chain = [p.primitive_int_coeffs() for p in self.polynomials]
        return _chain_variations_at(chain, x, at_plus_inf)


def sign_at(p: UniPoly, x0) -> int:
    """Exact sign of p at a rational point."""
    if p.is_zero():
        return 0
    return _sign_at_q(p.primitive_int_coeffs(), Q(x0))


def square_free_part(p: UniPoly) -> UniPoly:
    """p / gcd(p, p'), monic."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return UniPoly.const(1)
    g = p.gcd(p.derivative())
    return p.exact_div(g).monic()


def squarefree_decomposition(p: UniPoly):
    """Yun decomposition: list of (factor, multiplicity), factors monic,
    pairwise coprime, product of factor^mult = p up to leading constant."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    out = []
    if p.degree == 0:
        return out
    dp = p.derivative()
    a = p.gcd(dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while True:
        if b.degree == 0:
            break
        a = b.gcd(d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def count_real_roots(p: UniPoly, interval=(None, None)) -> int:
    """Number of distinct real roots of p in the open interval (a, b);
    a = None means -inf, b = None means +inf."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return 0
    a, b = interval
    a = None if a is None else Q(a)
    b = None if b is None else Q(b)
    if a is not None and b is not None and a >= b:
        return 0
    sf = square_free_part(p)
    if sf.degree == 0:
        return 0
    ints = sf.primitive_int_coeffs()
    chain = _sturm_chain_int(ints)
    va = _chain_variations_at(chain, a, at_plus_inf=False)
    vb = _chain_variations_at(chain, b, at_plus_inf=True)
    n = va - vb  # roots in (a, b]
    if b is not None and _sign_at_q(ints, b) == 0:
        n -= 1
    return n


@dataclass(frozen=True)
class IsolatingInterval:
    """One distinct real root: low <= root <= high, low == high iff the root
    is the exact rational low."""

    low: Fraction
    high: Fraction
    multiplicity: int

    def is_exact(self) -> bool:
        return self.low == self.high

    def width(self) -> Fraction:
        return self.high - self.low

    def midpoint(self) -> Fraction:
        return (self.low + self.high) / 2

    def contains(self, x) -> bool:
        return self.low <= Q(x) <= self.high


def simplest_rational_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator (then numerator) in (lo, hi)."""
    lo, hi = Q(lo), Q(hi)
    if not lo < hi:
        raise ValueError("empty interval")

    def rec(a: Fraction, b: Fraction) -> Fraction:
        # simplest rational in the open interval (a, b), 0 <= a < b
        ia = a.numerator // a.denominator
        cand = Q(ia + 1)
        if cand < b:
            return cand
        fa, fb = a - ia, b - ia
        if fa == 0:
            # (0, fb): smallest n with 1/n < fb
            n = fb.denominator // fb.numerator + 1
            return ia + Q(1, n)
        return ia + 1 / rec(1 / fb, 1 / fa)

    if lo < 0 < hi:
        return Q(0)
    if hi <= 0:
        return -rec(-hi, -lo)
    return rec(lo, hi)


def _isolate_squarefree(sf: UniPoly):
    """Disjoint isolating intervals for all real roots of a squarefree poly."""
    ints = sf.primitive_int_coeffs()
    chain = _sturm_chain_int(ints)

    def count(a: Fraction, b: Fraction) -> int:
        va = _chain_variations_at(chain, a)
        vb = _chain_variations_at(chain, b)
        n = va - vb
        if _sign_at_q(ints, b) == 0:
            n -= 1
        return n  # roots in (a, b)

    bound = sf.cauchy_root_bound()
    out = []

    total = count(-bound, bound)
    stack = [(-bound, bound, total)]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        # try to snap to a simple rational root before bisecting
        r = simplest_rational_between(a, b)
        if _sign_at_q(ints, r) == 0:
            out.append((r, r))
            if n > 1:
                nl = count(a, r)
                stack.append((a, r, nl))
                stack.append((r, b, n - nl - 1))
            continue
        if n == 1:
            out.append((a, b))
            continue
        # bisect at the midpoint: guaranteed geometric progress even when
        # the roots sit far from the simple rationals of the interval
        m = (a + b) / 2
        if _sign_at_q(ints, m) == 0:
            out.append((m, m))
            nl = count(a, m)
            stack.append((a, m, nl))
            stack.append((m, b, n - nl - 1))
        else:
            nl = count(a, m)
            stack.append((a, m, nl))
            stack.append((m, b, n - nl))
    out.sort()
    # refine until pairwise disjoint (closed intervals)
    refined = [list(iv) for iv in out]
    for i in range(len(refined) - 1):
        while refined[i][1] >= refined[i + 1][0] and refined[i][0] != refined[i][1]:
            refined[i] = list(_refine_step(ints, chain, tuple(refined[i])))
            if refined[i][1] < refined[i + 1][0]:
                break
            if refined[i + 1][0] != refined[i + 1][1]:
                refined[i + 1] = list(_refine_step(ints, chain, tuple(refined[i + 1])))
    return [tuple(iv) for iv in refined]


def _refine_step(ints, chain, iv):
    a, b = iv
    if a == b:
        return iv
    m = (a + b) / 2
    sm = _sign_at_q(ints, m)
    if sm == 0:
        return (m, m)
    sa = _sign_at_q(ints, a)
    if sa == 0:
        # endpoint is a root of a *different* factor; perturb inward
        va = _chain_variations_at(chain, a)
        vm = _chain_variations_at(chain, m)
        n = va - vm - (1 if sm == 0 else 0)
        if n >= 1:
            return (a, m)
        return (m, b)
    if sa * sm < 0:
        return (a, m)
    return (m, b)


def isolate_roots(p: UniPoly):
    """Isolating intervals (with multiplicities) for all distinct real roots."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return []
    factors = squarefree_decomposition(p)
    if len(factors) == 1 and factors[0][1] == 1:
        return [IsolatingInterval(a, b, 1)
                for (a, b) in _isolate_squarefree(factors[0][0])]
    sf = UniPoly.const(1)
    for f, _m in factors:
        sf = sf * f
    raw = _isolate_squarefree(sf)
    # one Sturm chain per factor, reused across all isolated roots
    fdata = []
    for f, m in factors:
        ints = f.primitive_int_coeffs()
        fdata.append((m, ints, _sturm_chain_int(ints)))
    out = []
    for (a, b) in raw:
        mult = None
        for m, ints, chain in fdata:
            if a == b:
                if _sign_at_q(ints, a) == 0:
                    mult = m
                    break
            else:
                n = (_chain_variations_at(chain, a)
                     - _chain_variations_at(chain, b))
                if _sign_at_q(ints, b) == 0:
                    n -= 1
                if n == 1:
                    mult = m
                    break
        if mult is None:
            raise AssertionError("isolated root not matched to a squarefree factor")
        out.append(IsolatingInterval(a, b, mult))
    return out


def exact_rational_root(p: UniPoly, iv: IsolatingInterval,
                        denominator_bound: int = 1 << 20) -> Optional[Fraction]:
    """The rational root inside an isolating interval, if its denominator is
    at most the bound; None for irrational roots (decision is exact: any two
    rationals with denominators <= B differ by more than 1/B^2)."""
    if iv.is_exact():
        return iv.low
    tight = refine_interval(p, iv, Q(1, denominator_bound * denominator_bound))
    if tight.is_exact():
        return tight.low
    r = simplest_rational_between(tight.low, tight.high)
    if r.denominator <= denominator_bound and sign_at(p, r) == 0:
        return r
    return None


def refine_interval(p: UniPoly, iv: IsolatingInterval, max_width) -> IsolatingInterval:
    """Shrink an isolating interval to the requested width (exact roots pass
    through unchanged)."""
    if iv.is_exact():
        return iv
    sf = square_free_part(p)
    ints = sf.primitive_int_coeffs()
    chain = _sturm_chain_int(ints)
    a, b = iv.low, iv.high
    w = Q(max_width)
    while b - a > w:
        a, b = _refine_step(ints, chain, (a, b))
        if a == b:
            break
    return IsolatingInterval(a, b, iv.multiplicity)


# ---------------------------------------------------------------------------
# rational interval arithmetic + algebraic numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("inverted interval")

    @staticmethod
    def point(x) -> "QInterval":
        x = Q(x)
        return QInterval(x, x)

    def __add__(self, other):
        other = _qi(other)
        return QInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return QInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_qi(other))

    def __rsub__(self, other):
        return _qi(other) + (-self)

    def __mul__(self, other):
        other = _qi(other)
        vals = [self.lo * other.lo, self.lo * other.hi,
                self.hi * other.lo, self.hi * other.hi]
        return QInterval(min(vals), max(vals))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _qi(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval divisor straddles zero")
        vals = [self.lo / other.lo, self.lo / other.hi,
                self.hi / other.lo, self.hi / other.hi]
        return QInterval(min(vals), max(vals))

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def width(self) -> Fraction:
        return self.hi - self.lo

    def sign(self) -> Optional[int]:
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return None


def _qi(x) -> QInterval:
    if isinstance(x, QInterval):
        return x
    return QInterval.point(x)


def poly_interval(p: UniPoly, x: QInterval) -> QInterval:
    acc = QInterval.point(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


class AlgebraicNumber:
    """Real algebraic number: squarefree defining polynomial plus isolating
    interval with rational endpoints, refinable on demand."""

    __slots__ = ("poly", "lo", "hi", "_ints", "_chain")

    def __init__(self, poly: UniPoly, lo, hi):
        self.poly = poly
        self.lo = Q(lo)
        self.hi = Q(hi)
        self._ints = poly.primitive_int_coeffs()
        self._chain = None

    @staticmethod
    def exact(x) -> "AlgebraicNumber":
        x = Q(x)
        return AlgebraicNumber(UniPoly([-x, 1]), x, x)

    def is_exact(self) -> bool:
        return self.lo == self.hi

    def value(self) -> Fraction:
        if not self.is_exact():
            raise ValueError("not an exact rational")
        return self.lo

    def interval(self) -> QInterval:
        return QInterval(self.lo, self.hi)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self):
        if self.is_exact():
            return
        if self._chain is None:
            self._chain = _sturm_chain_int(self._ints)
        a, b = _refine_step(self._ints, self._chain, (self.lo, self.hi))
        self.lo, self.hi = a, b

    def refine_below(self, width):
        w = Q(width)
        while self.width() > w:
            self.refine()

    def sign_of(self, h: UniPoly) -> int:
        """Exact sign of h at this number.

        Interval evaluation first (cheap, resolves every nonzero sign after
        finitely many refinements); the gcd zero-test only runs when the
        interval stays undecided, so the answer is exact in all cases."""
        if h.is_zero():
            return 0
        if self.is_exact():
            return sign_at(h, self.lo)
        for _ in range(8):
            s = poly_interval(h, self.interval()).sign()
            if s is not None:
                return s
            self.refine()
        g = self.poly.gcd(h)
        if g.degree > 0 and count_real_roots(g, (self.lo, self.hi)) > 0:
            return 0
        while True:
            s = poly_interval(h, self.interval()).sign()
            if s is not None:
                return s
            self.refine()

    def compare_to(self, x) -> int:
        """Sign of (self - x) for rational x."""
        x = Q(x)
        if self.is_exact():
            v = self.lo
            return (v > x) - (v < x)
        return self.sign_of(UniPoly([-x, 1]))


def compare_algebraic(u: AlgebraicNumber, v: AlgebraicNumber) -> int:
    """Sign of u - v, exact (0 on equality).  May refine both arguments."""
    if u.is_exact():
        return -v.compare_to(u.lo)
    if v.is_exact():
        return u.compare_to(v.lo)
    g = u.poly.gcd(v.poly)
    # any root of g inside u's isolating interval *is* u (and likewise for v),
    # so a g-root in the intervals' intersection proves u == v
    while True:
        if g.degree > 0:
            lo, hi = max(u.lo, v.lo), min(u.hi, v.hi)
            if lo < hi and count_real_roots(g, (lo, hi)) > 0:
                return 0
        if u.hi <= v.lo:
            return -1
        if v.hi <= u.lo:
            return 1
        u.refine()
        v.refine()
        if u.is_exact() or v.is_exact():
            return compare_algebraic(u, v)
