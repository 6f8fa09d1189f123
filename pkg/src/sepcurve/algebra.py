"""Exact arithmetic foundation: rationals, univariate/bivariate polynomials,
homogeneous ternary forms, resultants and rational linear algebra.

All verdict-relevant computation in this package runs over Q.  Fractions are
used at the surface; determinant and resultant kernels clear denominators and
work over Z for speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction


def _as_q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------

class UniPoly:
    """Univariate polynomial over Q, coefficients stored by ascending degree.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    # -- basics ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Q(0)
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "UniPoly(" + " + ".join(terms) + ")"

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly([_as_q(c)])

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly([0, 1])

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Q(0)] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return UniPoly(a)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_q(other)
            return UniPoly([c * q for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Q(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quo = [Q(0)] * (dq + 1)
        oc = other.coeffs
        lc = oc[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(oc) - 1] / lc
            quo[k] = c
            if c:
                for j, b in enumerate(oc):
                    rem[k + j] -= c * b
        return UniPoly(quo), UniPoly(rem[: len(oc) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        x = _as_q(x)
        acc = Q(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, a, b) -> "UniPoly":
        """p(a*x + b) by Horner over UniPoly."""
        lin = UniPoly([_as_q(b), _as_q(a)])
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd via a primitive integer pseudo-remainder sequence
        (content-stripped at every step to control coefficient growth)."""
        if self.is_zero():
            return other.monic()
        if other.is_zero():
            return self.monic()
        a = self.primitive_int_coeffs()
        b = other.primitive_int_coeffs()
        if len(a) < len(b):
            a, b = b, a
        while True:
            if len(b) == 1:
                return UniPoly.const(1)
            # primitive pseudo-remainder of a by b
            r = list(a)
            lcb = b[-1]
            db = len(b) - 1
            while len(r) >= len(b):
                lcr = r[-1]
                s = len(r) - len(b)
                r = [c * lcb for c in r]
                for j in range(db + 1):
                    r[s + j] -= lcr * b[j]
                r.pop()
                while r and r[-1] == 0:
                    r.pop()
            if not r:
                return UniPoly.from_int_coeffs(b).monic()
            g = 0
            for v in r:
                g = math.gcd(g, v)
            a, b = b, [v // g for v in r]

    # -- integer normal form ----------------------------------------------

    def primitive_int_coeffs(self) -> list:
        """Primitive integer coefficient list (ascending) with positive lc.

        Returns [] for the zero polynomial.  The scaling factor is positive,
        so signs of values are preserved.
        """
        if self.is_zero():
            return []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        return [v // g for v in ints]

    @staticmethod
    def from_int_coeffs(ints: Sequence[int]) -> "UniPoly":
        return UniPoly([Q(v) for v in ints])

    def cauchy_root_bound(self) -> Fraction:
        """B with all real roots in (-B, B)."""
        if self.degree < 1:
            return Q(1)
        lc = abs(self.lc)
        m = max(abs(c) for c in self.coeffs[:-1])
        return Q(1) + m / lc


# ---------------------------------------------------------------------------
# integer determinant kernel (Bareiss)
# ---------------------------------------------------------------------------

def int_det_bareiss(m: list) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (pk * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def _unipoly_det_bareiss(m: list) -> UniPoly:
    """Bareiss determinant for a matrix of UniPoly entries (exact division)."""
    n = len(m)
    if n == 0:
        return UniPoly.const(1)
    m = [row[:] for row in m]
    sign = 1
    prev = UniPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return UniPoly()
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (pk * m[i][j] - mik * m[k][j]).exact_div(prev)
            m[i][k] = UniPoly()
        prev = pk
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------

def sylvester_matrix(p: Sequence, q: Sequence, zero, dp: int = None, dq: int = None):
    """Sylvester matrix with p's coefficient rows on top.

    ``p`` and ``q`` are coefficient sequences by ascending degree; ``dp``/``dq``
    override the formal degrees (entries beyond the actual degree are zero).
    """
    if dp is None:
        dp = len(p) - 1
    if dq is None:
        dq = len(q) - 1
    if dp < 0 or dq < 0:
        raise ValueError("zero polynomial has no resultant")
    pd = list(p) + [zero] * (dp + 1 - len(p))
    qd = list(q) + [zero] * (dq + 1 - len(q))
    n = dp + dq
    rows = []
    for i in range(dq):
        row = [zero] * n
        for j, c in enumerate(reversed(pd)):
            row[i + j] = c
        rows.append(row)
    for i in range(dp):
        row = [zero] * n
        for j, c in enumerate(reversed(qd)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant(p: UniPoly, q: UniPoly, dp: int = None, dq: int = None) -> Fraction:
    """Sylvester resultant of two rational polynomials.

    Sign convention: determinant of the Sylvester matrix with p's coefficient
    rows in the top block.  Res(y - a, y - b) = a - b.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("zero polynomial has no resultant")
    if dp is None:
        dp = p.degree
    if dq is None:
        dq = q.degree
    if dp == 0 and dq == 0:
        return Q(1)
    # clear denominators; det scales by (dp+dq)-homogeneity per row block
    ip, sp = _int_scaled(p.coeffs)
    iq, sq = _int_scaled(q.coeffs)
    m = sylvester_matrix(ip, iq, 0, dp, dq)
    d = int_det_bareiss(m)
    return Q(d) / (sp ** dq * sq ** dp)


def _int_scaled(coeffs):
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in coeffs], den


def resultant_upoly(p: Sequence[UniPoly], q: Sequence[UniPoly],
                    dp: int = None, dq: int = None) -> UniPoly:
    """Resultant in the outer variable of two polynomials whose coefficients
    are UniPoly in a second variable.  Same sign convention as ``resultant``."""
    if dp is None:
        dp = len(p) - 1
    if dq is None:
        dq = len(q) - 1
    m = sylvester_matrix(list(p), list(q), UniPoly(), dp, dq)
    return _unipoly_det_bareiss(m)


def discriminant(p: UniPoly):
    """(-1)^(n(n-1)/2) * Res(p, p') / lc(p); Disc(x^2 - 2) = 8."""
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(p, p.derivative(), n, n - 1)
    sgn = -1 if (n * (n - 1) // 2) % 2 else 1
    return sgn * r / p.lc


def _ylist_trim(f):
    f = list(f)
    while len(f) > 1 and f[-1].is_zero():
        f.pop()
    if not f or (len(f) == 1 and f[0].is_zero()):
        return [UniPoly()]
    return f


def _ylist_prem(a, b):
    """Pseudo remainder lc(b)^(deg a - deg b + 1) * a mod b for polynomials
    in y with UniPoly-in-x coefficients (ascending lists)."""
    a = _ylist_trim(a)
    b = _ylist_trim(b)
    da, db = len(a) - 1, len(b) - 1
    lcb = b[-1]
    e = da - db + 1
    r = a
    while not (len(r) == 1 and r[0].is_zero()) and len(r) - 1 >= db:
        dr = len(r) - 1
        lcr = r[-1]
        s = dr - db
        nr = [c * lcb for c in r]
        for j in range(db + 1):
            nr[s + j] = nr[s + j] - lcr * b[j]
        r = _ylist_trim(nr[:dr])  # top term cancels by construction
        e -= 1
    if e > 0:
        mult = _upow(lcb, e)
        r = [c * mult for c in r]
    return _ylist_trim(r)


def subresultant_prs(p: Sequence[UniPoly], q: Sequence[UniPoly]):
    """Subresultant PRS of two polynomials in y over Q[x].

    Polynomials are lists of UniPoly by ascending y-degree.  Returns the
    sequence starting with p, q; used downstream to read off the degree-1
    member for root matching.
    """
    a = _ylist_trim(list(p))
    b = _ylist_trim(list(q))
    if (len(a) - 1) < (len(b) - 1):
        a, b = b, a
    seq = [a, b]
    g = UniPoly.const(1)
    h = UniPoly.const(1)
    while True:
        a, b = seq[-2], seq[-1]
        if len(b) == 1 and b[0].is_zero():
            seq.pop()
            break
        d = (len(a) - 1) - (len(b) - 1)
        r = _ylist_prem(a, b)
        if len(r) == 1 and r[0].is_zero():
            break
        beta = g * _upow(h, d)
        if (d + 1) % 2 == 0:
            pass  # beta = (-1)^(d+1) g h^d = +g h^d
        else:
            beta = -beta
        r = [c.exact_div(beta) for c in r]
        seq.append(r)
        g = b[-1]
        if d >= 1:
            h = _upow(g, d).exact_div(_upow(h, d - 1)) if d > 1 else g
    return seq


def _upow(p: UniPoly, n: int) -> UniPoly:
    out = UniPoly.const(1)
    for _ in range(n):
        out = out * p
    return out


# ---------------------------------------------------------------------------
# projective points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProjectivePoint:
    """Point of P^2(Q), stored with the last nonzero coordinate scaled to 1."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __init__(self, x, y, z):
        x, y, z = _as_q(x), _as_q(y), _as_q(z)
        if x == 0 and y == 0 and z == 0:
            raise ValueError("all-zero coordinates do not define a point")
        for last in (z, y, x):
            if last != 0:
                x, y, z = x / last, y / last, z / last
                break
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @staticmethod
    def affine(x, y) -> "ProjectivePoint":
        return ProjectivePoint(x, y, 1)

    def coords(self):
        return (self.x, self.y, self.z)

    def is_affine(self) -> bool:
        return self.z != 0

    def transform(self, m) -> "ProjectivePoint":
        v = self.coords()
        out = [sum(m[i][j] * v[j] for j in range(3)) for i in range(3)]
        return ProjectivePoint(*out)


def transform_inverse(m):
    """Inverse of a 3x3 rational matrix."""
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0:
        raise ValueError("singular transform")
    adj = [
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ]
    return [[Q(v) / det for v in row] for row in adj]


# ---------------------------------------------------------------------------
# ternary forms
# ---------------------------------------------------------------------------

def monomial_exponents(k: int):
    """Exponent triples (a, b, c) with a+b+c = k, lexicographic."""
    out = []
    for a in range(k, -1, -1):
        for b in range(k - a, -1, -1):
            out.append((a, b, k - a - b))
    return out


class TernaryForm:
    """Homogeneous form of degree d in (x, y, z) with rational coefficients,
    stored sparsely as {(a, b, c): coefficient}."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        clean = {}
        for exps, c in coeffs.items():
            c = _as_q(c)
            if c == 0:
                continue
            a, b, cc = exps
            if a < 0 or b < 0 or cc < 0 or a + b + cc != degree:
                raise ValueError(f"exponent triple {exps} does not sum to {degree}")
            clean[(a, b, cc)] = c
        if not clean:
            raise ValueError("zero form is not a valid TernaryForm")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *a):
        raise AttributeError("TernaryForm is immutable")

    def __eq__(self, other):
        if isinstance(other, TernaryForm):
            return self.degree == other.degree and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        terms = []
        for exps in sorted(self.coeffs, reverse=True):
            c = self.coeffs[exps]
            a, b, cc = exps
            terms.append(f"{c}*x^{a}*y^{b}*z^{cc}")
        return "TernaryForm(" + " + ".join(terms) + ")"

    # -- evaluation & calculus --------------------------------------------

    def evaluate(self, p: ProjectivePoint) -> Fraction:
        x, y, z = p.coords()
        total = Q(0)
        for (a, b, c), coef in self.coeffs.items():
            total += coef * x ** a * y ** b * z ** c
        return total

    def partial(self, var: int) -> "TernaryForm":
        out = {}
        for (a, b, c), coef in self.coeffs.items():
            e = (a, b, c)[var]
            if e == 0:
                continue
            ne = list((a, b, c))
            ne[var] -= 1
            key = tuple(ne)
            out[key] = out.get(key, Q(0)) + e * coef
        if not out:
            raise ValueError("partial derivative vanishes identically")
        return TernaryForm(self.degree - 1, out)

    def scale(self, s) -> "TernaryForm":
        s = _as_q(s)
        return TernaryForm(self.degree, {e: c * s for e, c in self.coeffs.items()})

    def add(self, other: "TernaryForm") -> "TernaryForm":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Q(0)) + c
        return TernaryForm(self.degree, out)

    def mul(self, other: "TernaryForm") -> "TernaryForm":
        out = {}
        for (a1, b1, c1), v1 in self.coeffs.items():
            for (a2, b2, c2), v2 in other.coeffs.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, Q(0)) + v1 * v2
        return TernaryForm(self.degree + other.degree, out)

    def transform(self, m) -> "TernaryForm":
        """Substitute variables by the linear forms of a 3x3 matrix m
        (new form G with G(v) = F(m @ v))."""
        lin = []
        for j in range(3):
            keys = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
            lin.append({keys[i]: m[j][i] for i in range(3) if m[j][i] != 0})
        # lin[j] is the linear ternary polynomial substituted for variable j
        out = {}
        for (a, b, c), coef in self.coeffs.items():
            term = {(0, 0, 0): coef}
            for var, e in ((0, a), (1, b), (2, c)):
                for _ in range(e):
                    nxt = {}
                    for k1, v1 in term.items():
                        for k2, v2 in lin[var].items():
                            key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                            nxt[key] = nxt.get(key, Q(0)) + v1 * v2
                    term = nxt
            for k, v in term.items():
                out[k] = out.get(k, Q(0)) + v
        return TernaryForm(self.degree, out)

    def clear_denominators(self) -> "TernaryForm":
        den = 1
        for c in self.coeffs.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = {e: int(c * den) for e, c in self.coeffs.items()}
        g = 0
        for v in ints.values():
            g = math.gcd(g, v)
        return TernaryForm(self.degree, {e: Q(v, g) for e, v in ints.items()})

    # -- chart restrictions -----------------------------------------------

    def dehomogenize(self) -> "BiPoly":
        """Affine chart z = 1: polynomial in (x, y)."""
        out = {}
        for (a, b, _c), coef in self.coeffs.items():
            key = (a, b)
            out[key] = out.get(key, Q(0)) + coef
        return BiPoly(out)

    def infinity_restriction(self) -> UniPoly:
        """F(1, t, 0) as a polynomial in t = y/x.

        Together with the y-leading coefficient F(0, 1, 0) this captures the
        binary form F(x, y, 0)."""
        out = [Q(0)] * (self.degree + 1)
        for (a, b, c), coef in self.coeffs.items():
            if c == 0:
                out[b] += coef
        return UniPoly(out)

    def coefficient_of_y(self) -> Fraction:
        """Coefficient of y^degree, i.e. F(0, 1, 0)."""
        return self.coeffs.get((0, self.degree, 0), Q(0))

    def restrict_to_line(self, p0: ProjectivePoint, p1: ProjectivePoint) -> UniPoly:
        """F restricted to the parametrized line s -> p0 + s*(p1 - p0) in the
        affine chart (both points affine); univariate in s."""
        if not (p0.is_affine() and p1.is_affine()):
            raise ValueError("line parametrization needs affine endpoints")
        xs = UniPoly([p0.x, p1.x - p0.x])
        ys = UniPoly([p0.y, p1.y - p0.y])
        total = UniPoly()
        for (a, b), coef in self.dehomogenize().coeffs.items():
            term = UniPoly.const(coef)
            for _ in range(a):
                term = term * xs
            for _ in range(b):
                term = term * ys
            total = total + term
        return total


class BiPoly:
    """Bivariate polynomial over Q in (x, y); internal elimination carrier."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict):
        clean = {}
        for (i, j), c in coeffs.items():
            c = _as_q(c)
            if c != 0:
                clean[(i, j)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *a):
        raise AttributeError("BiPoly is immutable")

    def is_zero(self):
        return not self.coeffs

    def deg_x(self):
        return max((i for i, _ in self.coeffs), default=-1)

    def deg_y(self):
        return max((j for _, j in self.coeffs), default=-1)

    def y_coefficients(self, formal_deg: int = None) -> list:
        """List of UniPoly in x, index = power of y."""
        dy = self.deg_y() if formal_deg is None else formal_deg
        dx = self.deg_x()
        cols = [[Q(0)] * (dx + 1) for _ in range(dy + 1)]
        for (i, j), c in self.coeffs.items():
            cols[j][i] = c
        return [UniPoly(col) for col in cols]

    def eval_x(self, x0) -> UniPoly:
        """Substitute x = x0; univariate in y."""
        x0 = _as_q(x0)
        out = {}
        for (i, j), c in self.coeffs.items():
            out[j] = out.get(j, Q(0)) + c * x0 ** i
        dy = max(out, default=-1)
        return UniPoly([out.get(j, Q(0)) for j in range(dy + 1)])

    def eval_y(self, y0) -> UniPoly:
        y0 = _as_q(y0)
        out = {}
        for (i, j), c in self.coeffs.items():
            out[i] = out.get(i, Q(0)) + c * y0 ** j
        dx = max(out, default=-1)
        return UniPoly([out.get(i, Q(0)) for i in range(dx + 1)])

    def eval_point(self, x0, y0) -> Fraction:
        return self.eval_x(x0)(y0)

    def partial_x(self) -> "BiPoly":
        return BiPoly({(i - 1, j): i * c for (i, j), c in self.coeffs.items() if i})

    def partial_y(self) -> "BiPoly":
        return BiPoly({(i, j - 1): j * c for (i, j), c in self.coeffs.items() if j})


# ---------------------------------------------------------------------------
# rational matrices
# ---------------------------------------------------------------------------

class RationalMatrix:
    """Dense matrix over Q with exact rank and kernel."""

    def __init__(self, entries: Sequence[Sequence]):
        self.entries = [[_as_q(v) for v in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    def rank(self) -> int:
        """Exact rank via fraction-free (Bareiss) elimination over Z."""
        if self.rows == 0 or self.cols == 0:
            return 0
        m = []
        for row in self.entries:
            den = 1
            for v in row:
                den = den * v.denominator // math.gcd(den, v.denominator)
            m.append([int(v * den) for v in row])
        rank = 0
        prev = 1
        r = 0
        for c in range(self.cols):
            piv = None
            for i in range(r, self.rows):
                if m[i][c] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            pk = m[r][c]
            for i in range(r + 1, self.rows):
                mic = m[i][c]
                for j in range(c + 1, self.cols):
                    m[i][j] = (pk * m[i][j] - mic * m[r][j]) // prev
                m[i][c] = 0
            prev = pk
            r += 1
            rank += 1
            if r == self.rows:
                break
        return rank

    def kernel(self) -> list:
        """Basis of the right kernel as lists of Fractions."""
        m = [row[:] for row in self.entries]
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            piv = None
            for i in range(r, rows):
                if m[i][c] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            pv = m[r][c]
            m[r] = [v / pv for v in m[r]]
            for i in range(rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        free = [c for c in range(cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [Q(0)] * cols
            v[fc] = Q(1)
            for i, pc in enumerate(pivots):
                v[pc] = -m[i][fc]
            basis.append(v)
        return basis

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        den = Q(1)
        m = []
        for row in self.entries:
            d = 1
            for v in row:
                d = d * v.denominator // math.gcd(d, v.denominator)
            den *= d
            m.append([int(v * d) for v in row])
        return Q(int_det_bareiss(m)) / den


def rank(m: RationalMatrix) -> int:
    return m.rank()


# ---------------------------------------------------------------------------
# interpolation
# ---------------------------------------------------------------------------

def evaluation_matrix(points: Sequence[ProjectivePoint], k: int) -> RationalMatrix:
    monos = monomial_exponents(k)
    rows = []
    for p in points:
        x, y, z = p.coords()
        rows.append([x ** a * y ** b * z ** c for (a, b, c) in monos])
    return RationalMatrix(rows) if rows else RationalMatrix([[Q(0)] * len(monos)])


def interpolation_space(points: Sequence[ProjectivePoint], k: int) -> list:
    """Basis of the space of degree-k forms vanishing at all given points."""
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    monos = monomial_exponents(k)
    if not pts:
        return [TernaryForm(k, {m: 1}) for m in monos]
    kern = evaluation_matrix(pts, k).kernel()
    basis = []
    for v in kern:
        coeffs = {m: c for m, c in zip(monos, v) if c != 0}
        basis.append(TernaryForm(k, coeffs))
    return basis


def evaluate(f: TernaryForm, p: ProjectivePoint) -> Fraction:
    return f.evaluate(p)
