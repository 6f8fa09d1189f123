"""Independent real-root-counting oracle for cross-checking the library.

Implements Descartes bisection (Vincent-Collins-Akritas) from scratch over
exact rationals, sharing no code with the package: squarefree reduction by
naive Euclidean gcd, a Cauchy root bound, and recursive counting on (0, 1)
via sign variations of the Moebius-transformed coefficient sequence."""

from fractions import Fraction


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _eval(c, x):
    acc = Fraction(0)
    for ci in reversed(c):
        acc = acc * x + ci
    return acc


def _deriv(c):
    return [i * ci for i, ci in enumerate(c)][1:]


def _polydiv(a, b):
    """(quotient, remainder) over Q."""
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and _trim(a):
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        q[shift] = factor
        for i, bi in enumerate(b):
            a[shift + i] -= factor * bi
        a = _trim(a) or [Fraction(0)]
        if len(a) < len(b):
            break
    return _trim(q), _trim(a)


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _polydiv(a, b)
        a, b = b, _trim(r)
    return a


def _squarefree(c):
    g = _gcd(c, _deriv(c))
    if len(g) <= 1:
        return c
    q, r = _polydiv(c, g)
    assert not r
    return q


def _variations(c):
    signs = [ci for ci in c if ci != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def _shift1(c):
    """p(x + 1) by repeated synthetic addition."""
    c = list(c)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += c[j + 1]
    return c


def _count01(c):
    """Distinct roots of squarefree c in the open interval (0, 1)."""
    half = Fraction(1, 2)
    if _eval(c, half) == 0:
        c, r = _polydiv(c, [-half, Fraction(1)])
        assert not r
        return 1 + _count01(c)
    # (1+x)^n p(1/(1+x)): roots in (0,1) <-> positive roots
    q = _shift1(list(reversed(c)))
    v = _variations(q)
    if v == 0:
        return 0
    if v == 1:
        return 1
    left = [ci * half ** i for i, ci in enumerate(c)]   # p(x/2)
    right = _shift1(left)                               # p((x+1)/2)
    return _count01(left) + _count01(right)


def count_distinct_real_roots(coeffs) -> int:
    """Number of distinct real roots of the integer/rational polynomial with
    ascending coefficients `coeffs`."""
    c = _trim([Fraction(x) for x in coeffs])
    if len(c) <= 1:
        if c:
            return 0
        raise ValueError("zero polynomial")
    c = _squarefree(c)
    if len(c) <= 1:
        return 0
    bound = 1 + max(abs(ci / c[-1]) for ci in c[:-1])
    b = Fraction(1)
    while b <= bound:
        b *= 2
    # map (-b, b) -> (0, 1): r(x) = p(-b + 2bx); roots strictly inside
    r = list(c)
    # compose p with (2b)x + (-b): Horner over linear polynomial
    acc = [Fraction(0)]
    for ci in reversed(c):
        # acc = acc*(2bx - b) + ci
        nxt = [Fraction(0)] * (len(acc) + 1)
        for i, ai in enumerate(acc):
            nxt[i] += ai * (-b)
            nxt[i + 1] += ai * (2 * b)
        nxt[0] += ci
        acc = nxt
    r = _trim(acc)
    return _count01(r)
