"""Catalog of verified fixture curves.

Every fixture is an explicitly constructed smooth curve with a known real
topology.  The quintic fixtures are small perturbations of products of
lines and conics, corrected along two coordinate lines so that those
restrictions split into rational linear factors; the roots give exact
rational points ("marked points") lying on prescribed components.  All
stated topologies are re-verified by the test suite through
``compute_topology``.

Constructions:

* ``circle``, ``translated-circle``: smooth conics, one oval.
* ``cubic-oval`` y^2 z = x^3 - x z^2: oval + pseudo-line (M-curve, g = 1).
* ``cubic-no-oval`` y^2 z = x^3 + x z^2: pseudo-line only.
* ``harnack-quartic``: (x^2+2y^2-1)(2x^2+y^2-1) + 1/16 -> 4 ovals, no
  nesting (M-curve, g = 3).
* ``nested-quartic``: same product - 1/16 -> 2 nested ovals.
* ``three-oval-quartic``: harnack-quartic with one crescent destroyed by a
  biased perturbation -> 3 ovals.
* ``empty-quartic`` x^4 + y^4 + z^4: no real points.
* ``separating-quintic``: smoothing of (y+1)(3x-2y+4)(-3x-2y+4)(x^2+y^2-16)
  + 1; the small triangle sits inside the big circle, so the three
  vertex-cone regions and the triangle interior each spawn an oval: four
  ovals in non-convex position (the central oval lies inside the triangle
  spanned by the other three) plus a pseudo-line.
* ``convex-quintic``: smoothing of (y+4)(x^2+2y^2-4)(2x^2+y^2-4) + 1; the
  four crescents of the crossed ellipses give four ovals in convex
  position plus a low pseudo-line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import ProjectivePoint, Q, TernaryForm


@dataclass(frozen=True)
class Fixture:
    name: str
    form: TernaryForm
    description: str
    component_count: int
    has_pseudo_line: bool
    nested: bool
    # exact rational points on the curve, grouped per component; ovals carry
    # two marked points each where available
    marked_points: tuple = ()


def _form(degree: int, coeffs: dict) -> TernaryForm:
    return TernaryForm(degree, {k: Q(*v) if isinstance(v, tuple) else Q(v)
                                for k, v in coeffs.items()})


def _pts(pairs):
    return tuple(ProjectivePoint.affine(Q(*a), Q(*b)) for a, b in pairs)


_CIRCLE = _form(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -1})

_TRANSLATED_CIRCLE = _form(2, {(2, 0, 0): 1, (0, 2, 0): 1,
                               (1, 0, 1): -6, (0, 0, 2): (35, 4)})

_CUBIC_OVAL = _form(3, {(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): 1})

_CUBIC_NO_OVAL = _form(3, {(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): -1})

# (x^2 + 2y^2 - z^2)(2x^2 + y^2 - z^2) + z^4/16
_HARNACK_QUARTIC = _form(4, {
    (4, 0, 0): 2, (2, 2, 0): 5, (0, 4, 0): 2,
    (2, 0, 2): -3, (0, 2, 2): -3, (0, 0, 4): (17, 16)})

# (x^2 + 2y^2 - z^2)(2x^2 + y^2 - z^2) - z^4/16
_NESTED_QUARTIC = _form(4, {
    (4, 0, 0): 2, (2, 2, 0): 5, (0, 4, 0): 2,
    (2, 0, 2): -3, (0, 2, 2): -3, (0, 0, 4): (15, 16)})

# harnack-quartic plus the tilt y z^3/10, which outweighs the shallow north
# crescent but leaves the other three crescents intact
_THREE_OVAL_QUARTIC = _form(4, {
    (4, 0, 0): 2, (2, 2, 0): 5, (0, 4, 0): 2,
    (2, 0, 2): -3, (0, 2, 2): -3, (0, 0, 4): (17, 16),
    (0, 1, 3): (1, 10)})

_EMPTY_QUARTIC = _form(4, {(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1})

_SEPARATING_QUINTIC = _form(5, {
    (0, 0, 5): (-1978368, 7865),
    (0, 1, 4): (-26816, 7865),
    (0, 2, 3): (1641472, 7865),
    (0, 3, 2): (-501684, 7865),
    (0, 4, 1): (-784, 65),
    (0, 5, 0): 4,
    (2, 0, 3): (16509341, 103246),
    (2, 1, 2): 144,
    (2, 2, 1): -21,
    (2, 3, 0): -5,
    (4, 0, 1): (-929241, 103246),
    (4, 1, 0): -9})

_SEPARATING_QUINTIC_MARKED = _pts([
    # x = 0 restriction: pseudo-line, central oval (2), top oval (2)
    ((0, 1), (-4, 1)),
    ((0, 1), (-64, 65)), ((0, 1), (21, 11)),
    ((0, 1), (23, 11)), ((0, 1), (4, 1)),
    # y = -2 restriction: left oval (2), right oval (2)
    ((-24, 7), (-2, 1)), ((-19, 7), (-2, 1)),
    ((19, 7), (-2, 1)), ((24, 7), (-2, 1))])

_CONVEX_QUINTIC = _form(5, {
    (0, 0, 5): (14792, 231),
    (0, 1, 4): (721282, 45045),
    (0, 2, 3): (-305939, 6435),
    (0, 3, 2): (-108104, 9009),
    (0, 4, 1): (359081, 45045),
    (0, 5, 0): 2,
    (2, 0, 3): (-28938632, 600831),
    (2, 1, 2): -12,
    (2, 2, 1): 20,
    (2, 3, 0): 5,
    (4, 0, 1): (540800, 66759),
    (4, 1, 0): 2})

_CONVEX_QUINTIC_MARKED = _pts([
    # x = 0 restriction: pseudo-line, south crescent (2), north crescent (2)
    ((0, 1), (-4, 1)),
    ((0, 1), (-43, 22)), ((0, 1), (-13, 9)),
    ((0, 1), (10, 7)), ((0, 1), (129, 65)),
    # y = 0 restriction: west crescent (2), east crescent (2)
    ((-129, 65), (0, 1)), ((-17, 12), (0, 1)),
    ((17, 12), (0, 1)), ((129, 65), (0, 1))])


FIXTURES = {f.name: f for f in [
    Fixture("circle", _CIRCLE, "unit circle", 1, False, False),
    Fixture("translated-circle", _TRANSLATED_CIRCLE,
            "radius-1/2 circle centered at (3, 0)", 1, False, False),
    Fixture("cubic-oval", _CUBIC_OVAL,
            "y^2 = x^3 - x: oval plus pseudo-line", 2, True, False),
    Fixture("cubic-no-oval", _CUBIC_NO_OVAL,
            "y^2 = x^3 + x: pseudo-line only", 1, True, False),
    Fixture("harnack-quartic", _HARNACK_QUARTIC,
            "four ovals, no nesting (M-quartic)", 4, False, False),
    Fixture("nested-quartic", _NESTED_QUARTIC,
            "two nested ovals", 2, False, True),
    Fixture("three-oval-quartic", _THREE_OVAL_QUARTIC,
            "three ovals, no nesting", 3, False, False),
    Fixture("empty-quartic", _EMPTY_QUARTIC, "no real points", 0, False,
            False),
    Fixture("separating-quintic", _SEPARATING_QUINTIC,
            "pseudo-line + four ovals in non-convex position",
            5, True, False, _SEPARATING_QUINTIC_MARKED),
    Fixture("convex-quintic", _CONVEX_QUINTIC,
            "pseudo-line + four ovals in convex position",
            5, True, False, _CONVEX_QUINTIC_MARKED),
]}


def get_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; available: "
                       + ", ".join(sorted(FIXTURES)))
