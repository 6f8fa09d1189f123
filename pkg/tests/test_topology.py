"""Certified real topology against the shipped catalog and classical
constraints."""

import pytest

from sepcurve import (AlgebraicNumber, FIXTURES, Q, SingularCurveError,
                      TernaryForm, UniPoly, check_smooth, compute_topology,
                      get_fixture)

# frozen census: (components, ovals, pseudo-line, any nesting)
CENSUS = {
    "circle": (1, 1, False, False),
    "translated-circle": (1, 1, False, False),
    "cubic-oval": (2, 1, True, False),
    "cubic-no-oval": (1, 0, True, False),
    "harnack-quartic": (4, 4, False, False),
    "nested-quartic": (2, 2, False, True),
    "three-oval-quartic": (3, 3, False, False),
    "empty-quartic": (0, 0, False, False),
    "separating-quintic": (5, 4, True, False),
    "convex-quintic": (5, 4, True, False),
}

# marked-point component grouping per quintic fixture: indices that must lie
# on one common component, listed per component, pseudo-line first
GROUPS = [(0,), (1, 2), (3, 4), (5, 6), (7, 8)]

_TOPO = {}


def _topo(name, seed=0):
    key = (name, seed)
    if key not in _TOPO:
        _TOPO[key] = compute_topology(get_fixture(name).form, seed)
    return _TOPO[key]


def test_every_fixture_is_smooth():
    for name, fx in FIXTURES.items():
        assert bool(check_smooth(fx.form)), name


@pytest.mark.parametrize("name", sorted(CENSUS))
def test_catalog_census(name):
    fx = get_fixture(name)
    T = _topo(name)
    comps, ovals, pl, nested = CENSUS[name]
    assert len(T.components) == comps == fx.component_count
    assert len(T.ovals()) == ovals
    assert (T.pseudo_line() is not None) == pl == fx.has_pseudo_line
    assert any(p is not None for p in T.nesting) == nested == fx.nested
    # Harnack-Klein
    assert comps <= T.genus + 1
    if name == "harnack-quartic":
        assert comps == T.genus + 1
    # parity of kinds
    if T.degree % 2 == 1 and comps:
        assert sum(1 for c in T.components if c.kind == "pseudo-line") == 1
    else:
        assert all(c.kind == "oval" for c in T.components)


def test_witnesses_lie_where_claimed():
    for name, fx in FIXTURES.items():
        T = _topo(name)
        for comp in T.components:
            # witnesses are off the curve (interior/adjacent points)
            assert fx.form.evaluate(comp.witness) != 0
            if comp.kind == "oval":
                x, y = comp.chart_witness
                assert T.sweep.point_in_component(comp.index, x, y)


@pytest.mark.parametrize("name",
                         ["separating-quintic", "convex-quintic"])
def test_marked_points_grouping(name):
    fx = get_fixture(name)
    T = _topo(name)
    sweep = T.sweep
    located = []
    for pt in fx.marked_points:
        assert fx.form.evaluate(pt) == 0
        q = sweep.from_original(pt)
        assert q.is_affine()
        comp, _i, _rank = sweep.locate(AlgebraicNumber.exact(q.x),
                                       UniPoly([q.y]), UniPoly([Q(1)]))
        located.append(comp)
    comps_per_group = []
    for group in GROUPS:
        vals = {located[i] for i in group}
        assert len(vals) == 1, f"group {group} split across components"
        comps_per_group.append(vals.pop())
    assert len(set(comps_per_group)) == len(GROUPS)
    assert T.components[comps_per_group[0]].kind == "pseudo-line"
    for ci in comps_per_group[1:]:
        assert T.components[ci].kind == "oval"


def test_nesting_forest_shape():
    T = _topo("nested-quartic")
    parents = [p for p in T.nesting]
    inner = [i for i, p in enumerate(parents) if p is not None]
    assert len(inner) == 1
    outer = parents[inner[0]]
    assert T.nesting[outer] is None


def test_singular_rejected():
    nodal = TernaryForm(3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1,
                            (1, 1, 1): -3})
    assert not bool(check_smooth(nodal))
    with pytest.raises(SingularCurveError):
        compute_topology(nodal)


@pytest.mark.parametrize("name", ["circle", "cubic-oval", "harnack-quartic"])
def test_seed_invariant_census(name):
    fx = get_fixture(name)
    base = None
    for seed in (0, 1, 2):
        T = _topo(name, seed)
        census = sorted(c.kind for c in T.components)
        if base is None:
            base = census
        assert census == base


def test_component_walks_close():
    T = _topo("harnack-quartic")
    for comp in T.components:
        walk = comp.walk
        assert len(walk) >= 2
        segs = {(i, r) for (i, r, _d) in walk}
        assert segs == set(comp.segments)
