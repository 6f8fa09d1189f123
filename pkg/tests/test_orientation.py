"""Induced orientations, oval signs, and the quintic position criterion."""

import pytest

from sepcurve import (OrientationError, TernaryForm, classify_quintic,
                      compute_topology, get_fixture, induced_orientation,
                      non_convex_position, oval_signs)

# smooth quintic with a single real branch (a pseudo-line): the position
# criterion does not apply
ONE_BRANCH_QUINTIC = TernaryForm(5, {(0, 5, 0): 1, (0, 1, 4): 1,
                                     (4, 0, 1): -1, (0, 0, 5): -1})


def test_orientation_deterministic(sep_fixture, sep_topology, quintic_pencil,
                                   quintic_certificate):
    a = induced_orientation(sep_fixture.form, sep_topology, quintic_pencil,
                            quintic_certificate)
    b = induced_orientation(sep_fixture.form, sep_topology, quintic_pencil,
                            quintic_certificate)
    assert a == b
    assert len(a.flags) == 5
    assert set(a.flags) <= {"forward", "backward"}
    assert a.flipped().flipped() == a
    assert a.agrees_up_to_flip(a.flipped())


def test_oval_signs_fixture(sep_fixture, sep_topology, quintic_pencil,
                            quintic_certificate):
    ori = induced_orientation(sep_fixture.form, sep_topology, quintic_pencil,
                              quintic_certificate)
    signs = oval_signs(sep_topology, ori)
    assert signs.count("negative") == 3
    assert signs.count("positive") == 1
    # invariant under the global flip
    assert oval_signs(sep_topology, ori.flipped()) == signs
    # the positive oval is the central one (contains the triangle interior)
    positive = [i for i, s in signs.signs if s == "positive"]
    _pos, witness = non_convex_position(sep_topology)
    assert positive == [witness.distinguished_oval]


def test_oval_signs_need_odd_degree():
    T = compute_topology(get_fixture("circle").form)
    with pytest.raises(OrientationError):
        oval_signs(T, None)


def test_non_convex_position_quintics(sep_topology, convex_topology):
    pos, wit = non_convex_position(sep_topology)
    assert pos == "non-convex"
    assert wit is not None
    assert len(wit.vertices) == 3
    assert len(wit.lines) == 3
    # each witness line vanishes on its two defining vertices
    order = [0, 1, 2, 0]
    for k, form in enumerate(wit.lines):
        assert form.degree == 1
        assert form.evaluate(wit.vertices[order[k]]) == 0
        assert form.evaluate(wit.vertices[order[k + 1]]) == 0

    pos, wit = non_convex_position(convex_topology)
    assert pos == "convex"
    assert wit is None


def test_position_rejects_wrong_shape():
    T = compute_topology(get_fixture("cubic-oval").form)
    with pytest.raises(OrientationError):
        non_convex_position(T)


def test_classify_quintics():
    v = classify_quintic(get_fixture("separating-quintic").form)
    assert (v.position, v.separating_conclusion) \
        == ("non-convex", "separating")
    assert v.triangle_witness is not None

    v = classify_quintic(get_fixture("convex-quintic").form)
    assert (v.position, v.separating_conclusion) \
        == ("convex", "non-separating")
    assert v.triangle_witness is None


def test_classify_inapplicable():
    v = classify_quintic(ONE_BRANCH_QUINTIC)
    assert (v.position, v.separating_conclusion) == ("inapplicable", "unknown")
    with pytest.raises(ValueError):
        classify_quintic(get_fixture("circle").form)
