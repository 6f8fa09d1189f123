"""Shared session fixtures: the expensive certified objects are computed
once and reused across test modules."""

import pytest

from sepcurve import (build_pencil, certify_totally_real, compute_topology,
                      get_fixture)


@pytest.fixture(scope="session")
def sep_fixture():
    return get_fixture("separating-quintic")


@pytest.fixture(scope="session")
def convex_fixture():
    return get_fixture("convex-quintic")


@pytest.fixture(scope="session")
def sep_topology(sep_fixture):
    return compute_topology(sep_fixture.form)


@pytest.fixture(scope="session")
def convex_topology(convex_fixture):
    return compute_topology(convex_fixture.form)


@pytest.fixture(scope="session")
def quintic_pencil(sep_fixture):
    """Conic pencil through one marked point on each oval of the separating
    quintic (marked indices 1, 3, 5, 7)."""
    base = [sep_fixture.marked_points[i] for i in (1, 3, 5, 7)]
    return build_pencil(base, 2)


@pytest.fixture(scope="session")
def quintic_certificate(sep_fixture, quintic_pencil):
    return certify_totally_real(sep_fixture.form, quintic_pencil)


@pytest.fixture(scope="session")
def quintic_pencil_b(sep_fixture):
    """Second conic pencil with a distinct base configuration (marked
    indices 2, 4, 6, 8)."""
    base = [sep_fixture.marked_points[i] for i in (2, 4, 6, 8)]
    return build_pencil(base, 2)


@pytest.fixture(scope="session")
def quintic_certificate_b(sep_fixture, quintic_pencil_b):
    return certify_totally_real(sep_fixture.form, quintic_pencil_b)
