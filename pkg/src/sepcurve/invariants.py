"""Closed-form bounds and separating-semigroup arithmetic.

Everything here is desk arithmetic: the Harnack component bound, the Gabard
degree bound for separating morphisms, the two-value separating-gonality
range for (M-2)-curves, and the lattice cones known to be contained in the
separating semigroup of such curves.  The cone list depends on which of the
two gonality cases holds; when unknown, only the common cone is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .pencil import DegreePartition
from .topology import CurveTopology


def genus_of_degree(d: int) -> int:
    """Genus of a smooth plane curve of degree d."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return (d - 1) * (d - 2) // 2


def harnack_bound(d: int) -> int:
    """Maximal number of real components of a smooth degree-d curve: g + 1."""
    return genus_of_degree(d) + 1


def gabard_bound(g: int, l: int) -> int:
    """Least upper bound ceil((g + l + 1)/2) for the degree of some
    separating morphism on a separating curve of genus g with l real
    components."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    if not 1 <= l <= g + 1:
        raise ValueError(f"component count {l} outside 1..g+1 = {g + 1}")
    return -((g + l + 1) // -2)


def m2_sepgon_range(g: int) -> frozenset:
    """Separating gonality of an (M-2)-curve of genus g: always g-1 or g."""
    if g < 2:
        raise ValueError("(M-2)-curves need genus >= 2")
    return frozenset({g - 1, g})


@dataclass(frozen=True)
class SemigroupCone:
    """Translated lattice anchor + N^l inside the separating semigroup."""
    anchor: tuple

    def __post_init__(self):
        if len(self.anchor) < 1 or any(a < 1 for a in self.anchor):
            raise ValueError("anchor entries must be positive")

    @property
    def length(self) -> int:
        return len(self.anchor)

    def membership(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.length:
            raise ValueError(
                f"vector length {len(v)} != cone length {self.length}")
        return all(vi >= ai for vi, ai in zip(v, self.anchor))

    def doubled(self) -> "SemigroupCone":
        return SemigroupCone(tuple(2 * a for a in self.anchor))


def semigroup_cones(g: int, sepgon_case: str = "unknown"):
    """Cones contained in the separating semigroup of an (M-2)-curve of
    genus g (l = g - 1 components), by gonality case.

    The unconditional cone is (4,3,...,3)+N^(g-1); gonality g-1 adds
    (3,...,3)+N^(g-1) and gonality g adds (4,2,...,2)+N^(g-1)."""
    if g < 3:
        raise ValueError("cone statements need genus >= 3")
    l = g - 1
    cones = [SemigroupCone((4,) + (3,) * (l - 1))]
    if sepgon_case == "unknown":
        return cones
    if sepgon_case == "g-1":
        return cones + [SemigroupCone((3,) * l)]
    if sepgon_case == "g":
        return cones + [SemigroupCone((4,) + (2,) * (l - 1))]
    raise ValueError("sepgon_case must be 'g-1', 'g', or 'unknown'")


@dataclass(frozen=True)
class ConsistencyReport:
    """Report-only reconciliation of an observed degree partition with the
    closed-form theory; flags list violated constraints, cone memberships
    are informational either way."""
    partition: tuple
    total: int
    flags: tuple            # human-readable violation strings
    cone_membership: tuple  # (cone anchor, bool) pairs

    @property
    def consistent(self) -> bool:
        return not self.flags


def check_partition_against_theory(T: CurveTopology,
                                   dp: DegreePartition) -> ConsistencyReport:
    """Reconcile one observed degree partition with the bounds: coverage of
    every component, the gonality range, and (for 5-component quintics) the
    parity pattern of degree-6 separating morphisms.  Cone memberships are
    reported, never asserted: the cones are contained in the semigroup, they
    do not exhaust it."""
    entries = tuple(dp.entries)
    l = len(T.components)
    total = sum(entries)
    flags = []
    if len(entries) != l:
        flags.append(f"partition length {len(entries)} != {l} components")
    if any(e < 1 for e in entries):
        flags.append("zero entry: some real component is not covered")
    if total < l:
        flags.append(f"total degree {total} below component count {l}")
    g = genus_of_degree(T.degree)
    if T.degree == 5 and l == 5:
        # (M-2)-quintic: gonality is exactly 6, so a sum-5 morphism cannot
        # exist and a sum-6 one restricts with degree two on exactly one of
        # pseudo-line/positive oval and odd degree elsewhere
        if total == 5:
            flags.append("sum 5 contradicts separating gonality 6")
        if total == 6:
            evens = [e for e in entries if e % 2 == 0]
            if evens != [2]:
                flags.append("degree-6 partition must be one 2 and four odds")
    membership = []
    if l == g - 1:
        # gonality case is only pinned for 5-component quintics (case g);
        # otherwise stick to the unconditional cone
        case = "g" if (T.degree == 5 and l == 5) else "unknown"
        for cone in semigroup_cones(g, case):
            ok = (len(entries) == cone.length) and cone.membership(entries)
            membership.append((cone.anchor, ok))
    return ConsistencyReport(entries, total, tuple(flags), tuple(membership))
