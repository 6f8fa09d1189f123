"""Exact-arithmetic topology of real plane curves and totally real pencils.

Submodules:

* ``algebra``: rational polynomial arithmetic, resultants, interpolation.
* ``realroots``: Sturm-based real root counting, isolation, refinement.
* ``topology``: certified sweep of the real locus (components, nesting).
* ``pencil``: pencils of curves, total-reality certification, degree
  partitions, base loci, pencil search.
* ``orientation``: complex orientations, oval signs, quintic classification.
* ``invariants``: Harnack/Gabard bounds, sepgon ranges, semigroup cones.
* ``catalog``: verified fixture curves.
* ``curvefile``: curve and certificate file formats.
* ``render``: SVG figures (presentational only).
* ``cli``: command-line entry point.
"""

from .algebra import ProjectivePoint, Q, TernaryForm, UniPoly
from .catalog import FIXTURES, Fixture, get_fixture
from .curvefile import (CurveDocument, CurveFileError, document_of_form,
                        load_curve, parse_certificate, parse_curve,
                        save_curve, serialize_certificate, serialize_curve,
                        serialize_pencil)
from .invariants import (SemigroupCone, check_partition_against_theory,
                         gabard_bound, genus_of_degree, harnack_bound,
                         m2_sepgon_range, semigroup_cones)
from .orientation import (ComponentOrientation, OrientationError, OvalSign,
                          QuinticVerdict, TriangleWitness, classify_quintic,
                          induced_orientation, non_convex_position,
                          oval_signs)
from .pencil import (DegreePartition, Pencil, PencilError, PencilParameter,
                     SearchOutcome, TotalRealityCertificate,
                     base_locus_on_curve, build_pencil, certify_totally_real,
                     degree_partition, intersect_member,
                     search_totally_real_pencil)
from .realroots import (AlgebraicNumber, IsolatingInterval, count_real_roots,
                        isolate_roots, refine_interval, sign_at,
                        square_free_part)
from .topology import (Component, CurveTopology, GenericPositionError,
                       SingularCurveError, check_smooth, compute_topology)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber", "Component", "ComponentOrientation", "CurveDocument",
    "CurveFileError", "CurveTopology", "DegreePartition", "FIXTURES",
    "Fixture", "GenericPositionError", "IsolatingInterval",
    "OrientationError", "OvalSign", "Pencil", "PencilError",
    "PencilParameter", "ProjectivePoint", "Q", "QuinticVerdict",
    "SearchOutcome", "SemigroupCone", "SingularCurveError", "TernaryForm",
    "TotalRealityCertificate", "TriangleWitness", "UniPoly",
    "base_locus_on_curve", "build_pencil", "certify_totally_real",
    "check_partition_against_theory", "check_smooth", "classify_quintic",
    "compute_topology", "count_real_roots", "degree_partition",
    "document_of_form", "gabard_bound", "genus_of_degree", "get_fixture",
    "harnack_bound", "induced_orientation", "intersect_member",
    "isolate_roots", "load_curve", "m2_sepgon_range", "non_convex_position",
    "oval_signs", "parse_certificate", "parse_curve", "refine_interval",
    "save_curve", "search_totally_real_pencil", "semigroup_cones",
    "serialize_certificate", "serialize_curve", "serialize_pencil",
    "sign_at", "square_free_part",
]
