"""Moduli component counts for surfaces isogenous to a product of curves,
and the combinatorics of the branch curves of their bicanonical maps.

The core layers are importable directly: groups and their automorphisms
(:mod:`zfam.groups`), spherical systems of generators (:mod:`zfam.spherical`),
Hurwitz-orbit and component counting (:mod:`zfam.hurwitz`), numerical
invariants and multiplet bounds (:mod:`zfam.invariants`), and the
two-parameter family that ties them together (:mod:`zfam.family`).  The
service and CLI layers sit on top and share one set of request handlers.
"""

__version__ = "0.1.0"

from .errors import (
    BudgetExceededError,
    CapacityError,
    UsageError,
    ZfamError,
)
from .family import FamilyParams, MultipletReport, family_params, multiplet_report
from .groups import (
    ElementaryAbelianGroup,
    FiniteGroup,
    TableGroup,
    automorphisms,
    load_group,
    parse_group_spec,
)
from .hurwitz import (
    ComponentCount,
    OrbitResult,
    PairClassKey,
    count_components,
    find_ramification_structure,
    hurwitz_move,
    hurwitz_orbit,
    pair_class_key,
)
from .invariants import (
    BoundReport,
    BranchCurveInvariants,
    SurfaceInvariants,
    branch_curve_invariants,
    chisini_ok,
    chisini_threshold,
    main_theorem_counts,
    multiplet_bounds,
    plurigenus_dimension,
    surface_invariants,
)
from .spherical import (
    RamificationStructure,
    SphericalSystem,
    enumerate_spherical_systems,
    format_type,
    genus_from_type,
    make_ramification_structure,
    make_spherical_system,
    parse_type,
)

__all__ = [
    "BoundReport",
    "BranchCurveInvariants",
    "BudgetExceededError",
    "CapacityError",
    "ComponentCount",
    "ElementaryAbelianGroup",
    "FamilyParams",
    "FiniteGroup",
    "MultipletReport",
    "OrbitResult",
    "PairClassKey",
    "RamificationStructure",
    "SphericalSystem",
    "SurfaceInvariants",
    "TableGroup",
    "UsageError",
    "ZfamError",
    "__version__",
    "automorphisms",
    "branch_curve_invariants",
    "chisini_ok",
    "chisini_threshold",
    "count_components",
    "enumerate_spherical_systems",
    "family_params",
    "find_ramification_structure",
    "format_type",
    "genus_from_type",
    "hurwitz_move",
    "hurwitz_orbit",
    "load_group",
    "main_theorem_counts",
    "make_ramification_structure",
    "make_spherical_system",
    "multiplet_bounds",
    "multiplet_report",
    "parse_group_spec",
    "parse_type",
    "plurigenus_dimension",
    "surface_invariants",
]
