"""The (Z/2)^k family: parameters, component counts, and multiplet reports.

For k >= 2 and l > 2k the family member carries branching types
(2^{k(k+1)}, 2^{4 + 2^{l-k+1}}) with

    chi = 2^{l-3} (k^2 + k - 4),
    g1 - 1 = 2^{k-2} (k^2 + k - 4),
    g2 - 1 = 2^{l-1},
    epsilon = l/k - 2.

The second type's length grows doubly exponentially in l, so parameters
store lengths as integers and only materialize entry tuples below
MATERIALIZE_CAP.  Component counting degrades gracefully: exact when the
workload fits the budget, budget-limited when the counter refuses, and
formula-only when the types cannot even be materialized; the last two
carry the lower bound 2^(chi^(1/(2+epsilon))) instead of an exact count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError, UsageError, ZfamError
from .groups import ElementaryAbelianGroup
from .hurwitz import count_components, find_ramification_structure
from .invariants import (
    BoundReport,
    BranchCurveInvariants,
    SurfaceInvariants,
    branch_curve_invariants,
    chisini_threshold,
    main_theorem_counts,
    multiplet_bounds,
    plurigenus_dimension,
)

__all__ = [
    "MATERIALIZE_CAP",
    "FamilyParams",
    "family_params",
    "family_component_count",
    "WitnessSide",
    "MultipletReport",
    "multiplet_report",
]

MATERIALIZE_CAP = 1_000_000


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of one family member; type lengths stay symbolic."""

    k: int
    l: int
    r1: int
    r2: int
    chi: int
    epsilon: Fraction
    g1: int
    g2: int

    @property
    def tau1_string(self) -> str:
        return f"2^{self.r1}"

    @property
    def tau2_string(self) -> str:
        return f"2^{self.r2}"

    def tau1_tuple(self) -> tuple[int, ...]:
        return (2,) * self.r1

    def tau2_tuple(self) -> tuple[int, ...]:
        if self.r2 > MATERIALIZE_CAP:
            raise UsageError(f"type 2^{self.r2} exceeds the materialization cap {MATERIALIZE_CAP}")
        return (2,) * self.r2


def family_params(k: int, l: int) -> FamilyParams:
    """Validated parameters for the (k, l) family member."""
    if k < 2:
        raise UsageError(f"k must be >= 2, got {k}")
    if l <= 2 * k:
        raise UsageError(f"l must exceed 2k = {2 * k}, got {l}")
    weight = k * k + k - 4
    chi = 2 ** (l - 3) * weight
    g1 = 1 + 2 ** (k - 2) * weight
    g2 = 1 + 2 ** (l - 1)
    if chi * 2**k != (g1 - 1) * (g2 - 1):
        raise ZfamError(f"genus bookkeeping broken for (k, l) = ({k}, {l})")
    return FamilyParams(
        k=k,
        l=l,
        r1=k * (k + 1),
        r2=4 + 2 ** (l - k + 1),
        chi=chi,
        epsilon=Fraction(l, k) - 2,
        g1=g1,
        g2=g2,
    )


def family_component_count(
    params: FamilyParams, budget: int | None = None, workers: int = 1
) -> tuple[int | None, str]:
    """Exact component count when feasible.

    Returns (h, completeness) with completeness one of "exact",
    "budget-limited", "formula-only".  h is None unless exact.
    """
    if params.r1 > MATERIALIZE_CAP or params.r2 > MATERIALIZE_CAP:
        return None, "formula-only"
    group = ElementaryAbelianGroup(params.k)
    try:
        result = count_components(
            group, params.tau1_tuple(), params.tau2_tuple(), budget=budget, workers=workers
        )
    except BudgetExceededError:
        return None, "budget-limited"
    return result.h, "exact"


WitnessSide = tuple[tuple[int, ...], tuple[int, ...]]
"""(support elements, multiplicities), a compact entry-multiset encoding."""


@dataclass(frozen=True)
class MultipletReport:
    """Everything known about one family member, cross-checked on assembly."""

    params: FamilyParams
    h: int | None
    completeness: str
    invariants: SurfaceInvariants
    curve: BranchCurveInvariants
    bounds: BoundReport
    chisini_threshold: Fraction
    chisini_ok: bool
    plurigenus: int
    witness_status: str
    witness: tuple[WitnessSide, WitnessSide] | None
    assumptions: tuple[str, ...]


def _compact_side(entries: tuple[int, ...]) -> WitnessSide:
    support = tuple(sorted(set(entries)))
    return support, tuple(entries.count(v) for v in support)


def _search_witness(
    params: FamilyParams, budget: int | None
) -> tuple[str, tuple[WitnessSide, WitnessSide] | None]:
    if params.r1 > MATERIALIZE_CAP or params.r2 > MATERIALIZE_CAP:
        return "not attempted", None
    group = ElementaryAbelianGroup(params.k)
    structure, searched = find_ramification_structure(
        group, params.tau1_tuple(), params.tau2_tuple(), budget=budget
    )
    if structure is not None:
        return "found", (_compact_side(structure.t1.entries), _compact_side(structure.t2.entries))
    return ("none exists", None) if searched else ("search budget exhausted", None)


def multiplet_report(
    k: int,
    l: int,
    epsilon_override: Fraction | int | None = None,
    budget: int | None = None,
    workers: int = 1,
) -> MultipletReport:
    """Full chained report: parameters, invariants, curve, bounds, count, witness."""
    params = family_params(k, l)
    epsilon = params.epsilon if epsilon_override is None else Fraction(epsilon_override)
    invariants = SurfaceInvariants(
        chi=params.chi,
        e=4 * params.chi,
        ksq=8 * params.chi,
        g1=params.g1,
        g2=params.g2,
        q=0,
        order=2**params.k,
    )
    curve = branch_curve_invariants(invariants.ksq, invariants.e, m=2)
    if curve.d != 14 * invariants.ksq or curve.d != 112 * invariants.chi:
        raise ZfamError(f"degree bookkeeping broken: d = {curve.d}, ksq = {invariants.ksq}")
    if main_theorem_counts(curve.d) != (curve.n, curve.c):
        raise ZfamError(f"singularity counts disagree with the degree-{curve.d} formulas")
    bounds = multiplet_bounds(invariants.ksq, invariants.chi, epsilon)
    threshold = chisini_threshold(curve.d, curve.g, curve.c)
    h, completeness = family_component_count(params, budget=budget, workers=workers)
    witness_status, witness = _search_witness(params, budget)
    return MultipletReport(
        params=params,
        h=h,
        completeness=completeness,
        invariants=invariants,
        curve=curve,
        bounds=bounds,
        chisini_threshold=threshold,
        chisini_ok=curve.nu > threshold,
        plurigenus=plurigenus_dimension(invariants.chi, invariants.ksq, 2),
        witness_status=witness_status,
        witness=witness,
        assumptions=("very-ampleness of the bicanonical system assumed",),
    )
