"""Spherical systems of generators and ramification structures.

A spherical system on a finite group G is an ordered tuple of nontrivial
elements whose left-to-right product is the identity and which together
generate G.  Its unordered type is the multiset of entry orders, written in
shorthand like ``2^4,3^2``.  A ramification structure is a pair of systems
whose branch loci are disjoint: the union of all conjugates of all powers of
the entries of one side meets that of the other side only in the identity.

Each side of a ramification structure must have at least three entries and
its Riemann-Hurwitz genus

    2g - 2 = |G| * (-2 + sum(1 - 1/m_i))

must be an integer >= 2.  ``genus_from_type`` returns the exact rational, so
callers can see when a type admits no action at all.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import config
from .errors import (
    BudgetExceededError,
    GenusBelowTwoError,
    GenusNotIntegralError,
    GroupMismatchError,
    NotDisjointError,
    NotGeneratingError,
    ProductNotIdentityError,
    SizeBelowThreeError,
    UsageError,
)
from .groups import FiniteGroup

__all__ = [
    "SphericalSystem",
    "RamificationStructure",
    "make_spherical_system",
    "make_ramification_structure",
    "parse_type",
    "format_type",
    "genus_from_type",
    "sigma_set",
    "disjoint",
    "enumerate_spherical_systems",
]


_TYPE_TOKEN_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_type(text: str) -> tuple[int, ...]:
    """Parse a type shorthand like ``2^6`` or ``2^4,3^2`` into a sorted tuple."""
    out: list[int] = []
    for token in text.strip().split(","):
        m = _TYPE_TOKEN_RE.match(token.strip())
        if not m:
            raise UsageError(f"malformed type token {token!r} in {text!r}")
        base = int(m.group(1))
        count = int(m.group(2)) if m.group(2) else 1
        if base < 2:
            raise UsageError(f"type entries must be orders >= 2, got {base} in {text!r}")
        if count < 1:
            raise UsageError(f"type exponent must be >= 1 in {text!r}")
        out.extend([base] * count)
    return tuple(sorted(out))


def format_type(tau: Sequence[int]) -> str:
    """Shorthand for a type: ``(2,2,2,3,3)`` becomes ``2^3,3^2``."""
    parts = []
    for base, grp in itertools.groupby(sorted(tau)):
        count = len(list(grp))
        parts.append(f"{base}^{count}" if count > 1 else str(base))
    return ",".join(parts)


class SphericalSystem:
    """A validated spherical system of generators.

    Construct through :func:`make_spherical_system`; the constructor itself
    trusts its inputs so internal enumeration loops stay cheap.
    """

    __slots__ = ("group", "entries", "_type", "_sigma")

    def __init__(self, group: FiniteGroup, entries: tuple[int, ...]):
        self.group = group
        self.entries = entries
        self._type: tuple[int, ...] | None = None
        self._sigma: frozenset[int] | None = None

    @property
    def r(self) -> int:
        return len(self.entries)

    @property
    def type(self) -> tuple[int, ...]:
        if self._type is None:
            self._type = tuple(sorted(self.group.element_order(a) for a in self.entries))
        return self._type

    @property
    def type_string(self) -> str:
        return format_type(self.type)

    def sigma(self) -> frozenset[int]:
        """Union of all conjugates of all powers of the entries."""
        if self._sigma is None:
            acc: set[int] = {0}
            for a in self.entries:
                acc |= self.group.sigma_of_element(a)
            self._sigma = frozenset(acc)
        return self._sigma

    def genus(self) -> Fraction:
        return genus_from_type(self.group.order, self.type)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SphericalSystem)
            and self.group == other.group
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.group.key(), self.entries))

    def __repr__(self) -> str:
        return f"<SphericalSystem {self.entries} on {self.group.name}>"


def make_spherical_system(group: FiniteGroup, entries: Sequence[int]) -> SphericalSystem:
    """Validate and build a spherical system."""
    entries = tuple(entries)
    if len(entries) < 2:
        raise UsageError(f"a spherical system needs at least two entries, got {len(entries)}")
    for a in entries:
        group.check_id(a)
        if a == 0:
            raise UsageError("identity entries are not allowed in a spherical system")
    if group.product(entries) != 0:
        raise ProductNotIdentityError(f"entries {entries} multiply to a non-identity element")
    if not group.generates(entries):
        raise NotGeneratingError(f"entries {entries} do not generate {group.name}")
    return SphericalSystem(group, entries)


def sigma_set(system: SphericalSystem) -> frozenset[int]:
    return system.sigma()


def disjoint(a: SphericalSystem, b: SphericalSystem) -> bool:
    """Whether the branch loci of two systems meet only in the identity."""
    if a.group != b.group:
        raise GroupMismatchError("systems live on different groups")
    return a.sigma() & b.sigma() == frozenset({0})


def genus_from_type(order: int, tau: Sequence[int]) -> Fraction:
    """Exact Riemann-Hurwitz genus for a group order and a type.

    A non-integral result signals that no action of that type exists.
    """
    if order < 1:
        raise UsageError(f"group order must be positive, got {order}")
    total = Fraction(-2)
    for m in tau:
        if m < 2:
            raise UsageError(f"type entries must be orders >= 2, got {m}")
        total += 1 - Fraction(1, m)
    return 1 + Fraction(order, 2) * total


class RamificationStructure:
    """A disjoint pair of spherical systems with genus >= 2 on each side."""

    __slots__ = ("group", "t1", "t2", "g1", "g2")

    def __init__(self, group: FiniteGroup, t1: SphericalSystem, t2: SphericalSystem, g1: int, g2: int):
        self.group = group
        self.t1 = t1
        self.t2 = t2
        self.g1 = g1
        self.g2 = g2

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RamificationStructure)
            and self.group == other.group
            and self.t1 == other.t1
            and self.t2 == other.t2
        )

    def __hash__(self) -> int:
        return hash((self.group.key(), self.t1.entries, self.t2.entries))

    def __repr__(self) -> str:
        return f"<RamificationStructure {self.t1.entries} | {self.t2.entries} on {self.group.name}>"


def _validate_side(system: SphericalSystem) -> int:
    """Size and genus conditions for one side; returns the integral genus."""
    if system.r < 3:
        raise SizeBelowThreeError(
            f"a ramification structure side needs at least three entries, got {system.r}"
        )
    g = system.genus()
    if g.denominator != 1:
        raise GenusNotIntegralError(f"type {system.type_string} gives genus {g}, not an integer")
    if g < 2:
        raise GenusBelowTwoError(f"type {system.type_string} gives genus {g}, below two")
    return int(g)


def make_ramification_structure(t1: SphericalSystem, t2: SphericalSystem) -> RamificationStructure:
    """Validate per-side size and genus conditions, then disjointness.

    Per-side conditions come first: they are intrinsic to each side, while
    disjointness is the relational condition on the pair.
    """
    if t1.group != t2.group:
        raise GroupMismatchError("ramification structure sides live on different groups")
    g1 = _validate_side(t1)
    g2 = _validate_side(t2)
    if not disjoint(t1, t2):
        raise NotDisjointError("branch loci of the two sides intersect beyond the identity")
    return RamificationStructure(t1.group, t1, t2, g1, g2)


# ---------------------------------------------------------------- enumeration


def _pools_by_order(group: FiniteGroup, tau: Sequence[int]) -> dict[int, list[int]] | None:
    """Nonzero elements grouped by order, restricted to orders in tau.

    Returns None when some requested order has no elements at all.
    """
    needed = set(tau)
    pools: dict[int, list[int]] = {m: [] for m in needed}
    for a in range(1, group.order):
        m = group.element_order(a)
        if m in needed:
            pools[m].append(a)
    if any(not pool for pool in pools.values()):
        return None
    return pools


def _multiset_candidate_count(pools: dict[int, list[int]], counts: dict[int, int]) -> int:
    total = 1
    for m, c in counts.items():
        total *= math.comb(len(pools[m]) + c - 1, c)
    return total


def enumerate_spherical_systems(
    group: FiniteGroup,
    tau: Sequence[int],
    mode: str = "ordered",
    budget: int | None = None,
) -> Iterator[SphericalSystem]:
    """Stream all spherical systems of the given type.

    ``ordered`` mode yields every tuple; ``multiset`` mode yields one
    representative per entry multiset (sorted ascending) and is only defined
    for abelian groups, where reordering never changes validity.  The budget
    bounds the number of enumeration nodes; multiset candidate spaces are
    sized up front, ordered backtracking counts nodes as it goes.
    """
    tau = tuple(sorted(tau))
    if len(tau) < 2:
        raise UsageError(f"a type needs at least two entries, got {len(tau)}")
    for m in tau:
        if m < 2:
            raise UsageError(f"type entries must be orders >= 2, got {m}")
    if mode not in ("ordered", "multiset"):
        raise UsageError(f"mode must be 'ordered' or 'multiset', got {mode!r}")
    if budget is None:
        budget = config.default_budget()

    if mode == "multiset":
        if not group.is_abelian():
            raise UsageError("multiset mode is only defined for abelian groups")
        return _enumerate_multiset(group, tau, budget)
    return _enumerate_ordered(group, tau, budget)


def _enumerate_multiset(group: FiniteGroup, tau: tuple[int, ...], budget: int) -> Iterator[SphericalSystem]:
    pools = _pools_by_order(group, tau)
    if pools is None:
        return iter(())
    counts: dict[int, int] = {}
    for m in tau:
        counts[m] = counts.get(m, 0) + 1
    n_candidates = _multiset_candidate_count(pools, counts)
    if n_candidates > budget:
        raise BudgetExceededError(
            f"multiset enumeration needs {n_candidates} candidates, budget is {budget}"
        )

    def gen() -> Iterator[SphericalSystem]:
        per_order = [
            itertools.combinations_with_replacement(pools[m], counts[m])
            for m in sorted(counts)
        ]
        for blocks in itertools.product(*per_order):
            entries = tuple(sorted(itertools.chain.from_iterable(blocks)))
            if group.product(entries) != 0:
                continue
            if not group.generates(entries):
                continue
            yield SphericalSystem(group, entries)

    return gen()


def _enumerate_ordered(group: FiniteGroup, tau: tuple[int, ...], budget: int) -> Iterator[SphericalSystem]:
    pools = _pools_by_order(group, tau)
    if pools is None:
        return iter(())
    r = len(tau)

    def gen() -> Iterator[SphericalSystem]:
        nodes = 0
        remaining: dict[int, int] = {}
        for m in tau:
            remaining[m] = remaining.get(m, 0) + 1
        prefix: list[int] = []

        def rec(acc: int) -> Iterator[SphericalSystem]:
            nonlocal nodes
            if len(prefix) == r - 1:
                last = group.inv(acc)
                nodes += 1
                if nodes > budget:
                    raise BudgetExceededError(
                        f"ordered enumeration exceeded the budget of {budget} nodes",
                        partial=None,
                    )
                need = next(m for m, c in remaining.items() if c)
                if last != 0 and group.element_order(last) == need:
                    entries = tuple(prefix) + (last,)
                    if group.generates(entries):
                        yield SphericalSystem(group, entries)
                return
            for m in sorted(remaining):
                if not remaining[m]:
                    continue
                remaining[m] -= 1
                for v in pools[m]:
                    nodes += 1
                    if nodes > budget:
                        raise BudgetExceededError(
                            f"ordered enumeration exceeded the budget of {budget} nodes",
                            partial=None,
                        )
                    prefix.append(v)
                    yield from rec(group.mul(acc, v))
                    prefix.pop()
                remaining[m] += 1

        yield from rec(0)

    return gen()
