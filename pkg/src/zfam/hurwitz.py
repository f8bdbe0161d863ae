"""Hurwitz moves, braid orbits, and moduli component counting.

The forward Hurwitz move at position i sends (v_i, v_{i+1}) to
(v_{i+1}, v_{i+1}^-1 v_i v_{i+1}); the inverse move sends it to
(v_i v_{i+1} v_i^-1, v_i).  Both preserve the product, the generated
subgroup, the multiset of conjugacy classes, and the branch locus, so the
type and the genus are orbit invariants.

Two ramification structures are counted as one moduli component when some
automorphism of G maps one to the other up to independent Hurwitz moves on
each side, and, when both sides carry the same type, up to swapping the
sides.  ``count_components`` computes the number of classes h exactly:

* On (Z/2)^k the Hurwitz orbit of a system is the set of permutations of its
  entries, so a class is determined by the pair of entry multisets.  The
  enumeration factors through supports: disjoint spanning support pairs are
  reduced to orbit representatives under Aut(G) (and the swap), and the
  multiplicity assignments on each canonical support pair are deduplicated
  by minimizing over its stabilizer.  Any automorphism identifying two
  assignments on the same canonical support pair must stabilize it, so the
  count is exact.
* On other abelian groups, entry multisets are enumerated directly and
  minimized over the full automorphism group.
* On nonabelian groups, ordered systems are enumerated, partitioned into
  braid orbits by breadth-first search, and orbit representatives are
  minimized over simultaneous automorphisms (optionally with per-side inner
  conjugation, see ``identify_inner``).

Budgets are checked against exact work estimates before enumeration starts
whenever possible, which keeps results independent of the worker count.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import config
from .errors import BudgetExceededError, UsageError
from .groups import (
    Automorphism,
    ElementaryAbelianGroup,
    FiniteGroup,
    automorphisms,
    gf2_rank,
)
from .spherical import (
    RamificationStructure,
    SphericalSystem,
    enumerate_spherical_systems,
    genus_from_type,
    make_ramification_structure,
    make_spherical_system,
)

__all__ = [
    "hurwitz_move",
    "OrbitResult",
    "hurwitz_orbit",
    "PairClassKey",
    "pair_class_key",
    "ComponentCount",
    "count_components",
    "find_ramification_structure",
]


def hurwitz_move(system: SphericalSystem, i: int, inverse: bool = False) -> SphericalSystem:
    """Apply one Hurwitz move at position i (0-based, i+1 must exist)."""
    entries = system.entries
    if not 0 <= i < len(entries) - 1:
        raise UsageError(f"move position {i} out of range for length {len(entries)}")
    g = system.group
    a, b = entries[i], entries[i + 1]
    if inverse:
        pair = (g.mul(g.mul(a, b), g.inv(a)), a)
    else:
        pair = (b, g.mul(g.mul(g.inv(b), a), b))
    return SphericalSystem(g, entries[:i] + pair + entries[i + 2 :])


@dataclass(frozen=True)
class OrbitResult:
    """A braid orbit; ``complete`` is False when the budget ran out."""

    systems: frozenset[SphericalSystem]
    complete: bool

    def __len__(self) -> int:
        return len(self.systems)


def _orbit_tuples(group: FiniteGroup, start: tuple[int, ...], budget: int) -> tuple[set[tuple[int, ...]], bool]:
    seen = {start}
    frontier = [start]
    r = len(start)
    while frontier:
        nxt = []
        for t in frontier:
            for i in range(r - 1):
                a, b = t[i], t[i + 1]
                fwd = t[:i] + (b, group.mul(group.mul(group.inv(b), a), b)) + t[i + 2 :]
                inv = t[:i] + (group.mul(group.mul(a, b), group.inv(a)), a) + t[i + 2 :]
                for u in (fwd, inv):
                    if u not in seen:
                        if len(seen) >= budget:
                            return seen, False
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    return seen, True


def hurwitz_orbit(system: SphericalSystem, budget: int | None = None) -> OrbitResult:
    """Breadth-first closure of a system under forward and inverse moves."""
    if budget is None:
        budget = config.default_budget()
    tuples, complete = _orbit_tuples(system.group, system.entries, budget)
    systems = frozenset(SphericalSystem(system.group, t) for t in tuples)
    return OrbitResult(systems=systems, complete=complete)


@dataclass(frozen=True)
class PairClassKey:
    """Deterministic bytes identifying one moduli component.

    Two ramification structures receive equal keys exactly when they are
    related by a simultaneous automorphism combined with independent Hurwitz
    moves per side, under the swap/inner conventions encoded in the key.
    """

    data: bytes

    def hex(self) -> str:
        return self.data.hex()


def _encode_key(*parts: object) -> bytes:
    return "|".join(str(p) for p in parts).encode("ascii")


# ---------------------------------------------------------------- elementary-abelian machinery


def _support_of(entries: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(set(entries)))


def _mult_vector(order: int, entries: Sequence[int]) -> tuple[int, ...]:
    mv = [0] * order
    for v in entries:
        mv[v] += 1
    return tuple(mv)


def _apply_perm_support(perm: tuple[int, ...], support: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(perm[v] for v in support))


def _apply_perm_mv(perm: tuple[int, ...], mv: tuple[int, ...], support: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(mv)
    for v in support:
        out[perm[v]] = mv[v]
    return tuple(out)


def _assignment_count(support: Sequence[int], r: int) -> int:
    """Number of type-2^r entry multisets with exactly this support.

    Multiplicities are >= 1 on the support and the odd-multiplicity subset
    must XOR to zero; the remaining mass is distributed in pairs.
    """
    s = len(support)
    total = 0
    for bits in range(1 << s):
        odd = [support[i] for i in range(s) if bits >> i & 1]
        x = 0
        for v in odd:
            x ^= v
        if x != 0 or (r - len(odd)) % 2 != 0:
            continue
        t2 = r + len(odd) - 2 * s
        if t2 < 0:
            continue
        total += math.comb(t2 // 2 + s - 1, s - 1)
    return total


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _assignments(order: int, support: Sequence[int], r: int) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors of type-2^r entry multisets on this support."""
    s = len(support)
    for bits in range(1 << s):
        odd = {support[i] for i in range(s) if bits >> i & 1}
        x = 0
        for v in odd:
            x ^= v
        if x != 0 or (r - len(odd)) % 2 != 0:
            continue
        t2 = r + len(odd) - 2 * s
        if t2 < 0:
            continue
        base = [0] * order
        for v in support:
            base[v] = 1 if v in odd else 2
        for extra in _compositions(t2 // 2, s):
            mv = base[:]
            for i, e in enumerate(extra):
                mv[support[i]] += 2 * e
            yield tuple(mv)


def _entries_from_mv(mv: Sequence[int]) -> tuple[int, ...]:
    out = []
    for v, count in enumerate(mv):
        out.extend([v] * count)
    return tuple(out)


def _spanning_supports(rank: int, max_size: int) -> list[tuple[int, ...]]:
    n = (1 << rank) - 1
    out = []
    for size in range(rank, min(max_size, n) + 1):
        for s in itertools.combinations(range(1, n + 1), size):
            if gf2_rank(s) == rank:
                out.append(s)
    return out


def _support_pair_estimate(rank: int, r1: int, r2: int) -> int:
    """Upper bound on disjoint support pairs, used as the pre-enumeration gate."""
    n = (1 << rank) - 1
    total = 0
    for s1 in range(rank, min(r1, n) + 1):
        inner = 0
        for s2 in range(rank, min(r2, n - s1) + 1):
            inner += math.comb(n - s1, s2)
        total += math.comb(n, s1) * inner
    return total


def _canonical_support_pair(
    perms: list[tuple[int, ...]],
    s1: tuple[int, ...],
    s2: tuple[int, ...],
    identify_swap: bool,
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    best = None
    for perm in perms:
        a = _apply_perm_support(perm, s1)
        b = _apply_perm_support(perm, s2)
        if best is None or (a, b) < best:
            best = (a, b)
        if identify_swap and (b, a) < best:
            best = (b, a)
    return best


def _support_stabilizers(
    perms: list[tuple[int, ...]],
    c1: tuple[int, ...],
    c2: tuple[int, ...],
    identify_swap: bool,
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    stab = []
    swapstab = []
    for perm in perms:
        a = _apply_perm_support(perm, c1)
        b = _apply_perm_support(perm, c2)
        if (a, b) == (c1, c2):
            stab.append(perm)
        if identify_swap and (a, b) == (c2, c1):
            swapstab.append(perm)
    return stab, swapstab


def _stab_min_key(
    c1: tuple[int, ...],
    c2: tuple[int, ...],
    mv1: tuple[int, ...],
    mv2: tuple[int, ...],
    stab: list[tuple[int, ...]],
    swapstab: list[tuple[int, ...]],
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    best = None
    for perm in stab:
        cand = (_apply_perm_mv(perm, mv1, c1), _apply_perm_mv(perm, mv2, c2))
        if best is None or cand < best:
            best = cand
    for perm in swapstab:
        cand = (_apply_perm_mv(perm, mv2, c2), _apply_perm_mv(perm, mv1, c1))
        if best is None or cand < best:
            best = cand
    return best


def _elementary_key_bytes(
    rank: int,
    r1: int,
    r2: int,
    identify_swap: bool,
    c1: tuple[int, ...],
    c2: tuple[int, ...],
    mv_pair: tuple[tuple[int, ...], tuple[int, ...]],
) -> bytes:
    return _encode_key("ea", rank, r1, r2, int(identify_swap), c1, c2, mv_pair[0], mv_pair[1])


def _key_elementary(
    group: ElementaryAbelianGroup,
    perms: list[tuple[int, ...]],
    e1: Sequence[int],
    e2: Sequence[int],
    identify_swap: bool,
) -> PairClassKey:
    s1, s2 = _support_of(e1), _support_of(e2)
    mv1 = _mult_vector(group.order, e1)
    mv2 = _mult_vector(group.order, e2)
    c1, c2 = _canonical_support_pair(perms, s1, s2, identify_swap)
    best = None
    for perm in perms:
        a = _apply_perm_support(perm, s1)
        b = _apply_perm_support(perm, s2)
        if (a, b) == (c1, c2):
            cand = (_apply_perm_mv(perm, mv1, s1), _apply_perm_mv(perm, mv2, s2))
            if best is None or cand < best:
                best = cand
        if identify_swap and (b, a) == (c1, c2):
            cand = (_apply_perm_mv(perm, mv2, s2), _apply_perm_mv(perm, mv1, s1))
            if best is None or cand < best:
                best = cand
    return PairClassKey(_elementary_key_bytes(group.rank, len(e1), len(e2), identify_swap, c1, c2, best))


# ---------------------------------------------------------------- generic abelian and nonabelian keys


def _key_abelian_table(
    group: FiniteGroup,
    auts: list[Automorphism],
    e1: Sequence[int],
    e2: Sequence[int],
    identify_swap: bool,
) -> PairClassKey:
    m1, m2 = tuple(sorted(e1)), tuple(sorted(e2))
    best = None
    for a in auts:
        q1 = tuple(sorted(a.perm[v] for v in m1))
        q2 = tuple(sorted(a.perm[v] for v in m2))
        if best is None or (q1, q2) < best:
            best = (q1, q2)
        if identify_swap and (q2, q1) < best:
            best = (q2, q1)
    return PairClassKey(_encode_key("ab", group.key(), int(identify_swap), best[0], best[1]))


def _conjugate_tuple(group: FiniteGroup, g: int, t: tuple[int, ...]) -> tuple[int, ...]:
    ginv = group.inv(g)
    return tuple(group.mul(group.mul(g, v), ginv) for v in t)


def _side_min_nonabelian(
    group: FiniteGroup,
    aut: Automorphism,
    orbit: list[tuple[int, ...]],
    identify_inner: bool,
) -> tuple[int, ...]:
    best = None
    for t in orbit:
        image = aut.apply(t)
        if best is None or image < best:
            best = image
        if identify_inner:
            for g in range(1, group.order):
                cand = _conjugate_tuple(group, g, image)
                if cand < best:
                    best = cand
    return best


def _key_nonabelian(
    group: FiniteGroup,
    auts: list[Automorphism],
    orbit1: list[tuple[int, ...]],
    orbit2: list[tuple[int, ...]],
    identify_swap: bool,
    identify_inner: bool,
) -> PairClassKey:
    best = None
    for a in auts:
        side1 = _side_min_nonabelian(group, a, orbit1, identify_inner)
        side2 = _side_min_nonabelian(group, a, orbit2, identify_inner)
        if best is None or (side1, side2) < best:
            best = (side1, side2)
        if identify_swap and (side2, side1) < best:
            best = (side2, side1)
    return PairClassKey(
        _encode_key("na", group.key(), int(identify_swap), int(identify_inner), best[0], best[1])
    )


def pair_class_key(
    structure: RamificationStructure,
    auts: list[Automorphism] | None = None,
    identify_swap: bool | None = None,
    identify_inner: bool = False,
    budget: int | None = None,
) -> PairClassKey:
    """Canonical key of the moduli component containing this structure.

    ``identify_swap`` defaults to identifying (T1, T2) with (T2, T1) exactly
    when both sides have the same type.  ``identify_inner`` additionally
    quotients by per-side inner conjugation on nonabelian groups; on abelian
    groups it is a no-op and is normalized away.
    """
    group = structure.group
    tau1, tau2 = structure.t1.type, structure.t2.type
    if identify_swap is None:
        identify_swap = tau1 == tau2
    if budget is None:
        budget = config.default_budget()
    if auts is None:
        auts = automorphisms(group)
    if isinstance(group, ElementaryAbelianGroup):
        perms = [a.perm for a in auts]
        return _key_elementary(group, perms, structure.t1.entries, structure.t2.entries, identify_swap)
    if group.is_abelian():
        return _key_abelian_table(group, auts, structure.t1.entries, structure.t2.entries, identify_swap)
    o1, complete1 = _orbit_tuples(group, structure.t1.entries, budget)
    o2, complete2 = _orbit_tuples(group, structure.t2.entries, budget)
    if not (complete1 and complete2):
        raise BudgetExceededError(f"orbit enumeration exceeded the budget of {budget} nodes")
    return _key_nonabelian(
        group, auts, sorted(o1), sorted(o2), identify_swap, identify_inner
    )


# ---------------------------------------------------------------- component counting


@dataclass(frozen=True)
class ComponentCount:
    """Exact number of moduli components and their canonical keys."""

    h: int
    keys: frozenset[PairClassKey]
    swap_identified: bool
    inner_identified: bool


def _type_admissible(order: int, tau: tuple[int, ...]) -> bool:
    """Size and genus conditions a side type must meet to contribute at all."""
    if len(tau) < 3:
        return False
    g = genus_from_type(order, tau)
    return g.denominator == 1 and g >= 2


def _empty_count(identify_swap: bool, identify_inner: bool) -> ComponentCount:
    return ComponentCount(
        h=0, keys=frozenset(), swap_identified=identify_swap, inner_identified=identify_inner
    )


def count_components(
    group: FiniteGroup,
    tau1: Sequence[int],
    tau2: Sequence[int],
    budget: int | None = None,
    workers: int = 1,
    count_ordered_pairs: bool = False,
    identify_inner: bool = False,
) -> ComponentCount:
    """Count moduli components of ramification structures of types (tau1, tau2).

    Returns h = 0 when either type fails the size/genus conditions or no
    structures exist.  Raises BudgetExceededError when the exact work estimate
    exceeds the budget; on (Z/2)^k the estimate is computed before any
    enumeration, so the result never depends on ``workers``.
    """
    tau1 = tuple(sorted(tau1))
    tau2 = tuple(sorted(tau2))
    for m in tau1 + tau2:
        if m < 2:
            raise UsageError(f"type entries must be orders >= 2, got {m}")
    if budget is None:
        budget = config.default_budget()
    if workers < 1:
        raise UsageError(f"workers must be >= 1, got {workers}")
    identify_swap = tau1 == tau2 and not count_ordered_pairs
    effective_inner = identify_inner and not group.is_abelian()

    if not (_type_admissible(group.order, tau1) and _type_admissible(group.order, tau2)):
        return _empty_count(identify_swap, effective_inner)

    if isinstance(group, ElementaryAbelianGroup):
        return _count_elementary(group, tau1, tau2, budget, workers, identify_swap)
    if group.is_abelian():
        return _count_abelian_table(group, tau1, tau2, budget, identify_swap)
    return _count_nonabelian(group, tau1, tau2, budget, identify_swap, effective_inner)


def _count_elementary(
    group: ElementaryAbelianGroup,
    tau1: tuple[int, ...],
    tau2: tuple[int, ...],
    budget: int,
    workers: int,
    identify_swap: bool,
) -> ComponentCount:
    if any(m != 2 for m in tau1 + tau2):
        return _empty_count(identify_swap, False)
    rank = group.rank
    r1, r2 = len(tau1), len(tau2)

    estimate = _support_pair_estimate(rank, r1, r2)
    if estimate > budget:
        raise BudgetExceededError(
            f"support-pair estimate {estimate} exceeds the budget of {budget}"
        )

    n = (1 << rank) - 1
    supports = _spanning_supports(rank, min(max(r1, r2), n))
    side1_supports = [s for s in supports if len(s) <= r1]
    side2_supports = [s for s in supports if len(s) <= r2]
    side2_sets = [(s, set(s)) for s in side2_supports]
    pairs = []
    for s1 in side1_supports:
        set1 = set(s1)
        for s2, set2 in side2_sets:
            if not set1 & set2:
                pairs.append((s1, s2))
    if not pairs:
        return _empty_count(identify_swap, False)

    perms = [a.perm for a in automorphisms(group)]
    canonical: dict[tuple, tuple] = {}
    for s1, s2 in pairs:
        canonical[_canonical_support_pair(perms, s1, s2, identify_swap)] = ()
    canonical_pairs = sorted(canonical)

    total_assignments = 0
    work_items = []
    for c1, c2 in canonical_pairs:
        n1 = _assignment_count(c1, r1)
        n2 = _assignment_count(c2, r2)
        if n1 == 0 or n2 == 0:
            continue
        total_assignments += n1 * n2
        stab, swapstab = _support_stabilizers(perms, c1, c2, identify_swap)
        work_items.append((c1, c2, stab, swapstab))
    if total_assignments > budget:
        raise BudgetExceededError(
            f"{total_assignments} candidate assignments exceed the budget of {budget}"
        )
    if not work_items:
        return _empty_count(identify_swap, False)

    if workers == 1 or len(work_items) == 1:
        keys: set[bytes] = set()
        for item in work_items:
            keys |= _elementary_item_keys(group.order, rank, r1, r2, identify_swap, item)
    else:
        shards = [work_items[i::workers] for i in range(workers)]
        shards = [s for s in shards if s]
        payloads = [(group.order, rank, r1, r2, identify_swap, shard) for shard in shards]
        keys = set()
        with ProcessPoolExecutor(max_workers=len(payloads)) as pool:
            for part in pool.map(_elementary_shard_worker, payloads):
                keys |= part

    return ComponentCount(
        h=len(keys),
        keys=frozenset(PairClassKey(b) for b in keys),
        swap_identified=identify_swap,
        inner_identified=False,
    )


def _elementary_item_keys(
    order: int,
    rank: int,
    r1: int,
    r2: int,
    identify_swap: bool,
    item: tuple,
) -> set[bytes]:
    c1, c2, stab, swapstab = item
    side2 = list(_assignments(order, c2, r2))
    keys: set[bytes] = set()
    for mv1 in _assignments(order, c1, r1):
        for mv2 in side2:
            best = _stab_min_key(c1, c2, mv1, mv2, stab, swapstab)
            keys.add(_elementary_key_bytes(rank, r1, r2, identify_swap, c1, c2, best))
    return keys


def _elementary_shard_worker(payload: tuple) -> set[bytes]:
    order, rank, r1, r2, identify_swap, shard = payload
    keys: set[bytes] = set()
    for item in shard:
        keys |= _elementary_item_keys(order, rank, r1, r2, identify_swap, item)
    return keys


def _count_abelian_table(
    group: FiniteGroup,
    tau1: tuple[int, ...],
    tau2: tuple[int, ...],
    budget: int,
    identify_swap: bool,
) -> ComponentCount:
    side1 = list(enumerate_spherical_systems(group, tau1, mode="multiset", budget=budget))
    side2 = (
        side1
        if tau2 == tau1
        else list(enumerate_spherical_systems(group, tau2, mode="multiset", budget=budget))
    )
    if len(side1) * len(side2) > budget:
        raise BudgetExceededError(
            f"{len(side1) * len(side2)} candidate pairs exceed the budget of {budget}"
        )
    auts = automorphisms(group)
    keys: set[PairClassKey] = set()
    for a in side1:
        for b in side2:
            if a.sigma() & b.sigma() != frozenset({0}):
                continue
            keys.add(_key_abelian_table(group, auts, a.entries, b.entries, identify_swap))
    return ComponentCount(
        h=len(keys), keys=frozenset(keys), swap_identified=identify_swap, inner_identified=False
    )


def _count_nonabelian(
    group: FiniteGroup,
    tau1: tuple[int, ...],
    tau2: tuple[int, ...],
    budget: int,
    identify_swap: bool,
    identify_inner: bool,
) -> ComponentCount:
    def orbit_reps(tau: tuple[int, ...]) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
        reps: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        assigned: set[tuple[int, ...]] = set()
        for system in enumerate_spherical_systems(group, tau, mode="ordered", budget=budget):
            t = system.entries
            if t in assigned:
                continue
            orbit, complete = _orbit_tuples(group, t, budget)
            if not complete:
                raise BudgetExceededError(f"orbit enumeration exceeded the budget of {budget} nodes")
            assigned |= orbit
            reps[min(orbit)] = sorted(orbit)
        return reps

    reps1 = orbit_reps(tau1)
    reps2 = reps1 if tau2 == tau1 else orbit_reps(tau2)
    if not reps1 or not reps2:
        return _empty_count(identify_swap, identify_inner)

    auts = automorphisms(group)
    sigma_cache: dict[tuple[int, ...], frozenset[int]] = {}

    def sigma_of(t: tuple[int, ...]) -> frozenset[int]:
        if t not in sigma_cache:
            acc: set[int] = {0}
            for v in t:
                acc |= group.sigma_of_element(v)
            sigma_cache[t] = frozenset(acc)
        return sigma_cache[t]

    keys: set[PairClassKey] = set()
    for rep1, orbit1 in reps1.items():
        s1 = sigma_of(rep1)
        for rep2, orbit2 in reps2.items():
            if s1 & sigma_of(rep2) != frozenset({0}):
                continue
            keys.add(_key_nonabelian(group, auts, orbit1, orbit2, identify_swap, identify_inner))
    return ComponentCount(
        h=len(keys), keys=frozenset(keys), swap_identified=identify_swap, inner_identified=identify_inner
    )


# ---------------------------------------------------------------- witness search


def find_ramification_structure(
    group: ElementaryAbelianGroup,
    tau1: Sequence[int],
    tau2: Sequence[int],
    budget: int | None = None,
) -> tuple[RamificationStructure | None, bool]:
    """First ramification structure of the given types on (Z/2)^k, if any.

    Returns (structure, searched_fully).  When the search space exceeds the
    budget the result is (None, False): nothing was proven either way.
    """
    if not isinstance(group, ElementaryAbelianGroup):
        raise UsageError("witness search is only implemented for elementary-abelian groups")
    tau1 = tuple(sorted(tau1))
    tau2 = tuple(sorted(tau2))
    if budget is None:
        budget = config.default_budget()
    if any(m != 2 for m in tau1 + tau2):
        return None, True
    if not (_type_admissible(group.order, tau1) and _type_admissible(group.order, tau2)):
        return None, True
    rank = group.rank
    n = (1 << rank) - 1
    r1, r2 = len(tau1), len(tau2)
    work = 0
    for size1 in range(rank, min(r1, n) + 1):
        for s1 in itertools.combinations(range(1, n + 1), size1):
            work += 1
            if work > budget:
                return None, False
            if gf2_rank(s1) != rank or _assignment_count(s1, r1) == 0:
                continue
            complement = [v for v in range(1, n + 1) if v not in set(s1)]
            for size2 in range(rank, min(r2, len(complement)) + 1):
                for s2 in itertools.combinations(complement, size2):
                    work += 1
                    if work > budget:
                        return None, False
                    if gf2_rank(s2) != rank or _assignment_count(s2, r2) == 0:
                        continue
                    mv1 = next(_assignments(group.order, s1, r1))
                    mv2 = next(_assignments(group.order, s2, r2))
                    t1 = make_spherical_system(group, _entries_from_mv(mv1))
                    t2 = make_spherical_system(group, _entries_from_mv(mv2))
                    return make_ramification_structure(t1, t2), True
    return None, True
