"""Finite groups with elements represented as integer ids.

Elements are opaque ints 0..order-1 and id 0 is always the identity.  Two
concrete representations are provided: ElementaryAbelianGroup, the rank-k
group over F_2 whose ids are bit vectors composed by XOR, and TableGroup, an
arbitrary small group given by a fully validated multiplication table.

Automorphisms are enumerated exactly: by basis-image search over GL(k, 2) for
the elementary-abelian case, by generator-image backtracking for table groups.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, UsageError

__all__ = [
    "FiniteGroup",
    "ElementaryAbelianGroup",
    "TableGroup",
    "Automorphism",
    "automorphisms",
    "automorphism_generators",
    "gf2_rank",
    "parse_group_spec",
    "load_group_file",
    "load_group",
    "cyclic_table",
    "s3",
    "d4",
    "q8",
]

MAX_TABLE_ORDER = 64
MAX_ELEMENTARY_RANK = 16
MAX_AUTOMORPHISM_RANK = 8


def gf2_rank(vectors: Iterable[int]) -> int:
    """Rank of a family of F_2 bit vectors."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            if lead in basis:
                v ^= basis[lead]
            else:
                basis[lead] = v
                break
    return len(basis)


class FiniteGroup:
    """Base class: a finite group on ids 0..order-1 with identity 0."""

    order: int
    name: str

    def key(self) -> tuple:
        """Structural identity, used for equality across reconstructions."""
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def element_order(self, a: int) -> int:
        raise NotImplementedError

    def conjugacy_class_id(self, a: int) -> int:
        raise NotImplementedError

    def sigma_of_element(self, a: int) -> frozenset[int]:
        """All conjugates of all powers of ``a``, identity included."""
        raise NotImplementedError

    def is_abelian(self) -> bool:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def check_id(self, a: int) -> None:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise UsageError(f"element id {a!r} out of range for {self.name}")

    def product(self, ids: Sequence[int]) -> int:
        """Left-to-right product of a sequence of element ids."""
        acc = 0
        for a in ids:
            acc = self.mul(acc, a)
        return acc

    def generates(self, ids: Iterable[int]) -> bool:
        """Whether the given elements generate the whole group."""
        current = {0}
        frontier = [0]
        gens = set(ids)
        for g in gens:
            self.check_id(g)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in current:
                        current.add(b)
                        nxt.append(b)
            frontier = nxt
            if len(current) == self.order:
                return True
        return len(current) == self.order

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Conjugacy classes as sorted tuples, sorted by least member."""
        seen: set[int] = set()
        classes = []
        for a in self.elements():
            if a in seen:
                continue
            cls = sorted({self.mul(self.mul(g, a), self.inv(g)) for g in self.elements()})
            seen.update(cls)
            classes.append(tuple(cls))
        return tuple(classes)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class ElementaryAbelianGroup(FiniteGroup):
    """(Z/2Z)^k on ids 0..2^k-1; the group law is XOR of bit vectors."""

    def __init__(self, rank: int):
        if not isinstance(rank, int) or not 1 <= rank <= MAX_ELEMENTARY_RANK:
            raise UsageError(f"elementary-abelian rank must be 1..{MAX_ELEMENTARY_RANK}, got {rank!r}")
        self.rank = rank
        self.order = 1 << rank
        self.name = f"Z2^{rank}"

    def key(self) -> tuple:
        return ("Z2", self.rank)

    def mul(self, a: int, b: int) -> int:
        return a ^ b

    def inv(self, a: int) -> int:
        return a

    def element_order(self, a: int) -> int:
        return 1 if a == 0 else 2

    def conjugacy_class_id(self, a: int) -> int:
        return a

    def sigma_of_element(self, a: int) -> frozenset[int]:
        return frozenset((0, a))

    def is_abelian(self) -> bool:
        return True

    def generates(self, ids: Iterable[int]) -> bool:
        ids = list(ids)
        for g in ids:
            self.check_id(g)
        return gf2_rank(ids) == self.rank


class TableGroup(FiniteGroup):
    """A group defined by an explicit multiplication table.

    The table is validated in full: Latin-square rows and columns, identity at
    id 0, two-sided inverses, and exhaustive associativity.  Orders above 64
    are rejected; beyond that the cubic associativity check is no longer a
    sensible default.
    """

    def __init__(self, table: Sequence[Sequence[int]], name: str = ""):
        n = len(table)
        if n == 0 or n > MAX_TABLE_ORDER:
            raise UsageError(f"table group order must be 1..{MAX_TABLE_ORDER}, got {n}")
        rows = []
        for i, row in enumerate(table):
            row = tuple(row)
            if len(row) != n:
                raise UsageError(f"table row {i} has {len(row)} entries, expected {n}")
            for x in row:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise UsageError(f"table row {i} contains invalid id {x!r}")
            rows.append(row)
        self.table = tuple(rows)
        self.order = n
        self.name = name or f"table<{n}>"
        self._validate()
        self._inverse = self._compute_inverses()
        self._element_order = self._compute_orders()
        self._class_id, self._classes = self._compute_classes()
        self._sigma = self._compute_sigma()

    def _validate(self) -> None:
        n = self.order
        t = self.table
        for a in range(n):
            if t[0][a] != a or t[a][0] != a:
                raise UsageError("id 0 is not a two-sided identity")
        for a in range(n):
            if sorted(t[a]) != list(range(n)) or sorted(t[b][a] for b in range(n)) != list(range(n)):
                raise UsageError(f"row or column {a} is not a permutation")
        for a in range(n):
            row_a = t[a]
            for b in range(n):
                ab = row_a[b]
                row_ab = t[ab]
                row_b = t[b]
                for c in range(n):
                    if row_ab[c] != row_a[row_b[c]]:
                        raise UsageError(f"associativity fails at ({a}, {b}, {c})")

    def _compute_inverses(self) -> tuple[int, ...]:
        n = self.order
        inv = [-1] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == 0:
                    if self.table[b][a] != 0:
                        raise UsageError(f"element {a} has no two-sided inverse")
                    inv[a] = b
                    break
            if inv[a] < 0:
                raise UsageError(f"element {a} has no inverse")
        return tuple(inv)

    def _compute_orders(self) -> tuple[int, ...]:
        orders = []
        for a in self.elements():
            acc, k = a, 1
            while acc != 0:
                acc = self.table[acc][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    def _compute_classes(self) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
        n = self.order
        class_id = [-1] * n
        classes = []
        for a in range(n):
            if class_id[a] >= 0:
                continue
            cls = sorted({self.table[self.table[g][a]][self._inverse[g]] for g in range(n)})
            idx = len(classes)
            for x in cls:
                class_id[x] = idx
            classes.append(tuple(cls))
        return tuple(class_id), tuple(classes)

    def _compute_sigma(self) -> tuple[frozenset[int], ...]:
        out = []
        for a in self.elements():
            acc = a
            members = {0}
            while acc != 0:
                members.update(self._classes[self._class_id[acc]])
                acc = self.table[acc][a]
            out.append(frozenset(members))
        return tuple(out)

    def key(self) -> tuple:
        return ("table", self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def element_order(self, a: int) -> int:
        return self._element_order[a]

    def conjugacy_class_id(self, a: int) -> int:
        return self._class_id[a]

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        return self._classes

    def sigma_of_element(self, a: int) -> frozenset[int]:
        return self._sigma[a]

    def is_abelian(self) -> bool:
        return all(len(c) == 1 for c in self._classes)


class Automorphism:
    """A group automorphism stored as the full image permutation."""

    __slots__ = ("group", "perm")

    def __init__(self, group: FiniteGroup, perm: Sequence[int]):
        self.group = group
        self.perm = tuple(perm)

    def __call__(self, a: int) -> int:
        return self.perm[a]

    def apply(self, ids: Sequence[int]) -> tuple[int, ...]:
        perm = self.perm
        return tuple(perm[a] for a in ids)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Automorphism) and self.perm == other.perm and self.group == other.group

    def __hash__(self) -> int:
        return hash(self.perm)

    def __repr__(self) -> str:
        return f"<Automorphism of {self.group.name}: {self.perm}>"


def _basis_image_perm(rank: int, images: Sequence[int]) -> tuple[int, ...]:
    """Permutation on ids induced by sending basis bit i to images[i]."""
    perm = [0] * (1 << rank)
    for x in range(1, 1 << rank):
        low = x & -x
        perm[x] = perm[x ^ low] ^ images[low.bit_length() - 1]
    return tuple(perm)


def _iter_gl_basis_images(rank: int) -> Iterator[tuple[int, ...]]:
    """All ordered bases of F_2^rank, in lexicographic order."""
    n = 1 << rank
    chosen: list[int] = []
    span = {0}

    def rec() -> Iterator[tuple[int, ...]]:
        if len(chosen) == rank:
            yield tuple(chosen)
            return
        for v in range(1, n):
            if v in span:
                continue
            added = [s ^ v for s in span]
            span.update(added)
            chosen.append(v)
            yield from rec()
            chosen.pop()
            span.difference_update(added)

    yield from rec()


def _minimal_generating_ids(group: TableGroup) -> list[int]:
    gens: list[int] = []
    closure = {0}
    for a in group.elements():
        if a in closure:
            continue
        gens.append(a)
        frontier = list(closure)
        closure.add(a)
        frontier.append(a)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = group.mul(x, g)
                    if y not in closure:
                        closure.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(closure) == group.order:
            break
    return gens


def _table_automorphisms(group: TableGroup, max_count: int) -> list[Automorphism]:
    """Backtracking over generator images, pruned by partial isomorphism."""
    gens = _minimal_generating_ids(group)
    if not gens:
        return [Automorphism(group, range(group.order))]
    n = group.order

    # words[x] = (prev, gen_index) with x = prev * gens[gen_index], BFS order
    words: dict[int, tuple[int, int]] = {0: (-1, -1)}
    bfs_order = [0]
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = group.mul(x, g)
                if y not in words:
                    words[y] = (x, gi)
                    bfs_order.append(y)
                    nxt.append(y)
        frontier = nxt

    by_order: dict[int, list[int]] = {}
    for a in group.elements():
        by_order.setdefault(group.element_order(a), []).append(a)

    found: list[Automorphism] = []

    def build(images: list[int]) -> tuple[int, ...] | None:
        perm = [-1] * n
        perm[0] = 0
        for x in bfs_order[1:]:
            prev, gi = words[x]
            perm[x] = group.mul(perm[prev], images[gi])
        if sorted(perm) != list(range(n)):
            return None
        for a in range(n):
            pa = perm[a]
            row = group.table[a]
            for b in range(n):
                if perm[row[b]] != group.mul(pa, perm[b]):
                    return None
        return tuple(perm)

    def rec(idx: int, images: list[int]) -> None:
        if idx == len(gens):
            if not group.generates(images):
                return
            perm = build(images)
            if perm is not None:
                if len(found) >= max_count:
                    raise CapacityError(
                        f"more than {max_count} automorphisms on {group.name}; raise the cap"
                    )
                found.append(Automorphism(group, perm))
            return
        target_order = group.element_order(gens[idx])
        for cand in by_order.get(target_order, ()):
            images.append(cand)
            rec(idx + 1, images)
            images.pop()

    rec(0, [])
    return found


def automorphisms(group: FiniteGroup, max_count: int = 1_000_000) -> list[Automorphism]:
    """Enumerate Aut(G) exactly.

    Elementary-abelian groups go through ordered-basis enumeration of
    GL(rank, 2); ranks above 8 are refused outright.  Table groups go through
    generator-image backtracking, capped at ``max_count`` results.
    """
    if isinstance(group, ElementaryAbelianGroup):
        if group.rank > MAX_AUTOMORPHISM_RANK:
            raise CapacityError(
                f"automorphism enumeration supports rank <= {MAX_AUTOMORPHISM_RANK}, got {group.rank}"
            )
        out = []
        for images in _iter_gl_basis_images(group.rank):
            if len(out) >= max_count:
                raise CapacityError(f"more than {max_count} automorphisms on {group.name}; raise the cap")
            out.append(Automorphism(group, _basis_image_perm(group.rank, images)))
        return out
    if isinstance(group, TableGroup):
        return _table_automorphisms(group, max_count)
    raise UsageError(f"unsupported group type {type(group).__name__}")


def automorphism_generators(group: FiniteGroup) -> list[Automorphism]:
    """A small generating set for Aut(G), for lazy orbit walks at scale.

    For (Z/2Z)^k this is the standard two-element generating set of GL(k, 2):
    the cyclic basis rotation and one transvection.  Table groups fall back to
    the full enumeration; they are small by construction.
    """
    if isinstance(group, ElementaryAbelianGroup):
        k = group.rank
        if k == 1:
            return [Automorphism(group, _basis_image_perm(1, [1]))]
        rotation = [1 << ((i + 1) % k) for i in range(k)]
        transvection = [1 << i for i in range(k)]
        transvection[0] = (1 << 0) | (1 << 1)
        gens = [Automorphism(group, _basis_image_perm(k, rotation))]
        if k >= 2:
            gens.append(Automorphism(group, _basis_image_perm(k, transvection)))
        return gens
    return automorphisms(group)


_GROUP_SPEC_RE = re.compile(r"^Z2\^(\d+)$")


def is_group_token(text: str) -> bool:
    """True when the string is a Z2^k token rather than a file path."""
    return _GROUP_SPEC_RE.match(text.strip()) is not None


def parse_group_spec(text: str) -> ElementaryAbelianGroup:
    """Parse the elementary-abelian token ``Z2^k``."""
    m = _GROUP_SPEC_RE.match(text.strip())
    if not m:
        raise UsageError(f"unrecognized group spec {text!r}; expected Z2^k")
    return ElementaryAbelianGroup(int(m.group(1)))


def load_group_file(path: str) -> TableGroup:
    """Load a multiplication table file.

    Line 1 holds the order n; the next n lines hold n ids each, row-major,
    with table[g][h] = g*h and element 0 the identity.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise UsageError(f"cannot read group file {path}: {exc}") from exc
    if not lines:
        raise UsageError(f"group file {path} is empty")
    try:
        n = int(lines[0])
    except ValueError:
        raise UsageError(f"group file {path}: first line must be the order, got {lines[0]!r}")
    if len(lines) != n + 1:
        raise UsageError(f"group file {path}: expected {n} table rows, found {len(lines) - 1}")
    table = []
    for i, ln in enumerate(lines[1:], start=1):
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise UsageError(f"group file {path}: line {i + 1} holds a non-integer token")
        table.append(row)
    try:
        return TableGroup(table, name=path)
    except UsageError as exc:
        raise UsageError(f"group file {path}: {exc}") from exc


def load_group(spec: str) -> FiniteGroup:
    """Resolve a CLI-style group argument: a Z2^k token or a table file path."""
    if _GROUP_SPEC_RE.match(spec.strip()):
        return parse_group_spec(spec)
    return load_group_file(spec)


def cyclic_table(n: int, name: str = "") -> TableGroup:
    """Z/nZ as a table group."""
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return TableGroup(table, name=name or f"Z{n}")


def _perm_group_table(perms: list[tuple[int, ...]], name: str) -> TableGroup:
    """Close a set of permutations under left-to-right composition."""
    degree = len(perms[0])
    identity = tuple(range(degree))
    elems = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for q in perms:
                # left-to-right: apply p first, then q
                r = tuple(q[p[i]] for i in range(degree))
                if r not in index:
                    index[r] = len(elems)
                    elems.append(r)
                    nxt.append(r)
        frontier = nxt
    table = []
    for p in elems:
        row = []
        for q in elems:
            r = tuple(q[p[i]] for i in range(degree))
            row.append(index[r])
        table.append(row)
    return TableGroup(table, name=name)


def s3() -> TableGroup:
    """The symmetric group on three letters, order 6."""
    return _perm_group_table([(1, 0, 2), (1, 2, 0)], "S3")


def d4() -> TableGroup:
    """The dihedral group of the square, order 8."""
    return _perm_group_table([(1, 2, 3, 0), (1, 0, 3, 2)], "D4")


def q8() -> TableGroup:
    """The quaternion group, order 8."""
    # ids 0..7 = 1, -1, i, -i, j, -j, k, -k
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    rules = {
        ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
        ("i", "1"): "i", ("j", "1"): "j", ("k", "1"): "k",
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def compose(a: str, b: str) -> str:
        neg = a.startswith("-") ^ b.startswith("-")
        prod = rules[(a.lstrip("-"), b.lstrip("-"))]
        neg ^= prod.startswith("-")
        prod = prod.lstrip("-")
        return "-" + prod if neg else prod

    index = {nm: i for i, nm in enumerate(names)}
    table = [[index[compose(a, b)] for b in names] for a in names]
    return TableGroup(table, name="Q8")
