"""Finite posets and bounded lattices, maps between them, closures and adjoints.

Elements are integers ``0..n-1`` in declaration order; subsets are bitmasks.
Every structure is immutable after construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .bits import full, mask_of, members, popcount, set_key
from .errors import (
    CapExceededError,
    CycleError,
    InputError,
    InvalidMapError,
    NotALatticeError,
)


@dataclass
class Limits:
    """Size caps for subset-enumerating algorithms; exceeding one is an input error."""

    hull: int = 16
    lattice: int = 24


LIMITS = Limits()


def set_limits(hull: Optional[int] = None, lattice: Optional[int] = None) -> None:
    if hull is not None:
        LIMITS.hull = hull
    if lattice is not None:
        LIMITS.lattice = lattice


def check_cap(n: int, kind: str = "hull", what: str = "structure") -> None:
    cap = getattr(LIMITS, kind)
    if n > cap:
        raise CapExceededError(n, cap, what)


class Poset:
    """A finite partial order.

    ``up[i]`` is the mask of elements ``>= i`` and ``down[i]`` the mask of
    elements ``<= i``.
    """

    def __init__(self, labels: Sequence[str], up: Sequence[int]):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        if len(set(labels)) != n:
            dup = next(x for x in labels if labels.count(x) > 1)
            raise InputError(f"duplicate label {dup!r}")
        if len(up) != n:
            raise InputError("order table size does not match label count")
        up = tuple(int(u) & full(n) for u in up)
        down = [0] * n
        for i in range(n):
            for j in members(up[i]):
                down[j] |= 1 << i
        for i in range(n):
            if not up[i] >> i & 1:
                raise InputError(f"order is not reflexive at {labels[i]!r}")
            for j in members(up[i]):
                if j != i and up[j] >> i & 1:
                    raise CycleError(
                        f"cycle detected between {labels[i]!r} and {labels[j]!r}"
                    )
                if up[j] & ~up[i]:
                    raise InputError(f"order is not transitive through {labels[j]!r}")
        self.labels = labels
        self.n = n
        self.up = up
        self.down = tuple(down)
        self.index = {x: i for i, x in enumerate(labels)}
        self._by_down = {d: i for i, d in enumerate(self.down)}
        self._by_up = {u: i for i, u in enumerate(self.up)}
        self._hash = hash((labels, up))

    # identity -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.up == other.up

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self.n} elements: {' '.join(self.labels)})"

    def __len__(self):
        return self.n

    # labels -------------------------------------------------------------

    def idx(self, label) -> int:
        if isinstance(label, int):
            return label
        try:
            return self.index[label]
        except KeyError:
            raise InputError(f"unknown label {label!r}") from None

    def mask(self, labels: Iterable) -> int:
        return mask_of(self.idx(x) for x in labels)

    def fmt(self, mask: int) -> str:
        return "{" + ",".join(self.labels[i] for i in members(mask)) + "}"

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in members(mask)]

    # order queries --------------------------------------------------------

    @property
    def all(self) -> int:
        return full(self.n)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def downset(self, mask: int) -> int:
        out = 0
        for i in members(mask):
            out |= self.down[i]
        return out

    def upset(self, mask: int) -> int:
        out = 0
        for i in members(mask):
            out |= self.up[i]
        return out

    def is_downset(self, mask: int) -> bool:
        return self.downset(mask) == mask

    def lower_bounds(self, mask: int) -> int:
        out = self.all
        for i in members(mask):
            out &= self.down[i]
        return out

    def upper_bounds(self, mask: int) -> int:
        out = self.all
        for i in members(mask):
            out &= self.up[i]
        return out

    def inf(self, mask: int) -> Optional[int]:
        """Greatest lower bound of ``mask`` if it exists."""
        return self._by_down.get(self.lower_bounds(mask))

    def sup(self, mask: int) -> Optional[int]:
        return self._by_up.get(self.upper_bounds(mask))

    def covers_of(self, a: int) -> int:
        """Mask of the elements covering ``a``."""
        above = self.up[a] & ~(1 << a)
        out = 0
        for b in members(above):
            if not (above & self.down[b] & ~(1 << b)):
                out |= 1 << b
        return out

    def lower_covers(self, b: int) -> int:
        below = self.down[b] & ~(1 << b)
        out = 0
        for a in members(below):
            if not (below & self.up[a] & ~(1 << a)):
                out |= 1 << a
        return out

    def is_covered_by(self, a: int, b: int) -> bool:
        return bool(self.covers_of(a) >> b & 1)

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in members(self.covers_of(a))]

    def minimal(self) -> int:
        return mask_of(i for i in range(self.n) if popcount(self.down[i]) == 1)

    def maximal(self) -> int:
        return mask_of(i for i in range(self.n) if popcount(self.up[i]) == 1)

    def heights(self) -> tuple[int, ...]:
        """Length of the longest chain from a minimal element up to each element."""
        h = [0] * self.n
        for i in sorted(range(self.n), key=lambda i: popcount(self.down[i])):
            lc = self.lower_covers(i)
            h[i] = 1 + max((h[j] for j in members(lc)), default=-1)
        return tuple(h)

    def depths(self) -> tuple[int, ...]:
        d = [0] * self.n
        for i in sorted(range(self.n), key=lambda i: popcount(self.up[i])):
            uc = self.covers_of(i)
            d[i] = 1 + max((d[j] for j in members(uc)), default=-1)
        return tuple(d)

    def invariants(self) -> tuple[tuple[int, ...], ...]:
        """Per-element isomorphism invariants used to prune searches."""
        h, d = self.heights(), self.depths()
        return tuple(
            (
                h[i],
                d[i],
                popcount(self.down[i]),
                popcount(self.up[i]),
                popcount(self.lower_covers(i)),
                popcount(self.covers_of(i)),
            )
            for i in range(self.n)
        )

    def linear_extension(self) -> list[int]:
        return sorted(range(self.n), key=lambda i: (popcount(self.down[i]), i))

    def iter_downsets(self) -> list[int]:
        """All downsets (including the empty one), via top-down include/exclude recursion."""
        order = self.linear_extension()[::-1]
        out: list[int] = []

        def rec(k: int, chosen: int) -> None:
            if k == len(order):
                out.append(chosen)
                return
            x = order[k]
            if chosen & self.up[x] & ~(1 << x):
                rec(k + 1, chosen | 1 << x)
                return
            rec(k + 1, chosen)
            rec(k + 1, chosen | 1 << x)

        rec(0, 0)
        return sorted(out, key=set_key)

    def sub_poset(self, mask: int) -> tuple["Poset", tuple[int, ...]]:
        """Induced sub-order on ``mask``; also returns new-index -> old-index."""
        keep = tuple(members(mask))
        pos = {old: new for new, old in enumerate(keep)}
        up = [mask_of(pos[j] for j in members(self.up[i] & mask)) for i in keep]
        return Poset([self.labels[i] for i in keep], up), keep


def build_poset(labels: Sequence[str], covers: Iterable[tuple[str, str]]) -> Poset:
    """Poset generated by the reflexive-transitive closure of ``covers``."""
    labels = [str(x) for x in labels]
    if len(set(labels)) != len(labels):
        dup = next(x for x in labels if labels.count(x) > 1)
        raise InputError(f"duplicate label {dup!r}")
    index = {x: i for i, x in enumerate(labels)}
    n = len(labels)
    up = [1 << i for i in range(n)]
    for lo, hi in covers:
        for x in (lo, hi):
            if x not in index:
                raise InputError(f"unknown label {x!r}")
        up[index[lo]] |= 1 << index[hi]
    # Warshall closure on bit rows
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    for i in range(n):
        for j in members(up[i]):
            if j != i and up[j] >> i & 1:
                raise CycleError(f"cycle detected through {labels[i]!r} and {labels[j]!r}")
    return Poset(labels, up)


def poset_from_leq(labels: Sequence[str], leq: Callable[[int, int], bool]) -> Poset:
    n = len(labels)
    return Poset(labels, [mask_of(j for j in range(n) if leq(i, j)) for i in range(n)])


class BoundedLattice(Poset):
    """A finite lattice with precomputed meet and join tables."""

    def __init__(self, labels: Sequence[str], up: Sequence[int]):
        super().__init__(labels, up)
        n = self.n
        if n == 0:
            raise NotALatticeError("not a lattice: the empty poset has no bottom or top")
        bottom = self.inf(self.all)
        top = self.sup(self.all)
        if bottom is None or top is None:
            raise NotALatticeError("not a lattice: no global bottom/top element")
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                m = self._by_down.get(self.down[a] & self.down[b])
                j = self._by_up.get(self.up[a] & self.up[b])
                if m is None:
                    raise NotALatticeError(
                        f"{self.labels[a]!r} and {self.labels[b]!r} have no greatest lower bound"
                    )
                if j is None:
                    raise NotALatticeError(
                        f"{self.labels[a]!r} and {self.labels[b]!r} have no least upper bound"
                    )
                meet[a][b] = meet[b][a] = m
                join[a][b] = join[b][a] = j
        self.meet_table = tuple(tuple(r) for r in meet)
        self.join_table = tuple(tuple(r) for r in join)
        self.bottom = bottom
        self.top = top

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet_set(self, mask: int) -> int:
        r = self.top
        for i in members(mask):
            r = self.meet_table[r][i]
        return r

    def join_set(self, mask: int) -> int:
        """Least upper bound; ``join_set(0)`` is the bottom."""
        r = self.bottom
        for i in members(mask):
            r = self.join_table[r][i]
        return r

    def atoms(self) -> int:
        return self.covers_of(self.bottom)

    def join_irreducibles(self) -> int:
        return mask_of(i for i in range(self.n) if popcount(self.lower_covers(i)) == 1)

    def is_distributive(self) -> bool:
        M, J = self.meet_table, self.join_table
        r = range(self.n)
        return all(M[a][J[b][c]] == J[M[a][b]][M[a][c]] for a in r for b in r for c in r)

    def principal(self, a: int) -> int:
        return self.down[a]


def as_lattice(p: Poset) -> BoundedLattice:
    if isinstance(p, BoundedLattice):
        return p
    return BoundedLattice(p.labels, p.up)


def build_lattice(labels: Sequence[str], covers: Iterable[tuple[str, str]]) -> BoundedLattice:
    return as_lattice(build_poset(labels, covers))


def join_set(L: BoundedLattice, mask: int) -> int:
    return L.join_set(mask)


def meet_set(L: BoundedLattice, mask: int) -> int:
    return L.meet_set(mask)


def covers_of(L: Poset, a: int) -> int:
    return L.covers_of(a)


def is_covered_by(L: Poset, a: int, b: int) -> bool:
    return L.is_covered_by(a, b)


class SetLattice(BoundedLattice):
    """A lattice of subsets of a labelled ground set, ordered by inclusion."""

    def __init__(
        self,
        sets: Iterable[int],
        ground: Sequence[str],
        labels: Optional[Sequence[str]] = None,
    ):
        sets = sorted(set(sets), key=set_key)
        ground = tuple(ground)
        if labels is None:
            labels = [_fmt_set(ground, s) for s in sets]
        n = len(sets)
        up = [mask_of(j for j in range(n) if sets[i] & ~sets[j] == 0) for i in range(n)]
        super().__init__(labels, up)
        self.sets = tuple(sets)
        self.ground = ground
        self.index_of_set = {s: i for i, s in enumerate(sets)}

    def of(self, subset: int) -> int:
        try:
            return self.index_of_set[subset]
        except KeyError:
            raise InputError(f"{_fmt_set(self.ground, subset)} is not an element") from None


def _fmt_set(ground: Sequence[str], mask: int) -> str:
    return "{" + ",".join(ground[i] for i in members(mask)) + "}"


class SetCompletion(SetLattice):
    """A set lattice together with the embedding of the structure it extends."""

    def __init__(self, sets, ground, base: Poset, image: Callable[[int], int], labels=None):
        super().__init__(sets, ground, labels)
        self.base = base
        self.embedding = LatticeMap(base, self, tuple(self.of(image(a)) for a in range(base.n)))


# maps ----------------------------------------------------------------------


@dataclass(frozen=True)
class LatticeMap:
    source: Poset
    target: Poset
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.source.n:
            raise InvalidMapError("map table is not total on its source")
        if any(not 0 <= t < self.target.n for t in self.table):
            raise InvalidMapError("map table refers outside its target")

    def __call__(self, a: int) -> int:
        return self.table[a]

    def image(self, mask: int) -> int:
        return mask_of(self.table[i] for i in members(mask))

    def range(self) -> int:
        return self.image(self.source.all)

    def then(self, other: "LatticeMap") -> "LatticeMap":
        if other.source != self.target:
            raise InvalidMapError("composition mismatch")
        return LatticeMap(self.source, other.target, tuple(other.table[t] for t in self.table))

    def describe(self) -> list[str]:
        return [
            f"{self.source.labels[a]} -> {self.target.labels[b]}" for a, b in enumerate(self.table)
        ]

    @classmethod
    def identity(cls, p: Poset) -> "LatticeMap":
        return cls(p, p, tuple(range(p.n)))

    @classmethod
    def from_labels(cls, source: Poset, target: Poset, pairs: dict) -> "LatticeMap":
        return cls(source, target, tuple(target.idx(pairs[x]) for x in source.labels))


@dataclass(frozen=True)
class PreservationReport:
    injective: bool
    isotone: bool
    order_embedding: bool
    binary_meets: bool
    all_meets: bool
    binary_joins: bool
    all_joins: bool
    balanced: bool
    top: bool

    @property
    def inf_embedding(self) -> bool:
        return self.injective and self.all_meets

    @property
    def balanced_inf_embedding(self) -> bool:
        return self.inf_embedding and self.balanced


def check_map(f: LatticeMap) -> PreservationReport:
    """Independent preservation flags.

    On finite lattices, preserving binary meets plus the empty meet (top) is
    the same as preserving all meets; dually for joins. For poset sources,
    only the meets/joins that exist in the source are considered.
    """
    S, T, t = f.source, f.target, f.table
    r = range(S.n)
    injective = len(set(t)) == S.n
    isotone = all(T.leq(t[a], t[b]) for a in r for b in r if S.leq(a, b))
    embedding = all(S.leq(a, b) == T.leq(t[a], t[b]) for a in r for b in r)

    def pres(op_s, op_t) -> bool:
        for a in r:
            for b in r:
                m = op_s(1 << a | 1 << b)
                if m is None:
                    continue
                if op_t(1 << t[a] | 1 << t[b]) != t[m]:
                    return False
        return True

    bin_meets = pres(S.inf, T.inf)
    bin_joins = pres(S.sup, T.sup)
    s_top, s_bot = S.inf(0), S.sup(0)
    top = s_top is None or t[s_top] == T.inf(0)
    balanced = s_bot is None or t[s_bot] == T.sup(0)
    return PreservationReport(
        injective=injective,
        isotone=isotone,
        order_embedding=embedding,
        binary_meets=bin_meets,
        all_meets=bin_meets and top,
        binary_joins=bin_joins,
        all_joins=bin_joins and balanced,
        balanced=balanced,
        top=top,
    )


@dataclass(frozen=True)
class ClosureFlags:
    isotone: bool
    increasing: bool
    idempotent: bool
    normalized: bool

    @property
    def is_closure(self) -> bool:
        return self.isotone and self.increasing and self.idempotent


def is_closure(f: LatticeMap) -> ClosureFlags:
    if f.source != f.target:
        raise InvalidMapError("closure must be an endomap")
    L, t = f.source, f.table
    r = range(L.n)
    bottom = L.sup(0)
    return ClosureFlags(
        isotone=all(L.leq(t[a], t[b]) for a in r for b in r if L.leq(a, b)),
        increasing=all(L.leq(a, t[a]) for a in r),
        idempotent=all(t[t[a]] == t[a] for a in r),
        normalized=bottom is not None and t[bottom] == bottom,
    )


def is_meet_closed(L: BoundedLattice, M: int) -> bool:
    """``M`` contains the top and is closed under binary meets."""
    if not M >> L.top & 1:
        return False
    return all(M >> L.meet(a, b) & 1 for a in members(M) for b in members(M))


def closure_from_subobject(L: BoundedLattice, M: int) -> LatticeMap:
    """The closure ``a -> meet{b in M | a <= b}`` of a meet-closed subset."""
    if not is_meet_closed(L, M):
        raise InvalidMapError(f"{L.fmt(M)} is not meet-closed with top")
    return LatticeMap(L, L, tuple(L.meet_set(L.up[a] & M) for a in range(L.n)))


def range_lattice(f: LatticeMap) -> tuple[BoundedLattice, tuple[int, ...]]:
    """Materialize the range of an endomap with the induced order."""
    sub, keep = f.source.sub_poset(f.range())
    return as_lattice(sub), keep


@dataclass(frozen=True)
class Adjunction:
    """Outcome of checking ``f(a) <= b  <=>  a <= g(b)`` over all pairs."""

    holds: bool
    witness: Optional[tuple[int, int]]
    failures: tuple[tuple[int, int], ...] = field(default=())

    def __bool__(self):
        return self.holds


def check_adjunction(f: LatticeMap, g: LatticeMap) -> Adjunction:
    """Whether ``f`` is left adjoint to ``g``; failing pairs ``(a, b)`` are listed."""
    L, M = f.source, f.target
    if g.source != M or g.target != L:
        raise InvalidMapError("f: L -> M and g: M -> L required")
    fails = tuple(
        (a, b)
        for a in range(L.n)
        for b in range(M.n)
        if M.leq(f.table[a], b) != L.leq(a, g.table[b])
    )
    return Adjunction(not fails, fails[0] if fails else None, fails)


def left_adjoint(g: LatticeMap) -> LatticeMap:
    """For an inf-preserving ``g: M -> L``, the map ``a -> meet{b | a <= g(b)}``."""
    M, L = g.source, g.target
    if not check_map(g).all_meets:
        raise InvalidMapError("left adjoint requires a map preserving all meets")
    table = []
    for a in range(L.n):
        table.append(M.meet_set(mask_of(b for b in range(M.n) if L.leq(a, g.table[b]))))
    return LatticeMap(L, M, tuple(table))


def right_adjoint(f: LatticeMap) -> LatticeMap:
    """For a sup-preserving ``f: L -> M``, the map ``b -> join{a | f(a) <= b}``."""
    L, M = f.source, f.target
    if not check_map(f).all_joins:
        raise InvalidMapError("right adjoint requires a map preserving all joins")
    table = []
    for b in range(M.n):
        table.append(L.join_set(mask_of(a for a in range(L.n) if M.leq(f.table[a], b))))
    return LatticeMap(M, L, tuple(table))


# isomorphism ---------------------------------------------------------------


def find_isomorphism(
    L: Poset,
    M: Poset,
    ops: Sequence[tuple[Sequence[int], Sequence[int]]] = (),
) -> Optional[LatticeMap]:
    """First order-isomorphism ``L -> M`` in canonical search order, or None.

    ``ops`` lists pairs of unary tables ``(op_L, op_M)`` that the isomorphism
    must intertwine: ``op_M(h(x)) == h(op_L(x))``.
    """
    if L.n != M.n:
        return None
    inv_l, inv_m = L.invariants(), M.invariants()
    if sorted(inv_l) != sorted(inv_m):
        return None
    n = L.n
    cands = {i: [j for j in range(n) if inv_m[j] == inv_l[i]] for i in range(n)}
    order = sorted(range(n), key=lambda i: (len(cands[i]), i))
    h = [-1] * n
    used = [False] * n
    ops = [(tuple(a), tuple(b)) for a, b in ops]

    def consistent(y: int) -> bool:
        hy = h[y]
        for x in range(n):
            hx = h[x]
            if hx < 0:
                continue
            if L.leq(x, y) != M.leq(hx, hy) or L.leq(y, x) != M.leq(hy, hx):
                return False
        for op_l, op_m in ops:
            for x in range(n):
                if h[x] < 0:
                    continue
                ox = op_l[x]
                if (x == y or ox == y) and h[ox] >= 0 and op_m[h[x]] != h[ox]:
                    return False
        return True

    def rec(k: int) -> bool:
        if k == n:
            return True
        y = order[k]
        for c in cands[y]:
            if used[c]:
                continue
            h[y] = c
            used[c] = True
            if consistent(y) and rec(k + 1):
                return True
            h[y] = -1
            used[c] = False
        return False

    if rec(0):
        return LatticeMap(L, M, tuple(h))
    return None


def is_isomorphic(L: Poset, M: Poset, ops=()) -> bool:
    return find_isomorphism(L, M, ops) is not None


def lattice_laws_hold(L: BoundedLattice) -> bool:
    """Commutativity, associativity and absorption of the tables, exhaustively."""
    M, J = L.meet_table, L.join_table
    r = range(L.n)
    for a in r:
        for b in r:
            if M[a][b] != M[b][a] or J[a][b] != J[b][a]:
                return False
            if M[a][J[a][b]] != a or J[a][M[a][b]] != a:
                return False
            for c in r:
                if M[M[a][b]][c] != M[a][M[b][c]] or J[J[a][b]][c] != J[a][J[b][c]]:
                    return False
    return True


def permuted(L: BoundedLattice, perm: Sequence[int]) -> BoundedLattice:
    """Relabel: element ``i`` of the result is element ``perm[i]`` of ``L``."""
    inv = {old: new for new, old in enumerate(perm)}
    up = [mask_of(inv[j] for j in members(L.up[old])) for old in perm]
    return BoundedLattice([L.labels[i] for i in perm], up)


def permutations_within(blocks: Sequence[Sequence[int]]):
    """Orderings that permute only inside each block (blocks kept in order)."""
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        yield [x for p in parts for x in p]
