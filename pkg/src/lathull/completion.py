"""Distributive joins, distributive ideals and the distributive hull DI(L).

Also the MacNeille completion, the downset lattice I(L), and a checker for
the implicit characterization of distributive hulls.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .bits import members, set_key, submasks
from .errors import InputError
from .order_core import (
    BoundedLattice,
    LatticeMap,
    Poset,
    SetCompletion,
    SetLattice,
    check_cap,
    check_map,
)


def distributive_join_witness(L: BoundedLattice, A: int) -> Optional[int]:
    """First ``b`` with ``b <= join(A)`` and ``b != join{b ^ a | a in A}``, else None."""
    J = L.join_set(A)
    M, Jt = L.meet_table, L.join_table
    for b in members(L.down[J]):
        r = L.bottom
        for a in members(A):
            r = Jt[r][M[b][a]]
        if r != b:
            return b
    return None


def is_distributive_join(L: BoundedLattice, A: int) -> bool:
    return distributive_join_witness(L, A) is None


def is_distributive_join_all_b(L: BoundedLattice, A: int) -> bool:
    """The unrestricted form: ``b ^ join(A) == join{b ^ a}`` for every ``b``."""
    J = L.join_set(A)
    for b in range(L.n):
        if L.meet(b, J) != L.join_set(_meet_image(L, b, A)):
            return False
    return True


def _meet_image(L: BoundedLattice, b: int, A: int) -> int:
    out = 0
    for a in members(A):
        out |= 1 << L.meet(b, a)
    return out


def subset_joins(L: BoundedLattice) -> tuple[int, ...]:
    """``join_set`` of every subset, indexed by mask."""
    check_cap(L.n, "hull")
    return _subset_joins(L)


@lru_cache(maxsize=64)
def _subset_joins(L: BoundedLattice) -> tuple[int, ...]:
    Jt = L.join_table
    out = [L.bottom] * (1 << L.n)
    for S in range(1, 1 << L.n):
        low = (S & -S).bit_length() - 1
        out[S] = Jt[out[S & (S - 1)]][low]
    return tuple(out)


def distributive_flags(L: BoundedLattice) -> bytes:
    """Byte ``S`` is 1 iff the subset with mask ``S`` has a distributive join."""
    check_cap(L.n, "hull")
    return _distributive_flags(L)


@lru_cache(maxsize=64)
def _distributive_flags(L: BoundedLattice) -> bytes:
    joins = subset_joins(L)
    M, Jt = L.meet_table, L.join_table
    size = 1 << L.n
    ok = bytearray(b"\x01") * size
    for b in range(L.n):
        row = M[b]
        g = [L.bottom] * size  # g[S] = join{b ^ a | a in S}
        for S in range(1, size):
            low = (S & -S).bit_length() - 1
            g[S] = Jt[g[S & (S - 1)]][row[low]]
        for S in range(size):
            if ok[S] and L.leq(b, joins[S]) and g[S] != b:
                ok[S] = 0
    return bytes(ok)


def distributive_subsets(L: BoundedLattice) -> tuple[int, ...]:
    """Every subset (as a mask) that has a distributive join, in mask order."""
    flags = distributive_flags(L)
    return tuple(S for S in range(len(flags)) if flags[S])


def is_distributive_ideal(L: BoundedLattice, mask: int) -> bool:
    if mask == 0 or not L.is_downset(mask):
        return False
    flags, joins = distributive_flags(L), subset_joins(L)
    return all(mask >> joins[B] & 1 for B in submasks(mask) if flags[B])


@dataclass(frozen=True)
class DistributiveIdeal:
    base: BoundedLattice
    members: int

    def __post_init__(self):
        if not is_distributive_ideal(self.base, self.members):
            raise InputError(f"{self.base.fmt(self.members)} is not a distributive ideal")

    def __contains__(self, a: int) -> bool:
        return bool(self.members >> a & 1)

    def __str__(self):
        return self.base.fmt(self.members)


def di_closure_mask(L: BoundedLattice, A: int) -> int:
    """Least distributive ideal containing ``A`` (``{0}`` for the empty set)."""
    flags, joins = distributive_flags(L), subset_joins(L)
    X = L.downset(A) | L.down[L.bottom]
    while True:
        added = 0
        for B in submasks(X):
            if flags[B] and not X >> joins[B] & 1:
                added |= L.down[joins[B]]
        if not added:
            return X
        X |= added


def di_closure(L: BoundedLattice, A: int) -> DistributiveIdeal:
    return DistributiveIdeal(L, di_closure_mask(L, A))


def _closed_chunk(args) -> list[int]:
    L, candidates = args
    flags, joins = distributive_flags(L), subset_joins(L)
    out = []
    for D in candidates:
        if all(D >> joins[B] & 1 for B in submasks(D) if flags[B]):
            out.append(D)
    return out


def ideal_masks(L: BoundedLattice, workers: int = 1) -> tuple[int, ...]:
    """All distributive ideals of ``L`` in canonical order."""
    check_cap(L.n, "hull")
    candidates = [D for D in L.iter_downsets() if D]
    if workers > 1 and len(candidates) > 64:
        step = -(-len(candidates) // workers)
        chunks = [(L, candidates[i : i + step]) for i in range(0, len(candidates), step)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            found = [D for part in ex.map(_closed_chunk, chunks) for D in part]
    else:
        found = _closed_chunk((L, candidates))
    return tuple(sorted(found, key=set_key))


class HullLattice(SetCompletion):
    """DI(L) materialized as a lattice; element ``i`` is the ideal ``sets[i]``."""

    def ideal(self, i: int) -> DistributiveIdeal:
        return DistributiveIdeal(self.base, self.sets[i])

    def ideals(self) -> tuple[DistributiveIdeal, ...]:
        return tuple(self.ideal(i) for i in range(self.n))

    def principal(self, a: int) -> int:
        """Hull element of the principal ideal of base element ``a``."""
        return self.embedding.table[a]


@lru_cache(maxsize=32)
def _hull_cached(L: BoundedLattice) -> HullLattice:
    return HullLattice(ideal_masks(L), L.labels, L, lambda a: L.down[a])


def distributive_ideals(L: BoundedLattice, workers: int = 1) -> HullLattice:
    """The distributive hull DI(L) with its embedding ``a -> down(a)``."""
    # checked here as well because a cached hull would otherwise skip the cap
    check_cap(L.n, "hull")
    if workers > 1:
        return HullLattice(ideal_masks(L, workers), L.labels, L, lambda a: L.down[a])
    return _hull_cached(L)


def macneille(p: Poset) -> SetCompletion:
    """Intersections of principal downsets (the full set included), by inclusion."""
    check_cap(p.n, "hull")
    family = {p.all} | set(p.down)
    frontier = set(family)
    while frontier:
        new = set()
        for s in frontier:
            for t in family:
                x = s & t
                if x not in family and x not in new:
                    new.add(x)
        family |= new
        frontier = new
    named = {p.down[a]: p.labels[a] for a in range(p.n)}
    sets = sorted(family, key=set_key)
    labels = [named.get(s) or p.fmt(s) for s in sets]
    if len(set(labels)) != len(labels):
        labels = [p.fmt(s) for s in sets]
    return SetCompletion(sets, p.labels, p, lambda a: p.down[a], labels)


def downset_lattice(L: Poset, include_empty: bool = False) -> SetCompletion:
    """The downset completion I(L), with embedding ``a -> down(a)``.

    By default only nonempty downsets are taken, so that the bottom is
    ``{0}`` and ``a -> down(a)`` is balanced; ``include_empty`` adds the empty set.
    """
    check_cap(L.n, "hull")
    sets = [D for D in L.iter_downsets() if D or include_empty]
    return SetCompletion(sets, L.labels, L, lambda a: L.down[a])


@dataclass(frozen=True)
class HullReport:
    balanced_inf_embedding: bool
    join_dense: bool
    preserves_distributive_joins: bool
    complete_heyting: bool
    join_dense_witness: Optional[int] = None
    distributive_join_witness: Optional[int] = None

    @property
    def is_hull(self) -> bool:
        return (
            self.balanced_inf_embedding
            and self.join_dense
            and self.preserves_distributive_joins
            and self.complete_heyting
        )


def verify_hull(L: BoundedLattice, H: BoundedLattice, e: LatticeMap) -> HullReport:
    """Check the implicit characterization of ``H`` as the distributive hull of ``L``."""
    from .heyting import heyting_status

    if e.source != L or e.target != H:
        raise InputError("embedding must map L to H")
    emb = check_map(e).balanced_inf_embedding
    t = e.table
    dense_wit = None
    for h in range(H.n):
        below = 0
        for b in range(L.n):
            if H.leq(t[b], h):
                below |= 1 << t[b]
        if H.join_set(below) != h:
            dense_wit = h
            break
    dist_wit = None
    for A in distributive_subsets(L):
        if t[L.join_set(A)] != H.join_set(e.image(A)):
            dist_wit = A
            break
    return HullReport(
        balanced_inf_embedding=emb,
        join_dense=dense_wit is None,
        preserves_distributive_joins=dist_wit is None,
        complete_heyting=heyting_status(H).is_complete_heyting,
        join_dense_witness=dense_wit,
        distributive_join_witness=dist_wit,
    )
