"""Operational resolution on DI(L), DJD subobjects, and the lattice <-> (hull, closure) bijection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bits import mask_of, members
from .completion import (
    HullLattice,
    distributive_ideals,
    distributive_subsets,
    is_distributive_ideal,
)
from .errors import AlarmError, InvalidMapError
from .heyting import heyting_status
from .order_core import (
    BoundedLattice,
    LatticeMap,
    as_lattice,
    find_isomorphism,
    is_closure,
    is_meet_closed,
)


def operational_resolution(hull: HullLattice) -> LatticeMap:
    """``A -> down(join_L A)`` on the distributive ideals of the base lattice."""
    L = hull.base
    return LatticeMap(
        hull, hull, tuple(hull.principal(L.join_set(A)) for A in hull.sets)
    )


def resolution_via_hull(hull: HullLattice) -> LatticeMap:
    """``a -> join_L{c in L | c <= a}`` computed inside the hull lattice itself."""
    L = hull.base
    table = []
    for h in range(hull.n):
        below = mask_of(c for c in range(L.n) if hull.leq(hull.principal(c), h))
        table.append(hull.principal(L.join_set(below)))
    return LatticeMap(hull, hull, tuple(table))


@dataclass(frozen=True)
class DJDResult:
    holds: bool
    join_dense: bool
    ideals_distributive: bool
    preserves_distributive_joins: bool
    witness: Optional[int] = None  # hull element where a check failed

    def __bool__(self):
        return self.holds


def is_djd(H: BoundedLattice, M: int) -> DJDResult:
    """Whether the meet-closed subset ``M`` is distributive-join-dense in ``H``.

    The ideal-wise condition and the preservation of distributive joins are
    both computed; they must agree.
    """
    if not is_meet_closed(H, M):
        raise InvalidMapError(f"{H.fmt(M)} is not meet-closed with top")
    sub_p, keep = H.sub_poset(M)
    sub = as_lattice(sub_p)
    dense_wit = None
    ideal_wit = None
    for h in range(H.n):
        below = mask_of(m for m in keep if H.leq(m, h))
        if dense_wit is None and H.join_set(below) != h:
            dense_wit = h
        local = mask_of(i for i, m in enumerate(keep) if H.leq(m, h))
        if ideal_wit is None and not is_distributive_ideal(sub, local):
            ideal_wit = h
    preserves = True
    for B in distributive_subsets(sub):
        in_h = mask_of(keep[i] for i in members(B))
        if keep[sub.join_set(B)] != H.join_set(in_h):
            preserves = False
            break
    if preserves != (ideal_wit is None):
        raise AlarmError("DJD ideal condition and distributive-join preservation disagree")
    return DJDResult(
        holds=dense_wit is None and preserves,
        join_dense=dense_wit is None,
        ideals_distributive=ideal_wit is None,
        preserves_distributive_joins=preserves,
        witness=dense_wit if dense_wit is not None else ideal_wit,
    )


@dataclass(frozen=True)
class ResolutionPair:
    """A complete Heyting algebra with a closure on it."""

    hull: BoundedLattice
    closure: LatticeMap

    def problems(self) -> list[str]:
        out = []
        if self.closure.source != self.hull or self.closure.target != self.hull:
            return ["closure is not an endomap of the hull"]
        if not heyting_status(self.hull):
            out.append("hull is not complete Heyting")
        flags = is_closure(self.closure)
        if not (flags.is_closure and flags.normalized):
            out.append("map is not a normalized closure")
        elif not is_djd(self.hull, self.closure.range()):
            out.append("closure range is not DJD")
        return out


def theta(L: BoundedLattice, workers: int = 1) -> ResolutionPair:
    """``L -> (DI(L), R)``."""
    hull = distributive_ideals(L, workers)
    return ResolutionPair(hull, operational_resolution(hull))


def theta_star(pair: ResolutionPair) -> BoundedLattice:
    """The range of the closure, as a lattice with the induced order."""
    bad = pair.problems()
    if bad:
        raise InvalidMapError("; ".join(bad))
    sub, _ = pair.hull.sub_poset(pair.closure.range())
    return as_lattice(sub)


def range_join_matches_closure(pair: ResolutionPair) -> bool:
    """Joins in the closure range equal the closure of hull joins."""
    H, F = pair.hull, pair.closure
    sub, keep = H.sub_poset(F.range())
    R = as_lattice(sub)
    for a in range(R.n):
        for b in range(R.n):
            if keep[R.join(a, b)] != F(H.join(keep[a], keep[b])):
                return False
    return True


def roundtrip_lattice(L: BoundedLattice) -> Optional[LatticeMap]:
    """Isomorphism ``L -> theta_star(theta(L))`` if one exists."""
    return find_isomorphism(L, theta_star(theta(L)))


def roundtrip_pair(pair: ResolutionPair) -> Optional[LatticeMap]:
    """Closure-commuting isomorphism from ``pair`` to ``theta(theta_star(pair))``."""
    back = theta(theta_star(pair))
    return find_isomorphism(pair.hull, back.hull, [(pair.closure.table, back.closure.table)])
