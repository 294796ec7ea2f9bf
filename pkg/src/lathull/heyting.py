"""Heyting structure on finite lattices and the connectives on DI(L)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .bits import mask_of, members
from .completion import (
    DistributiveIdeal,
    distributive_flags,
    distributive_join_witness,
)
from .errors import AlarmError, NotHeytingError
from .order_core import LIMITS, BoundedLattice, check_cap


@dataclass(frozen=True)
class HeytingStatus:
    is_complete_heyting: bool
    witness: Optional[tuple[int, int]] = None  # (subset mask, element)

    def __bool__(self):
        return self.is_complete_heyting


def heyting_status(L: BoundedLattice) -> HeytingStatus:
    """A finite lattice is complete Heyting iff every subset has a distributive join.

    Distributive lattices take a fast path followed by a spot check over all
    subsets of at most three elements. Otherwise subsets are scanned in mask
    order and the first failing one is returned with its witness element.
    """
    if not L.is_distributive():
        check_cap(L.n, "hull")
    return _heyting_status(L)


@lru_cache(maxsize=256)
def _heyting_status(L: BoundedLattice) -> HeytingStatus:
    if L.is_distributive():
        third = range(L.n) if L.n <= LIMITS.lattice else (None,)
        for a in range(L.n):
            for b in range(a, L.n):
                for c in third:
                    c = b if c is None else c
                    if distributive_join_witness(L, 1 << a | 1 << b | 1 << c) is not None:
                        raise AlarmError("distributive lattice with a non-distributive join")
        return HeytingStatus(True)
    check_cap(L.n, "hull")
    for A in range(1 << L.n):
        w = distributive_join_witness(L, A)
        if w is not None:
            return HeytingStatus(False, (A, w))
    raise AlarmError("non-distributive lattice in which every join is distributive")


def heyting_status_exhaustive(L: BoundedLattice) -> bool:
    """Every subset checked, no fast path."""
    return all(distributive_flags(L))


def _require_heyting(H: BoundedLattice) -> None:
    st = heyting_status(H)
    if not st:
        A, w = st.witness
        raise NotHeytingError(
            f"not a Heyting algebra: join of {H.fmt(A)} is not distributive (witness {H.labels[w]})"
        )


def heyting_arrow(H: BoundedLattice, b: int, c: int) -> int:
    """``b => c``: the largest ``a`` with ``a ^ b <= c``."""
    _require_heyting(H)
    cands = external_implication(H, b, c)
    r = H.join_set(cands)
    if not cands >> r & 1:
        raise AlarmError("Heyting arrow candidate set has no maximum")
    return r


def negation(H: BoundedLattice, a: int) -> int:
    return heyting_arrow(H, a, H.bottom)


def external_implication(L: BoundedLattice, b: int, c: int) -> int:
    """The set ``{a | a ^ b <= c}``; defined on every lattice."""
    return mask_of(a for a in range(L.n) if L.leq(L.meet(a, b), c))


def di_arrow(L: BoundedLattice, B: DistributiveIdeal | int, C: DistributiveIdeal | int) -> DistributiveIdeal:
    """``{a | for all b in B: a ^ b in C}`` on distributive ideals of ``L``."""
    B = B.members if isinstance(B, DistributiveIdeal) else B
    C = C.members if isinstance(C, DistributiveIdeal) else C
    out = 0
    for a in range(L.n):
        if all(C >> L.meet(a, b) & 1 for b in members(B)):
            out |= 1 << a
    return DistributiveIdeal(L, out)


def di_negation(L: BoundedLattice, A: DistributiveIdeal | int) -> DistributiveIdeal:
    return di_arrow(L, A, L.down[L.bottom])


def arrow_table(H: BoundedLattice) -> tuple[tuple[int, ...], ...]:
    check_cap(H.n, "lattice")
    return tuple(tuple(heyting_arrow(H, b, c) for c in range(H.n)) for b in range(H.n))


def has_m3_or_n5(L: BoundedLattice) -> bool:
    """Search for a five-element sublattice shaped like M3 or N5."""
    n = L.n
    for lo in range(n):
        for hi in range(n):
            if not L.lt(lo, hi):
                continue
            mid = [x for x in range(n) if L.lt(lo, x) and L.lt(x, hi)]
            for p in mid:
                for q in mid:
                    if q == p or L.meet(p, q) != lo or L.join(p, q) != hi:
                        continue
                    for r in mid:
                        if r in (p, q) or L.meet(r, q) != lo or L.join(r, q) != hi:
                            continue
                        # M3: r also complements p; N5: p < r
                        if L.lt(p, r) or (L.meet(p, r) == lo and L.join(p, r) == hi):
                            return True
    return False


def negation_de_morgan(H: BoundedLattice) -> bool:
    """The half of De Morgan that holds for Heyting negation: ``~(a v b) = ~a ^ ~b``."""
    r = range(H.n)
    return all(negation(H, H.join(a, b)) == H.meet(negation(H, a), negation(H, b)) for a in r for b in r)
