"""Ortho- and pseudo-orthocomplementations, operational complementation on DI(L),
orthogonality relations, orthomodularity and Sasaki projections."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .bits import mask_of, members
from .completion import HullLattice, distributive_ideals
from .errors import AlarmError, InputError, InvalidMapError
from .order_core import (
    BoundedLattice,
    LatticeMap,
    as_lattice,
    check_adjunction,
    find_isomorphism,
    is_meet_closed,
)
from .resolution import is_djd, operational_resolution


@dataclass(frozen=True)
class OrthoStructure:
    base: BoundedLattice
    prime: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prime", tuple(self.prime))
        if len(self.prime) != self.base.n or any(not 0 <= p < self.base.n for p in self.prime):
            raise InputError("prime table must be total on the lattice")

    @classmethod
    def from_pairs(cls, L: BoundedLattice, pairs: Iterable[tuple[str, str]]) -> "OrthoStructure":
        """``x' = y`` for each pair, symmetrized; must end up total and involutive."""
        prime: list[Optional[int]] = [None] * L.n
        for x, y in pairs:
            i, j = L.idx(x), L.idx(y)
            for a, b in ((i, j), (j, i)):
                if prime[a] is not None and prime[a] != b:
                    raise InputError(f"conflicting ortho entries for {L.labels[a]!r}")
                prime[a] = b
        missing = [L.labels[i] for i, p in enumerate(prime) if p is None]
        if missing:
            raise InputError(f"ortho table is not total: no entry for {missing[0]!r}")
        return cls(L, tuple(prime))

    def __call__(self, a: int) -> int:
        return self.prime[a]

    def as_map(self) -> LatticeMap:
        return LatticeMap(self.base, self.base, self.prime)


@dataclass(frozen=True)
class OrthoFlags:
    oc1: bool
    oc2: bool
    oc3l: bool
    oc3r: bool
    involutive: bool

    @property
    def ortholattice(self) -> bool:
        return self.oc1 and self.oc2 and self.oc3l

    @property
    def pseudo(self) -> bool:
        return self.oc1 and self.oc2 and self.oc3r


def classify_ortho(o: OrthoStructure) -> OrthoFlags:
    L, p = o.base, o.prime
    r = range(L.n)
    return OrthoFlags(
        oc1=all(L.meet(a, p[a]) == L.bottom for a in r),
        oc2=all(L.leq(a, p[p[a]]) for a in r),
        oc3l=all(L.leq(a, b) for a in r for b in r if L.leq(p[b], p[a])),
        oc3r=all(L.leq(p[b], p[a]) for a in r for b in r if L.leq(a, b)),
        involutive=all(p[p[a]] == a for a in r),
    )


@dataclass(frozen=True)
class DerivedLaw:
    name: str
    status: str  # "holds", "hypotheses unmet" or "ALARM"


@dataclass(frozen=True)
class DerivedLaws:
    clauses: tuple[DerivedLaw, ...]

    @property
    def alarms(self) -> list[str]:
        return [c.name for c in self.clauses if c.status == "ALARM"]


def derived_laws_report(o: OrthoStructure) -> DerivedLaws:
    """Derived laws relating OC2, OC3 and involutivity, checked pointwise."""
    L, p = o.base, o.prime
    f = classify_ortho(o)
    r = range(L.n)

    def status(hyp: bool, concl: bool) -> str:
        if not hyp:
            return "hypotheses unmet"
        return "holds" if concl else "ALARM"

    # (i) is an equivalence: check both directions
    biimpl = all(L.leq(a, b) == L.leq(p[b], p[a]) for a in r for b in r)
    left, right = f.oc2 and f.oc3l, f.involutive and biimpl
    s1 = "holds" if left and right else "hypotheses unmet" if not left and not right else "ALARM"
    c2 = all(p[a] == p[p[p[a]]] for a in r) and all(
        L.leq(p[a], p[b]) == L.leq(p[p[b]], p[p[a]]) for a in r for b in r
    )
    h3 = f.oc2 and all(L.meet(p[a], p[p[a]]) == L.bottom for a in r)
    return DerivedLaws(
        (
            DerivedLaw("i", s1),
            DerivedLaw("ii", status(f.oc2 and f.oc3r, c2)),
            DerivedLaw("iii", status(h3, f.oc1)),
        )
    )


def operational_complementation(o: OrthoStructure, hull: Optional[HullLattice] = None) -> LatticeMap:
    """``A -> down((join_L A)')`` on DI(L)."""
    if not classify_ortho(o).ortholattice:
        raise InvalidMapError("operational complementation needs an ortholattice")
    L = o.base
    hull = hull or distributive_ideals(L)
    return LatticeMap(hull, hull, tuple(hull.principal(o.prime[L.join_set(A)]) for A in hull.sets))


def range_ortho(o: OrthoStructure) -> OrthoStructure:
    """Restriction of a pseudo-orthocomplementation to its range, as a lattice."""
    rng = mask_of(o.prime)
    sub, keep = o.base.sub_poset(rng)
    pos = {old: new for new, old in enumerate(keep)}
    R = as_lattice(sub)
    return OrthoStructure(R, tuple(pos[o.prime[old]] for old in keep))


def ortho_from_pseudo(hp: OrthoStructure) -> OrthoStructure:
    """Reverse direction: a pseudo-ortho hull with DJD range gives back an ortholattice.

    Refuses with the first reason found when the data does not qualify.
    """
    from .heyting import heyting_status

    if not heyting_status(hp.base):
        raise InvalidMapError("carrier is not a complete Heyting algebra")
    if not classify_ortho(hp).pseudo:
        raise InvalidMapError("map is not a pseudo-orthocomplementation")
    rng = mask_of(hp.prime)
    if not is_meet_closed(hp.base, rng):
        raise InvalidMapError("range of the map is not meet-closed")
    if not is_djd(hp.base, rng):
        raise InvalidMapError("range of the map is not DJD")
    back = range_ortho(hp)
    if not classify_ortho(back).ortholattice:
        raise InvalidMapError("restriction to the range is not an orthocomplementation")
    return back


def hull_ortho(o: OrthoStructure) -> OrthoStructure:
    """``(DI(L), perp)`` as an ortho-structure on the hull lattice."""
    perp = operational_complementation(o)
    return OrthoStructure(perp.source, perp.table)


@dataclass(frozen=True)
class ComplementRoundTrip:
    pseudo_ortho: bool
    ortholattice_on_hull: bool
    square_is_resolution: bool
    range_is_principal: bool
    range_djd: bool
    forward_iso: bool
    reverse_iso: bool
    reasons: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return (
            self.pseudo_ortho
            and self.square_is_resolution
            and self.range_is_principal
            and self.range_djd
            and self.forward_iso
            and self.reverse_iso
        )


def complement_roundtrip(o: OrthoStructure) -> ComplementRoundTrip:
    """Build ``(DI(L), perp)``, go back to ``(range, perp restricted)`` and forth again."""
    if not classify_ortho(o).ortholattice:
        raise InvalidMapError("round trip needs an ortholattice")
    L = o.base
    hull = distributive_ideals(L)
    perp = operational_complementation(o, hull)
    res = operational_resolution(hull)
    hp = OrthoStructure(hull, perp.table)
    flags = classify_ortho(hp)
    square = all(perp(perp(h)) == res(h) for h in range(hull.n))
    principal = mask_of(hull.principal(a) for a in range(L.n))
    rng = perp.range()
    djd = bool(is_djd(hull, rng))
    reasons = []
    try:
        back = ortho_from_pseudo(hp)
    except InvalidMapError as exc:
        reasons.append(str(exc))
        fwd = rev = False
    else:
        fwd = find_isomorphism(L, back.base, [(o.prime, back.prime)]) is not None
        again = operational_complementation(back)
        rev = find_isomorphism(hull, again.source, [(perp.table, again.table)]) is not None
    if not fwd:
        reasons.append("range is not isomorphic to (L, ')")
    if not rev:
        reasons.append("reverse direction failed")
    return ComplementRoundTrip(
        pseudo_ortho=flags.pseudo,
        ortholattice_on_hull=flags.ortholattice,
        square_is_resolution=square,
        range_is_principal=rng == principal,
        range_djd=djd,
        forward_iso=fwd,
        reverse_iso=rev,
        reasons=tuple(reasons),
    )


@dataclass(frozen=True)
class OrthogonalityRelation:
    base: BoundedLattice
    rows: tuple[int, ...]  # rows[a] = mask of b with a perp b

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for a in range(self.base.n):
            for b in members(self.rows[a]):
                if not self.rows[b] >> a & 1:
                    raise InputError("orthogonality relation must be symmetric")

    @classmethod
    def from_ortho(cls, o: OrthoStructure) -> "OrthogonalityRelation":
        L = o.base
        return cls(L, tuple(mask_of(b for b in range(L.n) if L.leq(a, o.prime[b])) for a in range(L.n)))

    def perp(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)


def ortho_set(rel: OrthogonalityRelation, A: int) -> int:
    """``{b | a perp b for all a in A}``."""
    out = rel.base.all
    for a in members(A):
        out &= rel.rows[a]
    return out


def is_orthomodular(o: OrthoStructure) -> tuple[bool, Optional[tuple[int, int]]]:
    """Weak modularity ``a <= b  =>  a v (a' ^ b) = b``; first failing pair."""
    L, p = o.base, o.prime
    for a in range(L.n):
        for b in members(L.up[a]):
            if L.join(a, L.meet(p[a], b)) != b:
                return False, (a, b)
    return True, None


def sasaki(o: OrthoStructure, a: int) -> tuple[LatticeMap, LatticeMap]:
    """``b -> a ^ (a' v b)`` and ``b -> a' v (a ^ b)``."""
    L, p = o.base, o.prime
    phi = tuple(L.meet(a, L.join(p[a], b)) for b in range(L.n))
    phi_star = tuple(L.join(p[a], L.meet(a, b)) for b in range(L.n))
    return LatticeMap(L, L, phi), LatticeMap(L, L, phi_star)


def sasaki_adjunctions(o: OrthoStructure) -> dict[int, object]:
    """Adjunction check of each Sasaki pair, keyed by element."""
    out = {}
    for a in range(o.base.n):
        f, g = sasaki(o, a)
        out[a] = check_adjunction(f, g)
    return out


def sasaki_matches_orthomodularity(o: OrthoStructure) -> bool:
    """Sasaki pairs are all adjunctions exactly when ``o`` is orthomodular.

    Returns the common verdict; a disagreement raises an alarm.
    """
    adj = all(sasaki_adjunctions(o).values())
    om, _ = is_orthomodular(o)
    if adj != om:
        raise AlarmError(f"Sasaki adjunction {adj} but orthomodular {om}")
    return om


def de_morgan_both(o: OrthoStructure) -> bool:
    L, p = o.base, o.prime
    r = range(L.n)
    return all(
        p[L.join(a, b)] == L.meet(p[a], p[b]) and p[L.meet(a, b)] == L.join(p[a], p[b])
        for a in r
        for b in r
    )


def catalog_ortholattices() -> dict[str, OrthoStructure]:
    from .catalog import boolean, mo2_lattice, o6_lattice

    def complement_of_boolean(L: BoundedLattice) -> OrthoStructure:
        prime = []
        for a in range(L.n):
            c = [b for b in range(L.n) if L.meet(a, b) == L.bottom and L.join(a, b) == L.top]
            prime.append(c[0])
        return OrthoStructure(L, tuple(prime))

    mo2 = mo2_lattice()
    o6 = o6_lattice()
    return {
        "B1": complement_of_boolean(boolean(1)),
        "B2": complement_of_boolean(boolean(2)),
        "B3": complement_of_boolean(boolean(3)),
        "MO2": OrthoStructure.from_pairs(mo2, [("0", "1"), ("a", "a'"), ("b", "b'")]),
        "O6": OrthoStructure.from_pairs(o6, [("0", "1"), ("a", "a'"), ("b", "b'")]),
    }


def ortho_from_table(L: BoundedLattice, prime: Sequence[str]) -> OrthoStructure:
    return OrthoStructure(L, tuple(L.idx(x) for x in prime))
