"""Cartan maps (property -> set of states where it is actual) and what they induce.

States are indexed ``0..k-1`` and a state set is a bitmask over them. Every
analysis here that can fail on a valid map because of a bug rather than bad
input returns its findings in an ``alarms`` list instead of silently passing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Optional, Sequence

from .bits import full, mask_of, members, popcount
from .completion import (
    HullLattice,
    distributive_flags,
    distributive_ideals,
    downset_lattice,
    is_distributive_join,
    subset_joins,
)
from .errors import InputError, InvalidMapError
from .heyting import external_implication, heyting_status
from .order_core import (
    BoundedLattice,
    LatticeMap,
    SetCompletion,
    check_adjunction,
    check_cap,
    check_map,
    find_isomorphism,
)


@dataclass(frozen=True)
class MapValidation:
    injective: bool
    binary_meets: bool
    all_meets: bool
    top: bool
    bottom: bool
    order_embedding: bool
    violations: tuple[str, ...] = ()

    @property
    def valid_cartan(self) -> bool:
        return self.injective and self.all_meets and self.top and self.bottom

    @property
    def valid_weak(self) -> bool:
        return self.injective and self.binary_meets and self.top and self.bottom


def _validate(L: BoundedLattice, k: int, mu: Sequence[int], full_meets: bool) -> MapValidation:
    if len(mu) != L.n:
        raise InputError("state map must be total on the lattice")
    sigma = full(k)
    lab = L.labels
    bad: list[str] = []
    seen: dict[int, int] = {}
    for a, s in enumerate(mu):
        if s & ~sigma:
            raise InputError(f"state set of {lab[a]!r} mentions an unknown state")
        if s in seen:
            bad.append(f"not injective: {lab[seen[s]]} and {lab[a]} have the same states")
        seen.setdefault(s, a)
    injective = len(seen) == L.n
    top = mu[L.top] == sigma
    if not top:
        bad.append("top is not sent to all states")
    bottom = mu[L.bottom] == 0
    if not bottom:
        bad.append("bottom is not sent to the empty set")
    binary = True
    for a in range(L.n):
        for b in range(a + 1, L.n):
            if mu[L.meet(a, b)] != mu[a] & mu[b]:
                if binary:
                    bad.append(f"meet of {lab[a]} and {lab[b]} not preserved")
                binary = False
    all_meets = top and binary
    if full_meets:
        check_cap(L.n, "hull")
        meets = [L.top] * (1 << L.n)
        inter = [sigma] * (1 << L.n)
        all_meets = True
        for A in range(1, 1 << L.n):
            low = (A & -A).bit_length() - 1
            rest = A & (A - 1)
            meets[A] = L.meet(meets[rest], low)
            inter[A] = inter[rest] & mu[low]
            if mu[meets[A]] != inter[A]:
                if all_meets:
                    bad.append(f"meet of {L.fmt(A)} not preserved")
                all_meets = False
        all_meets = all_meets and top
    order = all(
        L.leq(a, b) == (mu[a] & ~mu[b] == 0) for a in range(L.n) for b in range(L.n)
    )
    return MapValidation(injective, binary, all_meets, top, bottom, order, tuple(bad))


@dataclass(frozen=True)
class StateMap:
    """A lattice with a labelled state set and ``mu: element -> state mask``."""

    lattice: BoundedLattice
    states: tuple[str, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "mu", tuple(self.mu))
        if len(set(self.states)) != len(self.states):
            raise InputError("duplicate state label")
        v = self.validation()
        if not self._accepts(v):
            raise InvalidMapError(f"not a valid {self.kind}: " + "; ".join(v.violations))

    kind = "state map"

    def _accepts(self, v: MapValidation) -> bool:
        return True

    def validation(self) -> MapValidation:
        return _validate(self.lattice, len(self.states), self.mu, full_meets=True)

    @property
    def k(self) -> int:
        return len(self.states)

    @property
    def sigma(self) -> int:
        return full(self.k)

    def __call__(self, a: int) -> int:
        return self.mu[a]

    def union(self, A: int) -> int:
        out = 0
        for a in members(A):
            out |= self.mu[a]
        return out

    def fmt_states(self, T: int) -> str:
        return "{" + ",".join(self.states[p] for p in members(T)) + "}"

    def state_idx(self, label: str) -> int:
        try:
            return self.states.index(label)
        except ValueError:
            raise InputError(f"unknown state {label!r}") from None

    @classmethod
    def from_labels(
        cls,
        L: BoundedLattice,
        states: Sequence[str],
        mapping: Mapping[str, Sequence[str]],
    ):
        """Build from ``{element label: [state labels]}``.

        Bottom defaults to no states and top to all states; every other
        element must be listed.
        """
        states = tuple(states)
        pos = {s: i for i, s in enumerate(states)}
        mu: list[Optional[int]] = [None] * L.n
        for x, ss in mapping.items():
            unknown = [s for s in ss if s not in pos]
            if unknown:
                raise InputError(f"unknown state {unknown[0]!r} in the map of {x!r}")
            mu[L.idx(x)] = mask_of(pos[s] for s in ss)
        if mu[L.bottom] is None:
            mu[L.bottom] = 0
        if mu[L.top] is None:
            mu[L.top] = full(len(states))
        missing = [L.labels[a] for a, s in enumerate(mu) if s is None]
        if missing:
            raise InputError(f"no states given for element {missing[0]!r}")
        return cls(L, states, tuple(mu))


class CartanMap(StateMap):
    """Injective, balanced, preserving every meet (including the empty one)."""

    kind = "Cartan map"

    def _accepts(self, v: MapValidation) -> bool:
        return v.valid_cartan


class WeakCartanMap(StateMap):
    """Injective, balanced, preserving binary meets and the top."""

    kind = "weak Cartan map"

    def _accepts(self, v: MapValidation) -> bool:
        return v.valid_weak

    def validation(self) -> MapValidation:
        return _validate(self.lattice, len(self.states), self.mu, full_meets=False)


def validate_cartan(L: BoundedLattice, states: Sequence[str], mu: Sequence[int]) -> MapValidation:
    return _validate(L, len(states), tuple(mu), full_meets=True)


def validate_weak_cartan(L: BoundedLattice, states: Sequence[str], mu: Sequence[int]) -> MapValidation:
    return _validate(L, len(states), tuple(mu), full_meets=False)


@dataclass(frozen=True)
class EmbeddingCheck:
    """A map accepted as Cartan must be an order-embedding into the state powerset."""

    order_embedding: bool
    inf_embedding: bool

    @property
    def alarms(self) -> list[str]:
        out = []
        if not self.order_embedding:
            out.append("accepted Cartan map is not an order-embedding")
        if not self.inf_embedding:
            out.append("accepted Cartan map is not a balanced inf-embedding")
        return out


def embedding_check(m: StateMap) -> EmbeddingCheck:
    """Recheck an accepted map through the generic map checker on the set lattice of its image."""
    v = m.validation()
    P = SetCompletion(range(1 << m.k), m.states, m.lattice, lambda a: m.mu[a])
    rep = check_map(P.embedding)
    return EmbeddingCheck(v.order_embedding and rep.order_embedding, rep.balanced_inf_embedding)


# superpositions -------------------------------------------------------------


def superposition_states(m: StateMap, A: int) -> int:
    """States of ``join A`` not found in any member of ``A``."""
    return m.mu[m.lattice.join_set(A)] & ~m.union(A)


def superposition_properties(m: StateMap, A: int) -> int:
    """Elements ``c < join A`` having a state outside every member of ``A``."""
    L = m.lattice
    J, U = L.join_set(A), m.union(A)
    return mask_of(c for c in members(L.down[J]) if c != J and m.mu[c] & ~U)


@dataclass(frozen=True)
class SuperpositionImplication:
    forward: bool
    converse: bool
    forward_witness: Optional[int] = None
    converse_witness: Optional[int] = None

    @property
    def alarms(self) -> list[str]:
        return [] if self.forward else ["a join has superposition properties but no superposition states"]


def superposition_implication(m: StateMap) -> SuperpositionImplication:
    """Superposition properties imply superposition states; report whether the converse holds too."""
    check_cap(m.lattice.n, "hull")
    fw = cv = None
    for A in range(1 << m.lattice.n):
        s = superposition_states(m, A) != 0
        p = superposition_properties(m, A) != 0
        if p and not s and fw is None:
            fw = A
        if s and not p and cv is None:
            cv = A
    return SuperpositionImplication(fw is None, cv is None, fw, cv)


def state_kernel(m: StateMap, p: int) -> int:
    """Meet of all elements whose state set contains ``p``."""
    L = m.lattice
    return L.meet_set(mask_of(a for a in range(L.n) if m.mu[a] >> p & 1))


def kernels(m: StateMap) -> tuple[int, ...]:
    return tuple(state_kernel(m, p) for p in range(m.k))


@dataclass(frozen=True)
class DistributivityReport:
    unconditional: bool
    faithful: bool
    converse: Optional[bool]  # only evaluated for faithful maps
    witness: Optional[int] = None

    @property
    def alarms(self) -> list[str]:
        out = []
        if not self.unconditional:
            out.append("a join without superposition states is not distributive")
        if self.converse is False:
            out.append("faithful map has a distributive join with superposition states")
        return out


def distributivity_report(m: StateMap) -> DistributivityReport:
    L = m.lattice
    check_cap(L.n, "hull")
    wit = None
    unc = True
    for A in range(1 << L.n):
        if superposition_states(m, A) == 0 and not is_distributive_join(L, A):
            unc, wit = False, A
            break
    faithful = faithfulness_report(m).overall
    conv = None
    if faithful:
        conv = True
        for A in range(1 << L.n):
            if is_distributive_join(L, A) and superposition_states(m, A):
                conv, wit = False, A
                break
    return DistributivityReport(unc, faithful, conv, wit)


# faithfulness ---------------------------------------------------------------


@dataclass(frozen=True)
class FaithfulnessReport:
    conditions: tuple[bool, ...]  # (i) .. (vi)
    witnesses: tuple[object, ...]

    @property
    def overall(self) -> bool:
        return all(self.conditions)

    @property
    def agree(self) -> bool:
        return len(set(self.conditions)) == 1

    @property
    def alarms(self) -> list[str]:
        return [] if self.agree else [f"faithfulness conditions disagree: {self.conditions}"]


ROMAN = ("i", "ii", "iii", "iv", "v", "vi")


def faithfulness_report(m: StateMap) -> FaithfulnessReport:
    """The six equivalent forms of superpositional faithfulness, each evaluated on its own."""
    L = m.lattice
    check_cap(L.n, "hull")
    size = 1 << L.n
    joins = subset_joins(L)
    dist = distributive_flags(L)
    unions = [m.union(A) for A in range(size)]
    s_plus = [m.mu[joins[A]] & ~unions[A] for A in range(size)]
    l_plus = [
        mask_of(c for c in members(L.down[joins[A]]) if c != joins[A] and m.mu[c] & ~unions[A])
        for A in range(size)
    ]
    S = kernels(m)
    res: list[bool] = []
    wit: list[object] = []

    def record(w):
        res.append(w is None)
        wit.append(w)

    # (i) each superposition state lies in some superposition property
    w = None
    for A in range(size):
        for p in members(s_plus[A]):
            if not any(m.mu[c] >> p & 1 for c in members(l_plus[A])):
                w = (A, p)
                break
        if w:
            break
    record(w)
    # (ii) no superposition properties => no superposition states
    record(next((A for A in range(size) if not l_plus[A] and s_plus[A]), None))
    # (iii) distributive joins have no superposition states
    record(next((A for A in range(size) if dist[A] and s_plus[A]), None))
    # (iv) distributive join equal to some kernel: that state is not a superposition state
    w = None
    for A in range(size):
        if not dist[A]:
            continue
        for p in range(m.k):
            if S[p] == joins[A] and s_plus[A] >> p & 1:
                w = (A, p)
                break
        if w:
            break
    record(w)
    # (v) a kernel is only reached as a join of a set containing it
    w = None
    for p in range(m.k):
        for A in range(size):
            if joins[A] == S[p] and not A >> S[p] & 1:
                w = (A, p)
                break
        if w:
            break
    record(w)
    # (vi) strictly-below part of each kernel is principal on a lower cover, or the kernel is an atom
    w = None
    atoms = L.atoms()
    for p in range(m.k):
        s = S[p]
        below = L.down[s] & ~(1 << s)
        covered = any(
            a != L.bottom and L.down[a] == below and L.is_covered_by(a, s) for a in members(below)
        )
        if not (covered or atoms >> s & 1):
            w = p
            break
    record(w)
    return FaithfulnessReport(tuple(res), tuple(wit))


@dataclass(frozen=True)
class JoinDensity:
    holds: bool
    witness: Optional[int] = None

    @property
    def alarms(self) -> list[str]:
        return [] if self.holds else ["state kernels are not join dense"]


def join_density_check(m: StateMap) -> JoinDensity:
    """Every element is the join of the kernels of its states."""
    L = m.lattice
    S = kernels(m)
    for a in range(L.n):
        if L.join_set(mask_of(S[p] for p in members(m.mu[a]))) != a:
            return JoinDensity(False, a)
    return JoinDensity(True)


def external_implication_sound(m: StateMap) -> bool:
    """For ``a`` in ``{a | a ^ b <= c}``, every state of ``a`` that has ``b`` also has ``c``."""
    L = m.lattice
    for b in range(L.n):
        for c in range(L.n):
            for a in members(external_implication(L, b, c)):
                if m.mu[a] & m.mu[b] & ~m.mu[c]:
                    return False
    return True


# disjunctive hull and the two embeddings ------------------------------------


class DisjunctiveHull(SetCompletion):
    """All unions of state sets of ``m``, with ``a -> mu(a)`` attached."""


def disjunctive_hull(m: StateMap) -> DisjunctiveHull:
    L = m.lattice
    check_cap(L.n, "hull")
    found = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for T in frontier:
            for s in m.mu:
                u = T | s
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    return DisjunctiveHull(found, m.states, L, lambda a: m.mu[a])


def phi_mu(m: StateMap, hull: Optional[HullLattice] = None, D: Optional[DisjunctiveHull] = None) -> LatticeMap:
    """``DI(L) -> D_mu(L)``, ``A -> union of mu over A``."""
    hull = hull or distributive_ideals(m.lattice)
    D = D or disjunctive_hull(m)
    return LatticeMap(hull, D, tuple(D.of(m.union(A)) for A in hull.sets))


def eps_mu(m: StateMap, D: Optional[DisjunctiveHull] = None) -> LatticeMap:
    """``D_mu(L) -> I(L)``, ``T -> {a | mu(a) within T}``."""
    L = m.lattice
    D = D or disjunctive_hull(m)
    I = downset_lattice(L)
    return LatticeMap(
        D, I, tuple(I.of(mask_of(a for a in range(L.n) if m.mu[a] & ~T == 0)) for T in D.sets)
    )


@dataclass(frozen=True)
class HullEmbeddings:
    hull_size: int
    disjunctive_size: int
    downset_size: int
    hull_heyting: bool
    hull_intersection_closed: bool
    phi_embedding: bool
    phi_extends: bool
    eps_embedding: bool

    @property
    def alarms(self) -> list[str]:
        names = {
            "hull_heyting": "disjunctive hull is not complete Heyting",
            "hull_intersection_closed": "disjunctive hull is not closed under intersections",
            "phi_embedding": "phi is not a balanced inf-embedding",
            "phi_extends": "phi does not extend mu",
            "eps_embedding": "eps is not a balanced inf-embedding",
        }
        return [msg for k, msg in names.items() if not getattr(self, k)]


def hull_embeddings_report(m: StateMap) -> HullEmbeddings:
    L = m.lattice
    H = distributive_ideals(L)
    D = disjunctive_hull(m)
    phi = phi_mu(m, H, D)
    eps = eps_mu(m, D)
    closed = all(s & t in D.index_of_set for s in D.sets for t in D.sets)
    extends = all(phi(H.principal(a)) == D.embedding(a) for a in range(L.n))
    return HullEmbeddings(
        hull_size=H.n,
        disjunctive_size=D.n,
        downset_size=eps.target.n,
        hull_heyting=bool(heyting_status(D)),
        hull_intersection_closed=closed,
        phi_embedding=check_map(phi).balanced_inf_embedding,
        phi_extends=extends,
        eps_embedding=check_map(eps).balanced_inf_embedding,
    )


def chain_cartan(L: BoundedLattice) -> CartanMap:
    """States are the nonzero elements; ``mu(a)`` is the half-open interval ``]0, a]``."""
    nz = [x for x in range(L.n) if x != L.bottom]
    pos = {x: i for i, x in enumerate(nz)}
    mu = tuple(mask_of(pos[x] for x in members(L.down[a]) if x != L.bottom) for a in range(L.n))
    return CartanMap(L, tuple(L.labels[x] for x in nz), mu)


def chain_realizes_downsets(L: BoundedLattice) -> bool:
    """The half-open-interval map gives a disjunctive hull isomorphic to I(L)."""
    m = chain_cartan(L)
    D, I = disjunctive_hull(m), downset_lattice(L)
    return find_isomorphism(D, I) is not None


def atomistic_cartan(L: BoundedLattice) -> CartanMap:
    """States are the atoms; ``mu(a)`` is the set of atoms below ``a``."""
    atoms = list(members(L.atoms()))
    mu = tuple(mask_of(i for i, x in enumerate(atoms) if L.leq(x, a)) for a in range(L.n))
    return CartanMap(L, tuple(L.labels[x] for x in atoms), mu)


def cartan_from_kernels(L: BoundedLattice, ks: Sequence[int], states: Optional[Sequence[str]] = None) -> CartanMap:
    """The map with prescribed state kernels: ``mu(a) = {p | ks[p] <= a}``."""
    states = states or tuple(f"p{i + 1}" for i in range(len(ks)))
    mu = tuple(mask_of(p for p, s in enumerate(ks) if L.leq(s, a)) for a in range(L.n))
    return CartanMap(L, tuple(states), mu)


# transfer between two disjunctive hulls --------------------------------------


@dataclass(frozen=True)
class TransferReport:
    f: LatticeMap  # D_mu -> D_mu'
    g: LatticeMap  # D_mu' -> D_mu
    f_inf: bool
    g_sup: bool
    g_left_of_f: bool
    f_left_of_g: bool

    @property
    def orientation(self) -> str:
        if self.g_left_of_f and self.f_left_of_g:
            return "both"
        if self.g_left_of_f:
            return "g' -| f"
        if self.f_left_of_g:
            return "f -| g'"
        return "none"

    @property
    def adjoint(self) -> bool:
        return self.g_left_of_f or self.f_left_of_g


def transfer_pair(m: StateMap, m2: StateMap) -> TransferReport:
    """``f: T -> U{mu'(a) | mu(a) in T}`` and ``g': T -> U{mu(S'(p)) | p in T}``."""
    if m.lattice != m2.lattice:
        raise InvalidMapError("transfer maps need two maps on the same lattice")
    L = m.lattice
    D1, D2 = disjunctive_hull(m), disjunctive_hull(m2)
    f = LatticeMap(
        D1, D2,
        tuple(D2.of(m2.union(mask_of(a for a in range(L.n) if m.mu[a] & ~T == 0))) for T in D1.sets),
    )
    S2 = kernels(m2)
    g = LatticeMap(D2, D1, tuple(D1.of(m.union(mask_of(S2[p] for p in members(T)))) for T in D2.sets))
    return TransferReport(
        f, g,
        f_inf=check_map(f).all_meets,
        g_sup=check_map(g).all_joins,
        g_left_of_f=bool(check_adjunction(g, f)),
        f_left_of_g=bool(check_adjunction(f, g)),
    )


def with_duplicate_state(m: StateMap, p: int, label: str) -> CartanMap:
    """Copy of ``m`` with one more state that behaves exactly like ``p``."""
    k = m.k
    mu = tuple(s | ((s >> p & 1) << k) for s in m.mu)
    return CartanMap(m.lattice, m.states + (label,), mu)


# conjunctive completion -------------------------------------------------------


class Completion(NamedTuple):
    lattice: SetCompletion  # carries the embedding of the original lattice
    cartan: CartanMap


def conjunctive_completion(m: StateMap) -> Completion:
    """All intersections of state sets (the empty intersection being every state)."""
    L = m.lattice
    check_cap(L.n, "hull")
    found = {m.sigma}
    frontier = [m.sigma]
    while frontier:
        nxt = []
        for T in frontier:
            for s in m.mu:
                u = T & s
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    named = {s: L.labels[a] for a, s in enumerate(m.mu)}
    sets = sorted(found, key=lambda s: (popcount(s), tuple(members(s))))
    labels = [named.get(s) or m.fmt_states(s) for s in sets]
    if len(set(labels)) != len(labels):
        labels = [m.fmt_states(s) for s in sets]
    C = SetCompletion(sets, m.states, L, lambda a: m.mu[a], labels)
    return Completion(C, CartanMap(C, m.states, C.sets))


def state_resolution(m: StateMap, comp: Optional[Completion] = None) -> tuple[int, ...]:
    """For each state mask ``T``, the completion element of the least image containing ``T``."""
    comp = comp or conjunctive_completion(m)
    check_cap(m.k, "hull", "state set")
    out = []
    for T in range(1 << m.k):
        inter = m.sigma
        for s in m.mu:
            if T & ~s == 0:
                inter &= s
        out.append(comp.lattice.of(inter))
    return tuple(out)


@dataclass(frozen=True)
class CompletionJoins:
    added: int  # elements of the completion not coming from L
    checked: int  # subsets examined
    disjunctive: int  # subsets whose join is disjunctive
    violations: tuple[str, ...] = field(default=())

    @property
    def alarms(self) -> list[str]:
        return list(self.violations)


def completion_joins_report(m: StateMap, comp: Optional[Completion] = None) -> CompletionJoins:
    """Joins in L versus joins in the conjunctive completion, over every subset."""
    L = m.lattice
    comp = comp or conjunctive_completion(m)
    C, mbar = comp.lattice, comp.cartan
    e = C.embedding
    bad: list[str] = []
    if any(mbar.mu[e(a)] != m.mu[a] for a in range(L.n)):
        bad.append("completion does not commute with mu")
    disj = 0
    for A in range(1 << L.n):
        J = L.join_set(A)
        eA = e.image(A)
        JC = C.join_set(eA)
        if e(J) != JC:
            bad.append(f"(i) join of {L.fmt(A)} differs in the completion")
        if m.mu[J] != m.union(A):
            continue
        disj += 1
        if not is_distributive_join(L, A):
            bad.append(f"(ii) disjunctive join of {L.fmt(A)} is not distributive")
        if mbar.mu[JC] != mbar.union(eA):
            bad.append(f"(iii) join of {L.fmt(A)} is not disjunctive in the completion")
        if not is_distributive_join(C, eA):
            bad.append(f"(iv) join of {L.fmt(A)} is not distributive in the completion")
    return CompletionJoins(C.n - L.n, 1 << L.n, disj, tuple(bad))


# catalog ----------------------------------------------------------------------


def square_cartan() -> CartanMap:
    """Square with states p1, p2, q where q only appears at the top."""
    from .catalog import square

    return CartanMap.from_labels(
        square(), ["p1", "p2", "q"], {"a": ["p1"], "a'": ["p2"], "1": ["p1", "p2", "q"]}
    )


def square_cartan_restricted() -> CartanMap:
    from .catalog import square

    return CartanMap.from_labels(square(), ["p1", "p2"], {"a": ["p1"], "a'": ["p2"], "1": ["p1", "p2"]})


def topology_weak_cartan() -> WeakCartanMap:
    """Open sets of a three-point space, each mapped to itself."""
    from .catalog import finite_topology

    return WeakCartanMap.from_labels(
        finite_topology(),
        ["x", "y", "z"],
        {"x": ["x"], "xy": ["x", "y"], "xz": ["x", "z"], "1": ["x", "y", "z"]},
    )


def catalog_cartan_maps() -> dict[str, StateMap]:
    from .catalog import chain, m3

    return {
        "square": square_cartan(),
        "square-restricted": square_cartan_restricted(),
        "m3-atomistic": atomistic_cartan(m3()),
        "c3-interval": chain_cartan(chain(3)),
        "m3-interval": chain_cartan(m3()),
        "topology": topology_weak_cartan(),
    }


def all_alarms(m: StateMap) -> list[str]:
    """Every alarmed universal evaluated on ``m``."""
    out: list[str] = []
    out += embedding_check(m).alarms
    out += superposition_implication(m).alarms
    out += distributivity_report(m).alarms
    out += faithfulness_report(m).alarms
    out += join_density_check(m).alarms
    out += hull_embeddings_report(m).alarms
    if not external_implication_sound(m):
        out.append("external implication is unsound for mu")
    out += completion_joins_report(m).alarms
    return out
