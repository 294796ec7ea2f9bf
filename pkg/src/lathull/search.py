"""Bounded enumeration of small structures up to isomorphism, and a predicate engine on top.

Lattices are generated from naturally labelled posets on the inner elements,
closed off with a bottom and a top, and kept when they form a lattice. Each
is reduced to a canonical form: the lexicographically least order matrix over
all relabellings that respect the per-element invariants.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .bits import full, mask_of, members
from .cartan import (
    CartanMap,
    StateMap,
    WeakCartanMap,
    all_alarms,
    cartan_from_kernels,
    disjunctive_hull,
    faithfulness_report,
    join_density_check,
    superposition_implication,
)
from .completion import distributive_ideals, verify_hull
from .errors import CapExceededError, InputError, InvalidMapError, NotALatticeError
from .heyting import heyting_status
from .order_core import BoundedLattice, Poset, find_isomorphism, permutations_within
from .ortho import (
    OrthoStructure,
    classify_ortho,
    is_orthomodular,
    sasaki_matches_orthomodularity,
    complement_roundtrip,
)
from .resolution import roundtrip_lattice, roundtrip_pair, theta

ENUM_CAP = 7


def parallel_map(fn: Callable, items: Sequence, workers: int = 1) -> list:
    """``map`` that keeps input order; uses processes when ``workers > 1``."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=chunk))


# canonical forms ---------------------------------------------------------------


def _blocks(p: Poset) -> list[list[int]]:
    inv = p.invariants()
    keys = sorted(set(inv))
    return [[i for i in range(p.n) if inv[i] == k] for k in keys]


def _matrix(p: Poset, perm: Sequence[int]) -> tuple[int, ...]:
    pos = {old: new for new, old in enumerate(perm)}
    return tuple(mask_of(pos[j] for j in members(p.up[old])) for old in perm)


def canonical_form(p: Poset, op: Optional[Sequence[int]] = None) -> tuple:
    """Least (order matrix, op table) over invariant-respecting relabellings."""
    best = None
    for perm in permutations_within(_blocks(p)):
        key = _matrix(p, perm)
        if op is not None:
            pos = {old: new for new, old in enumerate(perm)}
            key = (key, tuple(pos[op[old]] for old in perm))
        if best is None or key < best:
            best = key
    return best


def lattice_from_matrix(up: Sequence[int]) -> BoundedLattice:
    """Build a lattice from a canonical matrix; labels 0, x1, x2, ..., 1."""
    n = len(up)
    if n == 1:
        return BoundedLattice(["0"], up)
    labels = ["0"] + [f"x{i}" for i in range(1, n - 1)] + ["1"]
    return BoundedLattice(labels, up)


# lattices --------------------------------------------------------------------


def _natural_posets(m: int) -> Iterator[tuple[int, ...]]:
    """Strict-downset tables of posets on ``0..m-1`` where ``i < j`` in the order implies ``i < j``."""

    def rec(below: list[int]) -> Iterator[tuple[int, ...]]:
        j = len(below)
        if j == m:
            yield tuple(below)
            return
        # the strict downset of the new element is any downset of the earlier ones
        for D in range(1 << j):
            if all(below[i] & ~D == 0 for i in members(D)):
                yield from rec(below + [D])

    yield from rec([])


def _bounded(m: int, below: Sequence[int]) -> list[int]:
    """Up-set table of the poset with a new bottom (index 0) and top (index m+1)."""
    n = m + 2
    up = [0] * n
    up[0] = full(n)
    for i in range(m):
        mask = 1 << (i + 1) | 1 << (n - 1)
        for j in range(m):
            if below[j] >> i & 1:
                mask |= 1 << (j + 1)
        up[i + 1] = mask
    up[n - 1] = 1 << (n - 1)
    return up


@lru_cache(maxsize=None)
def _canonical_lattices(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((1,),)
    found = set()
    for below in _natural_posets(n - 2):
        try:
            L = BoundedLattice([str(i) for i in range(n)], _bounded(n - 2, below))
        except NotALatticeError:
            continue
        found.add(canonical_form(L))
    return tuple(sorted(found))


def enumerate_lattices(n: int, cap: int = ENUM_CAP) -> list[BoundedLattice]:
    """One lattice per isomorphism class on exactly ``n`` elements, in canonical order."""
    if n < 1:
        raise InputError("lattices have at least one element")
    if n > cap:
        raise CapExceededError(n, cap, "lattice enumeration")
    return [lattice_from_matrix(up) for up in _canonical_lattices(n)]


def lattices_upto(n: int, cap: int = ENUM_CAP) -> list[BoundedLattice]:
    return [L for k in range(1, n + 1) for L in enumerate_lattices(k, cap)]


def random_lattice(rng: random.Random, n: int, tries: int = 1000) -> BoundedLattice:
    """Random lattice on ``n`` elements: random poset on the inner elements plus bounds."""
    if n == 1:
        return lattice_from_matrix((1,))
    m = n - 2
    for _ in range(tries):
        below: list[int] = []
        for j in range(m):
            D = 0
            for i in range(j):
                if rng.random() < 0.4:
                    D |= 1 << i | below[i]
            below.append(D)
        perm = list(range(m))
        rng.shuffle(perm)
        try:
            L = BoundedLattice([str(i) for i in range(n)], _bounded(m, below))
        except NotALatticeError:
            continue
        # scramble the inner labels so the result is not naturally labelled
        order = [0] + [p + 1 for p in perm] + [n - 1]
        pos = {old: new for new, old in enumerate(order)}
        up = [mask_of(pos[j] for j in members(L.up[old])) for old in order]
        return BoundedLattice([str(i) for i in range(n)], up)
    raise InputError(f"no random lattice on {n} elements found")


# ortholattices -----------------------------------------------------------------


def _orthocomplements(L: BoundedLattice) -> Iterator[tuple[int, ...]]:
    """Every orthocomplementation of ``L`` (as a table)."""
    n = L.n
    if n == 1:
        yield (0,)
        return
    prime = [-1] * n
    prime[L.bottom], prime[L.top] = L.top, L.bottom

    def rec() -> Iterator[tuple[int, ...]]:
        try:
            a = prime.index(-1)
        except ValueError:
            o = OrthoStructure(L, tuple(prime))
            if classify_ortho(o).ortholattice:
                yield tuple(prime)
            return
        for b in range(n):
            if prime[b] == -1 and b != a and L.meet(a, b) == L.bottom and L.join(a, b) == L.top:
                prime[a], prime[b] = b, a
                yield from rec()
                prime[a] = prime[b] = -1

    yield from rec()


@lru_cache(maxsize=None)
def _canonical_ortho(n: int) -> tuple:
    found = set()
    for L in enumerate_lattices(n):
        for p in _orthocomplements(L):
            found.add(canonical_form(L, p))
    return tuple(sorted(found))


def enumerate_ortholattices(n: int, cap: int = ENUM_CAP) -> list[OrthoStructure]:
    """One ortholattice per isomorphism class (commuting with the complement) on ``n`` elements."""
    if n > cap:
        raise CapExceededError(n, cap, "ortholattice enumeration")
    return [OrthoStructure(lattice_from_matrix(up), p) for up, p in _canonical_ortho(n)]


def ortholattices_upto(n: int, cap: int = ENUM_CAP) -> list[OrthoStructure]:
    return [o for k in range(1, n + 1) for o in enumerate_ortholattices(k, cap)]


# Cartan maps -------------------------------------------------------------------


def enumerate_cartan_maps(L: BoundedLattice, max_states: int) -> list[CartanMap]:
    """All Cartan maps on ``L`` with at most ``max_states`` states, up to relabelling states.

    A map is fixed by its state kernels (``mu(a) = {p | S(p) <= a}``); it is
    injective exactly when the kernels include every join-irreducible, and
    balanced exactly when no kernel is the bottom. So the maps are the
    multisets of nonzero elements that cover the join-irreducibles.
    """
    ji = L.join_irreducibles()
    nonzero = [a for a in range(L.n) if a != L.bottom]
    out = []
    for k in range(max_states + 1):
        for ks in itertools.combinations_with_replacement(nonzero, k):
            if ji & ~mask_of(ks) == 0:
                out.append(cartan_from_kernels(L, ks))
    return out


def _state_signature(L: BoundedLattice, k: int, mu: Sequence[int]) -> tuple:
    """Canonical form under relabelling of states: the sorted state columns."""
    cols = sorted(tuple(mu[a] >> p & 1 for a in range(L.n)) for p in range(k))
    return tuple(cols)


def enumerate_state_maps_bruteforce(
    L: BoundedLattice, k: int, weak: bool = False
) -> list[StateMap]:
    """Every valid map on exactly ``k`` states, deduplicated by state relabelling.

    Tries every assignment of state sets to the elements strictly between
    bottom and top; bottom and top are pinned to the empty and the full set.
    """
    cls = WeakCartanMap if weak else CartanMap
    inner = [a for a in range(L.n) if a not in (L.bottom, L.top)]
    states = tuple(f"p{i + 1}" for i in range(k))
    seen = {}
    for choice in itertools.product(range(1 << k), repeat=len(inner)):
        mu = [0] * L.n
        mu[L.top] = full(k)
        mu[L.bottom] = 0
        for a, s in zip(inner, choice):
            mu[a] = s
        if L.n == 1 and k:
            continue
        try:
            m = cls(L, states, tuple(mu))
        except InvalidMapError:
            continue
        sig = _state_signature(L, k, mu)
        seen.setdefault(sig, m)
    return [seen[s] for s in sorted(seen)]


# predicates --------------------------------------------------------------------


def _lattice_hull(L: BoundedLattice) -> bool:
    H = distributive_ideals(L)
    return verify_hull(L, H, H.embedding).is_hull and bool(heyting_status(H))


def _lattice_roundtrip(L: BoundedLattice) -> bool:
    return roundtrip_lattice(L) is not None and roundtrip_pair(theta(L)) is not None


def _has_faithful(L: BoundedLattice, max_states: int) -> bool:
    return any(faithfulness_report(m).overall for m in enumerate_cartan_maps(L, max_states))


def _dhull_is_di(m: StateMap) -> bool:
    return find_isomorphism(disjunctive_hull(m), distributive_ideals(m.lattice)) is not None


@dataclass(frozen=True)
class Predicate:
    kind: str
    fn: Callable
    description: str
    needs_states: bool = False


PREDICATES: dict[str, Predicate] = {
    "hull-verified": Predicate("lattice", _lattice_hull, "DI(L) passes the hull characterization"),
    "roundtrip": Predicate("lattice", _lattice_roundtrip, "lattice <-> (hull, resolution) round trips"),
    "distributive": Predicate("lattice", lambda L: L.is_distributive(), "lattice is distributive"),
    "heyting": Predicate("lattice", lambda L: bool(heyting_status(L)), "lattice is complete Heyting"),
    "has-faithful-map": Predicate(
        "lattice", _has_faithful, "some Cartan map within the state bound is faithful", True
    ),
    "non-orthomodular": Predicate(
        "ortholattice", lambda o: not is_orthomodular(o)[0], "ortholattice is not orthomodular"
    ),
    "complement-roundtrip": Predicate(
        "ortholattice", lambda o: complement_roundtrip(o).ok, "complementation round trip through the hull"
    ),
    "sasaki-iff-orthomodular": Predicate(
        "ortholattice",
        lambda o: sasaki_matches_orthomodularity(o) in (True, False),
        "Sasaki adjunction agrees with orthomodularity",
    ),
    "faithfulness-agree": Predicate("cartan", lambda m: faithfulness_report(m).agree, "six faithfulness conditions agree"),
    "faithful": Predicate("cartan", lambda m: faithfulness_report(m).overall, "map is superpositionally faithful"),
    "states-without-properties": Predicate(
        "cartan", lambda m: not superposition_implication(m).converse, "a join has superposition states but no properties"
    ),
    "join-dense": Predicate("cartan", lambda m: join_density_check(m).holds, "state kernels are join dense"),
    "no-alarms": Predicate("cartan", lambda m: not all_alarms(m), "no alarmed universal fires"),
    "dhull-is-di": Predicate("cartan", _dhull_is_di, "disjunctive hull is isomorphic to DI(L)"),
    "weak-no-alarms": Predicate("weak-cartan", lambda m: not all_alarms(m), "no alarmed universal fires"),
}

MODES = ("witness", "counterexample", "count")


@dataclass(frozen=True)
class SearchSpec:
    predicate: str
    mode: str = "witness"
    max_elements: int = 5
    max_states: int = 4
    exhaustive: bool = True
    seed: int = 0
    samples: int = 200

    def __post_init__(self):
        if self.predicate not in PREDICATES:
            raise InputError(f"unknown predicate {self.predicate!r}; known: {', '.join(sorted(PREDICATES))}")
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}")
        if self.max_elements < 1 or self.max_states < 0:
            raise InputError("bounds must be positive")
        if self.exhaustive and self.max_elements > ENUM_CAP:
            raise CapExceededError(self.max_elements, ENUM_CAP, "exhaustive enumeration")

    @property
    def kind(self) -> str:
        return PREDICATES[self.predicate].kind


@dataclass(frozen=True)
class SearchResult:
    spec: SearchSpec
    scanned: int
    matched: int
    found: tuple  # matching instances in scan order (witness mode keeps the first only)
    errors: tuple[str, ...] = field(default=())

    @property
    def certificate(self) -> str:
        s = self.spec
        scope = "exhaustive" if s.exhaustive else f"sampled seed={s.seed} samples={s.samples}"
        bounds = f"elements<={s.max_elements}"
        if s.kind in ("cartan", "weak-cartan") or PREDICATES[s.predicate].needs_states:
            bounds += f" states<={s.max_states}"
        return f"{scope} kind={s.kind} {bounds} instances={self.scanned}"


def _instances(spec: SearchSpec) -> list:
    kind = spec.kind
    if spec.exhaustive:
        if kind == "lattice":
            return lattices_upto(spec.max_elements)
        if kind == "ortholattice":
            return ortholattices_upto(spec.max_elements)
        if kind == "cartan":
            return [m for L in lattices_upto(spec.max_elements) for m in enumerate_cartan_maps(L, spec.max_states)]
        return [
            m
            for L in lattices_upto(spec.max_elements)
            for k in range(spec.max_states + 1)
            for m in enumerate_state_maps_bruteforce(L, k, weak=True)
        ]
    rng = random.Random(spec.seed)
    out = []
    for _ in range(spec.samples):
        L = random_lattice(rng, rng.randint(1, spec.max_elements))
        if kind == "lattice":
            out.append(L)
        elif kind == "ortholattice":
            ps = list(_orthocomplements(L))
            if ps:
                out.append(OrthoStructure(L, rng.choice(ps)))
        else:
            # kernels must cover the join-irreducibles; the rest are drawn freely within the state bound
            ji = list(members(L.join_irreducibles()))
            room = spec.max_states - len(ji)
            if room < 0:
                continue
            nonzero = [a for a in range(L.n) if a != L.bottom]
            extra = [rng.choice(nonzero) for _ in range(rng.randint(0, room))] if nonzero else []
            out.append(cartan_from_kernels(L, sorted(ji + extra)))
    return out


def _evaluate(args) -> tuple[Optional[bool], str]:
    pid, inst, max_states = args
    pred = PREDICATES[pid]
    try:
        val = pred.fn(inst, max_states) if pred.needs_states else pred.fn(inst)
        return bool(val), ""
    except Exception as exc:  # an alarm or bug in one instance must not hide the others
        return None, f"{type(exc).__name__}: {exc}"


def run_search(spec: SearchSpec, workers: int = 1) -> SearchResult:
    """Evaluate the predicate on every instance in scope, in a fixed order."""
    items = _instances(spec)
    results = parallel_map(_evaluate, [(spec.predicate, x, spec.max_states) for x in items], workers)
    errors = tuple(f"instance {i}: {msg}" for i, (v, msg) in enumerate(results) if v is None)
    want = spec.mode != "counterexample"
    hits = [x for x, (v, _) in zip(items, results) if v is not None and v == want]
    found = tuple(hits[:1]) if spec.mode != "count" else ()
    return SearchResult(spec, len(items), len(hits), found, errors)
