"""Plain-text lattice files.

    # comment
    name    <token>
    elements <label>+          (first non-comment line)
    cover   <lo> <hi>
    ortho   <x> <y>            (x' = y; symmetrized)
    states  <label>+
    mu      <element> : <state>*
    weak
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bits import members
from .errors import InputError
from .order_core import BoundedLattice, build_lattice


@dataclass
class InputDocument:
    elements: list[str]
    covers: list[tuple[str, str]] = field(default_factory=list)
    name: Optional[str] = None
    ortho: list[tuple[str, str]] = field(default_factory=list)
    states: Optional[list[str]] = None
    mu: dict[str, list[str]] = field(default_factory=dict)
    weak: bool = False

    def lattice(self) -> BoundedLattice:
        return build_lattice(self.elements, self.covers)

    def ortho_structure(self, L: Optional[BoundedLattice] = None):
        from .ortho import OrthoStructure

        if not self.ortho:
            raise InputError("document has no ortho lines")
        return OrthoStructure.from_pairs(L or self.lattice(), self.ortho)

    def cartan(self, L: Optional[BoundedLattice] = None):
        from .cartan import CartanMap, WeakCartanMap

        if self.states is None:
            raise InputError("document has no states line")
        cls = WeakCartanMap if self.weak else CartanMap
        return cls.from_labels(L or self.lattice(), self.states, self.mu)


def parse(text: str) -> InputDocument:
    doc: Optional[InputDocument] = None
    known: set[str] = set()
    mu_lines: dict[str, int] = {}
    prime: dict[str, str] = {}
    states_line = 0
    pending_name: Optional[str] = None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if doc is None:
            if head == "name":
                if len(rest) != 1:
                    raise InputError("name takes exactly one token", no)
                pending_name = rest[0]
                continue
            if head != "elements":
                raise InputError("the first line must list the elements", no)
        if head == "elements":
            if doc is not None:
                raise InputError("elements given twice", no)
            if not rest:
                raise InputError("no elements given", no)
            dup = [x for i, x in enumerate(rest) if x in rest[:i]]
            if dup:
                raise InputError(f"duplicate element {dup[0]!r}", no)
            doc = InputDocument(list(rest))
            doc.name = pending_name
            known = set(rest)
        elif head == "name":
            if len(rest) != 1:
                raise InputError("name takes exactly one token", no)
            doc.name = rest[0]
        elif head == "cover":
            if len(rest) != 2:
                raise InputError("cover takes two labels", no)
            for x in rest:
                if x not in known:
                    raise InputError(f"unknown element {x!r}", no)
            doc.covers.append((rest[0], rest[1]))
        elif head == "ortho":
            if len(rest) != 2:
                raise InputError("ortho takes two labels", no)
            x, y = rest
            for z in rest:
                if z not in known:
                    raise InputError(f"unknown element {z!r}", no)
            for a, b in ((x, y), (y, x)):
                if prime.get(a, b) != b:
                    raise InputError(f"ortho table is not an involution at {a!r}", no)
                prime[a] = b
            doc.ortho.append((x, y))
        elif head == "states":
            if doc.states is not None:
                raise InputError("states given twice", no)
            dup = [x for i, x in enumerate(rest) if x in rest[:i]]
            if dup:
                raise InputError(f"duplicate state {dup[0]!r}", no)
            doc.states = list(rest)
            states_line = no
        elif head == "mu":
            body = line[2:].strip()
            if ":" not in body:
                raise InputError("mu line needs ':'", no)
            left, right = body.split(":", 1)
            el = left.strip()
            if el not in known:
                raise InputError(f"unknown element {el!r}", no)
            if el in mu_lines:
                raise InputError(f"duplicate mu entry for {el!r} (first on line {mu_lines[el]})", no)
            mu_lines[el] = no
            doc.mu[el] = right.split()
        elif head == "weak":
            if rest:
                raise InputError("weak takes no arguments", no)
            doc.weak = True
        else:
            raise InputError(f"unknown line type {head!r}", no)
    if doc is None:
        raise InputError("empty document")
    if doc.ortho:
        missing = [x for x in doc.elements if x not in prime]
        if missing:
            raise InputError(f"ortho table is not total: no entry for {missing[0]!r}")
    if doc.mu or doc.states is not None:
        if doc.states is None:
            raise InputError("mu lines given without a states line")
        pool = set(doc.states)
        for el, ss in doc.mu.items():
            bad = [s for s in ss if s not in pool]
            if bad:
                raise InputError(f"unknown state {bad[0]!r}", mu_lines[el])
        missing = [x for x in doc.elements if x not in doc.mu]
        if missing:
            raise InputError(f"mu table has no entry for {missing[0]!r}", states_line or None)
    return doc


def read(path: str) -> InputDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def render(
    L: BoundedLattice,
    name: Optional[str] = None,
    prime: Optional[Sequence[int]] = None,
    states: Optional[Sequence[str]] = None,
    mu: Optional[Sequence[int]] = None,
    weak: bool = False,
) -> str:
    """Document text for a lattice and optional complement and state map; round-trips through ``parse``."""
    lines = []
    if name:
        lines.append(f"name {name}")
    lines.append("elements " + " ".join(L.labels))
    for lo, hi in L.cover_pairs():
        lines.append(f"cover {L.labels[lo]} {L.labels[hi]}")
    if prime is not None:
        for a, b in enumerate(prime):
            if a <= b:
                lines.append(f"ortho {L.labels[a]} {L.labels[b]}")
    if states is not None:
        lines.append("states " + " ".join(states))
        for a in range(L.n):
            ss = " ".join(states[p] for p in members(mu[a]))
            lines.append(f"mu {L.labels[a]} :" + (f" {ss}" if ss else ""))
        if weak:
            lines.append("weak")
    return "\n".join(lines) + "\n"


def render_map(m) -> str:
    from .cartan import WeakCartanMap

    return render(m.lattice, states=m.states, mu=m.mu, weak=isinstance(m, WeakCartanMap))
