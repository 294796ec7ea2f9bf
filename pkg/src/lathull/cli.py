"""Command-line front end. Reports are ``key = value`` lines on stdout.

Exit codes: 0 when every checked claim holds, 1 when one fails (or an
alarm fires), 2 on bad input or an exceeded cap.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import fileformat
from .cartan import (
    ROMAN,
    WeakCartanMap,
    disjunctive_hull,
    eps_mu,
    external_implication_sound,
    faithfulness_report,
    join_density_check,
    kernels,
    embedding_check,
    superposition_implication,
    distributivity_report,
    hull_embeddings_report,
    completion_joins_report,
    superposition_properties,
    superposition_states,
)
from .completion import distributive_ideals, downset_lattice, macneille, verify_hull
from .errors import AlarmError, InputError, InvalidMapError, LatticeError
from .heyting import has_m3_or_n5, heyting_status
from .order_core import LIMITS, check_adjunction, find_isomorphism, set_limits
from .ortho import (
    OrthogonalityRelation,
    classify_ortho,
    is_orthomodular,
    operational_complementation,
    ortho_set,
    derived_laws_report,
    sasaki,
    complement_roundtrip,
)
from .resolution import operational_resolution, roundtrip_lattice, roundtrip_pair, theta
from .search import PREDICATES, SearchSpec, run_search


def _b(x) -> str:
    return "true" if x else "false"


class Report:
    def __init__(self):
        self.rows: list[tuple[str, str]] = []
        self.failures: list[str] = []
        self.docs: list[str] = []

    def add(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = _b(value)
        self.rows.append((key, str(value)))

    def claim(self, key: str, ok: bool, detail: str = "") -> None:
        self.add(key, ok)
        if not ok:
            self.failures.append(f"{key}{': ' + detail if detail else ''}")

    def alarms(self, alarms) -> None:
        for a in alarms:
            self.add("alarm", a)
            self.failures.append(f"alarm: {a}")

    def render(self, fmt: str) -> str:
        if fmt == "tabular":
            w = max((len(k) for k, _ in self.rows), default=0)
            body = [f"{k.ljust(w)} | {v}" for k, v in self.rows]
        else:
            body = [f"{k} = {v}" for k, v in self.rows]
        out = "\n".join(body) + "\n"
        for d in self.docs:
            out += "\n" + d
        return out


def _write(path: Optional[str], text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_check(args, rep: Report) -> None:
    doc = fileformat.read(args.file)
    L = doc.lattice()
    if doc.name:
        rep.add("name", doc.name)
    rep.add("elements", L.n)
    rep.add("lattice", True)
    dist = L.is_distributive()
    rep.add("distributive", dist)
    sub = has_m3_or_n5(L)
    rep.claim("m3_n5_criterion", sub != dist, "distributivity disagrees with the M3/N5 search")
    st = heyting_status(L)
    rep.add("heyting", st.is_complete_heyting)
    if st.witness:
        A, w = st.witness
        rep.add("heyting_witness", f"{L.fmt(A)} at {L.labels[w]}")
    rep.claim("heyting_iff_distributive", st.is_complete_heyting == dist)
    rep.add("atoms", L.fmt(L.atoms()))
    rep.add("join_irreducibles", L.fmt(L.join_irreducibles()))
    if doc.ortho:
        f = classify_ortho(doc.ortho_structure(L))
        rep.add("ortholattice", f.ortholattice)
        rep.add("pseudo_ortholattice", f.pseudo)
    if doc.states is not None:
        try:
            m = doc.cartan(L)
            rep.add("valid_map", True)
            rep.add("weak", isinstance(m, WeakCartanMap))
        except InvalidMapError as exc:
            rep.add("valid_map", False)
            rep.add("map_problem", str(exc))


def cmd_hull(args, rep: Report) -> None:
    doc = fileformat.read(args.file)
    L = doc.lattice()
    H = distributive_ideals(L, args.parallel)
    rep.add("elements", L.n)
    rep.add("hull_size", H.n)
    for a in range(L.n):
        rep.add(f"embedding.{L.labels[a]}", H.labels[H.principal(a)])
    v = verify_hull(L, H, H.embedding)
    rep.claim("balanced_inf_embedding", v.balanced_inf_embedding)
    rep.claim("join_dense", v.join_dense)
    rep.claim("preserves_distributive_joins", v.preserves_distributive_joins)
    rep.claim("hull_heyting", v.complete_heyting)
    R = operational_resolution(H)
    for h in range(H.n):
        rep.add(f"resolution.{H.labels[h]}", H.labels[R(h)])
    rep.claim("roundtrip_lattice", roundtrip_lattice(L) is not None)
    rep.claim("roundtrip_pair", roundtrip_pair(theta(L)) is not None)
    text = fileformat.render(H, name=f"DI_{doc.name}" if doc.name else None)
    rep.docs.append(text)
    _write(args.output, text)


def cmd_macneille(args, rep: Report) -> None:
    doc = fileformat.read(args.file)
    L = doc.lattice()
    M = macneille(L)
    rep.add("elements", L.n)
    rep.add("completion_size", M.n)
    rep.add("already_complete", M.n == L.n)
    for a in range(L.n):
        rep.add(f"embedding.{L.labels[a]}", M.labels[M.embedding(a)])
    text = fileformat.render(M)
    rep.docs.append(text)
    _write(args.output, text)


def cmd_cartan(args, rep: Report) -> None:
    doc = fileformat.read(args.file)
    L = doc.lattice()
    m = doc.cartan(L)
    rep.add("states", len(m.states))
    rep.add("weak", isinstance(m, WeakCartanMap))
    v = m.validation()
    rep.add("valid_cartan", v.valid_cartan)
    rep.add("valid_weak", v.valid_weak)
    rep.alarms(embedding_check(m).alarms)
    for p, s in enumerate(kernels(m)):
        rep.add(f"kernel.{m.states[p]}", L.labels[s])
    for A in range(1 << L.n):
        if A >> L.bottom & 1:
            continue
        sp, lp = superposition_states(m, A), superposition_properties(m, A)
        if sp or lp:
            rep.add(f"superposition_states{L.fmt(A)}", m.fmt_states(sp))
            rep.add(f"superposition_properties{L.fmt(A)}", L.fmt(lp))
    f = faithfulness_report(m)
    rep.add("faithful", f.overall)
    for name, ok in zip(ROMAN, f.conditions):
        rep.add(f"condition.{name}", ok)
    rep.alarms(f.alarms)
    imp = superposition_implication(m)
    rep.add("properties_imply_states", imp.forward)
    rep.add("states_imply_properties", imp.converse)
    if imp.converse_witness is not None:
        rep.add("states_without_properties", L.fmt(imp.converse_witness))
    rep.alarms(imp.alarms)
    rep.alarms(distributivity_report(m).alarms)
    rep.claim("kernels_join_dense", join_density_check(m).holds)
    rep.claim("external_implication_sound", external_implication_sound(m))
    emb = hull_embeddings_report(m)
    rep.add("hull_size", emb.hull_size)
    rep.add("disjunctive_hull_size", emb.disjunctive_size)
    rep.add("downset_size", emb.downset_size)
    rep.alarms(emb.alarms)
    cj = completion_joins_report(m)
    rep.add("completion_added", cj.added)
    rep.add("disjunctive_joins", cj.disjunctive)
    rep.alarms(cj.alarms)


def cmd_ortho(args, rep: Report) -> None:
    doc = fileformat.read(args.file)
    L = doc.lattice()
    o = doc.ortho_structure(L)
    f = classify_ortho(o)
    for k in ("oc1", "oc2", "oc3l", "oc3r", "involutive", "ortholattice", "pseudo"):
        rep.add(k, getattr(f, k))
    laws = derived_laws_report(o)
    for c in laws.clauses:
        rep.add(f"derived_law.{c.name}", c.status)
    rep.alarms(laws.alarms)
    if not f.ortholattice:
        rep.add("complement_roundtrip", "refused: not an ortholattice")
        return
    om, w = is_orthomodular(o)
    rep.add("orthomodular", om)
    if w:
        rep.add("orthomodular_witness", f"({L.labels[w[0]]},{L.labels[w[1]]})")
    all_adj = True
    for a in range(L.n):
        phi, phi_star = sasaki(o, a)
        adj = check_adjunction(phi, phi_star)
        all_adj &= bool(adj)
        if adj:
            rep.add(f"sasaki.{L.labels[a]}", "adjoint")
        else:
            pairs = " ".join(f"({L.labels[x]},{L.labels[y]})" for x, y in adj.failures)
            rep.add(f"sasaki.{L.labels[a]}", f"fails at {pairs}")
    rep.claim("sasaki_iff_orthomodular", all_adj == om)
    rel = OrthogonalityRelation.from_ortho(o)
    for a in range(L.n):
        rep.add(f"orthogonal.{L.labels[a]}", L.fmt(ortho_set(rel, 1 << a)))
    H = distributive_ideals(L, args.parallel)
    perp = operational_complementation(o, H)
    for h in range(H.n):
        rep.add(f"complement.{H.labels[h]}", H.labels[perp(h)])
    t = complement_roundtrip(o)
    rep.claim("hull_pseudo_ortho", t.pseudo_ortho)
    rep.add("hull_ortholattice", t.ortholattice_on_hull)
    rep.claim("square_is_resolution", t.square_is_resolution)
    rep.claim("range_is_principal", t.range_is_principal)
    rep.claim("range_djd", t.range_djd)
    rep.claim("roundtrip_forward", t.forward_iso, "; ".join(t.reasons))
    rep.claim("roundtrip_reverse", t.reverse_iso, "; ".join(t.reasons))


def cmd_dhull(args, rep: Report) -> None:
    doc = fileformat.read(args.file)
    L = doc.lattice()
    m = doc.cartan(L)
    D = disjunctive_hull(m)
    rep.add("elements", L.n)
    rep.add("disjunctive_hull_size", D.n)
    for a in range(L.n):
        rep.add(f"embedding.{L.labels[a]}", D.labels[D.embedding(a)])
    emb = hull_embeddings_report(m)
    rep.claim("complete_heyting", emb.hull_heyting)
    rep.claim("phi_balanced_inf_embedding", emb.phi_embedding)
    rep.claim("eps_balanced_inf_embedding", emb.eps_embedding)
    rep.add("isomorphic_to_DI", find_isomorphism(D, distributive_ideals(L, args.parallel)) is not None)
    rep.add("isomorphic_to_I", find_isomorphism(D, downset_lattice(L)) is not None)
    eps = eps_mu(m, D)
    for T in range(D.n):
        rep.add(f"eps.{D.labels[T]}", eps.target.labels[eps(T)])
    text = fileformat.render(D)
    rep.docs.append(text)
    _write(args.output, text)


def cmd_search(args, rep: Report) -> None:
    if args.list:
        for pid in sorted(PREDICATES):
            p = PREDICATES[pid]
            rep.add(pid, f"{p.kind}: {p.description}")
        return
    if not args.predicate:
        raise InputError("search needs a predicate (see --list)")
    spec = SearchSpec(
        predicate=args.predicate,
        mode=args.mode,
        max_elements=args.max_elements,
        max_states=args.max_states,
        exhaustive=args.exhaustive,
        seed=args.seed,
        samples=args.samples,
    )
    res = run_search(spec, workers=args.parallel)
    rep.add("predicate", spec.predicate)
    rep.add("mode", spec.mode)
    rep.add("certificate", res.certificate)
    rep.add("scanned", res.scanned)
    rep.add("matched", res.matched)
    for e in res.errors:
        rep.add("error", e)
        rep.failures.append(e)
    if spec.mode == "counterexample":
        rep.claim("no_counterexample", res.matched == 0)
    if spec.mode != "count":
        rep.add("found", bool(res.found))
    for inst in res.found:
        rep.docs.append(_render_instance(inst))


def _render_instance(inst) -> str:
    from .cartan import StateMap
    from .ortho import OrthoStructure

    if isinstance(inst, StateMap):
        return fileformat.render_map(inst)
    if isinstance(inst, OrthoStructure):
        return fileformat.render(inst.base, prime=inst.prime)
    return fileformat.render(inst)


COMMANDS = {
    "check": (cmd_check, "lattice, distributivity and Heyting status"),
    "hull": (cmd_hull, "distributive hull DI(L) with embedding and resolution"),
    "macneille": (cmd_macneille, "MacNeille completion"),
    "cartan": (cmd_cartan, "analysis of a Cartan map"),
    "ortho": (cmd_ortho, "complementation checks and the hull round trip"),
    "dhull": (cmd_dhull, "disjunctive hull of a Cartan map"),
    "search": (cmd_search, "bounded enumeration and predicate search"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-subset-bits", type=int, metavar="N", help="cap on subset-enumerating algorithms")
    common.add_argument("--parallel", type=int, default=1, metavar="K", help="worker processes")
    common.add_argument("--format", choices=("text", "tabular"), default="text")
    parser = argparse.ArgumentParser(prog="lathull", description="Finite lattice hulls and completions.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "search":
            p.add_argument("predicate", nargs="?")
            p.add_argument("--list", action="store_true", help="list predicates")
            p.add_argument("--mode", choices=("witness", "counterexample", "count"), default="witness")
            p.add_argument("--max-elements", type=int, default=5)
            p.add_argument("--max-states", type=int, default=4)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--samples", type=int, default=200)
            g = p.add_mutually_exclusive_group()
            g.add_argument("--exhaustive", dest="exhaustive", action="store_true", default=True)
            g.add_argument("--sampled", dest="exhaustive", action="store_false")
        else:
            p.add_argument("file")
            if name in ("hull", "macneille", "dhull"):
                p.add_argument("-o", "--output", help="also write the structure to this file")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    saved = LIMITS.hull
    try:
        if args.max_subset_bits is not None:
            set_limits(hull=args.max_subset_bits)
        return _run(args)
    finally:
        set_limits(hull=saved)


def _run(args) -> int:
    if args.parallel < 1:
        print("error: --parallel must be at least 1", file=sys.stderr)
        return 2
    rep = Report()
    try:
        COMMANDS[args.command][0](args, rep)
    except AlarmError as exc:
        sys.stdout.write(rep.render(args.format))
        print(f"alarm: {exc}", file=sys.stderr)
        return 1
    except (InputError, InvalidMapError, LatticeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(rep.render(args.format))
    for f in rep.failures:
        print(f"failed: {f}", file=sys.stderr)
    return 1 if rep.failures else 0
