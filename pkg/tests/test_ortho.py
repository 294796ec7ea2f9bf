import pytest

from lathull.catalog import boolean, chain, m3, mo2_lattice, o6_lattice
from lathull.completion import distributive_ideals
from lathull.errors import InputError, InvalidMapError
from lathull.order_core import find_isomorphism
from lathull.ortho import (
    OrthogonalityRelation,
    OrthoStructure,
    catalog_ortholattices,
    classify_ortho,
    de_morgan_both,
    hull_ortho,
    is_orthomodular,
    operational_complementation,
    ortho_from_pseudo,
    ortho_from_table,
    ortho_set,
    derived_laws_report,
    sasaki,
    sasaki_adjunctions,
    sasaki_matches_orthomodularity,
    complement_roundtrip,
)
from lathull.resolution import is_djd, operational_resolution

ORTHO = catalog_ortholattices()


def chain_negation():
    C = chain(3)
    return ortho_from_table(C, ["1", "0", "0"])


def test_classify_examples():
    f = classify_ortho(ORTHO["B2"])
    assert f.ortholattice and f.involutive
    g = classify_ortho(chain_negation())
    assert g.pseudo and not g.oc3l and not g.involutive
    assert classify_ortho(ORTHO["MO2"]).ortholattice


def test_from_pairs_errors():
    L = boolean(2)
    with pytest.raises(InputError, match="not total"):
        OrthoStructure.from_pairs(L, [("a", "b")])
    with pytest.raises(InputError, match="conflicting"):
        OrthoStructure.from_pairs(L, [("a", "b"), ("a", "1")])


def test_derived_law_examples():
    assert [c.status for c in derived_laws_report(ORTHO["B2"]).clauses][0] == "holds"
    r = derived_laws_report(chain_negation())
    C = chain_negation()
    m = C.base.idx("m")
    assert C(m) == C(C(C(m))) == C.base.bottom
    assert dict((c.name, c.status) for c in r.clauses)["ii"] == "holds"
    # identity prime: OC2 holds but OC1 fails, so (iii) must not claim OC1
    ident = OrthoStructure(boolean(2), (0, 1, 2, 3))
    assert dict((c.name, c.status) for c in derived_laws_report(ident).clauses)["iii"] == "hypotheses unmet"
    # the constant-bottom prime fails OC2: every clause is vacuous
    bad = OrthoStructure(boolean(2), (0, 0, 0, 0))
    assert all(c.status == "hypotheses unmet" for c in derived_laws_report(bad).clauses)


@pytest.mark.parametrize("name", sorted(ORTHO))
def test_derived_laws_never_alarm_on_catalog(name):
    assert not derived_laws_report(ORTHO[name]).alarms


def test_complementation_examples():
    o = ORTHO["MO2"]
    L = o.base
    H = distributive_ideals(L)
    perp = operational_complementation(o, H)
    assert H.sets[perp(H.of(L.all))] == L.mask(["0"])
    assert H.sets[perp(H.principal(L.idx("a")))] == L.mask(["0", "a'"])
    assert H.sets[perp(H.of(L.mask(["0", "a", "b"])))] == L.mask(["0"])
    assert H.n == 16 and find_isomorphism(H, boolean(4)) is not None


def test_complementation_needs_ortholattice():
    with pytest.raises(InvalidMapError):
        operational_complementation(chain_negation())


@pytest.mark.parametrize("name", sorted(ORTHO))
def test_complement_roundtrip_on_catalog(name):
    o = ORTHO[name]
    r = complement_roundtrip(o)
    assert r.ok, r.reasons
    H = distributive_ideals(o.base)
    perp = operational_complementation(o, H)
    R = operational_resolution(H)
    assert classify_ortho(hull_ortho(o)).pseudo
    assert all(perp(perp(h)) == R(h) for h in range(H.n))
    assert perp.range() == H.embedding.range()
    assert is_djd(H, perp.range())


def test_reverse_map_refusals():
    with pytest.raises(InvalidMapError, match="not DJD"):
        ortho_from_pseudo(chain_negation())
    with pytest.raises(InvalidMapError, match="Heyting"):
        ortho_from_pseudo(OrthoStructure(m3(), (4, 0, 0, 0, 0)))
    with pytest.raises(InvalidMapError, match="pseudo-orthocomplementation"):
        ortho_from_pseudo(OrthoStructure(boolean(2), (0, 1, 2, 3)))


def test_ortho_set_examples():
    o = ORTHO["MO2"]
    L = o.base
    rel = OrthogonalityRelation.from_ortho(o)
    assert ortho_set(rel, 0) == L.all
    assert ortho_set(rel, 1 << L.idx("a")) == L.mask(["0", "a'"])
    B = ORTHO["B2"]
    assert ortho_set(OrthogonalityRelation.from_ortho(B), 1 << B.base.idx("a")) == B.base.mask(["0", "b"])


@pytest.mark.parametrize("name", sorted(ORTHO))
def test_orthogonality_properties(name):
    o = ORTHO[name]
    L = o.base
    rel = OrthogonalityRelation.from_ortho(o)
    for a in range(L.n):
        assert ortho_set(rel, 1 << a) == L.down[o(a)]
        for b in range(L.n):
            assert rel.perp(a, b) == rel.perp(b, a)
            if rel.perp(a, b):
                assert L.meet(a, b) == L.bottom
    for A in range(1 << min(L.n, 6)):
        perp = ortho_set(rel, A)
        assert A & ~ortho_set(rel, perp) == 0
        for x in range(L.n):
            assert ortho_set(rel, A | 1 << x) & ~perp == 0


def test_asymmetric_relation_rejected():
    with pytest.raises(InputError):
        OrthogonalityRelation(boolean(2), (0b0010, 0, 0, 0))


def test_orthomodularity_examples():
    assert is_orthomodular(ORTHO["B3"]) == (True, None)
    assert is_orthomodular(ORTHO["MO2"]) == (True, None)
    o = ORTHO["O6"]
    L = o.base
    a, b = L.idx("a"), L.idx("b")
    assert is_orthomodular(o) == (False, (a, b))
    assert L.meet(o(a), b) == L.bottom


def test_sasaki_examples():
    o = ORTHO["B2"]
    L = o.base
    one, zero = sasaki(o, L.top), sasaki(o, L.bottom)
    assert one[0].table == tuple(range(L.n))
    assert zero[0].table == (L.bottom,) * L.n
    a = L.idx("a")
    phi, _ = sasaki(o, a)
    assert all(phi(x) == L.meet(a, x) for x in range(L.n))


def test_sasaki_fails_on_o6_with_stated_witness():
    o = ORTHO["O6"]
    L = o.base
    a, b = L.idx("a"), L.idx("b")
    adj = sasaki_adjunctions(o)[b]
    assert not adj
    assert (b, a) in adj.failures
    phi, phi_star = sasaki(o, b)
    assert phi(b) == b and not L.leq(b, a) and phi_star(a) == L.top


@pytest.mark.parametrize("name", sorted(ORTHO))
def test_sasaki_iff_orthomodular_on_catalog(name):
    o = ORTHO[name]
    assert sasaki_matches_orthomodularity(o) == is_orthomodular(o)[0]


@pytest.mark.parametrize("name", sorted(ORTHO))
def test_de_morgan_on_ortholattices(name):
    assert de_morgan_both(ORTHO[name])


def test_o6_lattice_shape():
    assert find_isomorphism(ORTHO["O6"].base, o6_lattice()) is not None
    assert find_isomorphism(ORTHO["MO2"].base, mo2_lattice()) is not None
