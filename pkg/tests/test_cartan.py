import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import small_lattices
from lathull.catalog import boolean, chain, finite_topology, m3
from lathull.cartan import (
    CartanMap,
    WeakCartanMap,
    all_alarms,
    atomistic_cartan,
    cartan_from_kernels,
    catalog_cartan_maps,
    chain_cartan,
    chain_realizes_downsets,
    conjunctive_completion,
    disjunctive_hull,
    eps_mu,
    external_implication_sound,
    faithfulness_report,
    join_density_check,
    kernels,
    phi_mu,
    embedding_check,
    superposition_implication,
    distributivity_report,
    hull_embeddings_report,
    completion_joins_report,
    square_cartan,
    square_cartan_restricted,
    state_kernel,
    state_resolution,
    superposition_properties,
    superposition_states,
    topology_weak_cartan,
    transfer_pair,
    validate_cartan,
    validate_weak_cartan,
    with_duplicate_state,
)
from lathull.completion import distributive_ideals, downset_lattice
from lathull.errors import InputError, InvalidMapError
from lathull.order_core import find_isomorphism
from lathull.search import enumerate_cartan_maps

MAPS = catalog_cartan_maps()


def S(m, *labels):
    return sum(1 << m.state_idx(x) for x in labels)


def test_validation_examples():
    for m in (atomistic_cartan(m3()), square_cartan(), chain_cartan(chain(3))):
        assert validate_cartan(m.lattice, m.states, m.mu).valid_cartan


def test_invalid_maps_rejected_with_reasons():
    B = boolean(2)
    with pytest.raises(InvalidMapError, match="meet of a and b"):
        CartanMap.from_labels(B, ["p"], {"a": ["p"], "b": ["p"]})
    with pytest.raises(InvalidMapError, match="top"):
        CartanMap(B, ("p", "q"), (0, 1, 2, 1))
    with pytest.raises(InvalidMapError, match="bottom"):
        CartanMap(B, ("p", "q", "r"), (4, 5, 6, 7))
    with pytest.raises(InputError, match="no states given"):
        CartanMap.from_labels(B, ["p"], {"a": ["p"]})
    with pytest.raises(InputError, match="unknown state"):
        CartanMap.from_labels(B, ["p"], {"a": ["z"], "b": []})


def _all_tables(L, k):
    sigma = (1 << k) - 1
    for mu in itertools.product(range(sigma + 1), repeat=L.n):
        yield mu


@pytest.mark.parametrize("L", [chain(2), chain(3), boolean(2), m3()], ids=["C2", "C3", "B2", "M3"])
def test_validity_matches_oracle_on_every_table(L):
    k = 2 if L.n > 3 else 3
    for mu in _all_tables(L, k):
        v = validate_cartan(L, [f"s{i}" for i in range(k)], mu)
        assert v.valid_cartan == oracles.cartan_valid(L, k, mu)
        # on a finite lattice a weak map already preserves every meet
        assert validate_weak_cartan(L, [f"s{i}" for i in range(k)], mu).valid_weak == v.valid_cartan


def test_superposition_examples():
    m = square_cartan()
    L = m.lattice
    A = L.mask(["a", "a'"])
    assert superposition_states(m, A) == S(m, "q")
    assert superposition_properties(m, A) == 0
    assert superposition_states(m, 1 << L.top) == 0
    assert superposition_properties(m, 1 << L.top) == 0
    a = atomistic_cartan(m3())
    M = a.lattice
    assert superposition_states(a, M.mask("ab")) == S(a, "c")
    assert superposition_properties(a, M.mask("ab")) == M.mask("c")


def test_superposition_implication_examples():
    r = superposition_implication(square_cartan())
    L = square_cartan().lattice
    assert r.forward and not r.converse and r.converse_witness == L.mask(["a", "a'"])
    assert superposition_implication(atomistic_cartan(m3())).converse
    assert superposition_implication(chain_cartan(chain(3))).converse


def test_kernel_examples():
    a = atomistic_cartan(m3())
    assert [a.lattice.labels[s] for s in kernels(a)] == list(a.states)
    m = square_cartan()
    assert state_kernel(m, m.state_idx("q")) == m.lattice.top
    c = chain_cartan(chain(3))
    assert [c.lattice.labels[s] for s in kernels(c)] == list(c.states)


def test_faithfulness_examples():
    assert faithfulness_report(square_cartan()).conditions == (False,) * 6
    assert faithfulness_report(atomistic_cartan(m3())).conditions == (True,) * 6
    assert faithfulness_report(chain_cartan(chain(3))).conditions == (True,) * 6
    r = faithfulness_report(chain_cartan(m3()))
    assert not r.overall and r.agree


@pytest.mark.parametrize("L", [chain(3), boolean(2), m3(), chain(4)], ids=["C3", "B2", "M3", "C4"])
def test_faithful_condition_one_against_oracle(L):
    for m in enumerate_cartan_maps(L, 3):
        assert oracles.cartan_valid(L, m.k, m.mu)
        r = faithfulness_report(m)
        assert r.conditions[0] == oracles.faithful_condition_i(L, m.mu)
        assert r.agree
        for A in range(1 << L.n):
            assert superposition_states(m, A) == oracles.superposition_states(L, m.mu, A)


def test_join_density_examples():
    for m in MAPS.values():
        assert join_density_check(m).holds
    m = square_cartan()
    L = m.lattice
    assert {L.labels[s] for s in kernels(m)} == {"a", "a'", "1"}


def test_distributivity_and_external_implication():
    for m in MAPS.values():
        r = distributivity_report(m)
        assert r.unconditional and not r.alarms
        assert external_implication_sound(m)
    assert distributivity_report(atomistic_cartan(m3())).converse is True


def test_disjunctive_hull_examples():
    assert disjunctive_hull(atomistic_cartan(m3())).n == 8
    c = chain_cartan(chain(3))
    D = disjunctive_hull(c)
    assert set(D.sets) == {0, S(c, "m"), S(c, "m", "1")}
    m = square_cartan()
    D = disjunctive_hull(m)
    expected = {0, S(m, "p1"), S(m, "p2"), S(m, "p1", "p2"), m.sigma}
    assert set(D.sets) == expected and D.n == 5


def test_phi_and_eps_examples():
    a = atomistic_cartan(m3())
    L = a.lattice
    H = distributive_ideals(L)
    phi = phi_mu(a, H)
    D = phi.target
    for x in range(L.n):
        assert D.sets[phi(H.principal(x))] == a.mu[x]
    assert D.sets[phi(H.of(L.mask(["0", "a", "b"])))] == S(a, "a", "b")
    m = square_cartan()
    eps = eps_mu(m)
    T = eps.source.of(S(m, "p1", "p2"))
    assert eps.target.sets[eps(T)] == m.lattice.mask(["0", "a", "a'"])


@pytest.mark.parametrize("name", sorted(MAPS))
def test_hull_embedding_flags_on_catalog(name):
    r = hull_embeddings_report(MAPS[name])
    assert not r.alarms


def test_chain_cartan_examples():
    C = chain(3)
    c = chain_cartan(C)
    assert c.states == ("m", "1")
    assert c.mu[C.idx("m")] == S(c, "m") and c.mu[C.top] == S(c, "m", "1")
    B = boolean(2)
    assert chain_realizes_downsets(B)
    assert disjunctive_hull(chain_cartan(B)).n == downset_lattice(B).n == 5
    assert downset_lattice(B, include_empty=True).n == 6


@given(small_lattices(6))
def test_chain_cartan_realizes_downsets(L):
    assert chain_realizes_downsets(L)


def test_transfer_identity():
    m = atomistic_cartan(m3())
    r = transfer_pair(m, m)
    assert r.f.table == tuple(range(r.f.source.n)) == r.g.table
    assert r.orientation == "both"


def test_transfer_with_duplicate_state():
    m = atomistic_cartan(m3())
    m2 = with_duplicate_state(m, m.state_idx("a"), "a2")
    assert state_kernel(m2, m2.state_idx("a2")) == state_kernel(m2, m2.state_idx("a"))
    r = transfer_pair(m, m2)
    assert r.f_inf and r.g_sup and r.g_left_of_f


def test_transfer_square_vs_restriction():
    r = transfer_pair(square_cartan(), square_cartan_restricted())
    assert r.f_inf and r.g_sup and r.g_left_of_f
    assert r.orientation in ("g' -| f", "both")


@pytest.mark.parametrize("L", [chain(3), boolean(2), m3(), finite_topology()], ids=["C3", "B2", "M3", "top"])
def test_transfer_orientation_over_all_pairs(L):
    maps = list(enumerate_cartan_maps(L, 3))
    for m in maps:
        for m2 in maps:
            r = transfer_pair(m, m2)
            assert r.f_inf and r.g_sup and r.g_left_of_f


def test_conjunctive_completion_of_cartan_map_adds_nothing():
    for name in ("square", "m3-atomistic", "c3-interval", "topology"):
        m = MAPS[name]
        comp = conjunctive_completion(m)
        assert comp.lattice.n == m.lattice.n
        assert find_isomorphism(m.lattice, comp.lattice) is not None
        assert validate_cartan(comp.lattice, comp.cartan.states, comp.cartan.mu).valid_cartan


def test_topology_weak_map():
    w = topology_weak_cartan()
    assert isinstance(w, WeakCartanMap)
    r = completion_joins_report(w)
    assert r.added == 0 and not r.alarms and r.checked == 32


def test_state_resolution_examples():
    m = square_cartan()
    res = state_resolution(m)
    comp = conjunctive_completion(m)
    L = m.lattice
    assert comp.lattice.sets[res[S(m, "q")]] == m.mu[L.top]
    assert comp.lattice.sets[res[0]] == 0
    for a in range(L.n):
        assert comp.lattice.sets[res[m.mu[a]]] == m.mu[a]


@pytest.mark.parametrize("name", sorted(MAPS))
def test_no_alarms_on_catalog(name):
    m = MAPS[name]
    assert not all_alarms(m)
    assert not embedding_check(m).alarms


@given(small_lattices(5), st.lists(st.integers(0, 4), min_size=0, max_size=4))
def test_maps_from_kernels_are_valid_and_quiet(L, picks):
    ks = [p % L.n for p in picks]
    try:
        m = cartan_from_kernels(L, ks)
    except InvalidMapError:
        # only injectivity can fail: kernels that do not join-generate the lattice
        return
    assert oracles.cartan_valid(L, m.k, m.mu)
    assert not all_alarms(m)
