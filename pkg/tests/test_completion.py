import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import small_lattices
from lathull.bits import members
from lathull.catalog import boolean, catalog_lattices, chain, m3, n5, square, square_with_extra_join
from lathull.completion import (
    DistributiveIdeal,
    di_closure,
    di_closure_mask,
    distributive_ideals,
    distributive_subsets,
    downset_lattice,
    is_distributive_join,
    is_distributive_join_all_b,
    distributive_join_witness,
    macneille,
    verify_hull,
)
from lathull.errors import InputError
from lathull.heyting import heyting_status
from lathull.order_core import LatticeMap, build_poset, check_map, find_isomorphism

CATALOG = catalog_lattices()

# ideal counts frozen from oracles.distributive_ideals
DI_SIZES = {"C2": 2, "C3": 3, "C4": 4, "C5": 5, "C6": 6, "B2": 4, "B3": 8, "M3": 8, "N5": 6, "MO2": 16, "O6": 9}


def test_empty_join_is_distributive():
    for L in CATALOG.values():
        assert is_distributive_join(L, 0)


def test_m3_pair_not_distributive():
    L = m3()
    assert distributive_join_witness(L, L.mask("ab")) == L.idx("c")
    assert is_distributive_join(L, L.mask("abc"))


@given(small_lattices(6))
def test_both_forms_of_distributive_join_agree(L):
    for A in range(1 << L.n):
        assert is_distributive_join(L, A) == is_distributive_join_all_b(L, A) == oracles.distributive_join(L, A)


def test_distributive_subsets_examples():
    assert len(distributive_subsets(chain(3))) == 8
    assert len(distributive_subsets(boolean(2))) == 16
    N = n5()
    fam = set(distributive_subsets(N))
    assert N.mask("ab") not in fam
    assert N.mask("cb") in fam


def test_di_closure_examples():
    L = m3()
    a = L.idx("a")
    assert di_closure_mask(L, 1 << a) == L.down[a]
    assert di_closure_mask(L, L.mask("ab")) == L.mask(["0", "a", "b"])
    assert di_closure_mask(L, L.mask("abc")) == L.all
    assert di_closure_mask(L, 0) == 1 << L.bottom
    assert isinstance(di_closure(L, L.mask("ab")), DistributiveIdeal)


@given(small_lattices(6), st.integers(0, 2**6 - 1))
def test_di_closure_matches_intersection(L, A):
    A &= L.all
    assert di_closure_mask(L, A) == oracles.di_closure(L, A | 1 << L.bottom)


@pytest.mark.parametrize("name", sorted(k for k, L in CATALOG.items() if L.n <= 6))
def test_di_closure_is_a_closure(name):
    L = CATALOG[name]
    c = {A: di_closure_mask(L, A) for A in range(1 << L.n)}
    for A in range(1 << L.n):
        assert A & ~c[A] == 0
        assert c[c[A]] == c[A]
        for B in members(L.all):
            assert c[A] & ~c[A | 1 << B] == 0


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_hull_matches_oracle(name):
    L = CATALOG[name]
    H = distributive_ideals(L)
    assert sorted(H.sets) == sorted(oracles.distributive_ideals(L))
    assert H.n == DI_SIZES[name]


def test_hull_examples():
    assert find_isomorphism(distributive_ideals(chain(3)), chain(3)) is not None
    H = distributive_ideals(m3())
    assert H.n == 8 and find_isomorphism(H, boolean(3)) is not None
    N = n5()
    expected = {N.mask(s) for s in (["0"], ["0", "a"], ["0", "a", "c"], ["0", "b"], ["0", "a", "b"], N.labels)}
    assert set(distributive_ideals(N).sets) == expected


def test_ideal_type_rejects_non_ideals():
    L = m3()
    with pytest.raises(InputError):
        DistributiveIdeal(L, L.mask("a"))  # no bottom
    with pytest.raises(InputError):
        DistributiveIdeal(L, L.mask(["0", "a", "b", "c"]))  # misses the distributive join of the atoms


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_hull_closed_under_intersection(name):
    H = distributive_ideals(CATALOG[name])
    fam = set(H.sets)
    for x in H.sets:
        for y in H.sets:
            assert x & y in fam
            assert H.sets[H.meet(H.of(x), H.of(y))] == x & y
            assert H.sets[H.join(H.of(x), H.of(y))] == di_closure_mask(H.base, x | y)


@pytest.mark.parametrize("name", ["C2", "C3", "C4", "B2", "B3"])
def test_distributive_lattice_is_its_own_hull(name):
    L = CATALOG[name]
    assert find_isomorphism(L, distributive_ideals(L)) is not None


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_verify_hull_on_catalog(name):
    L = CATALOG[name]
    H = distributive_ideals(L)
    r = verify_hull(L, H, H.embedding)
    assert r.is_hull and heyting_status(H)


def test_verify_hull_square_pair_fails_condition_two():
    L, H = square(), square_with_extra_join()
    e = LatticeMap.from_labels(L, H, {x: x for x in L.labels})
    r = verify_hull(L, H, e)
    assert r.balanced_inf_embedding and r.join_dense
    assert not r.preserves_distributive_joins
    assert r.distributive_join_witness == L.mask(["a", "a'"])
    assert not r.is_hull


def test_boolean_is_its_own_hull_by_identity():
    B = boolean(2)
    assert verify_hull(B, B, LatticeMap.identity(B)).is_hull


def test_macneille_of_lattice_is_itself():
    for L in CATALOG.values():
        M = macneille(L)
        assert find_isomorphism(L, M) is not None
        r = check_map(M.embedding)
        assert r.order_embedding and r.all_meets and r.all_joins


@pytest.mark.parametrize(
    "covers",
    [[], [("0", "a"), ("0", "b")]],
    ids=["antichain", "vee"],
)
def test_macneille_completes_to_square(covers):
    labels = sorted({x for c in covers for x in c}) or ["a", "b"]
    P = build_poset(labels, covers)
    M = macneille(P)
    assert set(M.sets) == oracles.macneille_cuts(P)
    assert find_isomorphism(M, boolean(2)) is not None
    assert check_map(M.embedding).order_embedding


@given(small_lattices(6))
def test_macneille_cuts_match_oracle(L):
    assert set(macneille(L).sets) == oracles.macneille_cuts(L)


@pytest.mark.parametrize("L, size", [(chain(2), 3), (boolean(2), 6), (chain(1), 2)], ids=["C2", "B2", "trivial"])
def test_downset_lattice_with_empty(L, size):
    D = downset_lattice(L, include_empty=True)
    assert D.n == size
    assert set(D.sets) == set(oracles.downsets(L))
    assert heyting_status(D)


def test_downset_lattice_default_drops_empty():
    D = downset_lattice(boolean(2))
    assert D.n == 5 and 0 not in D.sets
    assert check_map(D.embedding).balanced


@given(small_lattices(6))
def test_hull_flags_on_random_lattices(L):
    H = distributive_ideals(L)
    assert sorted(H.sets) == sorted(oracles.distributive_ideals(L))
    assert verify_hull(L, H, H.embedding).is_hull
