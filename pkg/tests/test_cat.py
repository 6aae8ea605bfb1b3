import pytest
from hypothesis import given, settings, strategies as st

from lendkit.cat import (
    FinCat, NatT, binary_product_oracle, check_binary_product, check_fin_cat, check_functor, discrete_cat,
    enumerate_functors, enumerate_nats, equifier, functor_category, identity_functor, inserter,
    materialize, opposite_cat, poset_cat, product_cat, slice_over, terminal_cat, walking_arrow,
)
from lendkit.corpus import chain3, commuting_square, fixture_categories, iso_pair, parallel_pair
from lendkit.errors import Budget, BudgetExceeded, ValidationError
from lendkit.cat import validate_fin_cat

from conftest import size

CATS = fixture_categories()


def test_product_of_two_arrows(two):
    assert size(product_cat(two, two)) == (4, 9)


def test_functors_and_functor_category(two):
    assert len(list(enumerate_functors(two, two))) == 3
    assert size(functor_category(two, two)) == (3, 6)


def test_functor_category_into_terminal_and_from_empty(two, one):
    assert size(functor_category(two, one)) == (1, 1)
    assert size(functor_category(discrete_cat([]), two)) == (1, 1)


def test_inserter_of_identities_is_objects_with_endomorphisms(two):
    ident = identity_functor(two)
    ins = inserter(ident, ident)
    # only identity endomorphisms exist in the walking arrow
    assert size(ins.category) == (2, 3)
    assert not check_fin_cat(ins.category)


def test_inserter_over_terminal(one, two, pick0):
    from lendkit.cat import Funct
    pick1 = Funct(one, two, {"*": "1"}, {"1*": "11"})
    assert size(inserter(pick0, pick1).category) == (1, 1)
    assert size(inserter(pick1, pick0).category) == (0, 0)


def test_equifier_keeps_objects_where_cells_agree(two):
    ident = identity_functor(two)
    ins = inserter(ident, ident)
    cell = ins.cell
    sub, incl = equifier(cell, cell)
    assert size(sub) == size(ins.category)
    # a non-parallel pair is rejected
    other = NatT(identity_functor(two), identity_functor(two), {"0": "10", "1": "11"})
    with pytest.raises(ValueError):
        equifier(cell, other)


def test_slice_over_arrow(two):
    assert size(slice_over(two, "1")) == (2, 3)
    assert size(slice_over(two, "0")) == (1, 1)


def test_binary_products():
    two = walking_arrow()
    assert check_binary_product(two, "0", "1")[0] == "0"
    assert check_binary_product(discrete_cat(["0", "1"]), "0", "1") is None
    sq = commuting_square()
    assert check_binary_product(sq, "1", "2")[0] == "0"


@pytest.mark.parametrize("name", sorted(CATS))
def test_two_product_checkers_agree(name):
    c = CATS[name]
    for x in c.objects:
        for y in c.objects:
            found = check_binary_product(c, x, y)
            oracle = binary_product_oracle(c, x, y)
            assert (found is None) == (not oracle)
            if found is not None:
                assert found in oracle


def test_broken_unit_law_is_named():
    bad = FinCat(["x"], [("1x", "x", "x"), ("e", "x", "x")], {"x": "1x"},
                 {("1x", "1x"): "1x", ("e", "1x"): "1x", ("1x", "e"): "e", ("e", "e"): "e"})
    v = check_fin_cat(bad)
    assert any("unit law" in line for line in v)
    with pytest.raises(ValidationError):
        validate_fin_cat(bad)


def test_missing_identity_is_named():
    bad = FinCat(["x"], [("e", "x", "x")], {}, {("e", "e"): "e"})
    assert any("identit" in line for line in check_fin_cat(bad))


@pytest.mark.parametrize("name", sorted(CATS))
def test_fixtures_are_categories(name):
    assert check_fin_cat(CATS[name]) == []


def test_iso_pair_and_parallel_pair_shapes():
    assert size(iso_pair()) == (2, 4)
    assert size(parallel_pair()) == (2, 4)
    assert size(chain3()) == (3, 6)


def test_budget_is_enforced(two):
    with pytest.raises(BudgetExceeded):
        list(enumerate_functors(product_cat(two, two), product_cat(two, two), Budget(5)))


posets = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=5).map(
        lambda rel: (n, [(str(a), str(b)) for a, b in rel if a < b])))


@settings(max_examples=40, deadline=None)
@given(posets)
def test_generated_posets_are_categories(p):
    n, rel = p
    c = poset_cat([str(i) for i in range(n)], rel)
    assert check_fin_cat(c) == []
    assert check_fin_cat(opposite_cat(c)) == []
    assert size(opposite_cat(opposite_cat(c))) == size(c)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(sorted(CATS)), st.sampled_from(sorted(CATS)))
def test_enumerated_functors_and_nats_are_valid(a, b):
    ca, cb = CATS[a], CATS[b]
    funs = list(enumerate_functors(ca, cb))
    for f in funs:
        assert check_functor(f) == []
    fc = functor_category(ca, cb)
    assert len(fc.objects) == len(funs)
    assert check_fin_cat(fc) == []
    homs = sum(len(list(enumerate_nats(f, g))) for f in funs for g in funs)
    assert homs == len(materialize(fc).morphisms)


def test_product_with_terminal_is_neutral():
    for c in CATS.values():
        assert size(product_cat(c, terminal_cat())) == size(c)
