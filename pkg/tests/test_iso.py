import itertools

from hypothesis import given, settings, strategies as st

from lendkit.cat import (
    FinCat, check_functor, discrete_cat, functor_category, opposite_cat, poset_cat, product_cat, terminal_cat,
    walking_arrow,
)
from lendkit.corpus import commuting_square, fixture_categories, iso_pair
from lendkit.iso import is_equivalent, is_isomorphic, skeleton

CATS = fixture_categories()


def _relabel(c, perm):
    """Same category with object and morphism ids renamed."""
    on = {o: f"o{perm(o)}" for o in c.objects}
    mn = {m: f"m{perm(m)}" for m in c.morphisms}
    return FinCat([on[o] for o in reversed(c.objects)],
                  [(mn[m], on[c.src(m)], on[c.dst(m)]) for m in reversed(c.morphisms)],
                  {on[o]: mn[i] for o, i in c.identities.items()},
                  {(mn[g], mn[f]): mn[h] for (g, f), h in c.table.items()})


def test_relabelled_copy_is_isomorphic():
    for c in CATS.values():
        d = _relabel(c, lambda x: x[::-1])
        w = is_isomorphic(c, d)
        assert w is not None
        assert check_functor(w.forward) == [] and check_functor(w.backward) == []


def test_size_mismatch_is_not_isomorphic():
    assert is_isomorphic(walking_arrow(), discrete_cat(["0", "1"])) is None
    assert is_isomorphic(walking_arrow(), terminal_cat()) is None


def test_functor_category_from_terminal():
    two = walking_arrow()
    assert is_isomorphic(functor_category(terminal_cat(), two), two) is not None


def test_self_dual_posets():
    two = walking_arrow()
    assert is_isomorphic(opposite_cat(two), two) is not None
    sq = commuting_square()
    assert is_isomorphic(opposite_cat(sq), sq) is not None


def test_chain_is_not_isomorphic_to_opposite_of_v_shape():
    v = poset_cat(["0", "1", "2"], [("0", "1"), ("0", "2")])
    assert is_isomorphic(v, opposite_cat(v)) is None


def test_equivalence_without_isomorphism():
    assert is_isomorphic(iso_pair(), terminal_cat()) is None
    assert is_equivalent(iso_pair(), terminal_cat()) is not None
    assert len(skeleton(iso_pair()).category.objects) == 1
    assert is_equivalent(walking_arrow(), terminal_cat()) is None


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.data())
def test_isomorphism_invariant_under_product_symmetry(n, data):
    rel = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=4))
    c = poset_cat([str(i) for i in range(n)], [(str(a), str(b)) for a, b in rel if a < b])
    two = walking_arrow()
    assert is_isomorphic(product_cat(c, two), product_cat(two, c)) is not None
    assert is_equivalent(c, c) is not None


def test_discrete_categories_by_size():
    for n, m in itertools.product(range(4), repeat=2):
        got = is_isomorphic(discrete_cat([str(i) for i in range(n)]), discrete_cat([f"x{i}" for i in range(m)]))
        assert (got is not None) == (n == m)
