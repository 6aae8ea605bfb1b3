import pytest

from lendkit.cat import discrete_cat, enumerate_functors, functor_category, product_cat, terminal_cat, walking_arrow
from lendkit.corpus import fixture_shapes
from lendkit.ends import (
    cowedge_factorizations, end_of, enumerate_cowedges, enumerate_wedges, factorize_wedge, lax_coend, swap_diagram,
    wedge_after, wedges_equal,
)
from lendkit.errors import UnsupportedInstance
from lendkit.iso import is_isomorphic
from lendkit.twocat import constant_diagram, hom_2functor, locally_discrete

from conftest import size

S2 = locally_discrete(walking_arrow())


def const(b, shape=S2):
    return constant_diagram(None, b, base=shape)


@pytest.mark.parametrize("mode,expected", [("strict", (2, 3)), ("pseudo", (2, 3)), ("lax", (3, 6)),
                                           ("oplax", (3, 6))])
def test_end_of_constant_arrow(mode, expected):
    assert size(end_of(const(walking_arrow()), mode).category) == expected


def test_lax_end_of_constant_is_functor_category():
    two = walking_arrow()
    e = end_of(const(two))
    assert is_isomorphic(e.category, functor_category(two, two)) is not None


def test_terminal_shape_end_is_the_value():
    two = walking_arrow()
    t = const(two, locally_discrete(terminal_cat()))
    for mode in ("strict", "lax"):
        assert is_isomorphic(end_of(t, mode).category, two) is not None


def test_end_over_discrete_shape_is_product():
    two = walking_arrow()
    t = const(two, locally_discrete(discrete_cat(["0", "1"])))
    assert is_isomorphic(end_of(t).category, product_cat(two, two)) is not None


def test_hom_end_over_arrow_is_terminal():
    assert size(end_of(hom_2functor(S2)).category) == (1, 1)


@pytest.mark.parametrize("apex", [terminal_cat(), walking_arrow()])
def test_wedges_match_functors_into_end(apex):
    t = const(walking_arrow())
    e = end_of(t)
    wedges = enumerate_wedges(t, apex)
    assert len(wedges) == len(list(enumerate_functors(apex, e.category)))
    for w in wedges:
        u = factorize_wedge(e, w)
        assert wedges_equal(wedge_after(e, u), w)


def test_oplax_end_is_lax_end_of_swap(corpus):
    for name, t in corpus.mixed:
        if not t.base.is_locally_discrete():
            continue
        a = end_of(t, "oplax").category
        b = end_of(swap_diagram(t), "lax").category
        assert is_isomorphic(a, b) is not None, name


def test_lax_coend_of_constant_is_product():
    two = walking_arrow()
    assert is_isomorphic(lax_coend(const(two)).category, product_cat(two, two)) is not None


def test_lax_coend_of_hom_over_arrow():
    assert is_isomorphic(lax_coend(hom_2functor(S2)).category, walking_arrow()) is not None


def test_cowedges_factor_uniquely_for_constant_diagram():
    two = walking_arrow()
    t = const(two)
    res = lax_coend(t)
    cowedges = enumerate_cowedges(t, two)
    assert cowedges
    for cw in cowedges:
        assert len(cowedge_factorizations(res, cw)) == 1


def test_lax_coend_rejects_non_discrete_shape():
    shape = fixture_shapes()["cell"]
    with pytest.raises(UnsupportedInstance):
        lax_coend(const(walking_arrow(), shape))


def test_unknown_mode():
    with pytest.raises(ValueError):
        end_of(const(walking_arrow()), "colax")
