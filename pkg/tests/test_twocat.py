import pytest

from lendkit.cat import Funct, terminal_cat, walking_arrow
from lendkit.corpus import fixture_shapes, two_cell_shape
from lendkit.twocat import (
    check_2cat, check_2functor, constant_diagram, dualize_2cat, enumerate_lax_transformations,
    enumerate_modifications, hom_2functor, lax_transformation_category, locally_discrete, power_diagram,
    product_2cat,
)

from conftest import arrow_diagram_over_two, size

SHAPES = fixture_shapes()


@pytest.mark.parametrize("name", sorted(SHAPES))
def test_shapes_and_derived_shapes_are_2categories(name):
    a = SHAPES[name]
    assert check_2cat(a) == []
    assert check_2cat(a.op()) == []
    assert check_2cat(a.mixed()) == []
    for mode in ("op", "co", "coop"):
        assert check_2cat(dualize_2cat(a, mode)) == []


def test_interchange_violation_is_reported():
    a = two_cell_shape()
    a.vcomp[("alpha", "1<f>")] = "1<g>"
    assert check_2cat(a)


def test_product_of_shapes():
    a = product_2cat(SHAPES["2"], SHAPES["cell"])
    assert check_2cat(a) == []
    assert len(a.objects) == 4


@pytest.mark.parametrize("name", sorted(SHAPES))
def test_hom_2functor_is_a_2functor(name):
    assert check_2functor(hom_2functor(SHAPES[name])) == []


def test_lax_transformations_into_arrow(pick0):
    one = terminal_cat()
    g = arrow_diagram_over_two(one, walking_arrow(), pick0)
    w = constant_diagram(g.shape, one)
    assert len(list(enumerate_lax_transformations(w, g, "lax"))) == 2
    assert len(list(enumerate_lax_transformations(w, g, "pseudo"))) == 1
    assert len(list(enumerate_lax_transformations(w, g, "strict"))) == 1


def test_strict_pseudo_lax_nested(corpus):
    for _, f, g in corpus.covariant_pairs()[:15]:
        keys = {m: {t.key for t in enumerate_lax_transformations(f, g, m)} for m in ("strict", "pseudo", "lax")}
        assert keys["strict"] <= keys["pseudo"] <= keys["lax"]


def test_modifications_include_identity(corpus):
    for _, f, g in corpus.covariant_pairs()[:8]:
        for s in enumerate_lax_transformations(f, g):
            assert len(list(enumerate_modifications(s, s))) >= 1


def test_power_diagram_validates(corpus):
    for _, f, g in corpus.covariant_pairs()[:8]:
        assert check_2functor(power_diagram(f, g)) == []


def test_broken_composition_is_named(pick0):
    one = terminal_cat()
    g = arrow_diagram_over_two(one, walking_arrow(), pick0)
    g.on_one["11"] = Funct(walking_arrow(), walking_arrow(), {"0": "1", "1": "1"}, {"10": "11", "11": "11",
                                                                                    "a": "11"})
    assert check_2functor(g)


def test_transformation_category_is_a_category(corpus):
    from lendkit.cat import check_fin_cat
    for _, f, g in corpus.covariant_pairs()[:10]:
        assert check_fin_cat(lax_transformation_category(f, g)) == []


def test_locally_discrete_view():
    a = locally_discrete(walking_arrow())
    assert a.is_locally_discrete()
    assert not two_cell_shape().is_locally_discrete()
    assert size(a.hom("0", "1")) == (1, 1)
