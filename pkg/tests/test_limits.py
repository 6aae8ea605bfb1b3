import pytest

from lendkit.cat import Funct, discrete_cat, product_cat, slice_over, terminal_cat, walking_arrow
from lendkit.corpus import commuting_square, fixture_shapes
from lendkit.errors import UnsupportedInstance
from lendkit.iso import is_isomorphic
from lendkit.laws import arrow_diagram
from lendkit.limits import (
    grothendieck, lax_limit, lax_slice, weighted_limit_strict, yoneda_sharp_weight,
)
from lendkit.twocat import constant_diagram, lax_transformation_category, locally_discrete

from conftest import arrow_diagram_over_two, size

S2 = locally_discrete(walking_arrow())


@pytest.fixture
def g_pick0(pick0):
    return arrow_diagram_over_two(terminal_cat(), walking_arrow(), pick0)


def test_lax_limit_of_arrow_picking_zero(g_pick0):
    w = constant_diagram(S2, terminal_cat())
    assert size(lax_limit(w, g_pick0).category) == (2, 3)
    assert size(lax_limit(w, g_pick0, "pseudo").category) == (1, 1)
    assert size(lax_limit(w, g_pick0, "oplax").category) == (1, 1)


def test_lax_limit_matches_transformation_category(g_pick0):
    w = constant_diagram(S2, terminal_cat())
    a = lax_limit(w, g_pick0).category
    assert is_isomorphic(a, lax_transformation_category(w, g_pick0)) is not None


def test_strict_weighted_limit(g_pick0):
    w = constant_diagram(S2, terminal_cat())
    r = weighted_limit_strict(w, g_pick0)
    assert r.construction == "strict-hom"
    assert size(r.category) == (1, 1)


def test_conical_limit_over_discrete_shape_is_product():
    d2 = locally_discrete(discrete_cat(["0", "1"]))
    two = walking_arrow()
    g = constant_diagram(d2, two)
    lim = lax_limit(constant_diagram(d2, terminal_cat()), g).category
    assert is_isomorphic(lim, product_cat(two, two)) is not None


def test_grothendieck_of_arrow_to_terminal():
    two, one = walking_arrow(), terminal_cat()
    g = arrow_diagram_over_two(two, one, Funct(two, one, {"0": "*", "1": "*"}, {m: "1*" for m in two.morphisms}))
    assert size(grothendieck(g)) == (3, 6)


def test_grothendieck_of_constant_is_product():
    two = walking_arrow()
    assert is_isomorphic(grothendieck(constant_diagram(S2, two)), product_cat(two, two)) is not None


def test_grothendieck_rejects_two_cells():
    with pytest.raises(UnsupportedInstance):
        grothendieck(constant_diagram(fixture_shapes()["cell"], walking_arrow()))


def test_lax_slice_of_arrow():
    assert is_isomorphic(lax_slice(S2, "1"), walking_arrow()) is not None
    assert size(lax_slice(S2, "0")) == (1, 1)


def test_lax_slice_sees_two_cells():
    cell = fixture_shapes()["cell"]
    # 1-cells into 1: f, g and the identity; alpha adds one morphism f -> g
    assert len(lax_slice(cell, "1").objects) == 3
    assert len(lax_slice(cell, "1").morphisms) > len(slice_over(cell.underlying(), "1").morphisms)


def test_yoneda_weight_values():
    w = yoneda_sharp_weight(S2)
    sizes = {k: size(v) for k, v in w.on_objects.items()}
    assert sizes == {"(0,0)": (1, 1), "(0,1)": (2, 3), "(1,0)": (0, 0), "(1,1)": (1, 1)}
    assert is_isomorphic(w.value("(0,1)"), walking_arrow()) is not None


@pytest.mark.parametrize("b", [walking_arrow(), commuting_square()])
def test_oplax_limit_of_point_is_slice(b):
    for obj in b.objects:
        g = arrow_diagram(S2, b, obj)
        lim = lax_limit(constant_diagram(S2, terminal_cat()), g, "oplax").category
        assert is_isomorphic(lim, slice_over(b, obj)) is not None
