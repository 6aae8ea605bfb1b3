import pytest

from lendkit.cat import terminal_cat, walking_arrow
from lendkit.corpus import commuting_square
from lendkit.errors import UnsupportedInstance
from lendkit.iso import is_isomorphic
from lendkit.limits import lax_slice, representable_presheaf
from lendkit.sharpflat import (
    check_adjunction, counit_flat, flat_of, sharp_of, unit_sharp, yoneda_equivalence_check,
)
from lendkit.corpus import two_cell_shape
from lendkit.twocat import check_2functor, constant_diagram, locally_discrete

from conftest import arrow_diagram_over_two, size

S2 = locally_discrete(walking_arrow())


@pytest.fixture
def g_pick0(pick0):
    return arrow_diagram_over_two(terminal_cat(), walking_arrow(), pick0)


def test_sharp_of_terminal_is_lax_slice():
    sh = sharp_of(constant_diagram(S2, terminal_cat()))
    assert check_2functor(sh) == []
    for c in S2.objects:
        assert is_isomorphic(sh.value(c), lax_slice(S2, c)) is not None
    # the arrow goes to the inclusion of 1 into 2 at its initial object
    image = sh.one("a").fobj(sh.value("0").objects[0])
    dst = sh.value("1")
    assert all(len(dst.hom(image, y)) == 1 for y in dst.objects)


def test_flat_of_terminal_is_terminal():
    fl = flat_of(constant_diagram(S2, terminal_cat()))
    assert [size(fl.value(c)) for c in S2.objects] == [(1, 1), (1, 1)]


def test_flat_rejects_unknown_mode():
    with pytest.raises(ValueError):
        flat_of(constant_diagram(S2, terminal_cat()), "strict")


def test_sharp_rejects_two_cells():
    with pytest.raises(UnsupportedInstance):
        sharp_of(constant_diagram(two_cell_shape(), terminal_cat()))


def test_unit_and_counit_have_the_right_ends(g_pick0):
    eta = unit_sharp(g_pick0)
    eps = counit_flat(g_pick0)
    assert set(eta.components) == set(S2.objects)
    assert set(eps.components) == set(S2.objects)


@pytest.mark.parametrize("side", ["sharp", "flat"])
def test_adjunction_examples(side, g_pick0):
    w = constant_diagram(S2, terminal_cat())
    for f, h in ((w, g_pick0), (g_pick0, w), (g_pick0, g_pick0)):
        r = check_adjunction(f, h, side)
        assert r.verdict == "iso", r.diagnostics


def test_adjunction_unknown_side(g_pick0):
    with pytest.raises(ValueError):
        check_adjunction(g_pick0, g_pick0, "left")


@pytest.mark.parametrize("shape", [S2, locally_discrete(commuting_square())], ids=["arrow", "square"])
def test_yoneda_for_representables(shape):
    for c in shape.objects:
        p = representable_presheaf(shape, c)
        for o in p.shape.objects:
            assert yoneda_equivalence_check(p, o) is not None
