import pytest

from lendkit.cat import Funct, functor_category, materialize, product_cat, terminal_cat, walking_arrow
from lendkit.descent import check_coherence, coherence_from_diagram, descent_object, lax_end_via_descent
from lendkit.ends import end_of
from lendkit.iso import is_isomorphic
from lendkit.twocat import constant_diagram, locally_discrete

from conftest import size

S2 = locally_discrete(walking_arrow())


def test_constant_arrow_descent_matches_functor_category():
    two = walking_arrow()
    d = lax_end_via_descent(constant_diagram(None, two, base=S2))
    assert size(d.category) == (3, 6)
    assert is_isomorphic(d.category, functor_category(two, two)) is not None


def test_first_coherence_object_is_product():
    two = walking_arrow()
    cd = coherence_from_diagram(constant_diagram(None, two, base=S2))
    assert is_isomorphic(materialize(cd.x1), product_cat(two, two)) is not None
    assert check_coherence(cd) == []


def test_terminal_shape_collapses():
    two = walking_arrow()
    t = constant_diagram(None, two, base=locally_discrete(terminal_cat()))
    cd = coherence_from_diagram(t)
    for x in (cd.x1, cd.x2, cd.x3):
        assert is_isomorphic(materialize(x), two) is not None
    assert is_isomorphic(descent_object(cd).category, two) is not None


def test_trivial_coherence_data():
    one = terminal_cat()
    cd = coherence_from_diagram(constant_diagram(None, one, base=S2))
    assert check_coherence(cd) == []
    assert size(descent_object(cd).category) == (1, 1)


def test_broken_equality_is_named():
    two = walking_arrow()
    cd = coherence_from_diagram(constant_diagram(None, two, base=S2))
    # collapse X2 onto one object of X1, so i.v is no longer the identity
    cd.i = Funct(cd.x2, cd.x1, {o: cd.x1.objects[0] for o in cd.x2.objects},
                      {m: cd.x1.identity(cd.x1.objects[0]) for m in cd.x2.morphisms})
    problems = check_coherence(cd)
    assert any("i.v = id" in p for p in problems)


def test_equifier_order_is_irrelevant(corpus):
    for name, t in corpus.mixed[:10]:
        a = lax_end_via_descent(t, order="small-first").category
        b = lax_end_via_descent(t, order="large-first").category
        assert is_isomorphic(a, b) is not None, name


@pytest.mark.parametrize("index", range(6))
def test_descent_agrees_with_explicit_end(corpus, index):
    name, t = corpus.mixed[index]
    assert is_isomorphic(lax_end_via_descent(t).category, end_of(t).category) is not None, name
