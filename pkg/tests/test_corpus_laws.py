import pytest

from lendkit.corpus import Corpus, generate_corpus, random_diagram, two_cell_shape
from lendkit.errors import BudgetExceeded
from lendkit.io import serialize
from lendkit.laws import LAWS, Instance, results_ok, run_law, run_laws, select_laws
from lendkit.twocat import check_2functor

import random

EXPECTED_LAWS = {
    "CONSTANT-END", "DESCENT-AGREES", "HOM-FORMULA", "REPRESENTABLE-COMMUTE", "FUBINI", "LAXLIM-THREE-WAYS",
    "SLICE-SHARP", "ADJ-SHARP", "ADJ-FLAT", "OPLAX-ARROW-SLICE", "SLICE-PRODUCT-PULLBACK",
    "GROTHENDIECK-CONSTANT", "YONEDA-FLAT", "OPLAX-DUALITY", "UNIVERSALITY-1D", "UNIVERSALITY-2D",
    "LEND-AS-WLIM",
}


def test_all_laws_registered():
    assert set(LAWS) == EXPECTED_LAWS


def test_corpus_sizes(corpus):
    assert len(corpus.covariant) == 24
    assert len(corpus.mixed) == 25


def test_corpus_contains_a_genuine_two_cell():
    c = generate_corpus(0)
    assert any(not t.shape.is_locally_discrete() for _, t in c.covariant)
    assert any(not t.base.is_locally_discrete() for _, t in c.mixed)


def test_every_corpus_diagram_validates(corpus):
    for name, t in corpus.covariant + corpus.mixed:
        assert check_2functor(t) == [], name


def test_corpus_is_deterministic():
    a, b = generate_corpus(3), generate_corpus(3)
    assert [n for n, _ in a.covariant + a.mixed] == [n for n, _ in b.covariant + b.mixed]
    for (_, x), (_, y) in zip(a.covariant + a.mixed, b.covariant + b.mixed):
        assert serialize("diagram", x) == serialize("diagram", y)


def test_random_diagram_respects_budget():
    from lendkit.corpus import fixture_categories
    from lendkit.errors import Budget
    s = two_cell_shape()
    cats = fixture_categories()
    with pytest.raises(BudgetExceeded):
        random_diagram(s, {"0": cats["iso"], "1": cats["iso"]}, random.Random(0), Budget(3))


def test_empty_corpus_runs_no_instance():
    empty = Corpus(0, {}, {}, [], [])
    results = run_laws(empty)
    assert all(r.instances == 0 for r in results)
    assert not results_ok(results)


def test_law_names_are_normalized():
    assert select_laws("constant_end") == ["CONSTANT-END"]
    with pytest.raises(KeyError):
        select_laws("no-such-law")


def test_failures_are_reported_with_inputs(monkeypatch, corpus):
    def broken(c):
        name, t = c.covariant[0]
        yield Instance(name, {"diagram": t}, lambda budget: (False, "planted"))

    monkeypatch.setitem(LAWS, "PLANTED", ("always fails", broken))
    r = run_law("PLANTED", corpus)
    assert r.instances == 1 and r.passes == 0 and not r.ok
    assert r.failures[0]["input"]["diagram"]["kind"] == "diagram"


def test_exhausted_budget_is_a_skip_not_a_pass(corpus):
    r = run_law("CONSTANT-END", corpus, budget_limit=1)
    assert r.passes == 0
    assert r.skips


def test_report_has_no_timing(corpus):
    r = run_law("OPLAX-DUALITY", corpus)
    assert "wall_time" not in r.to_json() and "seconds" not in r.to_json()
