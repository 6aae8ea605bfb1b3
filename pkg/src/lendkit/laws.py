"""The law suite: every isomorphism the library is built on, as a named,
seeded, runnable check over a corpus.

Each law yields instances; an instance is a name, the inputs it was run on
(for replay), and a thunk returning ``(ok, detail)``.  An exhausted budget or
an instance outside a construction's supported range is a skip, never a
pass.
"""
import time

from .cat import (
    FinCat, Funct, binary_product_oracle, check_binary_product, discrete_cat, enumerate_functors,
    enumerate_nats, functor_category, identity_functor, is_pullback, nats_equal, product_cat, slice_over,
    terminal_cat, walking_arrow,
)
from .descent import lax_end_via_descent
from .ends import (
    end_of, lax_coend, enumerate_wedge_modifications, enumerate_wedges, factorize_modification, factorize_wedge,
    iterated_end, power_with, swap_diagram, wedge_after, wedges_equal, whisker_wedge,
)
from .errors import Budget, BudgetExceeded, UnsupportedInstance, default_budget
from .iso import is_isomorphic
from .limits import (
    grothendieck, identity_two_cells, lax_limit, lax_slice, representable_presheaf, two_sided, weighted_limit_strict,
    yoneda_sharp_weight,
)
from .sharpflat import check_adjunction, flat_of, sharp_of, yoneda_equivalence_check
from .twocat import (
    Fin2Cat, TwoFunctor, constant_diagram, hom_2functor, lax_transformation_category, locally_discrete,
    power_diagram, product_2cat,
)


class LawResult:
    """Outcome of one law over a corpus; ``passes + len(failures) == instances``."""

    def __init__(self, law_id, statement, instances, passes, failures, skips, wall_time):
        self.law_id = law_id
        self.statement = statement
        self.instances = instances
        self.passes = passes
        self.failures = failures
        self.skips = skips
        self.wall_time = wall_time

    @property
    def ok(self):
        return self.instances >= 1 and not self.failures

    def to_json(self):
        return {
            "lawId": self.law_id,
            "statement": self.statement,
            "instances": self.instances,
            "passes": self.passes,
            "failures": self.failures,
            "skips": self.skips,
        }

    def __repr__(self):
        return (f"LawResult({self.law_id}: {self.passes}/{self.instances} passed, "
                f"{len(self.failures)} failed, {len(self.skips)} skipped)")


class Instance:
    def __init__(self, name, inputs, run):
        self.name = name
        self.inputs = inputs
        self.run = run


LAWS = {}


def law(law_id, statement):
    def register(fn):
        LAWS[law_id] = (statement, fn)
        return fn
    return register


def _iso(c, d, budget):
    return is_isomorphic(c, d, budget) is not None


def _ld(shape):
    return shape.is_locally_discrete()


def _mixed_ld(corpus):
    return [(n, t) for n, t in corpus.mixed if _ld(t.base)]


# ---------------------------------------------------------------------------
# the registered laws


@law("CONSTANT-END", "the lax end of a constant diagram at B over a 1-category A is the functor category [A, B]")
def _constant_end(corpus):
    for sname, s in corpus.shapes.items():
        if not _ld(s) or len(s.one) > 7:
            continue
        for cname, b in corpus.categories.items():
            if len(b.morphisms) > 7:
                continue

            def run(budget, s=s, b=b):
                e = end_of(constant_diagram(None, b, base=s), "lax", budget)
                return _iso(e.category, functor_category(s.underlying(), b, budget), budget), ""
            yield Instance(f"{sname}/{cname}", {"shape": s, "category": b}, run)


@law("DESCENT-AGREES", "the lax end built from products, an inserter and two equifiers is the explicit lax end")
def _descent_agrees(corpus):
    for name, t in corpus.mixed:
        def run(budget, t=t):
            e = end_of(t, "lax", budget)
            d1 = lax_end_via_descent(t, budget, "small-first")
            d2 = lax_end_via_descent(t, budget, "large-first")
            if d1.category != d2.category:
                return False, "equifier order changed the result"
            return _iso(e.category, d1.category, budget), ""
        yield Instance(name, {"diagram": t}, run)


@law("HOM-FORMULA", "lax transformations F => G with modifications form the lax end of [F-, G=]")
def _hom_formula(corpus):
    for name, f, g in corpus.covariant_pairs():
        def run(budget, f=f, g=g):
            lt = lax_transformation_category(f, g, "lax", budget)
            e = end_of(power_diagram(f, g, budget), "lax", budget)
            return _iso(lt, e.category, budget), ""
        yield Instance(name, {"source": f, "target": g}, run)


@law("REPRESENTABLE-COMMUTE", "[X, end of T] is the lax end of [X, T(-, =)]")
def _representable(corpus):
    for xname, x in (("1", terminal_cat()), ("2", walking_arrow())):
        for name, t in corpus.mixed:
            def run(budget, x=x, t=t):
                lhs = functor_category(x, end_of(t, "lax", budget).category, budget)
                rhs = end_of(power_with(x, t, budget), "lax", budget).category
                return _iso(lhs, rhs, budget), ""
            yield Instance(f"{xname}/{name}", {"exponent": x, "diagram": t}, run)


def product_shape_diagrams(corpus):
    """Diagrams over mixed product shapes ``(A x B)^op x (A x B)`` for the iterated-end law."""
    s = corpus.shapes
    two = corpus.categories["2"]
    out = []
    for an, bn in (("2", "1"), ("1", "2"), ("2", "d2"), ("d2", "2"), ("2", "2"), ("1", "cell"), ("par", "1")):
        a, b = s[an], s[bn]
        p = product_2cat(a, b)
        out.append((f"{an}x{bn}:hom", a, b, hom_2functor(p)))
        out.append((f"{an}x{bn}:const-2", a, b, constant_diagram(None, two, base=p)))
    return out


@law("FUBINI", "the end over A x B agrees with both iterated ends")
def _fubini(corpus):
    for name, a, b, t in product_shape_diagrams(corpus):
        def run(budget, a=a, b=b, t=t):
            whole = end_of(t, "lax", budget).category
            ab = iterated_end(t, a, b, "a", "lax", budget).category
            ba = iterated_end(t, a, b, "b", "lax", budget).category
            checks = {"whole~a-first": _iso(whole, ab, budget), "whole~b-first": _iso(whole, ba, budget),
                      "a-first~b-first": _iso(ab, ba, budget)}
            bad = [k for k, v in checks.items() if not v]
            return not bad, ", ".join(bad)
        yield Instance(name, {"diagram": t}, run)


@law("LAXLIM-THREE-WAYS", "the lax limit is the end of powers, the lax-transformation category, the weighted "
                          "limit by the sharp weight, and the weighted limit of the flat diagram")
def _laxlim(corpus):
    for name, f, g in corpus.covariant_pairs(locally_discrete_only=True):
        def run(budget, f=f, g=g):
            ll = lax_limit(f, g, "lax", budget).category
            routes = {
                "transformations": lax_transformation_category(f, g, "lax", budget),
                "sharp weight": weighted_limit_strict(sharp_of(f, budget), g, budget).category,
                "flat diagram": weighted_limit_strict(f, flat_of(g, "lax", budget), budget).category,
            }
            bad = [k for k, c in routes.items() if not _iso(ll, c, budget)]
            return not bad, ", ".join(bad)
        yield Instance(name, {"weight": f, "diagram": g}, run)


@law("SLICE-SHARP", "the sharp of the terminal diagram at C is the lax slice over C")
def _slice_sharp(corpus):
    for sname, s in corpus.shapes.items():
        for c in s.objects:
            def run(budget, s=s, c=c):
                if not _ld(s):
                    raise UnsupportedInstance("sharp is only computed over locally discrete shapes")
                sh = sharp_of(constant_diagram(s, terminal_cat()), budget)
                return _iso(sh.value(c), lax_slice(s, c), budget), ""
            yield Instance(f"{sname}/{c}", {"shape": s}, run)
    s = corpus.shapes["2"]

    def arrow(budget):
        sh = sharp_of(constant_diagram(s, terminal_cat()), budget)
        f = sh.one("a")
        src, dst = sh.value("0"), sh.value("1")
        if len(src.objects) != 1 or len(dst.objects) != 2 or len(dst.morphisms) != 3:
            return False, "values are not 1 and 2"
        (o,) = src.objects
        image = f.fobj(o)
        initial = [x for x in dst.objects if all(len(dst.hom(x, y)) == 1 for y in dst.objects)]
        return initial == [image], f"image {image}, initial {initial}"
    yield Instance("2/arrow", {"shape": s}, arrow)


def _adjunction_law(side):
    def gen(corpus):
        for name, f, h in corpus.covariant_pairs(locally_discrete_only=side == "sharp"):
            def run(budget, f=f, h=h):
                r = check_adjunction(f, h, side, budget)
                return r.ok, "; ".join(r.diagnostics[:3])
            yield Instance(name, {"diagram": f, "other": h}, run)
    return gen


law("ADJ-SHARP", "lax transformations F => H correspond to strict ones from the sharp of F")(_adjunction_law("sharp"))
law("ADJ-FLAT", "lax transformations H => F correspond to strict ones into the flat of F")(_adjunction_law("flat"))


def arrow_diagram(shape, b, obj):
    """Over the arrow shape ``0 -> 1``: the diagram ``1 -> B`` picking ``obj``."""
    one = terminal_cat()
    (o,) = one.objects
    (m,) = one.morphisms
    pick = Funct(one, b, {o: obj}, {m: b.identity(obj)})
    vals = {"0": one, "1": b}
    on_one = {shape.id_one[x]: identity_functor(vals[x]) for x in ("0", "1")}
    on_one["a"] = pick
    return TwoFunctor(shape, vals, on_one, identity_two_cells(shape, on_one))


@law("OPLAX-ARROW-SLICE", "the oplax limit of 1 -> B picking b is the slice B/b")
def _oplax_arrow_slice(corpus):
    s = corpus.shapes["2"]
    for cname, b in corpus.categories.items():
        for obj in b.objects:
            def run(budget, b=b, obj=obj):
                g = arrow_diagram(s, b, obj)
                lim = lax_limit(constant_diagram(s, terminal_cat()), g, "oplax", budget).category
                return _iso(lim, slice_over(b, obj), budget), ""
            yield Instance(f"{cname}/{obj}", {"category": b}, run)


@law("SLICE-PRODUCT-PULLBACK", "a binary product in B/b is a pullback in B")
def _slice_product(corpus):
    for cname, b in corpus.categories.items():
        for obj in b.objects:
            sl = slice_over(b, obj)
            objs = sorted(sl.objects)
            for i, p in enumerate(objs):
                for q in objs[i:]:
                    def run(budget, b=b, sl=sl, p=p, q=q):
                        cone = check_binary_product(sl, p, q)
                        terminal = binary_product_oracle(sl, p, q)
                        if (cone is None) != (not terminal):
                            return False, "product search and cone oracle disagree"
                        if cone is None:
                            raise UnsupportedInstance("no product in the slice")
                        r, r1, r2 = cone
                        _, h1, _ = sl.mlabel(r1)
                        _, h2, _ = sl.mlabel(r2)
                        return is_pullback(b, sl.olabel(p), sl.olabel(q), b.src(sl.olabel(r)), h1, h2), ""
                    yield Instance(f"{cname}/{obj}/{p}x{q}", {"category": b}, run)


@law("GROTHENDIECK-CONSTANT", "the Grothendieck construction of a constant diagram is a product, and in "
                              "general it is the lax coend of 1 x G")
def _grothendieck(corpus):
    for sname, s in corpus.shapes.items():
        if not _ld(s):
            continue
        for cname, b in corpus.categories.items():
            def run(budget, s=s, b=b):
                g = grothendieck(constant_diagram(s, b))
                return _iso(g, product_cat(s.underlying(), b), budget), ""
            yield Instance(f"const/{sname}/{cname}", {"shape": s, "category": b}, run)
    for name, g in corpus.covariant:
        def run(budget, g=g):
            a = g.shape
            if not _ld(a):
                raise UnsupportedInstance("the Grothendieck construction needs a locally discrete shape")
            w = two_sided(a, constant_diagram(a.op(), terminal_cat()), g)
            return _iso(grothendieck(g), lax_coend(w, budget).category, budget), ""
        yield Instance(f"coend/{name}", {"diagram": g}, run)


@law("YONEDA-FLAT", "the pseudo flat of a representable presheaf is objectwise equivalent to it")
def _yoneda(corpus):
    for sname in ("2", "sq"):
        a = corpus.shapes[sname]
        for c in a.objects:
            for x in a.objects:
                def run(budget, a=a, c=c, x=x):
                    p = representable_presheaf(a, c)
                    return yoneda_equivalence_check(p, x, budget) is not None, ""
                yield Instance(f"{sname}/{c}@{x}", {"shape": a}, run)


@law("OPLAX-DUALITY", "the oplax end of T is the lax end of T with its arguments swapped")
def _oplax_duality(corpus):
    for name, t in _mixed_ld(corpus):
        def run(budget, t=t):
            return _iso(end_of(t, "oplax", budget).category, end_of(swap_diagram(t), "lax", budget).category,
                        budget), ""
        yield Instance(name, {"diagram": t}, run)


def _apexes():
    return {"1": terminal_cat(), "2": walking_arrow(), "d2": discrete_cat(["0", "1"])}


@law("UNIVERSALITY-1D", "every lax wedge factors through the end by exactly one functor")
def _universality_1d(corpus):
    for name, t in corpus.mixed:
        for pname, apex in _apexes().items():
            def run(budget, t=t, apex=apex):
                e = end_of(t, "lax", budget)
                wedges = enumerate_wedges(t, apex, "lax", budget)
                functors = enumerate_functors(apex, e.category, budget)
                if len(wedges) != len(functors):
                    return False, f"{len(wedges)} wedges but {len(functors)} functors"
                for w in wedges:
                    u = factorize_wedge(e, w)
                    if not wedges_equal(wedge_after(e, u), w):
                        return False, "factorization does not restore the wedge"
                    hits = [v for v in functors if wedges_equal(wedge_after(e, v), w)]
                    if len(hits) != 1:
                        return False, f"{len(hits)} functors give the same wedge"
                return True, f"{len(wedges)} wedges"
            yield Instance(f"{name}@{pname}", {"diagram": t, "apex": apex}, run)


@law("UNIVERSALITY-2D", "every modification between induced wedges comes from exactly one transformation")
def _universality_2d(corpus):
    for name, t in corpus.mixed:
        for pname, apex in _apexes().items():
            def run(budget, t=t, apex=apex):
                e = end_of(t, "lax", budget)
                functors = enumerate_functors(apex, e.category, budget)[:6]
                checked = 0
                for u in functors:
                    for v in functors:
                        gammas = enumerate_wedge_modifications(t, wedge_after(e, u), wedge_after(e, v), "lax",
                                                               budget)
                        nats = enumerate_nats(u, v, budget)
                        if len(gammas) != len(nats):
                            return False, f"{len(gammas)} modifications but {len(nats)} transformations"
                        for g in gammas:
                            beta = factorize_modification(e, u, v, g)
                            back = whisker_wedge(e, beta)
                            if not all(nats_equal(back[A], g[A]) for A in g):
                                return False, "factorization does not restore the modification"
                            hits = [n for n in nats
                                    if all(nats_equal(whisker_wedge(e, n)[A], g[A]) for A in g)]
                            if len(hits) != 1:
                                return False, f"{len(hits)} transformations give the same modification"
                            checked += 1
                return True, f"{checked} modifications"
            yield Instance(f"{name}@{pname}", {"diagram": t, "apex": apex}, run)


@law("LEND-AS-WLIM", "the lax end of T is the strict limit of T weighted by the sharp of the hom weight")
def _lend_as_wlim(corpus):
    for name, t in _mixed_ld(corpus):
        def run(budget, t=t):
            w = yoneda_sharp_weight(t.base, budget)
            return _iso(weighted_limit_strict(w, t, budget).category, end_of(t, "lax", budget).category,
                        budget), ""
        yield Instance(name, {"diagram": t}, run)


# ---------------------------------------------------------------------------
# running


def _normalize(name):
    return name.upper().replace("_", "-")


def select_laws(law_filter=None):
    """Law ids matching ``law_filter`` (a name, a list of names, or ``None`` for all)."""
    if law_filter is None:
        return list(LAWS)
    wanted = [law_filter] if isinstance(law_filter, str) else list(law_filter)
    out = []
    for w in wanted:
        k = _normalize(w)
        if k not in LAWS:
            raise KeyError(f"unknown law {w}; known laws: {', '.join(LAWS)}")
        out.append(k)
    return out


def _serialize_inputs(inputs):
    from .io import category_payload, diagram_payload, twocategory_payload
    out = {}
    for k, v in inputs.items():
        if isinstance(v, TwoFunctor):
            out[k] = {"kind": "diagram", "payload": diagram_payload(v)}
        elif isinstance(v, Fin2Cat):
            out[k] = {"kind": "twocategory", "payload": twocategory_payload(v)}
        elif isinstance(v, FinCat):
            out[k] = {"kind": "category", "payload": category_payload(v)}
        else:
            out[k] = repr(v)
    return out


def run_law(law_id, corpus, budget_limit=None):
    statement, gen = LAWS[law_id]
    limit = budget_limit if budget_limit is not None else default_budget()
    start = time.perf_counter()
    instances = passes = 0
    failures, skips = [], []
    if corpus is not None and len(corpus):
        # every instance gets a fresh budget
        for inst in gen(corpus):
            try:
                ok, detail = inst.run(Budget(limit))
            except BudgetExceeded as e:
                skips.append({"instance": inst.name, "reason": f"budget: {e}"})
                continue
            except UnsupportedInstance as e:
                skips.append({"instance": inst.name, "reason": f"unsupported: {e}"})
                continue
            except Exception as e:  # an engine error on a valid input is a failure
                ok, detail = False, f"{type(e).__name__}: {e}"
            instances += 1
            if ok:
                passes += 1
            else:
                failures.append({"instance": inst.name, "detail": detail, "input": _serialize_inputs(inst.inputs)})
    return LawResult(law_id, statement, instances, passes, failures, skips, time.perf_counter() - start)


def run_laws(corpus, law_filter=None, budget=None):
    """Run the selected laws in registration order."""
    return [run_law(k, corpus, budget) for k in select_laws(law_filter)]


def results_table(results):
    rows = [("law", "instances", "passes", "failures", "skips", "seconds")]
    for r in results:
        rows.append((r.law_id, str(r.instances), str(r.passes), str(len(r.failures)), str(len(r.skips)),
                     f"{r.wall_time:.2f}"))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def results_ok(results):
    return all(r.ok for r in results)


__all__ = ["LawResult", "LAWS", "select_laws", "run_law", "run_laws", "results_table", "results_ok",
           "product_shape_diagrams", "arrow_diagram"]
