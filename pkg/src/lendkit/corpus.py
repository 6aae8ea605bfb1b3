"""Seeded corpus of shapes, small categories and diagrams for the law suite."""
import random

from .cat import (
    FinCat, Funct, NatT, backtrack, compose_functors, discrete_cat, enumerate_functors,
    enumerate_nats, functors_equal, hcomp_nat, identity_functor, nats_equal, poset_cat, terminal_cat,
    vcomp_nat, walking_arrow,
)
from .errors import Budget
from .twocat import Fin2Cat, TwoFunctor, constant_diagram, hom_2functor, locally_discrete, power_diagram


def parallel_pair():
    """Two objects and two parallel arrows ``f, g: 0 -> 1``."""
    return FinCat(["0", "1"], [("10", "0", "0"), ("11", "1", "1"), ("f", "0", "1"), ("g", "0", "1")],
                  {"0": "10", "1": "11"},
                  {("10", "10"): "10", ("11", "11"): "11", ("f", "10"): "f", ("g", "10"): "g",
                   ("11", "f"): "f", ("11", "g"): "g"})


def commuting_square():
    """The poset ``0 < 1 < 3``, ``0 < 2 < 3``."""
    return poset_cat(["0", "1", "2", "3"], [("0", "1"), ("0", "2"), ("1", "3"), ("2", "3")])


def chain3():
    return poset_cat(["0", "1", "2"], [("0", "1"), ("1", "2")])


def iso_pair():
    """Two objects joined by an isomorphism: equivalent, not isomorphic, to the terminal category."""
    return FinCat(["x", "y"], [("1x", "x", "x"), ("1y", "y", "y"), ("u", "x", "y"), ("v", "y", "x")],
                  {"x": "1x", "y": "1y"},
                  {("1x", "1x"): "1x", ("1y", "1y"): "1y", ("u", "1x"): "u", ("1y", "u"): "u",
                   ("v", "1y"): "v", ("1x", "v"): "v", ("v", "u"): "1x", ("u", "v"): "1y"})


def two_cell_shape():
    """Objects 0, 1; 1-cells ``f, g: 0 -> 1``; one 2-cell ``alpha: f => g``."""
    i = {m: f"1<{m}>" for m in ("10", "11", "f", "g")}
    twos = [(i[m], m, m) for m in i] + [("alpha", "f", "g")]
    vcomp = {(i[m], i[m]): i[m] for m in i}
    vcomp[("alpha", i["f"])] = "alpha"
    vcomp[(i["g"], "alpha")] = "alpha"
    hcomp = {(i["10"], i["10"]): i["10"], (i["11"], i["11"]): i["11"]}
    for x in (i["f"], i["g"], "alpha"):
        hcomp[(x, i["10"])] = x
        hcomp[(i["11"], x)] = x
    return Fin2Cat(["0", "1"], [("10", "0", "0"), ("11", "1", "1"), ("f", "0", "1"), ("g", "0", "1")],
                   twos, {"0": "10", "1": "11"}, i,
                   parallel_pair().table, vcomp, hcomp)


def fixture_shapes():
    return {
        "1": locally_discrete(terminal_cat()),
        "2": locally_discrete(walking_arrow()),
        "d2": locally_discrete(discrete_cat(["0", "1"])),
        "par": locally_discrete(parallel_pair()),
        "sq": locally_discrete(commuting_square()),
        "cell": two_cell_shape(),
    }


def fixture_categories():
    return {
        "1": terminal_cat(),
        "2": walking_arrow(),
        "d2": discrete_cat(["0", "1"]),
        "par": parallel_pair(),
        "3": chain3(),
        "iso": iso_pair(),
    }


def random_diagram(shape, values, rng, budget=None, base=None):
    """A strict 2-functor with the given object values, or ``None`` if none exists.

    Candidate functors and transformations are tried in a seeded random order.
    """
    budget = budget or Budget(200_000)
    ones = [f for f in shape.one if not shape.is_identity(f)]
    twos = [x for x in shape.two if not shape.is_identity2(x)]
    idf = {o: identity_functor(values[o]).tabulate() for o in shape.objects}

    def fun(f, asg):
        return idf[shape.src(f)] if shape.is_identity(f) else asg.get(("1", f))

    def nat(x, asg):
        if shape.is_identity2(x):
            F = fun(shape.src2(x), asg)
            return NatT(F, F, {o: F.codomain.identity(F.fobj(o)) for o in F.domain.objects})
        return asg.get(("2", x))

    comp_checks = {}
    for (g, f), h in shape.comp_one.items():
        if shape.is_identity(g) or shape.is_identity(f):
            continue
        for v in {g, f, h}:
            if not shape.is_identity(v):
                comp_checks.setdefault(v, []).append((g, f, h))
    order = [("1", f) for f in ones] + [("2", x) for x in twos]

    def candidates(var, asg):
        kind, c = var
        if kind == "1":
            out = list(enumerate_functors(values[shape.src(c)], values[shape.dst(c)], budget))
        else:
            s, d = shape.two[c]
            out = list(enumerate_nats(fun(s, asg), fun(d, asg), budget))
        rng.shuffle(out)
        return out

    def consistent(var, asg):
        kind, c = var
        if kind == "1":
            for g, f, h in comp_checks.get(c, ()):
                fg, ff, fh = fun(g, asg), fun(f, asg), fun(h, asg)
                if fg is None or ff is None or fh is None:
                    continue
                if not functors_equal(compose_functors(fg, ff), fh):
                    return False
            return True
        if var != order[-1]:
            return True
        # every 2-cell is placed: check vertical and horizontal composition
        for (y, x), z in shape.vcomp.items():
            if not nats_equal(nat(z, asg), vcomp_nat(nat(y, asg), nat(x, asg))):
                return False
        for (y, x), z in shape.hcomp.items():
            if not nats_equal(nat(z, asg), hcomp_nat(nat(y, asg), nat(x, asg))):
                return False
        return True

    for asg in backtrack(order, candidates, consistent, budget):
        on_one = {f: fun(f, asg) for f in shape.one}
        on_two = {x: nat(x, asg) for x in shape.two}
        return TwoFunctor(shape, dict(values), on_one, on_two, base)
    return None


class Corpus:
    """Shapes, categories, covariant diagrams ``F: A -> Cat`` and mixed diagrams ``T``."""

    def __init__(self, seed, shapes, categories, covariant, mixed):
        self.seed = seed
        self.shapes = shapes
        self.categories = categories
        self.covariant = covariant
        self.mixed = mixed

    def shape_name(self, shape):
        for k, v in self.shapes.items():
            if v is shape:
                return k
        return None

    def covariant_pairs(self, locally_discrete_only=False):
        """Pairs ``(F, G)`` over a common shape, in corpus order."""
        out = []
        for i, (n1, f) in enumerate(self.covariant):
            for n2, g in self.covariant[i:]:
                if f.shape is g.shape and (not locally_discrete_only or f.shape.is_locally_discrete()):
                    out.append((f"{n1}|{n2}", f, g))
        return out

    def __len__(self):
        return len(self.covariant) + len(self.mixed)


def generate_corpus(seed=0, size=2):
    """Deterministic corpus; ``size`` random diagrams per shape and kind are added to the fixtures."""
    rng = random.Random(seed)
    shapes = fixture_shapes()
    cats = fixture_categories()
    small = ["1", "2", "d2", "iso"]
    covariant = []
    mixed = []
    for sname, s in shapes.items():
        covariant.append((f"{sname}:const-1", constant_diagram(s, cats["1"])))
        covariant.append((f"{sname}:const-2", constant_diagram(s, cats["2"])))
        for k in range(size):
            for _ in range(20):
                vals = {o: cats[rng.choice(small)] for o in s.objects}
                d = random_diagram(s, vals, rng)
                if d is not None:
                    covariant.append((f"{sname}:rand{k}", d))
                    break
        mixed.append((f"{sname}:const-2", constant_diagram(None, cats["2"], base=s)))
        mixed.append((f"{sname}:hom", hom_2functor(s)))
    tiny = ["1", "2", "d2"]
    for sname in ("1", "2", "d2", "par", "cell"):
        s = shapes[sname]
        m = s.mixed()
        for k in range(size):
            for _ in range(20):
                vals = {o: cats[rng.choice(tiny)] for o in m.objects}
                d = random_diagram(m, vals, rng, base=s)
                if d is not None:
                    mixed.append((f"{sname}:mixed-rand{k}", d))
                    break
    for sname in ("2", "d2", "cell"):
        s = shapes[sname]
        fs = [d for n, d in covariant if n.startswith(sname + ":rand")]
        if fs:
            g = fs[0]
            f = constant_diagram(s, cats["1"]) if len(fs) < 2 else fs[1]
            mixed.append((f"{sname}:power", power_diagram(f, g)))
    return Corpus(seed, shapes, cats, covariant, mixed)


__all__ = ["parallel_pair", "commuting_square", "chain3", "iso_pair", "two_cell_shape", "fixture_shapes",
           "fixture_categories", "random_diagram", "Corpus", "generate_corpus"]
