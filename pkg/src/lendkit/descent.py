"""Lax ends rebuilt from products, one inserter and two equifiers.

A diagram ``T`` over ``A^op x A`` yields coherence data

    X1 = prod_A T(A, A)
    X2 = prod_{A,B} [A(A, B), T(A, B)]
    X3 = prod_{A,B,C} [A(B, C) x A(A, B), T(A, C)]

with functors ``v, w: X1 -> X2``, ``i: X2 -> X1`` and ``r, s, t: X2 -> X3``.
Its lax descent object is the inserter of ``v, w`` cut down by the two
equifiers; none of the products is ever tabulated.
"""
from .cat import (
    FnMap, Funct, canon, FullSubcategory, LazyFunctorCat, LazyProduct, NatT, _inserter_lazy,
    compose_functors, functors_equal, identity_functor, materialize, product_cat,
)
from .ends import LaxWedge, _nonid
from .errors import ValidationError, as_budget


class CoherenceData:
    def __init__(self, x1, x2, x3, v, w, i, r, s, t, meta=None):
        self.x1, self.x2, self.x3 = x1, x2, x3
        self.v, self.w, self.i = v, w, i
        self.r, self.s, self.t = r, s, t
        self.meta = meta or {}


class DescentObject:
    def __init__(self, category, x, xi):
        self.category = category
        self.x = x
        self.xi = xi


def check_coherence(cd):
    """Names of the five equalities that fail, checked object by object and morphism by morphism."""
    out = []
    ident1 = identity_functor(cd.x1)
    pairs = [
        ("i.v = id", compose_functors(cd.i, cd.v), ident1),
        ("i.w = id", compose_functors(cd.i, cd.w), ident1),
        ("r.v = s.v", compose_functors(cd.r, cd.v), compose_functors(cd.s, cd.v)),
        ("t.w = s.w", compose_functors(cd.t, cd.w), compose_functors(cd.s, cd.w)),
        ("r.w = t.v", compose_functors(cd.r, cd.w), compose_functors(cd.t, cd.v)),
    ]
    for name, f, g in pairs:
        if not functors_equal(f, g):
            out.append(f"equality {name} fails")
    return out


def validate_coherence(cd):
    v = check_coherence(cd)
    if v:
        raise ValidationError(v, "coherence data")
    return cd


def _pairs(objs, n):
    if n == 2:
        return [(a, b) for a in objs for b in objs]
    return [(a, b, c) for a in objs for b in objs for c in objs]


def coherence_from_diagram(t, budget=None):
    """Assemble ``X1, X2, X3`` and the six functors from a diagram over ``A^op x A``."""
    budget = as_budget(budget)
    a = t.base
    objs = list(a.objects)
    pos = {A: k for k, A in enumerate(objs)}
    p2 = _pairs(objs, 2)
    p3 = _pairs(objs, 3)
    i2 = {p: k for k, p in enumerate(p2)}
    x1 = LazyProduct([t.at(A, A) for A in objs])
    x2 = LazyProduct([LazyFunctorCat(a.hom(A, B), t.at(A, B), budget) for A, B in p2])
    dom3 = {(A, B, C): product_cat(a.hom(B, C), a.hom(A, B)) for A, B, C in p3}
    x3 = LazyProduct([LazyFunctorCat(dom3[p], t.at(p[0], p[2]), budget) for p in p3])
    ida = a.id_one

    def id2(f):
        return a.id_two[f]

    def t2(u, v):
        return t.two(canon((u, v)))

    # v, w: X1 -> X2
    def v_obj(x):
        out = []
        for A, B in p2:
            h = a.hom(A, B)
            xa = x[pos[A]]
            out.append(Funct(h, t.at(A, B), {f: t.act(ida[A], f).fobj(xa) for f in h.objects},
                             {al: t2(id2(ida[A]), al).at(xa) for al in h.morphisms}))
        return tuple(out)

    def v_mor(m):
        s_, d_ = v_obj(x1.src(m)), v_obj(x1.dst(m))
        return tuple(NatT(s_[k], d_[k], {f: t.act(ida[A], f).fmor(m[pos[A]]) for f in a.hom(A, B).objects})
                     for k, (A, B) in enumerate(p2))

    def w_obj(x):
        out = []
        for A, B in p2:
            h = a.hom(A, B)
            xb = x[pos[B]]
            out.append(Funct(h, t.at(A, B), {f: t.act(f, ida[B]).fobj(xb) for f in h.objects},
                             {al: t2(al, id2(ida[B])).at(xb) for al in h.morphisms}))
        return tuple(out)

    def w_mor(m):
        s_, d_ = w_obj(x1.src(m)), w_obj(x1.dst(m))
        return tuple(NatT(s_[k], d_[k], {f: t.act(f, ida[B]).fmor(m[pos[B]]) for f in a.hom(A, B).objects})
                     for k, (A, B) in enumerate(p2))

    # i: X2 -> X1
    def i_obj(phi):
        return tuple(phi[i2[(A, A)]].fobj(ida[A]) for A in objs)

    def i_mor(n):
        return tuple(n[i2[(A, A)]].at(ida[A]) for A in objs)

    # r, s, t: X2 -> X3
    def r_obj(phi):
        out = []
        for A, B, C in p3:
            d = dom3[(A, B, C)]
            F = phi[i2[(A, B)]]
            om, mm = {}, {}
            for o in d.objects:
                g, f = d.olabel(o)
                om[o] = t.act(ida[A], g).fobj(F.fobj(f))
            for m in d.morphisms:
                be, al = d.mlabel(m)
                g, f = d.olabel(d.src(m))
                g2, f2 = d.olabel(d.dst(m))
                tac = t.at(A, C)
                mm[m] = tac.compose(t2(id2(ida[A]), be).at(F.fobj(f2)), t.act(ida[A], g).fmor(F.fmor(al)))
            out.append(Funct(d, t.at(A, C), om, mm))
        return tuple(out)

    def s_obj(phi):
        out = []
        for A, B, C in p3:
            d = dom3[(A, B, C)]
            F = phi[i2[(A, C)]]
            out.append(Funct(d, t.at(A, C),
                             {o: F.fobj(a.comp_one[d.olabel(o)]) for o in d.objects},
                             {m: F.fmor(a.hcomp[d.mlabel(m)]) for m in d.morphisms}))
        return tuple(out)

    def t_obj(phi):
        out = []
        for A, B, C in p3:
            d = dom3[(A, B, C)]
            F = phi[i2[(B, C)]]
            om, mm = {}, {}
            for o in d.objects:
                g, f = d.olabel(o)
                om[o] = t.act(f, ida[C]).fobj(F.fobj(g))
            for m in d.morphisms:
                be, al = d.mlabel(m)
                g, f = d.olabel(d.src(m))
                g2, f2 = d.olabel(d.dst(m))
                tac = t.at(A, C)
                mm[m] = tac.compose(t2(al, id2(ida[C])).at(F.fobj(g2)), t.act(f, ida[C]).fmor(F.fmor(be)))
            out.append(Funct(d, t.at(A, C), om, mm))
        return tuple(out)

    def r_mor(n):
        s_, d_ = r_obj(x2.src(n)), r_obj(x2.dst(n))
        out = []
        for k, (A, B, C) in enumerate(p3):
            d = dom3[(A, B, C)]
            N = n[i2[(A, B)]]
            out.append(NatT(s_[k], d_[k], {o: t.act(ida[A], d.olabel(o)[0]).fmor(N.at(d.olabel(o)[1]))
                                           for o in d.objects}))
        return tuple(out)

    def s_mor(n):
        s_, d_ = s_obj(x2.src(n)), s_obj(x2.dst(n))
        out = []
        for k, (A, B, C) in enumerate(p3):
            d = dom3[(A, B, C)]
            N = n[i2[(A, C)]]
            out.append(NatT(s_[k], d_[k], {o: N.at(a.comp_one[d.olabel(o)]) for o in d.objects}))
        return tuple(out)

    def t_mor(n):
        s_, d_ = t_obj(x2.src(n)), t_obj(x2.dst(n))
        out = []
        for k, (A, B, C) in enumerate(p3):
            d = dom3[(A, B, C)]
            N = n[i2[(B, C)]]
            out.append(NatT(s_[k], d_[k], {o: t.act(d.olabel(o)[1], ida[C]).fmor(N.at(d.olabel(o)[0]))
                                           for o in d.objects}))
        return tuple(out)

    def lazy(dom, cod, fo, fm):
        return Funct(dom, cod, FnMap(fo), FnMap(fm))

    return CoherenceData(
        x1, x2, x3,
        lazy(x1, x2, v_obj, v_mor), lazy(x1, x2, w_obj, w_mor), lazy(x2, x1, i_obj, i_mor),
        lazy(x2, x3, r_obj, r_mor), lazy(x2, x3, s_obj, s_mor), lazy(x2, x3, t_obj, t_mor),
        meta={"diagram": t, "pairs": p2, "triples": p3},
    )


def descent_object(cd, budget=None, order="small-first"):
    """Inserter of ``v, w`` followed by the two equifiers, in the chosen order."""
    budget = as_budget(budget)
    ins = _inserter_lazy(cd.v, cd.w, budget)
    x1, x3 = cd.x1, cd.x3

    def small(o):
        x, phi = o
        return cd.i.fmor(phi) == x1.identity(x)

    def large(o):
        _, phi = o
        return x3.compose(cd.t.fmor(phi), cd.r.fmor(phi)) == cd.s.fmor(phi)

    tests = [small, large] if order == "small-first" else [large, small]
    objs = list(ins.category.objects)
    for test in tests:
        objs = [o for o in objs if test(o)]
    cat = materialize(FullSubcategory(ins.category, objs))
    x = Funct(cat, x1, {o: cat.olabel(o)[0] for o in cat.objects},
              {m: cat.mlabel(m)[1] for m in cat.morphisms})
    xi = NatT(compose_functors(cd.v, x), compose_functors(cd.w, x), {o: cat.olabel(o)[1] for o in cat.objects})
    return DescentObject(cat, x, xi)


class DescentEnd:
    """The lax end as produced by the descent route, with its reconstructed wedge."""

    def __init__(self, category, wedge, descent, coherence):
        self.category = category
        self.wedge = wedge
        self.descent = descent
        self.coherence = coherence


def lax_end_via_descent(t, budget=None, order="small-first"):
    """``lambda_A`` is the projection of ``x``; ``lambda_f`` is ``xi`` read at ``f``."""
    budget = as_budget(budget)
    a = t.base
    cd = coherence_from_diagram(t, budget)
    d = descent_object(cd, budget, order)
    cat = d.category
    objs = list(a.objects)
    i2 = {p: k for k, p in enumerate(cd.meta["pairs"])}
    comps = {}
    for k, A in enumerate(objs):
        comps[A] = Funct(cat, t.at(A, A), {o: d.x.fobj(o)[k] for o in cat.objects},
                         {m: d.x.fmor(m)[k] for m in cat.morphisms})
    structure = {}
    for f in _nonid(a):
        A, B = a.src(f), a.dst(f)
        structure[f] = NatT(compose_functors(t.right(f), comps[A]), compose_functors(t.left(f), comps[B]),
                            {o: d.xi.at(o)[i2[(A, B)]].at(f) for o in cat.objects})
    return DescentEnd(cat, LaxWedge(cat, comps, structure), d, cd)


__all__ = ["CoherenceData", "DescentObject", "DescentEnd", "check_coherence", "validate_coherence",
           "coherence_from_diagram", "descent_object", "lax_end_via_descent"]
