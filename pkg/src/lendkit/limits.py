"""Lax and oplax limits, weighted limits in Cat, the Grothendieck construction
and lax slices."""
from .cat import FinCat, Funct, NatT, canon
from .ends import end_of, lax_coend, lax_coend_map
from .errors import UnsupportedInstance, as_budget
from .twocat import (
    TwoFunctor, hom_2functor, lax_transformation_category, power_diagram, product_diagram, reindex,
)


class WeightedLimitResult:
    """A computed limit together with the tag of the route that produced it."""

    def __init__(self, category, construction, detail=None):
        self.category = category
        self.construction = construction
        self.detail = detail


def lax_limit(f, g, mode="lax", budget=None):
    """The ``f``-weighted lax (or oplax, pseudo) limit of ``g``: the end of ``[F -, G =]``."""
    if mode not in ("lax", "oplax", "pseudo"):
        raise ValueError(f"unknown limit mode {mode}")
    e = end_of(power_diagram(f, g, budget), mode, budget)
    return WeightedLimitResult(e.category, "end-of-powers", e)


def weighted_limit_strict(w, t, budget=None):
    """Strict weighted limit: 2-natural transformations ``w => t`` and their modifications.

    Computed directly as a hom-category, so the functor categories ``[w A, t A]``
    are never tabulated.
    """
    cat = lax_transformation_category(w, t, "strict", budget)
    return WeightedLimitResult(cat, "strict-hom")


def grothendieck(g):
    """Objects ``(A, x in G A)``, morphisms ``(f, phi: G f x -> y)``."""
    a = g.shape
    if not a.is_locally_discrete():
        raise UnsupportedInstance("the Grothendieck construction needs a locally discrete shape")
    objs = [(A, x) for A in a.objects for x in g.value(A).objects]
    mors = []
    for A, x in objs:
        for B, y in objs:
            for f in a.hom(A, B).objects:
                gb = g.value(B)
                for phi in gb.hom(g.one(f).fobj(x), y):
                    mors.append(((A, x), f, phi, (B, y)))

    def ident(o):
        return (o, a.id_one[o[0]], g.value(o[0]).identity(o[1]), o)

    def comp(n, m):
        C = n[3][0]
        return (m[0], a.comp_one[(n[1], m[1])], g.value(C).compose(n[2], g.one(n[1]).fmor(m[2])), n[3])

    return FinCat.build(objs, [(m, m[0], m[3]) for m in mors], ident, comp)


def lax_slice(a, c):
    """Objects: 1-cells ``p`` into ``c``; morphisms ``(f, fbar: p => q . f)``; pasting composition."""
    if c not in a.objects:
        raise KeyError(f"unknown object {c}")
    objs = [p for p, (s, d) in a.one.items() if d == c]
    mors = []
    for p in objs:
        for q in objs:
            for f in a.hom(a.src(p), a.src(q)).objects:
                qf = a.comp_one[(q, f)]
                for fbar in a.hom(a.src(p), c).hom(p, qf):
                    mors.append((p, f, fbar, q))

    def ident(p):
        return (p, a.id_one[a.src(p)], a.id_two[p], p)

    def comp(n, m):
        f, fbar = m[1], m[2]
        g, gbar = n[1], n[2]
        pasted = a.vcomp[(a.hcomp[(gbar, a.id_two[f])], fbar)]
        return (m[0], a.comp_one[(g, f)], pasted, n[3])

    return FinCat.build(objs, [(m, m[0], m[3]) for m in mors], ident, comp)


def product_functor(p1, p2, f1, f2):
    """``f1 x f2`` between two materialized binary products."""
    return Funct(
        p1, p2,
        {o: canon((f1.fobj(p1.olabel(o)[0]), f2.fobj(p1.olabel(o)[1]))) for o in p1.objects},
        {m: canon((f1.fmor(p1.mlabel(m)[0]), f2.fmor(p1.mlabel(m)[1]))) for m in p1.morphisms},
    )


def two_sided(a, p, q):
    """``(A', A) |-> P A' x Q A`` over ``a.mixed()`` for ``P`` over ``a^op`` and ``Q`` over ``a``."""
    m = a.mixed()
    opairs, fpairs, tpairs = m.pairs
    left = reindex(p, m, lambda o: opairs[o][0], lambda f: fpairs[f][0], lambda x: tpairs[x][0], base=a)
    right = reindex(q, m, lambda o: opairs[o][1], lambda f: fpairs[f][1], lambda x: tpairs[x][1], base=a)
    return product_diagram(left, right)


def representable_presheaf(a, c):
    """``a(-, c)`` as a diagram over ``a^op``."""
    h = hom_2functor(a)
    ao = a.op()
    idc = a.id_one[c]
    return reindex(h, ao, lambda o: canon((o, c)), lambda f: canon((f, idc)),
                   lambda x: canon((x, a.id_two[idc])))


def corepresentable(a, c):
    """``a(c, -)`` as a diagram over ``a``."""
    h = hom_2functor(a)
    idc = a.id_one[c]
    return reindex(h, a, lambda o: canon((c, o)), lambda f: canon((idc, f)),
                   lambda x: canon((a.id_two[idc], x)))


def identity_two_cells(shape, on_one):
    """Identity transformations on every (identity) 2-cell of a locally discrete shape."""
    out = {}
    for x in shape.two:
        f = on_one[shape.src2(x)]
        out[x] = NatT(f, f, {o: f.codomain.identity(f.fobj(o)) for o in f.domain.objects})
    return out


def yoneda_sharp_weight(a, budget=None):
    """``(A', A) |-> lax coend over C of a(A', C) x a(C, A)``, over ``a.mixed()``."""
    if not a.is_locally_discrete():
        raise UnsupportedInstance("the sharp weight is only computed over locally discrete shapes")
    budget = as_budget(budget)
    m = a.mixed()
    opairs, fpairs, _ = m.pairs
    integrands = {}
    coends = {}
    for o, (A1, A) in opairs.items():
        integrands[o] = two_sided(a, representable_presheaf(a, A), corepresentable(a, A1))
        coends[o] = lax_coend(integrands[o], budget)
    h = hom_2functor(a)
    on_one = {}
    for k, (u, v) in fpairs.items():
        s, d = m.one[k]
        (A1, A), (B1, B) = opairs[s], opairs[d]
        ts, td = integrands[s], integrands[d]
        comps = {}
        for c in m.objects:
            C1, C = opairs[c]
            # (p: C1 -> A, q: A1 -> C) |-> (v p, q u)
            post = h.one(canon((a.id_one[C1], v)))
            pre = h.one(canon((u, a.id_one[C])))
            comps[c] = product_functor(ts.value(c), td.value(c), post, pre)
        on_one[k] = lax_coend_map(coends[s], coends[d], comps)
    on_two = identity_two_cells(m, on_one)
    out = TwoFunctor(m, {o: coends[o].category for o in m.objects}, on_one, on_two, a)
    out.meta["coends"] = coends
    return out


__all__ = ["WeightedLimitResult", "lax_limit", "weighted_limit_strict", "grothendieck", "lax_slice",
           "product_functor", "two_sided", "representable_presheaf", "corepresentable",
           "identity_two_cells", "yoneda_sharp_weight"]
