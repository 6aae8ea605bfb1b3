"""Lax, pseudo, strict and oplax ends of diagrams ``T: A^op x A -> Cat``,
computed from their explicit family presentation, together with lax coends
over locally discrete shapes and both universal-property factorizations.

An object of the lax end is a family ``x_A`` in ``T(A, A)`` with cells
``x_f : T(1, f) x_A -> T(f, 1) x_B`` satisfying

* ``x_{1_A} = id``,
* ``T(f, 1) x_g . T(1, g) x_f = x_{gf}``,
* ``T(alpha, 1)_{x_B} . x_f = x_g . T(1, alpha)_{x_A}`` for ``alpha: f => g``.

The oplax mode reverses every ``x_f``.
"""
from .cat import (
    FinCat, Funct, NatT, backtrack, canon, compose_functors, enumerate_functors,
    enumerate_nats, functor_category, functors_equal, is_invertible_nat, nats_equal,
    whisker_left,
)
from .errors import UnsupportedInstance, ValidationError, as_budget
from .twocat import TwoFunctor, _constraint_index, _run_constraints, _var_order, reindex

END_MODES = ("strict", "pseudo", "lax", "oplax")


def _check_mode(mode):
    if mode not in END_MODES:
        raise ValueError(f"unknown mode {mode}; expected one of {', '.join(END_MODES)}")


def _nonid(a):
    return [f for f in a.one if not a.is_identity(f)]


class WedgeFamily:
    """One object of an end: ``objects[A] = x_A`` and ``cells[f] = x_f`` (non-identity ``f``)."""

    def __init__(self, base, objects, cells):
        self.objects = dict(objects)
        self.cells = dict(cells)
        self.key = canon((tuple(self.objects[a] for a in base.objects),
                          tuple(self.cells[f] for f in _nonid(base))))

    def __repr__(self):
        return f"WedgeFamily({self.key})"


class FamilyMorphism:
    def __init__(self, base, source, target, components):
        self.source = source
        self.target = target
        self.components = dict(components)
        self.key = canon((source.key, tuple(self.components[a] for a in base.objects), target.key))

    def __repr__(self):
        return f"FamilyMorphism({self.key})"


class LaxWedge:
    """A wedge with apex ``apex``: functors into each ``T(A, A)`` and the cells ``lambda_f``."""

    def __init__(self, apex, components, structure):
        self.apex = apex
        self.components = components
        self.structure = structure


class EndResult:
    def __init__(self, diagram, mode, category, wedge, families):
        self.diagram = diagram
        self.mode = mode
        self.category = category
        self.wedge = wedge
        self.families = families

    @property
    def base(self):
        return self.diagram.base

    def family(self, obj):
        return self.category.olabel(obj)

    def morphism(self, m):
        return self.category.mlabel(m)

    def family_id(self, objects, cells):
        return WedgeFamily(self.base, objects, cells).key

    def morphism_id(self, src_id, components, dst_id):
        src, dst = self.family(src_id), self.family(dst_id)
        return FamilyMorphism(self.base, src, dst, components).key


def _cell_ends(t, f, xa, xb, mode):
    """Source and target of ``x_f`` in ``T(A, B)``."""
    r = t.right(f).fobj(xa)
    l = t.left(f).fobj(xb)
    return (l, r) if mode == "oplax" else (r, l)


def _family_constraints(t, mode, x_obj, x_cell, vars_obj, vars_cell):
    """Composition and 2-cell axioms as (variables, check) pairs over an assignment."""
    a = t.base
    constraints = []
    for (g, f), gf in a.comp_one.items():
        if a.is_identity(g) or a.is_identity(f):
            continue
        A, C = a.src(f), a.dst(g)
        B = a.dst(f)
        vs = set(vars_cell(f) + vars_cell(g) + vars_cell(gf))
        tac = t.at(A, C)
        lf = t.act(f, a.id_one[C])
        rg = t.act(a.id_one[A], g)

        def comp_check(asg, f=f, g=g, gf=gf, tac=tac, lf=lf, rg=rg):
            xf, xg, xgf = x_cell(f, asg), x_cell(g, asg), x_cell(gf, asg)
            if mode == "oplax":
                return tac.compose(rg.fmor(xf), lf.fmor(xg)) == xgf
            return tac.compose(lf.fmor(xg), rg.fmor(xf)) == xgf

        constraints.append((tuple(vs), comp_check))
    for al, (f, g) in a.two.items():
        if a.is_identity2(al):
            continue
        A, B = a.src(f), a.dst(f)
        vs = set(vars_cell(f) + vars_cell(g) + vars_obj(A) + vars_obj(B))
        tab = t.at(A, B)
        l2, r2 = t.left2(al), t.right2(al)

        def two_check(asg, f=f, g=g, A=A, B=B, tab=tab, l2=l2, r2=r2):
            xa, xb = x_obj(A, asg), x_obj(B, asg)
            xf, xg = x_cell(f, asg), x_cell(g, asg)
            if mode == "oplax":
                return tab.compose(r2.at(xa), xf) == tab.compose(xg, l2.at(xb))
            return tab.compose(l2.at(xb), xf) == tab.compose(xg, r2.at(xa))

        constraints.append((tuple(vs), two_check))
    return constraints


def enumerate_families(t, mode="lax", budget=None):
    """Every family ``(x_A, x_f)`` satisfying the wedge axioms in the given mode."""
    _check_mode(mode)
    if t.base is None:
        raise ValueError("ends need a diagram over A^op x A")
    budget = as_budget(budget)
    a = t.base

    def x_obj(A, asg):
        return asg[("o", A)]

    def x_cell(f, asg):
        if a.is_identity(f):
            A = a.src(f)
            return t.at(A, A).identity(asg[("o", A)])
        return asg[("m", f)]

    def vars_obj(A):
        return [("o", A)]

    def vars_cell(f):
        return [("o", a.src(f)), ("o", a.dst(f))] + ([] if a.is_identity(f) else [("m", f)])

    idx = _constraint_index(_family_constraints(t, mode, x_obj, x_cell, vars_obj, vars_cell))

    def candidates(var, asg):
        kind, x = var
        if kind == "o":
            return t.at(x, x).objects
        A, B = a.src(x), a.dst(x)
        tab = t.at(A, B)
        s, d = _cell_ends(t, x, asg[("o", A)], asg[("o", B)], mode)
        if mode == "strict":
            return [tab.identity(s)] if s == d else []
        hs = tab.hom(s, d)
        if mode == "pseudo":
            return [m for m in hs if tab.is_iso(m)]
        return hs

    out = []
    for asg in backtrack(_var_order(a), candidates, lambda v, s: _run_constraints(idx, v, s), budget):
        out.append(WedgeFamily(a, {A: asg[("o", A)] for A in a.objects},
                               {f: asg[("m", f)] for f in _nonid(a)}))
    return out


def _morphism_ok(t, mode, f, x, y, ga, gb):
    a = t.base
    tab = t.at(a.src(f), a.dst(f))
    r, l = t.right(f), t.left(f)
    if mode == "oplax":
        return tab.compose(r.fmor(ga), x.cells[f]) == tab.compose(y.cells[f], l.fmor(gb))
    return tab.compose(l.fmor(gb), x.cells[f]) == tab.compose(y.cells[f], r.fmor(ga))


def enumerate_family_morphisms(t, x, y, mode="lax", budget=None):
    budget = as_budget(budget)
    a = t.base
    constraints = []
    for f in _nonid(a):
        A, B = a.src(f), a.dst(f)
        constraints.append(((A, B), lambda asg, f=f, A=A, B=B: _morphism_ok(t, mode, f, x, y, asg[A], asg[B])))
    idx = _constraint_index(constraints)

    def candidates(A, asg):
        return t.at(A, A).hom(x.objects[A], y.objects[A])

    return [FamilyMorphism(a, x, y, asg) for asg in
            backtrack(list(a.objects), candidates, lambda v, s: _run_constraints(idx, v, s), budget)]


def end_of(t, mode="lax", budget=None):
    """The end of ``t`` in the given mode, with its universal wedge of projections."""
    _check_mode(mode)
    budget = as_budget(budget)
    a = t.base
    fams = enumerate_families(t, mode, budget)
    mors = []
    for x in fams:
        for y in fams:
            for m in enumerate_family_morphisms(t, x, y, mode, budget):
                mors.append((m, x, y))

    def ident(x):
        return FamilyMorphism(a, x, x, {A: t.at(A, A).identity(x.objects[A]) for A in a.objects})

    def comp(m2, m1):
        return FamilyMorphism(a, m1.source, m2.target,
                              {A: t.at(A, A).compose(m2.components[A], m1.components[A]) for A in a.objects})

    cat = FinCat.build(fams, mors, ident, comp)
    return EndResult(t, mode, cat, _projection_wedge(t, cat, mode), fams)


def _projection_wedge(t, cat, mode):
    a = t.base
    comps = {}
    for A in a.objects:
        comps[A] = Funct(cat, t.at(A, A),
                         {o: cat.olabel(o).objects[A] for o in cat.objects},
                         {m: cat.mlabel(m).components[A] for m in cat.morphisms})
    structure = {}
    for f in _nonid(a):
        A, B = a.src(f), a.dst(f)
        r = compose_functors(t.right(f), comps[A])
        l = compose_functors(t.left(f), comps[B])
        s, d = (l, r) if mode == "oplax" else (r, l)
        structure[f] = NatT(s, d, {o: cat.olabel(o).cells[f] for o in cat.objects})
    return LaxWedge(cat, comps, structure)


# ---------------------------------------------------------------------------
# wedges with an arbitrary apex, and the universal properties


def enumerate_wedges(t, apex, mode="lax", budget=None):
    """Every wedge of the given mode with apex ``apex`` (an independent oracle)."""
    _check_mode(mode)
    budget = as_budget(budget)
    a = t.base
    comps = {A: enumerate_functors(apex, t.at(A, A), budget) for A in a.objects}
    cache = {}

    def x_obj(A, asg):
        return asg[("o", A)]

    def x_cell(f, asg):
        if a.is_identity(f):
            A = a.src(f)
            s = asg[("o", A)]
            return NatT(s, s, {p: t.at(A, A).identity(s.fobj(p)) for p in apex.objects})
        return asg[("m", f)]

    def vars_cell(f):
        return [("o", a.src(f)), ("o", a.dst(f))] + ([] if a.is_identity(f) else [("m", f)])

    pointwise = _family_constraints(
        t, mode,
        lambda A, asg: asg["p"][("o", A)],
        lambda f, asg: asg["p"][("c", f)],
        lambda A: [("o", A)], vars_cell)

    def lift(check):
        def run(asg):
            for p in apex.objects:
                view = {"p": _PointView(asg, p, a, t)}
                if not check(view):
                    return False
            return True
        return run

    idx = _constraint_index([(vs, lift(ch)) for vs, ch in pointwise])

    def candidates(var, asg):
        kind, f = var
        if kind == "o":
            return comps[f]
        A, B = a.src(f), a.dst(f)
        sa, sb = asg[("o", A)], asg[("o", B)]
        key = (f, sa.key, sb.key)
        if key not in cache:
            r = compose_functors(t.right(f), sa).tabulate()
            l = compose_functors(t.left(f), sb).tabulate()
            s, d = (l, r) if mode == "oplax" else (r, l)
            if mode == "strict":
                cache[key] = [NatT(s, d, {p: t.at(A, B).identity(s.fobj(p)) for p in apex.objects})] \
                    if functors_equal(s, d) else []
            else:
                ns = enumerate_nats(s, d, budget)
                cache[key] = [n for n in ns if is_invertible_nat(n)] if mode == "pseudo" else ns
        return cache[key]

    out = []
    for asg in backtrack(_var_order(a), candidates, lambda v, s: _run_constraints(idx, v, s), budget):
        out.append(LaxWedge(apex, {A: asg[("o", A)] for A in a.objects},
                            {f: asg[("m", f)] for f in _nonid(a)}))
    return out


class _PointView(dict):
    """Evaluates a wedge assignment at one apex object, for reuse of the family axioms."""

    def __init__(self, asg, p, a, t):
        super().__init__()
        self.asg, self.p, self.a, self.t = asg, p, a, t

    def __getitem__(self, var):
        kind, x = var
        if kind == "o":
            return self.asg[("o", x)].fobj(self.p)
        a = self.a
        if a.is_identity(x):
            A = a.src(x)
            return self.t.at(A, A).identity(self.asg[("o", A)].fobj(self.p))
        return self.asg[("m", x)].at(self.p)


def wedge_family_at(e, sigma, p):
    a = e.base
    return WedgeFamily(a, {A: sigma.components[A].fobj(p) for A in a.objects},
                       {f: sigma.structure[f].at(p) for f in _nonid(a)})


def factorize_wedge(e, sigma):
    """The unique functor ``u`` into the end with ``lambda . u = sigma``."""
    a = e.base
    cat = e.category
    apex = sigma.apex
    om = {}
    for p in apex.objects:
        k = wedge_family_at(e, sigma, p).key
        if k not in cat.labels:
            raise ValidationError([f"apex object {p} does not give a wedge family"], "wedge")
        om[p] = k
    mm = {}
    for m in apex.morphisms:
        s, d = apex.src(m), apex.dst(m)
        k = e.morphism_id(om[s], {A: sigma.components[A].fmor(m) for A in a.objects}, om[d])
        if k not in cat.mor_labels:
            raise ValidationError([f"apex morphism {m} does not give a family morphism"], "wedge")
        mm[m] = k
    return Funct(apex, cat, om, mm)


def wedge_after(e, u):
    """``lambda . u`` as a wedge with apex ``u.domain``."""
    lam = e.wedge
    comps = {A: compose_functors(c, u).tabulate() for A, c in lam.components.items()}
    structure = {f: NatT(compose_functors(n.source, u), compose_functors(n.target, u),
                         {p: n.at(u.fobj(p)) for p in u.domain.objects})
                 for f, n in lam.structure.items()}
    return LaxWedge(u.domain, comps, structure)


def wedges_equal(s1, s2):
    return (all(functors_equal(s1.components[A], s2.components[A]) for A in s1.components)
            and all(nats_equal(s1.structure[f], s2.structure[f]) for f in s1.structure))


def enumerate_wedge_modifications(t, s1, s2, mode="lax", budget=None):
    """Families ``Gamma_A : s1_A => s2_A`` compatible with the wedge cells."""
    budget = as_budget(budget)
    a = t.base
    constraints = []
    for f in _nonid(a):
        A, B = a.src(f), a.dst(f)

        def check(asg, f=f, A=A, B=B):
            r, l = t.right(f), t.left(f)
            if mode == "oplax":
                lhs_outer, rhs_outer = whisker_left(r, asg[A]), whisker_left(l, asg[B])
            else:
                lhs_outer, rhs_outer = whisker_left(l, asg[B]), whisker_left(r, asg[A])
            tab = t.at(A, B)
            return all(tab.compose(lhs_outer.at(p), s1.structure[f].at(p))
                       == tab.compose(s2.structure[f].at(p), rhs_outer.at(p))
                       for p in s1.apex.objects)

        constraints.append(((A, B), check))
    idx = _constraint_index(constraints)

    def candidates(A, asg):
        return enumerate_nats(s1.components[A], s2.components[A], budget)

    return list(backtrack(list(a.objects), candidates, lambda v, s: _run_constraints(idx, v, s), budget))


def factorize_modification(e, u, v, gamma):
    """The unique ``beta: u => v`` with ``lambda * beta = gamma``."""
    a = e.base
    cat = e.category
    comps = {}
    for p in u.domain.objects:
        k = e.morphism_id(u.fobj(p), {A: gamma[A].at(p) for A in a.objects}, v.fobj(p))
        if k not in cat.mor_labels:
            raise ValidationError([f"components at {p} do not form a family morphism"], "modification")
        comps[p] = k
    return NatT(u, v, comps)


def whisker_wedge(e, beta):
    """``lambda * beta`` as a family of transformations, one per object of the shape."""
    cat = e.category
    return {A: NatT(compose_functors(c, beta.source), compose_functors(c, beta.target),
                    {p: cat.mlabel(beta.at(p)).components[A] for p in beta.source.domain.objects})
            for A, c in e.wedge.components.items()}


# ---------------------------------------------------------------------------
# parameterized ends


def slot_reindex(t, a, c, b):
    """Restrict a diagram over ``A^op x A x B`` to the slice at ``c`` in ``B``."""
    ma = a.mixed()
    idc = b.id_one[c]
    return reindex(t, ma, lambda o: canon((o, c)), lambda f: canon((f, idc)),
                   lambda x: canon((x, b.id_two[idc])), base=a)


def partial_end(t, a, b, mode="lax", budget=None, base=None):
    """``c |-> end of T(-, -, c)`` as a diagram over ``b``.

    ``t`` lives over ``product_2cat(a.mixed(), b)``.  Pass ``base`` when ``b`` is
    itself ``base.mixed()`` so the result is read with mixed variance.
    """
    budget = as_budget(budget)
    ma = a.mixed()
    ends = {c: end_of(slot_reindex(t, a, c, b), mode, budget) for c in b.objects}

    on_one = {}
    for h, (c, c2) in b.one.items():
        src, dst = ends[c], ends[c2]
        objf = {A: t.one(canon((ma.id_one[canon((A, A))], h))) for A in a.objects}
        cellf = {f: t.one(canon((_mid(a, a.src(f), a.dst(f)), h))) for f in _nonid(a)}
        om = {}
        for o in src.category.objects:
            x = src.family(o)
            om[o] = dst.family_id({A: objf[A].fobj(x.objects[A]) for A in a.objects},
                                  {f: cellf[f].fmor(x.cells[f]) for f in x.cells})
        mm = {}
        for m in src.category.morphisms:
            g = src.morphism(m)
            mm[m] = dst.morphism_id(om[g.source.key], {A: objf[A].fmor(g.components[A]) for A in a.objects},
                                    om[g.target.key])
        _require(dst.category, om.values(), mm.values())
        on_one[h] = Funct(src.category, dst.category, om, mm)
    on_two = {}
    for beta, (h, h2) in b.two.items():
        F, G = on_one[h], on_one[h2]
        src, dst = ends[b.src(h)], ends[b.dst(h)]
        cf = {A: t.two(canon((ma.id_two[ma.id_one[canon((A, A))]], beta))) for A in a.objects}
        comps = {}
        for o in src.category.objects:
            x = src.family(o)
            comps[o] = dst.morphism_id(F.fobj(o), {A: cf[A].at(x.objects[A]) for A in a.objects}, G.fobj(o))
        _require(dst.category, (), comps.values())
        on_two[beta] = NatT(F, G, comps)
    result = TwoFunctor(b, {c: ends[c].category for c in b.objects}, on_one, on_two, base)
    result.meta["ends"] = ends
    return result


def _mid(a, A, B):
    """The identity 1-cell of the object ``(A, B)`` of ``a.mixed()``."""
    return canon((a.id_one[A], a.id_one[B]))


def _require(cat, objs, mors):
    for o in objs:
        if o not in cat.labels:
            raise ValidationError([f"induced family {o} is not a wedge family"], "parameterized end")
    for m in mors:
        if m not in cat.mor_labels:
            raise ValidationError([f"induced morphism {m} is not a family morphism"], "parameterized end")


def fubini_reindex(t, a, b, first="a"):
    """Regroup a diagram over ``(a x b)^op x (a x b)`` for an iterated end.

    With ``first="a"`` the result lives over ``a.mixed() x b.mixed()`` so that
    :func:`partial_end` integrates the ``a`` variables first.
    """
    from .twocat import product_2cat
    inner, outer = (a, b) if first == "a" else (b, a)
    shape = product_2cat(inner.mixed(), outer.mixed())
    pi, po = inner.mixed().pairs, outer.mixed().pairs

    def mapper(dim):
        def go(k):
            mi, mo = shape.pairs[dim][k]
            i1, i2 = pi[dim][mi]
            o1, o2 = po[dim][mo]
            if first == "a":
                return canon((canon((i1, o1)), canon((i2, o2))))
            return canon((canon((o1, i1)), canon((o2, i2))))
        return go

    return reindex(t, shape, mapper(0), mapper(1), mapper(2))


def iterated_end(t, a, b, first="a", mode="lax", budget=None):
    """``end over b of end over a`` (or the other order) of a diagram over the product shape."""
    inner, outer = (a, b) if first == "a" else (b, a)
    r = fubini_reindex(t, a, b, first)
    pe = partial_end(r, inner, outer.mixed(), mode, budget, base=outer)
    return end_of(pe, mode, budget)


# ---------------------------------------------------------------------------
# other diagrams built from a given one


def swap_diagram(t):
    """``T'(X, Y) = T(Y, X)`` over ``(A^op)^op x A^op``: oplax wedges of ``T`` are lax wedges of ``T'``."""
    a = t.base
    ao = a.op()
    m = ao.mixed()

    def mapper(dim):
        def go(k):
            x, y = m.pairs[dim][k]
            return canon((y, x))
        return go

    return reindex(t, m, mapper(0), mapper(1), mapper(2), base=ao)


def power_with(x, t, budget=None):
    """``o |-> [X, T(o)]`` with 1-cells acting by post-composition."""
    budget = as_budget(budget)
    cache = {}
    vals = {}
    for o in t.shape.objects:
        v = t.value(o)
        if id(v) not in cache:
            cache[id(v)] = functor_category(x, v, budget)
        vals[o] = cache[id(v)]
    on_one = {}
    for f, (s, d) in t.shape.one.items():
        A, B = vals[s], vals[d]
        tf = t.one(f)
        on_one[f] = Funct(A, B,
                          {h: canon(compose_functors(tf, A.olabel(h)).tabulate()) for h in A.objects},
                          {n: canon(whisker_left(tf, A.mlabel(n))) for n in A.morphisms})
    on_two = {}
    for al, (f, g) in t.shape.two.items():
        F, G = on_one[f], on_one[g]
        A, B = F.domain, F.codomain
        ta = t.two(al)
        comps = {}
        for h in A.objects:
            H = A.olabel(h)
            comps[h] = canon(NatT(B.olabel(F.fobj(h)), B.olabel(G.fobj(h)),
                                  {p: ta.at(H.fobj(p)) for p in x.objects}))
        on_two[al] = NatT(F, G, comps)
    return TwoFunctor(t.shape, vals, on_one, on_two, t.base)


# ---------------------------------------------------------------------------
# lax coends over locally discrete shapes


class CoendResult:
    def __init__(self, diagram, category, components, structure):
        self.diagram = diagram
        self.category = category
        self.components = components
        self.structure = structure


def _coend_obj(A, x):
    return (A, x)


def lax_coend(t, budget=None):
    """Objects ``(A, x in T(A, A))``; morphisms ``(f, phi: T(1, f) x -> T(f, 1) y)``.

    Composition is ``(g, psi) . (f, phi) = (gf, T(f, 1) psi . T(1, g) phi)``.
    Only locally discrete shapes are accepted.
    """
    budget = as_budget(budget)
    a = t.base
    if a is None:
        raise ValueError("coends need a diagram over A^op x A")
    if not a.is_locally_discrete():
        raise UnsupportedInstance("lax coends are only computed over locally discrete shapes")
    objs = [(A, x) for A in a.objects for x in t.at(A, A).objects]
    mors = []
    for A, x in objs:
        for B, y in objs:
            for f in a.hom(A, B).objects:
                r, l = t.right(f).fobj(x), t.left(f).fobj(y)
                for phi in t.at(A, B).hom(r, l):
                    budget.tick()
                    mors.append((((A, x), f, phi, (B, y)), (A, x), (B, y)))

    def ident(o):
        A, x = o
        return (o, a.id_one[A], t.at(A, A).identity(x), o)

    def comp(g, f):
        (A, _), f1, phi, _ = f
        _, g1, psi, (C, _) = g
        tac = t.at(A, C)
        return (f[0], a.comp_one[(g1, f1)],
                tac.compose(t.act(f1, a.id_one[C]).fmor(psi), t.act(a.id_one[A], g1).fmor(phi)), g[3])

    cat = FinCat.build(objs, mors, ident, comp)
    comps = {}
    for A in a.objects:
        taa = t.at(A, A)
        comps[A] = Funct(taa, cat, {x: canon((A, x)) for x in taa.objects},
                         {m: canon(((A, taa.src(m)), a.id_one[A], m, (A, taa.dst(m)))) for m in taa.morphisms})
    structure = {}
    for f in _nonid(a):
        A, B = a.src(f), a.dst(f)
        lf = t.act(f, a.id_one[A])
        rf = t.act(a.id_one[B], f)
        tba = t.at(B, A)
        cs = {}
        for z in tba.objects:
            xa, yb = lf.fobj(z), rf.fobj(z)
            mid = t.right(f).fobj(xa)
            cs[z] = canon(((A, xa), f, t.at(A, B).identity(mid), (B, yb)))
        structure[f] = NatT(compose_functors(comps[A], lf), compose_functors(comps[B], rf), cs)
    return CoendResult(t, cat, comps, structure)


def lax_coend_map(src, dst, comps):
    """Functor between coends induced by a strict map of diagrams.

    ``comps[o]`` is the component ``T(A', A) -> T'(A', A)`` at each object ``o``
    of the mixed shape.
    """
    a = src.diagram.base
    cat, cat2 = src.category, dst.category
    om = {}
    for o in cat.objects:
        A, x = cat.olabel(o)
        om[o] = canon((A, comps[canon((A, A))].fobj(x)))
    mm = {}
    for m in cat.morphisms:
        (A, x), f, phi, (B, y) = cat.mlabel(m)
        mm[m] = canon(((A, comps[canon((A, A))].fobj(x)), f, comps[canon((A, B))].fmor(phi),
                       (B, comps[canon((B, B))].fobj(y))))
    _require(cat2, om.values(), mm.values())
    return Funct(cat, cat2, om, mm)


def enumerate_cowedges(t, apex, budget=None):
    """Lax cowedges ``kappa_A: T(A, A) -> apex`` with cells
    ``kappa_f: kappa_A . T(f, 1) => kappa_B . T(1, f)`` on ``T(B, A)``."""
    budget = as_budget(budget)
    a = t.base
    comps = {A: enumerate_functors(t.at(A, A), apex, budget) for A in a.objects}

    def cell(f, asg):
        if a.is_identity(f):
            k = asg[("o", a.src(f))]
            return NatT(k, k, {z: apex.identity(k.fobj(z)) for z in k.domain.objects})
        return asg[("m", f)]

    def var_of(f):
        return [("o", a.src(f)), ("o", a.dst(f))] + ([] if a.is_identity(f) else [("m", f)])

    constraints = []
    for (g, f), gf in a.comp_one.items():
        if a.is_identity(g) or a.is_identity(f):
            continue
        A, C = a.src(f), a.dst(g)
        B = a.dst(f)

        def check(asg, g=g, f=f, gf=gf, A=A, B=B, C=C):
            kg, kf, kgf = cell(g, asg), cell(f, asg), cell(gf, asg)
            push = t.act(a.id_one[C], f)
            pull = t.act(g, a.id_one[A])
            return all(apex.compose(kg.at(push.fobj(z)), kf.at(pull.fobj(z))) == kgf.at(z)
                       for z in t.at(C, A).objects)

        constraints.append((tuple(set(var_of(g) + var_of(f) + var_of(gf))), check))
    idx = _constraint_index(constraints)

    def candidates(var, asg):
        kind, f = var
        if kind == "o":
            return comps[f]
        A, B = a.src(f), a.dst(f)
        s = compose_functors(asg[("o", A)], t.act(f, a.id_one[A])).tabulate()
        d = compose_functors(asg[("o", B)], t.act(a.id_one[B], f)).tabulate()
        return enumerate_nats(s, d, budget)

    out = []
    for asg in backtrack(_var_order(a), candidates, lambda v, s: _run_constraints(idx, v, s), budget):
        out.append(({A: asg[("o", A)] for A in a.objects}, {f: asg[("m", f)] for f in _nonid(a)}))
    return out


def cowedge_factorizations(res, cowedge, budget=None):
    """All functors ``u`` out of the coend with ``u . kappa = cowedge``."""
    kappa, cells = cowedge
    apex = next(iter(kappa.values())).codomain
    out = []
    for u in enumerate_functors(res.category, apex, budget):
        if not all(functors_equal(compose_functors(u, res.components[A]), kappa[A]) for A in kappa):
            continue
        if all(nats_equal(whisker_left(u, res.structure[f]), cells[f]) for f in cells):
            out.append(u)
    return out


__all__ = [
    "END_MODES", "WedgeFamily", "FamilyMorphism", "LaxWedge", "EndResult", "CoendResult",
    "enumerate_families", "enumerate_family_morphisms", "end_of", "enumerate_wedges",
    "factorize_wedge", "wedge_after", "wedges_equal", "enumerate_wedge_modifications",
    "factorize_modification", "whisker_wedge", "partial_end", "slot_reindex", "fubini_reindex",
    "iterated_end", "swap_diagram", "power_with", "lax_coend", "lax_coend_map",
    "enumerate_cowedges", "cowedge_factorizations"
]
