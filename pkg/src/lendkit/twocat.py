"""Finite 2-categories, strict 2-functors into finite categories, and the
lax transformations and modifications between such 2-functors.

Lax transformations follow one direction convention throughout: the
structure cell at ``f: A -> B`` is ``sigma_f : G(f) . sigma_A => sigma_B . F(f)``.
"""
from .cat import (
    FinCat, Funct, NatT, FnMap, backtrack, canon, check_fin_cat, check_functor, check_nat,
    compose_functors, enumerate_functors, enumerate_nats, functor_category, functors_equal,
    hcomp_nat, identity_functor, identity_nat, is_invertible_nat, nats_equal, product_cat,
    vcomp_nat, whisker_left, whisker_right,
)
from .errors import ValidationError, as_budget

MODES = ("strict", "pseudo", "lax")


class Fin2Cat:
    """A finite strict 2-category given by total composition tables.

    ``vcomp[(b, a)]`` is the vertical composite ``b . a`` (``a`` first);
    ``hcomp[(b, a)]`` is the horizontal composite ``b * a`` with ``a`` on the
    1-cells ``A -> B`` and ``b`` on ``B -> C``.
    """

    def __init__(self, objects, one_cells, two_cells, id_one, id_two, comp_one, vcomp, hcomp,
                 pairs=None):
        self.objects = tuple(objects)
        self.one = {f: (s, d) for f, s, d in one_cells}
        self.two = {a: (s, d) for a, s, d in two_cells}
        self.id_one = dict(id_one)
        self.id_two = dict(id_two)
        self.comp_one = dict(comp_one)
        self.vcomp = dict(vcomp)
        self.hcomp = dict(hcomp)
        # for product shapes: id -> (left id, right id), per cell dimension
        self.pairs = pairs or ({}, {}, {})
        self._homs = {}
        self._mixed = None
        self._op = None
        self._id1 = set(self.id_one.values())
        self._id2 = set(self.id_two.values())

    def src(self, f):
        return self.one[f][0]

    def dst(self, f):
        return self.one[f][1]

    def src2(self, a):
        return self.two[a][0]

    def dst2(self, a):
        return self.two[a][1]

    def is_identity(self, f):
        return f in self._id1

    def is_identity2(self, a):
        return a in self._id2

    def hom(self, a, b):
        """The local hom-category: 1-cells ``a -> b`` and the 2-cells between them."""
        if (a, b) not in self._homs:
            cells = [f for f, (s, d) in self.one.items() if s == a and d == b]
            cs = set(cells)
            twos = [(x, s, d) for x, (s, d) in self.two.items() if s in cs]
            ts = {x for x, _, _ in twos}
            table = {k: v for k, v in self.vcomp.items() if k[0] in ts}
            self._homs[(a, b)] = FinCat(cells, twos, {f: self.id_two[f] for f in cells}, table)
        return self._homs[(a, b)]

    def underlying(self):
        return FinCat(self.objects, [(f, s, d) for f, (s, d) in self.one.items()], self.id_one,
                      self.comp_one)

    def is_locally_discrete(self):
        return all(self.is_identity2(a) for a in self.two)

    def op(self):
        if self._op is None:
            self._op = dualize_2cat(self, "op")
            self._op._op = self
        return self._op

    def mixed(self):
        """``self^op x self``, cached so every diagram over it shares one shape."""
        if self._mixed is None:
            self._mixed = product_2cat(self.op(), self)
        return self._mixed

    def __eq__(self, other):
        if not isinstance(other, Fin2Cat):
            return NotImplemented
        return (set(self.objects) == set(other.objects) and self.one == other.one
                and self.two == other.two and self.id_one == other.id_one
                and self.id_two == other.id_two and self.comp_one == other.comp_one
                and self.vcomp == other.vcomp and self.hcomp == other.hcomp)

    __hash__ = None

    def __repr__(self):
        return f"Fin2Cat({len(self.objects)} objects, {len(self.one)} 1-cells, {len(self.two)} 2-cells)"


def id2_name(f):
    return f"1<{f}>"


def locally_discrete(c):
    """View a 1-category as a 2-category with identity 2-cells only."""
    twos = [(id2_name(m), m, m) for m in c.morphisms]
    return Fin2Cat(
        c.objects, [(m, c.src(m), c.dst(m)) for m in c.morphisms], twos, c.identities,
        {m: id2_name(m) for m in c.morphisms}, c.table,
        {(id2_name(m), id2_name(m)): id2_name(m) for m in c.morphisms},
        {(id2_name(g), id2_name(f)): id2_name(h) for (g, f), h in c.table.items()},
    )


def terminal_2cat():
    from .cat import terminal_cat
    return locally_discrete(terminal_cat())


def dualize_2cat(a, mode):
    """``op`` reverses 1-cells, ``co`` reverses 2-cells, ``coop`` both."""
    if mode not in ("op", "co", "coop"):
        raise ValueError(f"unknown dualization {mode}")
    one = [(f, s, d) for f, (s, d) in a.one.items()]
    two = [(x, s, d) for x, (s, d) in a.two.items()]
    comp_one, vcomp, hcomp = a.comp_one, a.vcomp, a.hcomp
    if mode in ("op", "coop"):
        one = [(f, d, s) for f, s, d in one]
        comp_one = {(f, g): h for (g, f), h in comp_one.items()}
        hcomp = {(x, y): z for (y, x), z in hcomp.items()}
    if mode in ("co", "coop"):
        two = [(x, d, s) for x, s, d in two]
        vcomp = {(x, y): z for (y, x), z in vcomp.items()}
    return Fin2Cat(a.objects, one, two, a.id_one, a.id_two, comp_one, vcomp, hcomp, a.pairs)


def product_2cat(a, b):
    """Cartesian product; every cell id is the canonical pair of component ids."""
    def p(x, y):
        return canon((x, y))

    objs = [p(x, y) for x in a.objects for y in b.objects]
    opairs = {p(x, y): (x, y) for x in a.objects for y in b.objects}
    one = []
    fpairs = {}
    for f, (s1, d1) in a.one.items():
        for g, (s2, d2) in b.one.items():
            one.append((p(f, g), p(s1, s2), p(d1, d2)))
            fpairs[p(f, g)] = (f, g)
    two = []
    tpairs = {}
    for x, (s1, d1) in a.two.items():
        for y, (s2, d2) in b.two.items():
            two.append((p(x, y), p(s1, s2), p(d1, d2)))
            tpairs[p(x, y)] = (x, y)
    id_one = {p(x, y): p(a.id_one[x], b.id_one[y]) for x in a.objects for y in b.objects}
    id_two = {k: p(a.id_two[f], b.id_two[g]) for k, (f, g) in fpairs.items()}

    def table(ta, tb):
        out = {}
        for (x1, x2), x3 in ta.items():
            for (y1, y2), y3 in tb.items():
                out[(p(x1, y1), p(x2, y2))] = p(x3, y3)
        return out

    return Fin2Cat(objs, one, two, id_one, id_two, table(a.comp_one, b.comp_one),
                   table(a.vcomp, b.vcomp), table(a.hcomp, b.hcomp), (opairs, fpairs, tpairs))


def mixed_shape(a):
    return a.mixed()


def check_2cat(a):
    """List of violated 2-category laws."""
    out = []
    for f, (s, d) in a.one.items():
        if s not in a.objects or d not in a.objects:
            out.append(f"1-cell {f} has an unknown endpoint")
    for x, (s, d) in a.two.items():
        if s not in a.one or d not in a.one:
            out.append(f"2-cell {x} has an unknown boundary")
        elif a.one[s] != a.one[d]:
            out.append(f"2-cell {x} runs between non-parallel 1-cells")
    if out:
        return out
    out += [f"underlying category: {v}" for v in check_fin_cat(a.underlying())]
    for s in a.objects:
        for d in a.objects:
            out += [f"hom({s},{d}): {v}" for v in check_fin_cat(a.hom(s, d))]
    if out:
        return out
    expected = {(y, x) for x in a.two for y in a.two if a.dst(a.src2(x)) == a.src(a.src2(y))}
    missing = expected - set(a.hcomp)
    extra = set(a.hcomp) - expected
    for k in sorted(missing):
        out.append(f"hcomp: missing entry for {k[0]} * {k[1]}")
    for k in sorted(extra):
        out.append(f"hcomp: entry for non-composable pair {k[0]} * {k[1]}")
    if out:
        return out
    for (y, x), z in a.hcomp.items():
        f, f2 = a.two[x]
        g, g2 = a.two[y]
        if a.two.get(z) != (a.comp_one[(g, f)], a.comp_one[(g2, f2)]):
            out.append(f"hcomp: {y} * {x} = {z} has the wrong boundary")
    if out:
        return out
    for (g, f), h in a.comp_one.items():
        if a.hcomp[(a.id_two[g], a.id_two[f])] != a.id_two[h]:
            out.append(f"hcomp of identity 2-cells on ({g}, {f}) is not an identity")
    for x, (f, _) in a.two.items():
        s, d = a.src(f), a.dst(f)
        if a.hcomp[(a.id_two[a.id_one[d]], x)] != x or a.hcomp[(x, a.id_two[a.id_one[s]])] != x:
            out.append(f"hcomp unit law fails at {x}")
    by_src = {}
    for x, (f, _) in a.two.items():
        by_src.setdefault(a.src(f), []).append(x)
    for x, (f, _) in a.two.items():
        for y in by_src.get(a.dst(f), ()):
            yx = a.hcomp[(y, x)]
            for z in by_src.get(a.dst(a.src2(y)), ()):
                if a.hcomp[(z, yx)] != a.hcomp[(a.hcomp[(z, y)], x)]:
                    out.append(f"hcomp associativity fails on ({z}, {y}, {x})")
    # interchange: (b2 . b1) * (a2 . a1) = (b2 * a2) . (b1 * a1)
    for (a2, a1), a21 in a.vcomp.items():
        for (b2, b1), b21 in a.vcomp.items():
            if (b1, a1) not in a.hcomp:
                continue
            lhs = a.hcomp[(b21, a21)]
            rhs = a.vcomp.get((a.hcomp[(b2, a2)], a.hcomp[(b1, a1)]))
            if lhs != rhs:
                out.append(f"interchange fails on ({b2}, {b1}, {a2}, {a1})")
    return out


def validate_2cat(a):
    v = check_2cat(a)
    if v:
        raise ValidationError(v, "2-category")
    return a


# ---------------------------------------------------------------------------
# 2-functors into Cat


class TwoFunctor:
    """A strict 2-functor ``shape -> Cat``.

    When ``base`` is set the shape is ``base^op x base`` (``base.mixed()``)
    and the diagram is read as ``T(A', A)`` with ``A'`` contravariant.
    """

    def __init__(self, shape, on_objects, on_one, on_two, base=None, meta=None):
        self.shape = shape
        self.on_objects = on_objects
        self.on_one = on_one
        self.on_two = on_two
        self.base = base
        self.meta = meta if meta is not None else {}

    @property
    def variance(self):
        return "mixed" if self.base is not None else "covariant"

    def value(self, o):
        return self.on_objects[o]

    def one(self, f):
        return self.on_one[f]

    def two(self, a):
        return self.on_two[a]

    # mixed-variance accessors, for f: A -> B in the base
    def at(self, a, b):
        return self.on_objects[canon((a, b))]

    def right(self, f):
        """``T(1, f) : T(A, A) -> T(A, B)``"""
        base = self.base
        return self.on_one[canon((base.id_one[base.src(f)], f))]

    def left(self, f):
        """``T(f, 1) : T(B, B) -> T(A, B)``"""
        base = self.base
        return self.on_one[canon((f, base.id_one[base.dst(f)]))]

    def right2(self, x):
        base = self.base
        f = base.src2(x)
        return self.on_two[canon((base.id_two[base.id_one[base.src(f)]], x))]

    def act(self, u, v):
        """``T(u, v)`` for a 1-cell ``u`` of the contravariant slot and ``v`` of the covariant one."""
        return self.on_one[canon((u, v))]

    def left2(self, x):
        base = self.base
        f = base.src2(x)
        return self.on_two[canon((x, base.id_two[base.id_one[base.dst(f)]]))]

    def __repr__(self):
        return f"TwoFunctor({self.variance}, {self.shape!r})"


def check_2functor(t):
    out = []
    s = t.shape
    for o in s.objects:
        if o not in t.on_objects:
            out.append(f"no value for object {o}")
    for f in s.one:
        if f not in t.on_one:
            out.append(f"no functor for 1-cell {f}")
    for x in s.two:
        if x not in t.on_two:
            out.append(f"no transformation for 2-cell {x}")
    if out:
        return out
    for o in s.objects:
        out += [f"value at {o}: {v}" for v in check_fin_cat(t.value(o))]
    for f, (a, b) in s.one.items():
        F = t.one(f)
        if F.domain is not t.value(a) and F.domain != t.value(a):
            out.append(f"1-cell {f}: wrong domain")
            continue
        if F.codomain is not t.value(b) and F.codomain != t.value(b):
            out.append(f"1-cell {f}: wrong codomain")
            continue
        out += [f"1-cell {f}: {v}" for v in check_functor(F)]
    if out:
        return out
    for x, (f, g) in s.two.items():
        th = t.two(x)
        if not (functors_equal(th.source, t.one(f)) and functors_equal(th.target, t.one(g))):
            out.append(f"2-cell {x}: transformation between the wrong functors")
            continue
        out += [f"2-cell {x}: {v}" for v in check_nat(th)]
    if out:
        return out
    for o in s.objects:
        if not functors_equal(t.one(s.id_one[o]), identity_functor(t.value(o))):
            out.append(f"identity 1-cell of {o} is not sent to the identity functor")
    for (g, f), h in s.comp_one.items():
        if not functors_equal(t.one(h), compose_functors(t.one(g), t.one(f))):
            out.append(f"composition not preserved on ({g}, {f})")
    for f in s.one:
        if not nats_equal(t.two(s.id_two[f]), identity_nat(t.one(f))):
            out.append(f"identity 2-cell on {f} is not sent to an identity")
    for (y, x), z in s.vcomp.items():
        if not nats_equal(t.two(z), vcomp_nat(t.two(y), t.two(x))):
            out.append(f"vertical composition not preserved on ({y}, {x})")
    for (y, x), z in s.hcomp.items():
        if not nats_equal(t.two(z), hcomp_nat(t.two(y), t.two(x))):
            out.append(f"horizontal composition not preserved on ({y}, {x})")
    return out


def validate_2functor(t):
    v = check_2functor(t)
    if v:
        raise ValidationError(v, "2-functor")
    return t


def constant_diagram(shape, b, base=None):
    """Every object to ``b``, every cell to an identity."""
    ident = Funct(b, b, {o: o for o in b.objects}, {m: m for m in b.morphisms})
    inat = NatT(ident, ident, {o: b.identity(o) for o in b.objects})
    if base is not None:
        shape = base.mixed()
    return TwoFunctor(shape, {o: b for o in shape.objects}, {f: ident for f in shape.one},
                      {x: inat for x in shape.two}, base)


def reindex(t, shape, obj_fn, one_fn, two_fn, base=None):
    """Precompose ``t`` with a 2-functor into its shape given by three cell maps."""
    return TwoFunctor(
        shape,
        {o: t.value(obj_fn(o)) for o in shape.objects},
        {f: t.one(one_fn(f)) for f in shape.one},
        {x: t.two(two_fn(x)) for x in shape.two},
        base,
    )


def hom_2functor(a):
    """``(A, B) |-> a(A, B)`` over ``a^op x a``, acting by pre/post composition."""
    m = a.mixed()
    opairs, fpairs, tpairs = m.pairs
    vals = {o: a.hom(*opairs[o]) for o in m.objects}
    on_one = {}
    for k, (f, g) in fpairs.items():
        # f runs A' -> A in a, g runs B -> B'
        src, dst = m.one[k]
        H, H2 = vals[src], vals[dst]
        idf, idg = a.id_two[f], a.id_two[g]
        on_one[k] = Funct(
            H, H2,
            {p: a.comp_one[(g, a.comp_one[(p, f)])] for p in H.objects},
            {x: a.hcomp[(idg, a.hcomp[(x, idf)])] for x in H.morphisms},
        )
    on_two = {}
    for k, (x, y) in tpairs.items():
        s1, d1 = m.two[k]
        F, G = on_one[s1], on_one[d1]
        on_two[k] = NatT(F, G, {p: a.hcomp[(y, a.hcomp[(a.id_two[p], x)])] for p in F.domain.objects})
    return TwoFunctor(m, vals, on_one, on_two, a)


def exponential(p, q, budget=None):
    """``(s, t) |-> [P s, Q t]`` over ``P.shape^op x Q.shape``.

    A 1-cell ``(sigma, tau)`` sends ``H`` to ``Q tau . H . P sigma``; a 2-cell
    acts by the horizontal composite.
    """
    budget = as_budget(budget)
    base = p.shape if p.shape is q.shape else None
    shape = base.mixed() if base is not None else product_2cat(p.shape.op(), q.shape)
    opairs, fpairs, tpairs = shape.pairs
    cache = {}
    vals = {}
    for o, (s, t) in opairs.items():
        key = (id(p.value(s)), id(q.value(t)))
        if key not in cache:
            cache[key] = functor_category(p.value(s), q.value(t), budget)
        vals[o] = cache[key]
    on_one = {}
    for k, (sig, tau) in fpairs.items():
        src, dst = shape.one[k]
        A, B = vals[src], vals[dst]
        ps, qt = p.one(sig), q.one(tau)
        om = {h: canon(compose_functors(qt, compose_functors(A.olabel(h), ps)).tabulate())
              for h in A.objects}
        mm = {n: canon(whisker_left(qt, whisker_right(A.mlabel(n), ps))) for n in A.morphisms}
        _check_ids(B, om.values(), mm.values())
        on_one[k] = Funct(A, B, om, mm)
    on_two = {}
    for k, (al, be) in tpairs.items():
        s1, d1 = shape.two[k]
        F, G = on_one[s1], on_one[d1]
        A, B = F.domain, F.codomain
        sig, tau = fpairs[s1]
        sig2, _ = fpairs[d1]
        pa, qb = p.two(al), q.two(be)
        qt, ps2 = q.one(tau), p.one(sig2)
        qcod = qb.source.codomain
        comps = {}
        for h in A.objects:
            H = A.olabel(h)
            src_f, dst_f = B.olabel(F.fobj(h)), B.olabel(G.fobj(h))
            cs = {}
            for y in src_f.domain.objects:
                inner = qt.fmor(H.fmor(pa.at(y)))
                cs[y] = qcod.compose(qb.at(H.fobj(ps2.fobj(y))), inner)
            comps[h] = canon(NatT(src_f, dst_f, cs))
        _check_ids(B, (), comps.values())
        on_two[k] = NatT(F, G, comps)
    return TwoFunctor(shape, vals, on_one, on_two, base)


def _check_ids(cat, objs, mors):
    for o in objs:
        if o not in cat.labels:
            raise ValueError(f"constructed functor {o} is missing from the target category")
    for m in mors:
        if m not in cat.mor_labels:
            raise ValueError(f"constructed transformation {m} is missing from the target category")


def power_diagram(f, g, budget=None):
    """``(A', A) |-> [F A', G A]`` over ``A^op x A``."""
    if f.shape is not g.shape and f.shape != g.shape:
        raise ValueError("power_diagram needs diagrams over the same shape")
    if f.shape is not g.shape:
        g = TwoFunctor(f.shape, g.on_objects, g.on_one, g.on_two)
    return exponential(f, g, budget)


def product_diagram(p, q):
    """Pointwise product of two diagrams over the same shape."""
    shape = p.shape
    vals = {}
    cache = {}
    for o in shape.objects:
        key = (id(p.value(o)), id(q.value(o)))
        if key not in cache:
            cache[key] = product_cat(p.value(o), q.value(o))
        vals[o] = cache[key]
    on_one = {}
    for f, (a, b) in shape.one.items():
        A, B = vals[a], vals[b]
        F, G = p.one(f), q.one(f)
        on_one[f] = Funct(
            A, B,
            {x: canon((F.fobj(A.olabel(x)[0]), G.fobj(A.olabel(x)[1]))) for x in A.objects},
            {m: canon((F.fmor(A.mlabel(m)[0]), G.fmor(A.mlabel(m)[1]))) for m in A.morphisms},
        )
    on_two = {}
    for x, (f, g) in shape.two.items():
        A = vals[shape.src(f)]
        al, be = p.two(x), q.two(x)
        on_two[x] = NatT(on_one[f], on_one[g],
                         {o: canon((al.at(A.olabel(o)[0]), be.at(A.olabel(o)[1]))) for o in A.objects})
    return TwoFunctor(shape, vals, on_one, on_two, p.base)


# ---------------------------------------------------------------------------
# lax transformations and modifications


class LaxTransformation:
    """``components[A]: F A -> G A``; ``structure[f]: G f . sigma_A => sigma_B . F f``."""

    def __init__(self, source, target, components, structure):
        self.source = source
        self.target = target
        self.components = components
        self.structure = structure
        self._key = None

    def cell(self, f):
        shape = self.source.shape
        if f in self.structure:
            return self.structure[f]
        if shape.is_identity(f):
            return identity_nat(self.components[shape.src(f)])
        raise KeyError(f)

    @property
    def key(self):
        if self._key is None:
            shape = self.source.shape
            comps = tuple(self.components[a].key for a in shape.objects)
            cells = tuple(self.cell(f).key for f in shape.one if not shape.is_identity(f))
            self._key = canon((comps, cells))
        return self._key


class Modification:
    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = components
        self._key = None

    @property
    def key(self):
        if self._key is None:
            shape = self.source.source.shape
            comps = tuple(canon(tuple(self.components[a].at(o) for o in self.components[a].source.domain.objects))
                          for a in shape.objects)
            self._key = canon((self.source.key, comps, self.target.key))
        return self._key


def _var_order(shape):
    order, seen, placed = [], set(), set()
    for o in shape.objects:
        order.append(("o", o))
        seen.add(o)
        for f, (s, d) in shape.one.items():
            if f not in placed and not shape.is_identity(f) and s in seen and d in seen:
                order.append(("m", f))
                placed.add(f)
    return order


def _constraint_index(constraints):
    idx = {}
    for vars_, check in constraints:
        last = vars_
        for v in last:
            idx.setdefault(v, []).append((vars_, check))
    return idx


def _run_constraints(idx, var, asg):
    for vars_, check in idx.get(var, ()):
        if all(v in asg for v in vars_) and not check(asg):
            return False
    return True


def enumerate_lax_transformations(f, g, mode="lax", budget=None):
    """Every lax (or pseudo, or strict) transformation ``f => g``."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode}")
    budget = as_budget(budget)
    shape = f.shape
    comps = {a: enumerate_functors(f.value(a), g.value(a), budget) for a in shape.objects}
    nat_cache = {}

    def cells(h, sa, sb):
        key = (h, sa.key, sb.key)
        if key not in nat_cache:
            src = compose_functors(g.one(h), sa)
            dst = compose_functors(sb, f.one(h))
            if mode == "strict":
                nat_cache[key] = [identity_nat(src)] if functors_equal(src, dst) else []
            else:
                ns = enumerate_nats(src.tabulate(), dst.tabulate(), budget)
                if mode == "pseudo":
                    ns = [n for n in ns if is_invertible_nat(n)]
                nat_cache[key] = ns
        return nat_cache[key]

    def sigma(h, asg):
        if shape.is_identity(h):
            return identity_nat(asg[("o", shape.src(h))])
        return asg[("m", h)]

    def var_of(h):
        return [("o", shape.src(h)), ("o", shape.dst(h))] + ([] if shape.is_identity(h) else [("m", h)])

    constraints = []
    for (k, h), kh in shape.comp_one.items():
        if shape.is_identity(k) or shape.is_identity(h):
            continue

        def comp_check(asg, k=k, h=h, kh=kh):
            lhs = vcomp_nat(whisker_right(sigma(k, asg), f.one(h)), whisker_left(g.one(k), sigma(h, asg)))
            return nats_equal(lhs, sigma(kh, asg))

        constraints.append((tuple(set(var_of(k) + var_of(h) + var_of(kh))), comp_check))
    for x, (h, k) in shape.two.items():
        if shape.is_identity2(x):
            continue
        a, b = shape.src(h), shape.dst(h)

        def two_check(asg, x=x, h=h, k=k, a=a, b=b):
            lhs = vcomp_nat(whisker_left(asg[("o", b)], f.two(x)), sigma(h, asg))
            rhs = vcomp_nat(sigma(k, asg), whisker_right(g.two(x), asg[("o", a)]))
            return nats_equal(lhs, rhs)

        constraints.append((tuple(set(var_of(h) + var_of(k))), two_check))
    idx = _constraint_index(constraints)

    def candidates(var, asg):
        kind, x = var
        if kind == "o":
            return comps[x]
        return cells(x, asg[("o", shape.src(x))], asg[("o", shape.dst(x))])

    out = []
    for asg in backtrack(_var_order(shape), candidates, lambda v, a: _run_constraints(idx, v, a), budget):
        out.append(LaxTransformation(
            f, g, {a: asg[("o", a)] for a in shape.objects},
            {h: asg[("m", h)] for h in shape.one if not shape.is_identity(h)}))
    return out


def enumerate_modifications(s, t, budget=None):
    """Every modification ``s => t`` between parallel lax transformations."""
    budget = as_budget(budget)
    f, g = s.source, s.target
    shape = f.shape
    order = list(shape.objects)
    constraints = []
    for h, (a, b) in shape.one.items():
        if shape.is_identity(h):
            continue

        def check(asg, h=h, a=a, b=b):
            lhs = vcomp_nat(whisker_right(asg[b], f.one(h)), s.cell(h))
            rhs = vcomp_nat(t.cell(h), whisker_left(g.one(h), asg[a]))
            return nats_equal(lhs, rhs)

        constraints.append(((a, b), check))
    idx = _constraint_index(constraints)

    def candidates(a, asg):
        return enumerate_nats(s.components[a], t.components[a], budget)

    return [Modification(s, t, asg) for asg in
            backtrack(order, candidates, lambda v, a: _run_constraints(idx, v, a), budget)]


def identity_modification(s):
    return Modification(s, s, {a: identity_nat(c) for a, c in s.components.items()})


def lax_transformation_category(f, g, mode="lax", budget=None):
    """Transformations ``f => g`` of the given mode with all modifications between them."""
    budget = as_budget(budget)
    objs = enumerate_lax_transformations(f, g, mode, budget)
    mors = []
    for s in objs:
        for t in objs:
            for m in enumerate_modifications(s, t, budget):
                mors.append((m, s, t))

    def comp(m2, m1):
        return Modification(m1.source, m2.target,
                            {a: vcomp_nat(m2.components[a], m1.components[a]) for a in m1.components})

    return FinCat.build(objs, mors, identity_modification, comp)
