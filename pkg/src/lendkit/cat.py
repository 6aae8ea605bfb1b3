"""Finite 1-categories given by complete composition tables.

Every category, functor and natural transformation here is finite and
tabulated.  Constructions produce structured keys (tuples of ids) which are
turned into canonical strings by :func:`canon`; ``FinCat.labels`` remembers
the structured key behind every synthesized id so later constructions can
decode it.
"""
import itertools
from collections.abc import Mapping

from .errors import ValidationError, as_budget


def canon(key):
    """Render a structured key as its canonical string id."""
    if isinstance(key, str):
        return key
    if isinstance(key, tuple):
        return "(" + ",".join(canon(k) for k in key) + ")"
    if isinstance(key, int):
        return str(key)
    k = getattr(key, "key", None)
    if k is not None:
        return k
    raise TypeError(f"cannot canonicalize {key!r}")


class FinCat:
    """A finite category.

    ``compose`` maps every composable pair ``(g, f)`` (``dst(f) == src(g)``)
    to the id of ``g . f``.  The constructor does not check any law; use
    :func:`validate_fin_cat` for that.
    """

    def __init__(self, objects, morphisms, identities, compose, labels=None, mor_labels=None):
        self.objects = tuple(objects)
        self._src = {}
        self._dst = {}
        for m, s, d in morphisms:
            self._src[m] = s
            self._dst[m] = d
        self.morphisms = tuple(self._src)
        self.identities = dict(identities)
        self.table = dict(compose)
        self.labels = dict(labels or {})
        self.mor_labels = dict(mor_labels or {})
        self._homs = None
        self._idset = None

    @classmethod
    def build(cls, objects, morphisms, identity, compose):
        """Materialize a category from structured keys.

        ``objects`` is a list of keys, ``morphisms`` a list of
        ``(key, src_key, dst_key)``; ``identity(obj_key)`` and
        ``compose(g_key, f_key)`` return morphism keys.
        """
        labels = {}
        obj_ids = []
        for o in objects:
            i = canon(o)
            if i in labels:
                raise ValueError(f"object id collision on {i}")
            labels[i] = o
            obj_ids.append(i)
        mor_rows = []
        mor_keys = {}
        outgoing = {i: [] for i in obj_ids}
        for m, s, d in morphisms:
            i = canon(m)
            if i in mor_keys:
                raise ValueError(f"morphism id collision on {i}")
            mor_keys[i] = m
            mor_rows.append((i, canon(s), canon(d)))
            outgoing[canon(s)].append((i, m))
        identities = {canon(o): canon(identity(o)) for o in objects}
        table = {}
        for fi, s, d in mor_rows:
            for gi, g in outgoing[d]:
                table[(gi, fi)] = canon(compose(g, mor_keys[fi]))
        return cls(obj_ids, mor_rows, identities, table, labels, mor_keys)

    # protocol shared with the lazy categories below
    def src(self, m):
        return self._src[m]

    def dst(self, m):
        return self._dst[m]

    def identity(self, a):
        return self.identities[a]

    def compose(self, g, f):
        return self.table[(g, f)]

    def hom(self, a, b):
        if self._homs is None:
            homs = {}
            for m in self.morphisms:
                homs.setdefault((self._src[m], self._dst[m]), []).append(m)
            self._homs = {k: tuple(v) for k, v in homs.items()}
        return self._homs.get((a, b), ())

    def is_identity(self, m):
        if self._idset is None:
            self._idset = set(self.identities.values())
        return m in self._idset

    def inverse(self, m):
        a, b = self._src[m], self._dst[m]
        for n in self.hom(b, a):
            if self.table[(n, m)] == self.identities[a] and self.table[(m, n)] == self.identities[b]:
                return n
        return None

    def is_iso(self, m):
        return self.inverse(m) is not None

    def olabel(self, i):
        return self.labels.get(i, i)

    def mlabel(self, m):
        return self.mor_labels.get(m, m)

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return (
            set(self.objects) == set(other.objects)
            and self._src == other._src
            and self._dst == other._dst
            and self.identities == other.identities
            and self.table == other.table
        )

    __hash__ = None

    def __repr__(self):
        return f"FinCat({len(self.objects)} objects, {len(self.morphisms)} morphisms)"


class LazyProduct:
    """Product of finitely many categories, never tabulated as a whole.

    Objects and morphisms are tuples of component ids.
    """

    def __init__(self, factors):
        self.factors = tuple(factors)

    @property
    def objects(self):
        return list(itertools.product(*(c.objects for c in self.factors)))

    @property
    def morphisms(self):
        return list(itertools.product(*(c.morphisms for c in self.factors)))

    def src(self, m):
        return tuple(c.src(x) for c, x in zip(self.factors, m))

    def dst(self, m):
        return tuple(c.dst(x) for c, x in zip(self.factors, m))

    def identity(self, a):
        return tuple(c.identity(x) for c, x in zip(self.factors, a))

    def compose(self, g, f):
        return tuple(c.compose(x, y) for c, x, y in zip(self.factors, g, f))

    def hom(self, a, b):
        return list(itertools.product(*(c.hom(x, y) for c, x, y in zip(self.factors, a, b))))

    def is_identity(self, m):
        return all(c.is_identity(x) for c, x in zip(self.factors, m))

    def size(self):
        n = 1
        for c in self.factors:
            n *= len(c.objects)
        return n


class FullSubcategory:
    """Full subcategory of ``base`` on a chosen list of objects."""

    def __init__(self, base, objects):
        self.base = base
        self.objects = list(objects)

    @property
    def morphisms(self):
        return [m for a in self.objects for b in self.objects for m in self.base.hom(a, b)]

    def src(self, m):
        return self.base.src(m)

    def dst(self, m):
        return self.base.dst(m)

    def identity(self, a):
        return self.base.identity(a)

    def compose(self, g, f):
        return self.base.compose(g, f)

    def hom(self, a, b):
        return self.base.hom(a, b)

    def is_identity(self, m):
        return self.base.is_identity(m)


def materialize(cat):
    """Tabulate any enumerable category into a :class:`FinCat`."""
    if isinstance(cat, FinCat):
        return cat
    objs = list(cat.objects)
    mors = [(m, a, b) for a in objs for b in objs for m in cat.hom(a, b)]
    return FinCat.build(objs, mors, cat.identity, cat.compose)


class FnMap(Mapping):
    """A read-only mapping computed on demand and cached."""

    def __init__(self, fn):
        self._fn = fn
        self._cache = {}

    def __getitem__(self, k):
        try:
            return self._cache[k]
        except KeyError:
            v = self._cache[k] = self._fn(k)
            return v

    def __iter__(self):
        return iter(self._cache)

    def __len__(self):
        return len(self._cache)


class Funct:
    """A functor; ``obj_map``/``mor_map`` are dicts or lazy :class:`FnMap`."""

    def __init__(self, domain, codomain, obj_map, mor_map):
        self.domain = domain
        self.codomain = codomain
        self.obj_map = obj_map
        self.mor_map = mor_map
        self._key = None

    def fobj(self, a):
        return self.obj_map[a]

    def fmor(self, m):
        return self.mor_map[m]

    @property
    def key(self):
        """Canonical id: object images, then images of non-identity morphisms."""
        if self._key is None:
            d = self.domain
            objs = ",".join(canon(self.fobj(o)) for o in d.objects)
            mors = ",".join(canon(self.fmor(m)) for m in d.morphisms if not d.is_identity(m))
            self._key = f"[{objs}|{mors}]"
        return self._key

    def __eq__(self, other):
        return isinstance(other, Funct) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def tabulate(self):
        d = self.domain
        return Funct(d, self.codomain, {o: self.fobj(o) for o in d.objects},
                     {m: self.fmor(m) for m in d.morphisms})

    def __repr__(self):
        return f"Funct({self.key})" if isinstance(self.domain, FinCat) else "Funct(<lazy>)"


class NatT:
    """A natural transformation ``source => target`` given by its components."""

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = components
        self._key = None

    def at(self, a):
        return self.components[a]

    @property
    def key(self):
        if self._key is None:
            comps = ",".join(canon(self.at(o)) for o in self.source.domain.objects)
            self._key = f"<{self.source.key}=>{self.target.key}:{comps}>"
        return self._key

    def __eq__(self, other):
        return isinstance(other, NatT) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"NatT({self.key})"


# ---------------------------------------------------------------------------
# functor algebra


def identity_functor(c):
    return Funct(c, c, FnMap(lambda a: a), FnMap(lambda m: m))


def compose_functors(g, f):
    """``g . f``"""
    return Funct(f.domain, g.codomain,
                 FnMap(lambda a: g.fobj(f.fobj(a))),
                 FnMap(lambda m: g.fmor(f.fmor(m))))


def functors_equal(f, g):
    d = f.domain
    return (all(f.fobj(o) == g.fobj(o) for o in d.objects)
            and all(f.fmor(m) == g.fmor(m) for m in d.morphisms))


def identity_nat(f):
    cod = f.codomain
    return NatT(f, f, FnMap(lambda a: cod.identity(f.fobj(a))))


def vcomp_nat(psi, theta):
    """Vertical composite ``psi . theta``."""
    cod = theta.source.codomain
    return NatT(theta.source, psi.target, FnMap(lambda a: cod.compose(psi.at(a), theta.at(a))))


def whisker_left(h, theta):
    """``h * theta``: post-compose every component with the functor ``h``."""
    return NatT(compose_functors(h, theta.source), compose_functors(h, theta.target),
                FnMap(lambda a: h.fmor(theta.at(a))))


def whisker_right(theta, k):
    """``theta * k``: restrict the components along the functor ``k``."""
    return NatT(compose_functors(theta.source, k), compose_functors(theta.target, k),
                FnMap(lambda a: theta.at(k.fobj(a))))


def hcomp_nat(psi, theta):
    """Horizontal composite of ``psi: G => G'`` after ``theta: F => F'``."""
    return vcomp_nat(whisker_right(psi, theta.target), whisker_left(psi.source, theta))


def nats_equal(a, b):
    return all(a.at(o) == b.at(o) for o in a.source.domain.objects)


def is_invertible_nat(theta):
    cod = theta.source.codomain
    return all(cod.is_iso(theta.at(o)) for o in theta.source.domain.objects)


# ---------------------------------------------------------------------------
# validation


def check_fin_cat(c):
    """Return the list of violated category laws (empty when valid)."""
    out = []
    objs = set(c.objects)
    if len(objs) != len(c.objects):
        out.append("duplicate object ids")
    for m in c.morphisms:
        if c.src(m) not in objs or c.dst(m) not in objs:
            out.append(f"morphism {m} has an unknown endpoint")
    if out:
        return out
    for o in c.objects:
        i = c.identities.get(o)
        if i is None:
            out.append(f"identities: object {o} has no identity")
        elif i not in c._src or c.src(i) != o or c.dst(i) != o:
            out.append(f"identities: {i} is not an endomorphism of {o}")
    if out:
        return out
    expected = {(g, f) for f in c.morphisms for g in c.morphisms if c.dst(f) == c.src(g)}
    for pair in sorted(expected - set(c.table)):
        out.append(f"compose: missing entry for {pair[0]} . {pair[1]}")
    for pair in sorted(set(c.table) - expected):
        out.append(f"compose: entry for non-composable pair {pair[0]} . {pair[1]}")
    if out:
        return out
    for (g, f), h in c.table.items():
        if h not in c._src:
            out.append(f"compose: {g} . {f} is an unknown morphism {h}")
        elif c.src(h) != c.src(f) or c.dst(h) != c.dst(g):
            out.append(f"compose: {g} . {f} = {h} has wrong endpoints")
    if out:
        return out
    for f in c.morphisms:
        if c.compose(c.identity(c.dst(f)), f) != f:
            out.append(f"unit law: id . {f} != {f}")
        if c.compose(f, c.identity(c.src(f))) != f:
            out.append(f"unit law: {f} . id != {f}")
    for f in c.morphisms:
        for g in _out(c, c.dst(f)):
            gf = c.compose(g, f)
            for h in _out(c, c.dst(g)):
                if c.compose(h, gf) != c.compose(c.compose(h, g), f):
                    out.append(f"associativity fails on ({h}, {g}, {f})")
    return out


def _out(c, a):
    return [m for b in c.objects for m in c.hom(a, b)]


def validate_fin_cat(c):
    """Return ``c`` unchanged, or raise :class:`ValidationError` listing the violations."""
    v = check_fin_cat(c)
    if v:
        raise ValidationError(v, "category")
    return c


def check_functor(f):
    out = []
    d, c = f.domain, f.codomain
    cobjs = set(c.objects)
    for o in d.objects:
        if f.fobj(o) not in cobjs:
            out.append(f"object {o} maps outside the codomain")
    if out:
        return out
    for m in d.morphisms:
        fm = f.fmor(m)
        if isinstance(c, FinCat) and fm not in c._src:
            out.append(f"morphism {m} maps outside the codomain")
            continue
        if c.src(fm) != f.fobj(d.src(m)) or c.dst(fm) != f.fobj(d.dst(m)):
            out.append(f"morphism {m} is not mapped between the images of its endpoints")
    if out:
        return out
    for o in d.objects:
        if f.fmor(d.identity(o)) != c.identity(f.fobj(o)):
            out.append(f"identity of {o} not preserved")
    for (g, h), gh in d.table.items():
        if f.fmor(gh) != c.compose(f.fmor(g), f.fmor(h)):
            out.append(f"composition not preserved on ({g}, {h})")
    return out


def check_nat(theta):
    out = []
    s, t = theta.source, theta.target
    d, c = s.domain, s.codomain
    for o in d.objects:
        m = theta.at(o)
        if c.src(m) != s.fobj(o) or c.dst(m) != t.fobj(o):
            out.append(f"component at {o} has the wrong type")
    if out:
        return out
    for m in d.morphisms:
        a, b = d.src(m), d.dst(m)
        if c.compose(t.fmor(m), theta.at(a)) != c.compose(theta.at(b), s.fmor(m)):
            out.append(f"naturality fails at {m}")
    return out


# ---------------------------------------------------------------------------
# enumeration


def backtrack(order, candidates, consistent, budget):
    """Depth-first enumeration of all consistent assignments.

    ``candidates(var, partial)`` lists values for ``var``;
    ``consistent(var, partial)`` checks every constraint that mentions
    ``var`` and only already-assigned variables.  Assignments are yielded in
    lexicographic order of the candidate lists.
    """
    budget = as_budget(budget)
    assignment = {}
    n = len(order)

    def rec(i):
        if i == n:
            yield dict(assignment)
            return
        var = order[i]
        for val in candidates(var, assignment):
            budget.tick()
            assignment[var] = val
            if consistent(var, assignment):
                yield from rec(i + 1)
            del assignment[var]

    yield from rec(0)


def _composition_triples(c):
    """Triples (g, f, g.f) with g and f non-identity, indexed by each member."""
    idx = {}
    for (g, f), h in c.table.items():
        if c.is_identity(g) or c.is_identity(f):
            continue
        t = (g, f, h)
        for m in {g, f, h}:
            idx.setdefault(m, []).append(t)
    return idx


def _variable_order(c):
    """Objects in order, each followed by the morphisms it completes."""
    order = []
    seen = set()
    placed = set()
    for o in c.objects:
        order.append(("o", o))
        seen.add(o)
        for m in c.morphisms:
            if m not in placed and not c.is_identity(m) and c.src(m) in seen and c.dst(m) in seen:
                order.append(("m", m))
                placed.add(m)
    return order


def enumerate_functors(a, b, budget=None):
    """All functors ``a -> b`` in canonical order."""
    budget = as_budget(budget)
    order = _variable_order(a)
    triples = _composition_triples(a)

    def img(m, asg):
        if a.is_identity(m):
            return b.identity(asg[("o", a.src(m))])
        return asg.get(("m", m))

    def candidates(var, asg):
        kind, x = var
        if kind == "o":
            return b.objects
        return b.hom(asg[("o", a.src(x))], asg[("o", a.dst(x))])

    def consistent(var, asg):
        kind, x = var
        if kind == "o":
            return True
        for g, f, h in triples.get(x, ()):
            ig, i_f, ih = img(g, asg), img(f, asg), img(h, asg)
            if ig is None or i_f is None or ih is None:
                continue
            if b.compose(ig, i_f) != ih:
                return False
        return True

    out = []
    for asg in backtrack(order, candidates, consistent, budget):
        om = {o: asg[("o", o)] for o in a.objects}
        mm = {m: (b.identity(om[a.src(m)]) if a.is_identity(m) else asg[("m", m)]) for m in a.morphisms}
        out.append(Funct(a, b, om, mm))
    return out


def enumerate_nats(f, g, budget=None):
    """All natural transformations ``f => g`` in canonical order."""
    budget = as_budget(budget)
    d, c = f.domain, f.codomain
    order = list(d.objects)
    pos = {o: i for i, o in enumerate(order)}
    checks = {o: [] for o in order}
    for m in d.morphisms:
        later = max(d.src(m), d.dst(m), key=pos.__getitem__)
        checks[later].append(m)

    def candidates(o, asg):
        return c.hom(f.fobj(o), g.fobj(o))

    def consistent(o, asg):
        for m in checks[o]:
            x, y = d.src(m), d.dst(m)
            if c.compose(g.fmor(m), asg[x]) != c.compose(asg[y], f.fmor(m)):
                return False
        return True

    return [NatT(f, g, asg) for asg in backtrack(order, candidates, consistent, budget)]


def functor_category(a, b, budget=None):
    """The category ``[a, b]``; labels decode ids to :class:`Funct`/:class:`NatT`."""
    budget = as_budget(budget)
    functors = enumerate_functors(a, b, budget)
    mors = []
    for f in functors:
        for g in functors:
            for t in enumerate_nats(f, g, budget):
                mors.append((t, f, g))
    byid = {}

    def ident(f):
        return _identity_nat_tab(f)

    def comp(psi, theta):
        key = _vcomp_key(psi, theta, b)
        return byid[key]

    for t, _, _ in mors:
        byid[t.key] = t
    for f in functors:
        t = ident(f)
        byid.setdefault(t.key, t)
    return FinCat.build(functors, mors, lambda f: byid[_identity_nat_tab(f).key], comp)


class LazyFunctorCat:
    """``[a, b]`` whose objects are :class:`Funct` and morphisms :class:`NatT` values.

    Hom-sets are enumerated only when asked for.
    """

    def __init__(self, a, b, budget=None):
        self.a, self.b = a, b
        self.budget = as_budget(budget)
        self._objects = None
        self._homs = {}

    @property
    def objects(self):
        if self._objects is None:
            self._objects = enumerate_functors(self.a, self.b, self.budget)
        return self._objects

    @property
    def morphisms(self):
        return [m for x in self.objects for y in self.objects for m in self.hom(x, y)]

    def hom(self, f, g):
        k = (f.key, g.key)
        if k not in self._homs:
            self._homs[k] = enumerate_nats(f, g, self.budget)
        return self._homs[k]

    def src(self, m):
        return m.source

    def dst(self, m):
        return m.target

    def identity(self, f):
        return _identity_nat_tab(f)

    def compose(self, g, f):
        cod = self.b
        return NatT(f.source, g.target,
                    {o: cod.compose(g.at(o), f.at(o)) for o in self.a.objects})

    def is_identity(self, m):
        return m.source == m.target and all(self.b.is_identity(m.at(o)) for o in self.a.objects)


def _identity_nat_tab(f):
    return NatT(f, f, {o: f.codomain.identity(f.fobj(o)) for o in f.domain.objects})


def _vcomp_key(psi, theta, cod):
    t = NatT(theta.source, psi.target,
             {o: cod.compose(psi.at(o), theta.at(o)) for o in theta.source.domain.objects})
    return t.key


def lookup_functor(cat, f):
    """Id of the object of a functor category ``cat`` equal to functor ``f``."""
    k = f.key
    if k not in cat.labels:
        raise KeyError(f"functor {k} is not an object of the given functor category")
    return k


def lookup_nat(cat, t):
    k = t.key
    if k not in cat.mor_labels:
        raise KeyError(f"transformation {k} is not a morphism of the given functor category")
    return k


# ---------------------------------------------------------------------------
# constructions


def terminal_cat():
    return FinCat(["*"], [("1*", "*", "*")], {"*": "1*"}, {("1*", "1*"): "1*"})


def empty_cat():
    return FinCat([], [], {}, {})


def discrete_cat(names):
    names = list(names)
    return FinCat(names, [(f"1{n}", n, n) for n in names], {n: f"1{n}" for n in names},
                  {(f"1{n}", f"1{n}"): f"1{n}" for n in names})


def poset_cat(elements, relations):
    """Thin category of the reflexive-transitive closure of ``relations``.

    The morphism ``a -> b`` is named ``a<b`` (identities ``1a``).
    """
    elements = list(elements)
    leq = {(a, a) for a in elements} | set(relations)
    changed = True
    while changed:
        changed = False
        for a, b in list(leq):
            for c, d in list(leq):
                if b == c and (a, d) not in leq:
                    leq.add((a, d))
                    changed = True
    for a, b in leq:
        if a != b and (b, a) in leq:
            raise ValueError("relations are not antisymmetric")

    def name(a, b):
        return f"1{a}" if a == b else f"{a}<{b}"

    mors = [(name(a, b), a, b) for a in elements for b in elements if (a, b) in leq]
    table = {}
    for _, a, b in mors:
        for _, b2, c in mors:
            if b2 == b:
                table[(name(b, c), name(a, b))] = name(a, c)
    return FinCat(elements, mors, {a: name(a, a) for a in elements}, table)


def walking_arrow():
    """The category 2 = {0 -> 1}, arrow named ``a``."""
    return FinCat(["0", "1"], [("10", "0", "0"), ("11", "1", "1"), ("a", "0", "1")],
                  {"0": "10", "1": "11"},
                  {("10", "10"): "10", ("11", "11"): "11", ("a", "10"): "a", ("11", "a"): "a"})


def product_cat(*cats):
    """Indexed product; the empty product is the terminal category."""
    p = LazyProduct(cats)
    return materialize(p)


def opposite_cat(c):
    mors = [(m, c.dst(m), c.src(m)) for m in c.morphisms]
    table = {(f, g): h for (g, f), h in c.table.items()}
    return FinCat(c.objects, mors, c.identities, table, c.labels, c.mor_labels)


def full_subcategory(c, objects):
    """Materialized full subcategory together with its inclusion functor."""
    objects = list(objects)
    keep = set(objects)
    mors = [(m, c.src(m), c.dst(m)) for m in c.morphisms if c.src(m) in keep and c.dst(m) in keep]
    ms = {m for m, _, _ in mors}
    table = {k: v for k, v in c.table.items() if k[0] in ms and k[1] in ms}
    sub = FinCat(objects, mors, {o: c.identity(o) for o in objects}, table,
                 {k: v for k, v in c.labels.items() if k in keep},
                 {k: v for k, v in c.mor_labels.items() if k in ms})
    incl = Funct(sub, c, {o: o for o in objects}, {m: m for m in ms})
    return sub, incl


class Inserter:
    """Result of :func:`inserter`: the category, its projection and inserted 2-cell."""

    def __init__(self, category, projection, cell):
        self.category = category
        self.projection = projection
        self.cell = cell


class _InserterCat:
    """Inserter of ``f, g`` with objects eager and hom-sets computed on demand."""

    def __init__(self, f, g, budget):
        self.f, self.g = f, g
        self.dom = f.domain
        self.cod = f.codomain
        self.budget = budget
        self.objects = []
        for a in self.dom.objects:
            for phi in self.cod.hom(f.fobj(a), g.fobj(a)):
                budget.tick()
                self.objects.append((a, phi))
        self._homs = {}

    def hom(self, x, y):
        key = (x, y)
        if key not in self._homs:
            (a, phi), (b, psi) = x, y
            f, g, cod = self.f, self.g, self.cod
            out = []
            for h in self.dom.hom(a, b):
                self.budget.tick()
                if cod.compose(g.fmor(h), phi) == cod.compose(psi, f.fmor(h)):
                    out.append((x, h, y))
            self._homs[key] = out
        return self._homs[key]

    def src(self, m):
        return m[0]

    def dst(self, m):
        return m[2]

    def identity(self, x):
        return (x, self.dom.identity(x[0]), x)

    def compose(self, g, f):
        return (f[0], self.dom.compose(g[1], f[1]), g[2])

    def is_identity(self, m):
        return m[0] == m[2] and self.dom.is_identity(m[1])

    @property
    def morphisms(self):
        return [m for x in self.objects for y in self.objects for m in self.hom(x, y)]


def _inserter_lazy(f, g, budget):
    cat = _InserterCat(f, g, budget)
    proj = Funct(cat, f.domain, FnMap(lambda x: x[0]), FnMap(lambda m: m[1]))
    cell = NatT(compose_functors(f, proj), compose_functors(g, proj), FnMap(lambda x: x[1]))
    return Inserter(cat, proj, cell)


def inserter(f, g, budget=None):
    """Inserter of parallel functors ``f, g``.

    Objects are pairs ``(A, phi: f(A) -> g(A))``; a morphism is an ``h: A -> A'``
    with ``g(h) . phi = phi' . f(h)``.
    """
    lazy = _inserter_lazy(f, g, as_budget(budget))
    cat = materialize(lazy.category)
    proj = Funct(cat, f.domain, {i: cat.olabel(i)[0] for i in cat.objects},
                 {m: cat.mlabel(m)[1] for m in cat.morphisms})
    cell = NatT(compose_functors(f, proj), compose_functors(g, proj),
                {i: cat.olabel(i)[1] for i in cat.objects})
    return Inserter(cat, proj, cell)


def equifier_objects(alpha, beta):
    return [a for a in alpha.source.domain.objects if alpha.at(a) == beta.at(a)]


def equifier(alpha, beta):
    """Full subcategory where ``alpha`` and ``beta`` agree, with its inclusion."""
    if not (functors_equal(alpha.source, beta.source) and functors_equal(alpha.target, beta.target)):
        raise ValueError("equifier needs parallel transformations")
    dom = alpha.source.domain
    return full_subcategory(materialize(dom), equifier_objects(alpha, beta))


def slice_over(b, obj):
    """The slice ``b / obj``: objects are arrows into ``obj``, morphisms commuting triangles."""
    if obj not in b.objects:
        raise KeyError(f"unknown object {obj}")
    objs = [m for a in b.objects for m in b.hom(a, obj)]
    mors = []
    for p in objs:
        for q in objs:
            for h in b.hom(b.src(p), b.src(q)):
                if b.compose(q, h) == p:
                    mors.append(((p, h, q), p, q))
    return FinCat.build(objs, mors, lambda p: (p, b.identity(b.src(p)), p),
                        lambda g, f: (f[0], b.compose(g[1], f[1]), g[2]))


# ---------------------------------------------------------------------------
# binary products and pullbacks by brute force


def _factor_count(c, target, p1, p2, q, q1, q2):
    n = 0
    for u in c.hom(q, target):
        if c.compose(p1, u) == q1 and c.compose(p2, u) == q2:
            n += 1
    return n


def check_binary_product(c, x, y):
    """Find a product cone ``(p, p1: p -> x, p2: p -> y)`` by checking every competing cone.

    Returns ``(p, p1, p2)`` for the first product cone in canonical order, or ``None``.
    """
    cones = [(p, p1, p2) for p in c.objects for p1 in c.hom(p, x) for p2 in c.hom(p, y)]
    for p, p1, p2 in cones:
        if all(_factor_count(c, p, p1, p2, q, q1, q2) == 1 for q, q1, q2 in cones):
            return (p, p1, p2)
    return None


def binary_product_oracle(c, x, y):
    """Independent route: a product is a terminal object of the category of cones."""
    cones = [(p, p1, p2) for p in c.objects for p1 in c.hom(p, x) for p2 in c.hom(p, y)]
    terminal = []
    for t in cones:
        counts = []
        for s in cones:
            k = 0
            for u in c.hom(s[0], t[0]):
                if c.compose(t[1], u) == s[1] and c.compose(t[2], u) == s[2]:
                    k += 1
            counts.append(k)
        if all(k == 1 for k in counts):
            terminal.append(t)
    return terminal


def is_pullback(c, f, g, p, u, v):
    """Whether ``(p, u: p -> src f, v: p -> src g)`` is a pullback of ``f`` and ``g``."""
    if c.compose(f, u) != c.compose(g, v):
        return False
    a, b = c.src(f), c.src(g)
    for w in c.objects:
        for s in c.hom(w, a):
            for t in c.hom(w, b):
                if c.compose(f, s) != c.compose(g, t):
                    continue
                k = sum(1 for h in c.hom(w, p) if c.compose(u, h) == s and c.compose(v, h) == t)
                if k != 1:
                    return False
    return True
