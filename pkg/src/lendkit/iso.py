"""Isomorphism and equivalence search for finite categories.

Objects are matched by backtracking over bijections that respect a refined
colouring (hom-set sizes, endomorphism counts); morphisms are then matched
hom-set by hom-set, with every composite forced as soon as both of its
factors are placed.
"""
from .cat import Funct, full_subcategory, compose_functors
from .errors import as_budget


class IsoWitness:
    def __init__(self, forward, backward):
        self.forward = forward
        self.backward = backward


def _object_colours(cats):
    """Stable colour refinement run jointly so colours are comparable across ``cats``."""
    colours = []
    for c in cats:
        col = {}
        for o in c.objects:
            endo = c.hom(o, o)
            col[o] = (len(endo), sum(1 for m in endo if c.is_iso(m)),
                      sum(len(c.hom(o, p)) for p in c.objects),
                      sum(len(c.hom(p, o)) for p in c.objects))
        colours.append(col)
    classes = -1
    while True:
        sigs = []
        for c, col in zip(cats, colours):
            sig = {}
            for o in c.objects:
                sig[o] = (col[o], tuple(sorted((len(c.hom(o, p)), len(c.hom(p, o)), col[p])
                                               for p in c.objects)))
            sigs.append(sig)
        palette = {s: i for i, s in enumerate(sorted({s for sig in sigs for s in sig.values()}, key=repr))}
        colours = [{o: palette[s] for o, s in sig.items()} for sig in sigs]
        if len(palette) == classes:
            return colours
        classes = len(palette)


def _morphism_colours(c):
    fact = {m: 0 for m in c.morphisms}
    for (g, f), h in c.table.items():
        if not c.is_identity(g) and not c.is_identity(f):
            fact[h] += 1
    out = {}
    for m in c.morphisms:
        idem = c.src(m) == c.dst(m) and c.compose(m, m) == m
        out[m] = (c.is_identity(m), c.is_iso(m), fact[m], idem)
    return out


def _match_morphisms(c, d, omap, ccol, dcol, budget):
    phi = {c.identity(o): d.identity(omap[o]) for o in c.objects}
    used = set(phi.values())
    by_factor = {}
    for (g, f), h in c.table.items():
        if c.is_identity(g) or c.is_identity(f):
            continue
        by_factor.setdefault(g, []).append((g, f, h))
        if f != g:
            by_factor.setdefault(f, []).append((g, f, h))
    free = [m for m in c.morphisms if not c.is_identity(m)]

    def fits(m, n):
        return (n not in used and ccol[m] == dcol[n]
                and d.src(n) == omap[c.src(m)] and d.dst(n) == omap[c.dst(m)])

    def assign(m, n, trail):
        phi[m] = n
        used.add(n)
        trail.append(m)

    def undo(trail):
        for m in trail:
            used.discard(phi.pop(m))

    def propagate(queue, trail):
        while queue:
            m = queue.pop()
            for g, f, h in by_factor.get(m, ()):
                if g in phi and f in phi:
                    img = d.compose(phi[g], phi[f])
                    if h in phi:
                        if phi[h] != img:
                            return False
                    elif fits(h, img):
                        assign(h, img, trail)
                        queue.append(h)
                    else:
                        return False
        return True

    def rec(i):
        while i < len(free) and free[i] in phi:
            i += 1
        if i == len(free):
            return True
        m = free[i]
        for n in d.hom(omap[c.src(m)], omap[c.dst(m)]):
            if not fits(m, n):
                continue
            budget.tick()
            trail = []
            assign(m, n, trail)
            if propagate([m], trail) and rec(i + 1):
                return True
            undo(trail)
        return False

    if rec(0):
        return dict(phi)
    return None


def is_isomorphic(c, d, budget=None):
    """Return an :class:`IsoWitness` if ``c`` and ``d`` are isomorphic, else ``None``."""
    budget = as_budget(budget)
    if len(c.objects) != len(d.objects) or len(c.morphisms) != len(d.morphisms):
        return None
    ccols, dcols = _object_colours([c, d])
    if sorted(ccols.values()) != sorted(dcols.values()):
        return None
    cm, dm = _morphism_colours(c), _morphism_colours(d)
    if sorted(cm.values()) != sorted(dm.values()):
        return None
    size = {}
    for col in ccols.values():
        size[col] = size.get(col, 0) + 1
    order = sorted(c.objects, key=lambda o: (size[ccols[o]], c.objects.index(o)))
    omap = {}
    used = set()

    def rec(i):
        if i == len(order):
            return _match_morphisms(c, d, omap, cm, dm, budget)
        o = order[i]
        for p in d.objects:
            if p in used or dcols[p] != ccols[o]:
                continue
            budget.tick()
            if len(c.hom(o, o)) != len(d.hom(p, p)):
                continue
            if any(len(c.hom(o, q)) != len(d.hom(p, omap[q])) or len(c.hom(q, o)) != len(d.hom(omap[q], p))
                   for q in omap):
                continue
            omap[o] = p
            used.add(p)
            found = rec(i + 1)
            if found is not None:
                return found
            del omap[o]
            used.discard(p)
        return None

    mmap = rec(0)
    if mmap is None:
        return None
    fwd = Funct(c, d, dict(omap), mmap)
    bwd = Funct(d, c, {v: k for k, v in omap.items()}, {v: k for k, v in mmap.items()})
    return IsoWitness(fwd, bwd)


class Skeleton:
    """A skeleton of ``base`` with its inclusion and retraction functors."""

    def __init__(self, category, inclusion, retraction, representative):
        self.category = category
        self.inclusion = inclusion
        self.retraction = retraction
        self.representative = representative


def skeleton(c):
    """One object per isomorphism class, the least id in each class."""
    rep = {}
    to_rep = {}
    for o in c.objects:
        if o in rep:
            continue
        cls = [p for p in c.objects if p not in rep and any(c.is_iso(m) for m in c.hom(p, o))]
        r = min(cls)
        for p in cls:
            rep[p] = r
    for o in c.objects:
        r = rep[o]
        to_rep[o] = next(m for m in c.hom(o, r) if c.is_iso(m))
    reps = [o for o in c.objects if rep[o] == o]
    sub, incl = full_subcategory(c, reps)

    def fmor(m):
        a, b = c.src(m), c.dst(m)
        return c.compose(to_rep[b], c.compose(m, c.inverse(to_rep[a])))

    retr = Funct(c, sub, {o: rep[o] for o in c.objects}, {m: fmor(m) for m in c.morphisms})
    return Skeleton(sub, incl, retr, rep)


def is_equivalent(c, d, budget=None):
    """Equivalence witness ``(F: c -> d, G: d -> c)`` via isomorphic skeletons, or ``None``."""
    sc, sd = skeleton(c), skeleton(d)
    w = is_isomorphic(sc.category, sd.category, budget)
    if w is None:
        return None
    fwd = compose_functors(sd.inclusion, compose_functors(w.forward, sc.retraction)).tabulate()
    bwd = compose_functors(sc.inclusion, compose_functors(w.backward, sd.retraction)).tabulate()
    return IsoWitness(fwd, bwd)
