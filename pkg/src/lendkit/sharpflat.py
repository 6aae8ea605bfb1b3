"""The lax morphism classifier ``F#`` and coclassifier ``F_flat`` of a diagram
``F: A -> Cat``, their unit and counit, and the adjunction and Yoneda checks.

Both are covariant in ``C``:

    F#(C)     = lax coend over A of  A(A, C) x F A
    F_flat(C) = end over A of [A(C, A), F A]
"""
from .cat import Funct, NatT, canon, compose_functors, whisker_left, whisker_right
from .ends import lax_coend, lax_coend_map, partial_end
from .errors import UnsupportedInstance, as_budget
from .iso import is_equivalent
from .limits import corepresentable, identity_two_cells, product_functor, representable_presheaf, two_sided
from .twocat import (
    LaxTransformation, Modification, TwoFunctor, exponential, hom_2functor,
    lax_transformation_category, reindex,
)


def sharp_of(f, budget=None):
    """``C |-> lax coend of A(-, C) x F-``, acting by post-composition of the first factor."""
    a = f.shape
    if not a.is_locally_discrete():
        raise UnsupportedInstance("the sharp construction needs a locally discrete shape")
    budget = as_budget(budget)
    h = hom_2functor(a)
    integrands = {c: two_sided(a, representable_presheaf(a, c), f) for c in a.objects}
    coends = {c: lax_coend(integrands[c], budget) for c in a.objects}
    m = a.mixed()
    on_one = {}
    for k, (c, c2) in a.one.items():
        ts, td = integrands[c], integrands[c2]
        comps = {}
        for o, (A1, A) in m.pairs[0].items():
            post = h.one(canon((a.id_one[A1], k)))
            ident = f.one(a.id_one[A])
            comps[o] = product_functor(ts.value(o), td.value(o), post, ident)
        on_one[k] = lax_coend_map(coends[c], coends[c2], comps)
    out = TwoFunctor(a, {c: coends[c].category for c in a.objects}, on_one, identity_two_cells(a, on_one))
    out.meta["coends"] = coends
    return out


def unit_sharp(f, sharp=None):
    """``eta_A(x) = (A, (1_A, x))``; ``eta_f`` at ``x`` is ``(f, (1_f, 1))``."""
    a = f.shape
    sharp = sharp or sharp_of(f)
    comps, structure = {}, {}
    for A in a.objects:
        fa = f.value(A)
        ida = a.id_one[A]
        om = {x: canon((A, canon((ida, x)))) for x in fa.objects}
        mm = {m: canon(((A, canon((ida, fa.src(m)))), ida, canon((a.id_two[ida], m)),
                        (A, canon((ida, fa.dst(m)))))) for m in fa.morphisms}
        comps[A] = Funct(fa, sharp.value(A), om, mm)
    for k, (A, B) in a.one.items():
        if a.is_identity(k):
            continue
        fa, fb = f.value(A), f.value(B)
        fk = f.one(k)
        cs = {}
        for x in fa.objects:
            y = fk.fobj(x)
            cs[x] = canon(((A, canon((k, x))), k, canon((a.id_two[k], fb.identity(y))),
                           (B, canon((a.id_one[B], y)))))
        structure[k] = NatT(compose_functors(sharp.one(k), comps[A]), compose_functors(comps[B], fk), cs)
    return LaxTransformation(f, sharp, comps, structure)


def _flat_integrand(f):
    """``((A', A), C) |-> [A(C, A'), F A]`` over ``a.mixed() x a``."""
    from .twocat import product_2cat
    a = f.shape
    e = exponential(hom_2functor(a), f)
    shape = product_2cat(a.mixed(), a)
    mp = a.mixed().pairs

    def mapper(dim):
        def go(k):
            mo, c = shape.pairs[dim][k]
            a1, a2 = mp[dim][mo]
            return canon((canon((c, a1)), a2))
        return go

    return reindex(e, shape, mapper(0), mapper(1), mapper(2))


def flat_of(f, mode="lax", budget=None):
    """``C |-> end over A of [A(C, A), F A]`` in the given mode (lax or pseudo)."""
    if mode not in ("lax", "pseudo"):
        raise ValueError(f"unknown flat mode {mode}")
    a = f.shape
    out = partial_end(_flat_integrand(f), a, a, mode, budget)
    out.meta["mode"] = mode
    return out


def counit_flat(f, flat=None):
    """``eps_C(x) = x_C(1_C)``; ``eps_h`` at ``x`` is ``(x_h)`` at ``1_C``."""
    a = f.shape
    flat = flat or flat_of(f)
    ends = flat.meta["ends"]
    comps, structure = {}, {}
    for C in a.objects:
        e = ends[C]
        cat = e.category
        val = e.diagram.at(C, C)
        idc = a.id_one[C]
        om = {o: val.olabel(cat.olabel(o).objects[C]).fobj(idc) for o in cat.objects}
        mm = {m: val.mlabel(cat.mlabel(m).components[C]).at(idc) for m in cat.morphisms}
        comps[C] = Funct(cat, f.value(C), om, mm)
    for h, (C, D) in a.one.items():
        if a.is_identity(h):
            continue
        e = ends[C]
        cat = e.category
        val = e.diagram.at(C, D)
        idc = a.id_one[C]
        cs = {o: val.mlabel(cat.olabel(o).cells[h]).at(idc) for o in cat.objects}
        structure[h] = NatT(compose_functors(f.one(h), comps[C]), compose_functors(comps[D], flat.one(h)), cs)
    return LaxTransformation(flat, f, comps, structure)


class AdjunctionReport:
    def __init__(self, left_hom, right_hom, comparison, verdict, diagnostics):
        self.left_hom = left_hom
        self.right_hom = right_hom
        self.comparison = comparison
        self.verdict = verdict
        self.diagnostics = diagnostics

    @property
    def ok(self):
        return self.verdict == "iso"


def _compare(left, right, obj_image, mor_image):
    diagnostics = []
    om, mm = {}, {}
    for o in right.objects:
        k = obj_image(right.olabel(o)).key
        if k not in left.labels:
            diagnostics.append(f"image of {o} is not a lax transformation")
        om[o] = k
    for m in right.morphisms:
        k = mor_image(right.mlabel(m), om).key
        if k not in left.mor_labels:
            diagnostics.append(f"image of {m} is not a modification")
        mm[m] = k
    if len(set(om.values())) != len(om) or set(om.values()) != set(left.objects):
        diagnostics.append("comparison is not bijective on objects")
    if len(set(mm.values())) != len(mm) or set(mm.values()) != set(left.morphisms):
        diagnostics.append("comparison is not bijective on morphisms")
    return Funct(right, left, om, mm), diagnostics


def check_adjunction(f, h, side="sharp", budget=None):
    """Compare ``Lax(F, H)`` with ``Strict(F#, H)``, or ``Lax(H, F)`` with ``Strict(H, F_flat)``."""
    budget = as_budget(budget)
    if side == "sharp":
        sharp = sharp_of(f, budget)
        eta = unit_sharp(f, sharp)
        left = lax_transformation_category(f, h, "lax", budget)
        right = lax_transformation_category(sharp, h, "strict", budget)

        def obj_image(tau):
            return LaxTransformation(
                f, h, {A: compose_functors(tau.components[A], eta.components[A]).tabulate() for A in f.shape.objects},
                {k: whisker_left(tau.components[f.shape.dst(k)], n) for k, n in eta.structure.items()})

        def mor_image(mod, om):
            return Modification(left.olabel(om[mod.source.key]), left.olabel(om[mod.target.key]),
                                {A: whisker_right(n, eta.components[A]) for A, n in mod.components.items()})
    elif side == "flat":
        flat = flat_of(f, "lax", budget)
        eps = counit_flat(f, flat)
        left = lax_transformation_category(h, f, "lax", budget)
        right = lax_transformation_category(h, flat, "strict", budget)

        def obj_image(tau):
            return LaxTransformation(
                h, f, {A: compose_functors(eps.components[A], tau.components[A]).tabulate() for A in f.shape.objects},
                {k: whisker_right(n, tau.components[f.shape.src(k)]) for k, n in eps.structure.items()})

        def mor_image(mod, om):
            return Modification(left.olabel(om[mod.source.key]), left.olabel(om[mod.target.key]),
                                {A: whisker_left(eps.components[A], n) for A, n in mod.components.items()})
    else:
        raise ValueError(f"unknown side {side}")
    comparison, diagnostics = _compare(left, right, obj_image, mor_image)
    return AdjunctionReport(left, right, comparison, "mismatch" if diagnostics else "iso", diagnostics)


def yoneda_equivalence_check(f, obj, budget=None):
    """Whether the pseudo flat of ``f`` at ``obj`` is equivalent to ``f(obj)``; returns the witness or ``None``."""
    flat = flat_of(f, "pseudo", budget)
    return is_equivalent(flat.value(obj), f.value(obj), budget)


__all__ = ["sharp_of", "unit_sharp", "flat_of", "counit_flat", "AdjunctionReport", "check_adjunction",
           "yoneda_equivalence_check", "corepresentable", "representable_presheaf"]
