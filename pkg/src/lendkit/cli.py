"""Command line entry point.

Exit codes: 0 success, 1 a check or law failed, 2 bad input, 3 budget exceeded.
"""
import argparse
import sys
from pathlib import Path

from .descent import lax_end_via_descent
from .ends import END_MODES, end_of, lax_coend
from .errors import Budget, BudgetExceeded, LendkitError, UnsupportedInstance, ValidationError
from .io import (
    DocumentEnvelope, ParseError, category_payload, diagram_payload, export_dot, read_document,
    report_payload, serialize_document, wedge_payload,
)
from .iso import is_equivalent, is_isomorphic
from .limits import grothendieck, lax_limit, lax_slice
from .sharpflat import check_adjunction, flat_of, sharp_of, yoneda_equivalence_check

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(LendkitError):
    pass


def _emit(args, doc_or_text, out=None):
    text = doc_or_text if isinstance(doc_or_text, str) else serialize_document(doc_or_text)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        (out or sys.stdout).write(text)


def _diagram(args, attr="diagram"):
    return read_document(getattr(args, attr), "diagram", args.shape).value


def _mixed(t):
    if t.base is None:
        raise InputError("this command needs a mixed-variance diagram over A^op x A")
    return t


def _covariant(t):
    if t.base is not None:
        raise InputError("this command needs a covariant diagram")
    return t


def _mode(args, allowed, default):
    m = args.mode or default
    if m not in allowed:
        raise InputError(f"mode {m} is not available here; choose from {', '.join(allowed)}")
    return m


def _category_doc(value, construction=None):
    return DocumentEnvelope("category", category_payload(value, construction), value)


def _category_arg(path):
    doc = read_document(path, ("category", "wedge"))
    return doc.value


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args, budget):
    doc = read_document(args.file, None, args.shape)
    print(f"valid {doc.kind}")
    return EXIT_OK


def cmd_laxend(args, budget):
    t = _mixed(_diagram(args))
    mode = _mode(args, END_MODES, "lax")
    e = end_of(t, mode, budget)
    _emit(args, DocumentEnvelope("wedge", wedge_payload(e.category, e.wedge.components, e.wedge.structure, mode)))
    return EXIT_OK


def cmd_laxcoend(args, budget):
    t = _mixed(_diagram(args))
    _mode(args, ("lax",), "lax")
    r = lax_coend(t, budget)
    _emit(args, DocumentEnvelope("wedge", wedge_payload(r.category, r.components, r.structure, "lax", "coend")))
    return EXIT_OK


def cmd_descent(args, budget):
    t = _mixed(_diagram(args))
    _mode(args, ("lax",), "lax")
    d = lax_end_via_descent(t, budget, args.order)
    _emit(args, DocumentEnvelope("wedge", wedge_payload(d.category, d.wedge.components, d.wedge.structure, "lax",
                                                        "descent")))
    return EXIT_OK


def _limit(args, budget, default):
    w = _covariant(read_document(args.weight, "diagram", args.shape).value)
    g = _covariant(_diagram(args))
    mode = _mode(args, ("lax", "pseudo", "oplax"), default)
    r = lax_limit(w, g, mode, budget)
    _emit(args, _category_doc(r.category, f"{mode} limit via {r.construction}"))
    return EXIT_OK


def cmd_laxlim(args, budget):
    return _limit(args, budget, "lax")


def cmd_oplaxlim(args, budget):
    return _limit(args, budget, "oplax")


def cmd_grothendieck(args, budget):
    g = _covariant(_diagram(args))
    _emit(args, _category_doc(grothendieck(g), "grothendieck"))
    return EXIT_OK


def cmd_laxslice(args, budget):
    a = read_document(args.shape, "twocategory").value
    if args.object not in a.objects:
        raise InputError(f"unknown object {args.object}")
    _emit(args, _category_doc(lax_slice(a, args.object), f"lax slice over {args.object}"))
    return EXIT_OK


def cmd_sharp(args, budget):
    f = _covariant(_diagram(args))
    _emit(args, DocumentEnvelope("diagram", diagram_payload(sharp_of(f, budget))))
    return EXIT_OK


def cmd_flat(args, budget):
    f = _covariant(_diagram(args))
    mode = _mode(args, ("lax", "pseudo"), "lax")
    _emit(args, DocumentEnvelope("diagram", diagram_payload(flat_of(f, mode, budget))))
    return EXIT_OK


def cmd_adjcheck(args, budget):
    f = _covariant(_diagram(args))
    h = _covariant(read_document(args.other, "diagram", args.shape).value)
    r = check_adjunction(f, h, args.side, budget)
    data = {
        "side": args.side,
        "verdict": r.verdict,
        "diagnostics": r.diagnostics,
        "laxHom": category_payload(r.left_hom),
        "strictHom": category_payload(r.right_hom),
    }
    _emit(args, DocumentEnvelope("report", report_payload(f"adjunction comparison ({args.side})", r.ok, data)))
    return EXIT_OK if r.ok else EXIT_FAILED


def cmd_yoneda(args, budget):
    f = _covariant(_diagram(args))
    if args.object not in f.shape.objects:
        raise InputError(f"unknown object {args.object}")
    w = yoneda_equivalence_check(f, args.object, budget)
    data = {"object": args.object, "equivalent": w is not None}
    if w is not None:
        data["forward"] = {"objects": dict(w.forward.obj_map), "morphisms": dict(w.forward.mor_map)}
    _emit(args, DocumentEnvelope("report", report_payload("pseudo flat against the diagram", w is not None, data)))
    return EXIT_OK if w is not None else EXIT_FAILED


def _compare(args, budget, search, title):
    c, d = _category_arg(args.first), _category_arg(args.second)
    w = search(c, d, budget)
    data = {"found": w is not None}
    if w is not None:
        data["forward"] = {"objects": dict(w.forward.obj_map), "morphisms": dict(w.forward.mor_map)}
        data["backward"] = {"objects": dict(w.backward.obj_map), "morphisms": dict(w.backward.mor_map)}
    _emit(args, DocumentEnvelope("report", report_payload(title, w is not None, data)))
    return EXIT_OK if w is not None else EXIT_FAILED


def cmd_iso(args, budget):
    return _compare(args, budget, is_isomorphic, "isomorphism")


def cmd_equiv(args, budget):
    return _compare(args, budget, is_equivalent, "equivalence")


def cmd_dot(args, budget):
    _emit(args, export_dot(_category_arg(args.file), Path(args.file).stem))
    return EXIT_OK


def cmd_check(args, budget):
    from .corpus import generate_corpus
    from .laws import results_ok, results_table, run_laws

    try:
        corpus = generate_corpus(args.seed, args.size)
        results = run_laws(corpus, args.law or None, budget.limit)
    except KeyError as e:
        raise InputError(e.args[0]) from None
    ok = results_ok(results)
    data = {"seed": args.seed, "size": args.size, "laws": [r.to_json() for r in results]}
    sys.stdout.write(results_table(results))
    if args.out:
        _emit(args, DocumentEnvelope("report", report_payload("law suite", ok, data)))
    for r in results:
        if r.instances == 0:
            print(f"{r.law_id}: no instance ran", file=sys.stderr)
        for f in r.failures:
            print(f"{r.law_id} failed on {f['instance']}: {f['detail']}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAILED


# ---------------------------------------------------------------------------
# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="enumeration step limit (default: $LENDKIT_BUDGET or 1000000)")
    common.add_argument("--seed", type=int, default=0, help="corpus seed")
    common.add_argument("--out", default=None, help="write the result document here instead of stdout")
    common.add_argument("--mode", choices=END_MODES, default=None, help="strict, pseudo, lax or oplax")
    common.add_argument("--shape", default=None, help="2-category document that shape references resolve to")

    parser = argparse.ArgumentParser(prog="lendkit", description="Lax ends, coends and limits of finite diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    add("validate", cmd_validate, "parse and validate a document").add_argument("file")
    add("laxend", cmd_laxend, "end of a mixed diagram in the chosen mode").add_argument("--diagram", required=True)
    add("laxcoend", cmd_laxcoend, "lax coend of a mixed diagram").add_argument("--diagram", required=True)
    p = add("descent", cmd_descent, "lax end via products, an inserter and equifiers")
    p.add_argument("--diagram", required=True)
    p.add_argument("--order", choices=("small-first", "large-first"), default="small-first")
    for name, fn in (("laxlim", cmd_laxlim), ("oplaxlim", cmd_oplaxlim)):
        p = add(name, fn, f"weighted {name[:-3]} limit of a diagram")
        p.add_argument("--weight", required=True)
        p.add_argument("--diagram", required=True)
    add("grothendieck", cmd_grothendieck, "Grothendieck construction").add_argument("--diagram", required=True)
    add("laxslice", cmd_laxslice, "lax slice of the --shape 2-category").add_argument("--object", required=True)
    add("sharp", cmd_sharp, "lax morphism classifier").add_argument("--diagram", required=True)
    add("flat", cmd_flat, "lax morphism coclassifier").add_argument("--diagram", required=True)
    p = add("adjcheck", cmd_adjcheck, "compare lax and strict hom-categories")
    p.add_argument("--diagram", required=True)
    p.add_argument("--other", required=True)
    p.add_argument("--side", choices=("sharp", "flat"), default="sharp")
    p = add("yoneda", cmd_yoneda, "pseudo flat against the diagram at one object")
    p.add_argument("--diagram", required=True)
    p.add_argument("--object", required=True)
    for name, fn in (("iso", cmd_iso), ("equiv", cmd_equiv)):
        p = add(name, fn, f"search for an {'isomorphism' if name == 'iso' else 'equivalence'} of categories")
        p.add_argument("first")
        p.add_argument("second")
    add("dot", cmd_dot, "Graphviz export of a category").add_argument("file")
    p = add("check", cmd_check, "run the law suite on a seeded corpus")
    p.add_argument("--law", action="append", help="law id (repeatable); default all")
    p.add_argument("--size", type=int, default=2, help="random diagrams per shape")
    return parser


def run_command(argv):
    """Run one command; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    budget = Budget(args.budget)
    try:
        return args.func(args, budget)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, InputError, ValidationError, UnsupportedInstance, OSError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (KeyError, ValueError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
