"""Command line front end: ``relkit <command> <model> ...``.

Exit status is 0 when the requested check reports no failures, 1 when it
does, and 2 for usage errors, unresolved names, type mismatches or
exhausted caps.
"""
import argparse
import json
import sys

from . import functors, laws, qrel, qspan
from .algebra import classify_interpretation, classify_term
from .config import DEFAULT_SEED
from .dsl import ParseError, eval_expr
from .errors import RelkitError
from .model import Model, morphism_to_json, relation_to_json
from .qrel import MONAD_LABELS, QRelation
from .quantale import classify_quantale
from .sampling import random_algebraic_span, rng_for


def _emit(args, payload, text=None):
    if args.json or text is None:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _report_text(rep):
    lines = [f"{rep.name}: {'ok' if rep.ok else 'FAILED'} "
             f"({rep.checked} checked{'' if rep.exhaustive else ', sampled'})"]
    lines += [f"  violation: {json.dumps(v)}" for v in rep.violations[:20]]
    if len(rep.violations) > 20:
        lines.append(f"  ... {len(rep.violations) - 20} more")
    lines += [f"  note: {n if isinstance(n, str) else json.dumps(n)}" for n in rep.notes]
    return "\n".join(lines)


def _morphism(model, name):
    section, value = model.lookup(name)
    if section not in ("relations", "spans"):
        raise RelkitError(f"{name!r} is a {section[:-1]}, expected a relation or span")
    return value


def cmd_eval(args, model):
    result = eval_expr(model, args.expr)
    print(json.dumps(morphism_to_json(result), indent=2))
    return 0


def _suite_objects(model, names):
    if names:
        return [model.algebra(n) for n in names.split(",")]
    objs = [model.algebra(n) for n in model.names("algebras")]
    default = model.defaults.get("object")
    sig = model.algebra(default).signature if default else objs[0].signature
    return [a for a in objs if a.signature == sig]


def cmd_check_laws(args, model):
    q = model.quantale(args.quantale or model.defaults.get("quantale", "boolean"))
    objs = _suite_objects(model, args.objects)
    suite = laws.make_suite(args.suite, args.target, q, objs, seed=args.seed, samples=args.samples)
    rep = laws.run_suite(args.suite, suite)
    _emit(args, laws.suite_json(rep), _report_text(rep))
    return 0 if rep.ok else 1


def cmd_check_algebraic(args, model):
    m = _morphism(model, args.name)
    rep = qrel.check_algebraic(m) if isinstance(m, QRelation) else qspan.check_algebraic_span(m)
    _emit(args, rep.to_dict(), _report_text(rep))
    return 0 if rep.ok else 1


def cmd_monad(args, model):
    m = _morphism(model, args.name)
    if isinstance(m, QRelation):
        verdict = qrel.is_internal_monad(m)
        label = MONAD_LABELS.get(m.quantale.name, "internal monad")
    else:
        verdict = qspan.is_internal_monad_span(m)
        label = "internal monad of spans"
    payload = {"name": args.name, "label": label, "holds": verdict.holds,
               "certificate": verdict.certificate}
    text = f"{label}: {'yes' if verdict.holds else 'no'}"
    if verdict.certificate:
        text += f"\n  certificate: {json.dumps(verdict.certificate)}"
    _emit(args, payload, text)
    return 0 if verdict.holds else 1


def cmd_classify(args, model):
    section, value = model.lookup(args.name)
    if section == "terms":
        t, nvars = value
        flags = classify_term(t, nvars).to_dict()
        cls = classify_term(t, nvars).name
    elif section == "interpretations":
        ic = classify_interpretation(value)
        flags, cls = ic.to_dict(), ic.name
    elif section in ("relations", "spans", "quantales"):
        c = (qrel.classify_relation(value) if section == "relations" else
             qspan.classify_span(value) if section == "spans" else classify_quantale(value))
        flags, cls = c.to_dict(), c.name
    else:
        raise RelkitError(f"cannot classify a {section[:-1]}")
    payload = {"name": args.name, "kind": section[:-1], "class": cls, "flags": flags}
    _emit(args, payload, f"{args.name}: {cls} {json.dumps(flags)}")
    return 0


def _algebra_ref(model, a):
    for n in model.names("algebras"):
        if model.algebra(n) == a:
            return n
    return None


def _compact_relation_json(model, r):
    """Relation JSON that names the model's algebras and builtin quantales when possible."""
    out = relation_to_json(r)
    for key in ("dom", "cod"):
        ref = _algebra_ref(model, getattr(r, key))
        if ref is not None:
            out[key] = ref
    if out["quantale"].get("kind") == "builtin":
        out["quantale"] = out["quantale"]["name"]
    out.pop("kind")
    return out


def cmd_collapse(args, model):
    s = model.span(args.span)
    r = functors.v_collapse(s)
    if args.output:
        if model.path is None:
            raise RelkitError("shipped models are read-only; copy the file to write into it")
        model.put("relations", args.output, _compact_relation_json(model, r))
        model.save()
    print(json.dumps(morphism_to_json(r), indent=2))
    return 0


def cmd_mapq(args, model):
    h = model.quantale_hom(args.hom)
    m = _morphism(model, args.name)
    out = functors.hstar_rel(h, m) if isinstance(m, QRelation) else functors.hstar_span(h, m)
    print(json.dumps(morphism_to_json(out), indent=2))
    return 0


def cmd_reinterp(args, model):
    i = model.interpretation(args.interp)
    m = _morphism(model, args.name)
    out = functors.istar_rel(i, m) if isinstance(m, QRelation) else functors.istar_span(i, m)
    print(json.dumps(morphism_to_json(out), indent=2))
    return 0


def box_samples(model, h, i, count, seed, max_carrier=3):
    """Random algebraic spans between the model's algebras over ``i``'s target."""
    objs = [model.algebra(n) for n in model.names("algebras")]
    objs = [a for a in objs if a.signature == i.target and len(a) <= max_carrier]
    if not objs:
        raise RelkitError("the model has no small algebra over the interpretation's target signature")
    rng = rng_for(seed)
    return [random_algebraic_span(h.source, rng.choice(objs), rng.choice(objs), rng)
            for _ in range(count)]


def cmd_box(args, model):
    h = model.quantale_hom(args.hom)
    i = model.interpretation(args.interp)
    samples = box_samples(model, h, i, args.samples, args.seed)
    rep = functors.check_box(h, i, samples)
    _emit(args, rep.to_dict(), _report_text(rep))
    return 0 if rep.ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog="relkit", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="machine-readable output and errors")
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("model", help="model file (or the name of a shipped model)")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(run=fn)
        return sp

    sp = command("eval", cmd_eval, "evaluate an expression")
    sp.add_argument("expr")

    sp = command("check-laws", cmd_check_laws, "run a law suite")
    sp.add_argument("--suite", required=True, choices=sorted(laws.SUITES))
    sp.add_argument("--target", default="rel", choices=["rel", "span"])
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--quantale", help="quantale name (default: the model's default)")
    sp.add_argument("--objects", help="comma-separated algebra names")

    sp = command("check-algebraic", cmd_check_algebraic, "check a relation or span is algebraic")
    sp.add_argument("name")

    sp = command("monad", cmd_monad, "decide whether an endomorphism is an internal monad")
    sp.add_argument("name")

    sp = command("classify", cmd_classify, "affine/relevant/cartesian flags")
    sp.add_argument("name")

    sp = command("collapse", cmd_collapse, "collapse a span to a relation")
    sp.add_argument("span")
    sp.add_argument("-o", "--output", help="store the result in the model under this name")

    sp = command("mapq", cmd_mapq, "push a morphism along a quantale hom")
    sp.add_argument("hom")
    sp.add_argument("name")

    sp = command("reinterp", cmd_reinterp, "reinterpret a morphism along an interpretation")
    sp.add_argument("interp")
    sp.add_argument("name")

    sp = command("box", cmd_box, "check the inner cube on random spans")
    sp.add_argument("--hom", required=True)
    sp.add_argument("--interp", required=True)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        model = Model.load(args.model)
        return args.run(args, model)
    except (RelkitError, ParseError, KeyError, ValueError, TypeError, OSError) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc).strip("'\"")}
        if args.json:
            print(json.dumps(payload), file=sys.stderr)
        else:
            print(f"error: {payload['message']}", file=sys.stderr)
        return 2


__all__ = ["main", "build_parser", "box_samples"]
