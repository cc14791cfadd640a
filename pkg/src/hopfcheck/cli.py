"""Command-line front end.

Commands
--------
validate   check an input document (schema and algebraic axioms)
diagnose   run the full condition report, optionally writing JSON
antipode   print the antipode cell or the non-invertibility witness
selftest   run one of the identity suites on seeded random instances

Exit codes: 0 all requested checks pass, 1 a condition fails (witness in
the output), 2 input error.
"""

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import models as M
from .core import idc, Witness, two_cells_equal, id2, invert2
from .diagnose import diagnose, random_endocell
from .errors import HopfcheckError, ValidationError
from .gvecback import frobenius_commutative, frobenius_weak
from .spanback import frobenius_monoidale


class DocError(ValidationError):
    def __init__(self, path, message):
        super().__init__("%s: %s" % (path, message))
        self.path = path


def _need(doc, key, path, types=None):
    if key not in doc:
        raise DocError(path + "/" + key, "missing required field")
    v = doc[key]
    if types is not None and not isinstance(v, types):
        raise DocError(path + "/" + key, "expected %s" % (types,))
    return v


def build_context(doc):
    backend = _need(doc, "backend", "", str)
    params = doc.get("parameters", {})
    if backend == "span":
        objs = _need(params, "objects", "/parameters", list)
        return frobenius_monoidale(tuple(objs))
    if backend == "gvec-commutative":
        return frobenius_commutative(int(_need(params, "n", "/parameters",
                                                (int,))))
    if backend == "gvec-weak":
        return frobenius_weak(int(_need(params, "n", "/parameters", (int,))))
    raise DocError("/backend", "unknown backend %r" % backend)


def _category_from_inline(data, path):
    objs = tuple(_need(data, "objects", path, list))
    morphs = tuple((m[0], m[1], m[2])
                   for m in _need(data, "morphisms", path, list))
    idents = {}
    for k, v in _need(data, "identities", path, dict).items():
        match = [o for o in objs if str(o) == str(k)]
        if not match:
            raise DocError(path + "/identities", "unknown object %r" % k)
        idents[match[0]] = v
    comp = {(f, g): h for f, g, h in _need(data, "composition", path, list)}
    return M.FiniteCategory(objs, morphs, idents, comp)


def _frac(x):
    return Fraction(str(x))


def build_bimonoid(doc, ctx):
    model = _need(doc, "model", "", dict)
    if "constructor" in model:
        name = model["constructor"]
        args = model.get("args", {})
        table = {
            "trivial_i": lambda: M.trivial_compose_unit(ctx),
            "trivial_j": lambda: M.trivial_conv_unit(ctx),
            "sweedler": lambda: M.sweedler(ctx),
            "cyclic_group_algebra": lambda: M.group_algebra(
                M.cyclic_group_table(int(args.get("order", 2))), "g0", ctx),
            "symmetric3_algebra": lambda: M.group_algebra(
                *M.sym3_table(), ctx=ctx),
            "idempotent_monoid_algebra":
                lambda: M.idempotent_monoid_algebra(ctx),
            "walking_arrow": lambda: M.category_bimonoid(M.walking_arrow(),
                                                         ctx),
            "cyclic_groupoid": lambda: M.category_bimonoid(
                M.group_as_category(
                    M.cyclic_group_table(int(args.get("order", 2))), "g0"),
                ctx),
        }
        if name not in table:
            raise DocError("/model/constructor",
                           "unknown constructor %r" % name)
        return table[name]()
    if "inline" not in model:
        raise DocError("/model", "need either constructor or inline data")
    data = model["inline"]
    if ctx.backend.kind == "span":
        cat = _category_from_inline(data, "/model/inline")
        return M.category_bimonoid(cat, ctx)
    grades = [tuple(g) for g in _need(data, "grades", "/model/inline", list)]
    mu = {(i, jj, k): _frac(c)
          for i, jj, k, c in _need(data, "mu", "/model/inline", list)}
    eta = {i: _frac(c) for i, c in _need(data, "eta", "/model/inline", list)}
    delta = {(i, jj, k): _frac(c)
             for i, jj, k, c in _need(data, "delta", "/model/inline", list)}
    eps = {i: _frac(c) for i, c in _need(data, "eps", "/model/inline", list)}
    return M.bialgebra_bimonoid(ctx, data.get("name", "a"), grades,
                                mu, eta, delta, eps)


def load_document(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


# -- serialization -----------------------------------------------------------

def _ser_witness(w):
    if isinstance(w, Witness):
        return {"kind": w.kind, "message": w.message,
                "data": _ser_value(w.data), "replays": bool(w.replay())}
    return {"kind": "error", "message": str(w)}


def _ser_value(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_ser_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _ser_value(x) for k, x in v.items()}
    return v if isinstance(v, (int, str, bool, type(None))) else str(v)


def _ser_antipode(cell):
    if cell is None:
        return None
    if cell.backend.kind == "span":
        src = cell.src.total
        tgt = cell.tgt.total
        return {"kind": "function",
                "map": [[_ser_value(tgt.elements[ti][0]),
                         _ser_value(src.elements[si][0])]
                        for ti, si in enumerate(cell.data)]}
    return {"kind": "matrices",
            "blocks": [{"grade": _ser_value(g),
                        "matrix": [[str(x) for x in row] for row in m]}
                       for g, m in cell.data.items]}


def report_json(rep):
    verdicts = {}
    for c, v in rep.verdicts.items():
        out = {"status": v["status"]}
        if "witness" in v and v["witness"] is not None:
            out["witness"] = _ser_witness(v["witness"])
        verdicts[c] = out
    return {
        "model": rep.name,
        "verdicts": verdicts,
        "implied": rep.implied,
        "antipode": _ser_antipode(rep.antipode),
        "samples": rep.samples,
        "seed": rep.seed,
        "elapsed_seconds": round(rep.elapsed, 6),
    }


# -- selftest suites ----------------------------------------------------------

def _contexts():
    return [("span", frobenius_monoidale((0, 1))),
            ("gvec-commutative", frobenius_commutative(2)),
            ("gvec-weak", frobenius_weak(2))]


def selftest(suite, seed=0, trials=5, out=print):
    from . import duoidal as D, laws as L, transform as T
    rng = random.Random(seed)
    failures = 0

    def run(label, fn):
        nonlocal failures
        ok = fn()
        if not ok:
            failures += 1
        out("  %-44s %s" % (label, "pass" if ok else "FAIL"))

    if suite == "coherence":
        for lbl, ctx in _contexts():
            run("%s: adjunction triangles" % lbl,
                lambda c=ctx: D.check_triangle_identities(c))
            run("%s: frobenius comparisons" % lbl,
                lambda c=ctx: D.check_frobenius(c))
            for t in range(trials):
                cells = [random_endocell(ctx, rng, "c%d" % k)
                         for k in range(6)]
                run("%s: interchange coherence #%d" % (lbl, t),
                    lambda cs=cells: D.check_interchange_assoc(*cs) and
                    D.check_interchange_units(cs[0], cs[1]))
    elif suite == "lemma45":
        for lbl, ctx in _contexts():
            for t in range(trials):
                cells = [random_endocell(ctx, rng, "c%d_%d" % (t, k))
                         for k in range(4)]
                run("%s: pairing compatibility #%d" % (lbl, t),
                    lambda cs=cells: L.check_pairing_left_compat(*cs) and
                    L.check_pairing_right_compat(*cs))
    elif suite == "lemma46":
        for lbl, ctx in _contexts():
            for t in range(trials):
                f, g, h, k = (random_endocell(ctx, rng, "c%d_%d" % (t, i))
                              for i in range(4))
                run("%s: mixed pairing laws #%d" % (lbl, t),
                    lambda a=f, b=g, c=h, d=k:
                    L.check_mixed_pairing_left(a, b, c, d) and
                    L.check_mixed_pairing_counit(a, b, c))
    elif suite == "figure1":
        for b in _selftest_bimonoids():
            res = T.antipode_solve(b)
            if "antipode" not in res:
                continue
            sig = res["antipode"]
            run("%s: tensor inverse pair" % b.name,
                lambda bb=b, s=sig: L.check_inverse_pair_conv(
                    bb, bb, bb, id2(bb.cell), s, id2(bb.cell), s))
            run("%s: compose inverse pair" % b.name,
                lambda bb=b, s=sig: L.check_inverse_pair_comp(
                    bb, bb, bb, id2(bb.cell), s, id2(bb.cell), s))
    elif suite == "transform":
        from .hopf import hopf_map
        for b in _selftest_bimonoids():
            beta = hopf_map(b)
            run("%s: hopf map is a mixed morphism" % b.name,
                lambda bb=b, c=beta: T.is_mixed_morphism(bb, c))
            run("%s: transform of the hopf map" % b.name,
                lambda bb=b, c=beta: two_cells_equal(
                    T.transform(bb, c), id2(bb.cell)))
            run("%s: transform roundtrip" % b.name,
                lambda bb=b, c=beta: two_cells_equal(
                    T.untransform(bb, T.transform(bb, c)), c))
    else:
        raise DocError("/suite", "unknown suite %r" % suite)
    return failures


def _selftest_bimonoids():
    out = [
        M.category_bimonoid(M.group_as_category(M.cyclic_group_table(2),
                                                "g0")),
        M.category_bimonoid(M.walking_arrow()),
        M.group_algebra(M.cyclic_group_table(3), "g0"),
        M.sweedler(),
        M.linearized_category(M.group_as_category(M.cyclic_group_table(2),
                                                  "g0")),
    ]
    return out


# -- entry points -------------------------------------------------------------

def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="hopfcheck",
        description="Exact Hopf-condition diagnostics for bimonoids over "
                    "finite computable backends.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_val = sub.add_parser("validate", help="validate an input document")
    p_val.add_argument("file")

    p_diag = sub.add_parser("diagnose", help="full condition report")
    p_diag.add_argument("file")
    p_diag.add_argument("--samples", type=int, default=20)
    p_diag.add_argument("--seed", type=int, default=0)
    p_diag.add_argument("--json", dest="json_out", metavar="PATH")
    p_diag.add_argument("--exact-only", action="store_true")
    p_diag.add_argument("--backend-override", metavar="BACKEND")
    p_diag.add_argument("--feature", action="append", default=[],
                        choices=["weak-models"])

    p_anti = sub.add_parser("antipode", help="antipode cell or witness")
    p_anti.add_argument("file")
    p_anti.add_argument("--json", dest="json_out", metavar="PATH")
    p_anti.add_argument("--backend-override", metavar="BACKEND")

    p_self = sub.add_parser("selftest", help="identity suites")
    p_self.add_argument("--suite", required=True,
                        choices=["coherence", "lemma45", "lemma46",
                                 "figure1", "transform"])
    p_self.add_argument("--seed", type=int, default=0)
    p_self.add_argument("--trials", type=int, default=5)

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (DocError, ValidationError, OSError, json.JSONDecodeError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except HopfcheckError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return 2


def _load_model(args):
    doc = load_document(args.file)
    if getattr(args, "backend_override", None):
        doc = dict(doc)
        doc["backend"] = args.backend_override
    ctx = build_context(doc)
    b = build_bimonoid(doc, ctx)
    return doc, ctx, b


def _dispatch(args):
    if args.command == "validate":
        doc, ctx, b = _load_model(args)
        print("ok: %s over %s backend validates" % (b.name, ctx.backend.kind))
        return 0

    if args.command == "diagnose":
        doc, ctx, b = _load_model(args)
        opts = doc.get("options", {})
        samples = args.samples if args.samples is not None else \
            opts.get("samples", 20)
        seed = args.seed if args.seed is not None else opts.get("seed", 0)
        rep = diagnose(b, samples=samples, seed=seed,
                       exact_only=args.exact_only)
        payload = report_json(rep)
        for c, v in payload["verdicts"].items():
            line = "%-18s %s" % (c, v["status"])
            if "witness" in v:
                line += "  [%s]" % v["witness"]["message"]
            print(line)
        if args.json_out:
            with open(args.json_out, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=2, sort_keys=True)
            print("report written to %s" % args.json_out)
        return 0 if rep.all_hold() else 1

    if args.command == "antipode":
        doc, ctx, b = _load_model(args)
        from .transform import antipode_solve
        res = antipode_solve(b)
        if "antipode" in res:
            payload = {"antipode": _ser_antipode(res["antipode"])}
            print(json.dumps(payload, indent=2, sort_keys=True))
            code = 0
        else:
            payload = {"witness": _ser_witness(res["witness"])}
            print(json.dumps(payload, indent=2, sort_keys=True))
            code = 1
        if args.json_out:
            with open(args.json_out, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=2, sort_keys=True)
        return code

    if args.command == "selftest":
        t0 = time.time()
        failures = selftest(args.suite, seed=args.seed, trials=args.trials)
        print("suite %s: %s (%.1fs)" %
              (args.suite, "all checks pass" if failures == 0 else
               "%d failures" % failures, time.time() - t0))
        return 0 if failures == 0 else 1

    return 2


if __name__ == "__main__":
    sys.exit(main())
