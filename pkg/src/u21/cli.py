"""Command-line front end and the desk-scale verification harness."""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, gf, grp, hecke, meataxe, modrep
from .errors import U21Error, UnsupportedCase


def _emit(obj, as_json):
    if as_json:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(json.dumps(obj, sort_keys=True, indent=2))


def cmd_group(args):
    spec = grp.unitary_group(args.q, args.rank)
    out = {"q0": args.q, "rank": args.rank,
           "order_formula": grp.group_order(spec, "formula")}
    if args.enumerate:
        out["order_enumerate"] = grp.group_order(spec, "enumerate")
    _emit(out, args.json)
    return 0


def cmd_induce(args):
    spec = grp.unitary_group(args.q, args.rank)
    table = grp.flag_table(spec)
    chi = modrep.torus_character(args.q, args.e1, args.e2, args.ell)
    mod = modrep.induced_module(spec, table, chi)
    modrep.module_write(mod, args.output)
    _emit({"dim": mod.dim, "field": [mod.coeff.p, mod.coeff.m],
           "label": mod.label, "path": args.output}, args.json)
    return 0


def cmd_chop(args):
    mod = modrep.module_read(args.file)
    rep = meataxe.chop(mod, args.seed)
    _emit(rep.to_json(), args.json)
    return 0


def cmd_socle(args):
    mod = modrep.module_read(args.file)
    rep = meataxe.chop(mod, args.seed)
    soc = meataxe.socle_series(mod, args.seed)
    _emit(rep.to_json(soc), args.json)
    return 0


def cmd_end(args):
    mod = modrep.module_read(args.file)
    alg = meataxe.endomorphism_algebra(mod)
    out = {"dim": mod.dim, "end_dimension": alg.dimension}
    if args.quadratic:
        out["quadratic_parameter"] = meataxe.quadratic_parameter(alg, mod)
    _emit(out, args.json)
    return 0


def cmd_hecke(args):
    pres = hecke.presentation(args.q, args.a, args.ell)
    chars = hecke.characters(pres)
    n = len(chars)
    case = {4: "distinct", 2: "q^a=-1", 1: "q=-1"}[n]
    _emit({"q": args.q, "a": args.a, "ell": args.ell,
           "relation_x": list(pres.coeff_x), "relation_y": list(pres.coeff_y),
           "characters": [{"name": c.name, "value_x": c.value_x,
                           "value_y": c.value_y} for c in chars],
           "count": n, "collapse_case": case}, args.json)
    return 0


def cmd_classify(args):
    if args.which == "finite":
        rep = classify.finite_ps_structure(args.q, args.ell, args.e1,
                                           args.e2, args.rank)
    else:
        desc = classify.PadicCharDescriptor(args.level, args.chi1_class,
                                            args.q, args.ell,
                                            chi_order=args.chi_order)
        rep = classify.padic_ps_structure(desc)
    _emit(rep.to_json(), args.json)
    return 0


# -- verification suite -------------------------------------------------------

def _expected_layers(report):
    """Socle layer dims implied by a finite StructureReport, or None."""
    facs = sorted(report.factors, key=lambda t: t[0].dim_mod)
    if report.flags["semisimple"]:
        layer = []
        for lab, m in facs:
            layer.extend([lab.dim_mod] * m)
        return [sorted(layer)]
    if report.flags["uniserial"] and report.length == 3:
        outer = next(l.dim_mod for l, m in facs if m == 2)
        inner = next(l.dim_mod for l, m in facs if m == 1)
        return [[outer], [inner], [outer]]
    if report.flags["uniserial"] and report.length == 5:
        one = facs[0][0].dim_mod
        nu = facs[1][0].dim_mod
        mid = facs[2][0].dim_mod
        return [[one], [nu], [mid], [nu], [one]]
    if report.clause == "l=2-4-divides-q-minus-1":
        one = facs[0][0].dim_mod
        mids = sorted(l.dim_mod for l, m in facs if m == 1)
        return [[one], mids, [one]]
    return None


class _Cache:
    def __init__(self):
        self.mods = {}
        self.chops = {}

    def module(self, q, ell, e1, rank, seed):
        key = (q, ell, e1, rank)
        if key not in self.mods:
            spec = grp.unitary_group(q, rank)
            table = grp.flag_table(spec)
            chi = modrep.torus_character(q, e1, 0, ell)
            self.mods[key] = modrep.induced_module(spec, table, chi)
        return self.mods[key]

    def chop(self, q, ell, e1, rank, seed):
        key = (q, ell, e1, rank, seed)
        if key not in self.chops:
            self.chops[key] = meataxe.chop(self.module(q, ell, e1, rank, seed),
                                           seed)
        return self.chops[key]


def _case(name, status, detail):
    return {"name": name, "status": status, "detail": detail}


def verify_desk(seed):
    cache = _Cache()
    cases = []

    # group orders
    for rank, want in ((3, 24192), (2, 96)):
        spec = grp.unitary_group(3, rank)
        got = (grp.group_order(spec, "formula"),
               grp.group_order(spec, "enumerate"))
        ok = got == (want, want)
        cases.append(_case(f"group-order-q3-rank{rank}",
                           "pass" if ok else "fail",
                           {"formula": got[0], "enumerate": got[1],
                            "expected": want}))

    # finite principal-series structure vs MeatAxe
    grid = [(3, 5, 0, 3), (3, 7, 0, 3), (3, 2, 0, 3), (5, 2, 0, 3),
            (5, 3, 12, 3), (3, 2, 0, 2), (5, 3, 0, 3)]
    for q, ell, e1, rank in grid:
        name = f"finite-q{q}-l{ell}-e1_{e1}-rank{rank}"
        try:
            pred = classify.finite_ps_structure(q, ell, e1, 0, rank)
        except UnsupportedCase as exc:
            cases.append(_case(name, "unsupported-expected", str(exc)))
            continue
        rep = cache.chop(q, ell, e1, rank, seed)
        want = sorted((lab.dim_mod, m) for lab, m in pred.factors)
        got = sorted((d, m) for _, d, m in rep.factors)
        detail = {"predicted": want, "chopped": got}
        ok = want == got
        layers = _expected_layers(pred)
        if ok and layers is not None:
            soc = meataxe.socle_series(cache.module(q, ell, e1, rank, seed),
                                       seed)
            got_layers = [sorted(rep.factor_modules[f].dim for f, m in layer
                                 for _ in range(m))
                          for layer in soc.layers]
            detail["predicted_layers"] = layers
            detail["socle_layers"] = got_layers
            ok = got_layers == layers
        cases.append(_case(name, "pass" if ok else "fail", detail))

    # quadratic Hecke parameters
    for q, ell, e1, rank, want in ((3, 101, 0, 3, 27), (3, 101, 0, 2, 3),
                                   (5, 11, 12, 3, 5)):
        mod = cache.module(q, ell, e1, rank, seed)
        alg = meataxe.endomorphism_algebra(mod)
        d = meataxe.quadratic_parameter(alg, mod)
        ok = alg.dimension == 2 and d == want
        cases.append(_case(f"quadratic-q{q}-l{ell}-e1_{e1}-rank{rank}",
                           "pass" if ok else "fail",
                           {"end_dimension": alg.dimension, "d": d,
                            "expected": want}))

    # Hecke character counts against the collapse rule
    bad = []
    for q in (3, 5, 7, 9):
        p = gf.prime_power(q)[0]
        for a in (1, 3):
            for ell in [l for l in range(2, 101) if gf.is_prime(l) and l != p]:
                n = len(hecke.characters(hecke.presentation(q, a, ell)))
                if q % ell == ell - 1 or ell == 2:
                    want = 1
                elif (q ** a) % ell == ell - 1:
                    want = 2
                else:
                    want = 4
                if n != want:
                    bad.append([q, a, ell, n, want])
    cases.append(_case("hecke-character-counts",
                       "pass" if not bad else "fail",
                       {"mismatches": bad}))

    # level-zero bridge grid
    for q in (3, 5):
        for ell in (2, 5, 7):
            name = f"bridge-q{q}-l{ell}"
            if ell == gf.prime_power(q)[0]:
                cases.append(_case(name, "unsupported-expected",
                                   "ell equals the residual characteristic"))
                continue
            desc = classify.PadicCharDescriptor("zero", "delta_minus_half",
                                                q, ell)
            try:
                classify.padic_ps_structure(desc)
            except UnsupportedCase as exc:
                cases.append(_case(name, "unsupported-expected", str(exc)))
                continue
            rx = cache.chop(q, ell, 0, 3, seed)
            ry = cache.chop(q, ell, 0, 2, seed)
            ok = classify.bridge_check(desc, rx, ry)
            cases.append(_case(name, "pass" if ok else "fail",
                               {"x": [[f, d, m] for f, d, m in rx.factors],
                                "y": [[f, d, m] for f, d, m in ry.factors]}))
    # the supported ramified clause at (5, 3)
    desc = classify.PadicCharDescriptor("zero", "unitary_pullback_nontrivial",
                                        5, 3)
    rx = cache.chop(5, 3, 12, 3, seed)
    ry = cache.chop(5, 3, 12, 2, seed)
    ok = classify.bridge_check(desc, rx, ry)
    cases.append(_case("bridge-q5-l3-ramified", "pass" if ok else "fail",
                       {"x": [[f, d, m] for f, d, m in rx.factors],
                        "y": [[f, d, m] for f, d, m in ry.factors]}))
    desc = classify.PadicCharDescriptor("zero", "delta_minus_half", 5, 3)
    try:
        classify.padic_ps_structure(desc)
        cases.append(_case("bridge-q5-l3-trivial", "fail",
                           "expected UnsupportedCase"))
    except UnsupportedCase as exc:
        cases.append(_case("bridge-q5-l3-trivial", "unsupported-expected",
                           str(exc)))

    cases.sort(key=lambda c: c["name"])
    ok = all(c["status"] != "fail" for c in cases)
    return {"suite": "desk", "seed": seed, "ok": ok, "cases": cases}


def cmd_verify(args):
    if args.suite != "desk":
        print(f"unknown suite {args.suite!r}", file=sys.stderr)
        return 2
    result = verify_desk(args.seed)
    if args.json:
        print(json.dumps(result, sort_keys=True, separators=(",", ":")))
    else:
        for c in result["cases"]:
            print(f"{c['status']:>22}  {c['name']}")
        print(f"suite desk, seed {result['seed']}: "
              f"{'OK' if result['ok'] else 'FAILED'}")
        if not result["ok"]:
            for c in result["cases"]:
                if c["status"] == "fail":
                    print(f"MISMATCH {c['name']}: "
                          f"{json.dumps(c['detail'], sort_keys=True)}")
    return 0 if result["ok"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="u21", description="finite unitary group module calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="compact canonical JSON output")

    p = sub.add_parser("group", help="group order report")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rank", type=int, default=3)
    p.add_argument("--enumerate", action="store_true")
    common(p)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("induce", help="write an induced module as FMOD")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--e1", type=int, default=0)
    p.add_argument("--e2", type=int, default=0)
    p.add_argument("--rank", type=int, default=3)
    p.add_argument("-o", "--output", required=True)
    common(p)
    p.set_defaults(func=cmd_induce)

    for name, fn in (("chop", cmd_chop), ("socle", cmd_socle)):
        p = sub.add_parser(name)
        p.add_argument("file")
        p.add_argument("--seed", type=int, default=42)
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("end", help="endomorphism algebra of an FMOD module")
    p.add_argument("file")
    p.add_argument("--quadratic", action="store_true")
    common(p)
    p.set_defaults(func=cmd_end)

    p = sub.add_parser("hecke", help="character table of the presentation")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--a", type=int, default=3)
    p.add_argument("--ell", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("classify", help="structure reports")
    which = p.add_subparsers(dest="which", required=True)
    pf = which.add_parser("finite")
    pf.add_argument("--q", type=int, required=True)
    pf.add_argument("--ell", type=int, required=True)
    pf.add_argument("--e1", type=int, default=0)
    pf.add_argument("--e2", type=int, default=0)
    pf.add_argument("--rank", type=int, default=3)
    common(pf)
    pf.set_defaults(func=cmd_classify)
    pp = which.add_parser("padic")
    pp.add_argument("--q", type=int, required=True)
    pp.add_argument("--ell", type=int, required=True)
    pp.add_argument("--level", choices=["zero", "positive"], default="zero")
    pp.add_argument("--chi1-class", dest="chi1_class", required=True,
                    choices=list(classify.UNRAMIFIED_CLASSES)
                    + ["unitary_pullback_nontrivial", "regular_other"])
    pp.add_argument("--chi-order", dest="chi_order", type=int, default=2)
    common(pp)
    pp.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--suite", default="desk")
    p.add_argument("--seed", type=int, default=42)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedCase as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 3
    except U21Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
