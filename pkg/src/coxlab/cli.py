"""coxlab command line: classification, ideals, Groebner runs, verification.

Subcommands: classify, weyl, build-qr, gb, hilbert, symmetry, search,
verify, graph, emit-tables, bench.  Exit status is zero exactly when every
requested check passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction


def _field(spec):
    from .ring import field_from_spec

    return field_from_spec(spec)


def _load_points(path, field, r=None):
    from .geometry import plane_point

    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    pts = [plane_point(Fraction(str(x)), Fraction(str(y)), Fraction(str(z)), field)
           for x, y, z in data]
    if r is not None and len(pts) < r:
        raise SystemExit(f"points file has {len(pts)} points, need {r}")
    return pts[:r] if r else pts


def _emit(payload, as_json):
    if as_json:
        print(json.dumps(payload, indent=2, default=str))


def cmd_classify(args):
    from .picard import coarse_degree, enumerate_conics, enumerate_exceptional, format_class

    curves = enumerate_exceptional(args.r)
    conics = enumerate_conics(args.r)
    if args.json:
        payload = {
            "curves": [{"label": nm, "coeffs": list(c.coeffs)} for nm, c in zip(curves.names, curves.curves)],
            "conics": [{"label": format_class(c), "coeffs": list(c.coeffs)} for c in conics],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"exceptional curves of X_{args.r} ({len(curves)}):")
    for nm, c in zip(curves.names, curves.curves):
        print(f"  {nm:5s} {format_class(c)}")
    print(f"conic classes ({len(conics)}):")
    for c in conics:
        print(f"  {format_class(c)}")
    return 0


def cmd_weyl(args):
    from .picard import weyl_group

    group = weyl_group(args.r)
    if args.order or not args.json:
        print(f"|W_{args.r}| = {len(group)}")
    if args.json:
        print(json.dumps({"r": args.r, "order": len(group)}))
    return 0


def cmd_build_qr(args):
    from .geometry import build_qr, realize, relations_in_degree
    from .picard import enumerate_conics, format_class
    from .ring import format_polynomial

    field = _field(args.field)
    pts = _load_points(args.points, field, args.r)
    real_gens = build_qr(pts, field, args.r)
    manifest = []
    from .geometry import realize as _realize

    real = _realize(pts, field, args.r)
    for conic in enumerate_conics(args.r):
        rels = relations_in_degree(real, conic)
        manifest.append({
            "conic_class": list(conic.coeffs),
            "relations": [format_polynomial(p) for p in rels],
        })
    if args.json:
        print(json.dumps({"r": args.r, "field": field.name, "generators": manifest}, indent=2))
    else:
        for entry in manifest:
            print(f"# conic {entry['conic_class']}")
            for rel in entry["relations"]:
                print(rel)
    return 0


def _parse_order_spec(ring, spec):
    from .ring import MonomialOrder, order_from_names
    from .tables import load_tables

    tables = load_tables()
    if spec in ("m4", "m5", "m6"):
        return {"m4": tables.m4_order, "m5": tables.m5_order, "m6": tables.m6_order}[spec]
    weights = None
    seq = None
    for part in spec.split(";"):
        part = part.strip()
        if part.startswith("revlex:"):
            seq = part[len("revlex:"):].split(">")
        elif part.startswith("weights:"):
            weights = json.loads(part[len("weights:"):])
        elif part.startswith("tiebreak:revlex:"):
            seq = part[len("tiebreak:revlex:"):].split(">")
        elif part:
            raise SystemExit(f"bad order spec component {part!r}")
    seq_names = [s.strip() for s in seq] if seq else list(ring.names)
    order = order_from_names(ring, seq_names)
    if weights is not None:
        if len(weights) != ring.nvars:
            raise SystemExit("weight vector length does not match the ring")
        order = order.with_weights(weights)
    return order


def cmd_gb(args):
    from .groebner import buchberger
    from .ring import cox_ring, format_polynomial, parse_polynomial

    field = _field(args.field)
    with open(args.ideal, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    ring = cox_ring(int(data["r"]))
    gens = [parse_polynomial(ring, field, s) for s in data["generators"]]
    order = _parse_order_spec(ring, args.order)
    gb = buchberger(gens, order)
    payload = {
        "r": ring.r,
        "field": field.name,
        "basis": [format_polynomial(p, order) for p in gb.basis],
        "initial": sorted(gb.initial.names()),
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"reduced Groebner basis ({len(gb.basis)} elements):")
        for p in payload["basis"]:
            print(" ", p)
        print("initial ideal:", ", ".join(payload["initial"]))
    return 0


def cmd_hilbert(args):
    from .groebner import MonomialIdeal, k_polynomial, hilbert_at
    from .picard import DivisorClass
    from .ring import QQ, cox_ring, parse_polynomial

    with open(args.monomial_ideal, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    ring = cox_ring(int(data["r"]))
    gens = []
    for s in data["generators"]:
        poly = parse_polynomial(ring, QQ, s)
        gens.append(poly.monomials()[0])
    ideal = MonomialIdeal.from_generators(ring, gens)
    if args.kpoly:
        kp = k_polynomial(ideal)
        terms = sorted(kp.terms.items())
        payload = {"r": ring.r, "kpolynomial": [{"degree": list(d), "coefficient": c} for d, c in terms]}
        if args.json:
            print(json.dumps(payload, indent=2))
        else:
            print(f"K-polynomial with {len(terms)} terms")
            for d, c in terms:
                print(f"  {c:+d} t^{list(d)}")
        return 0
    if not args.degree:
        raise SystemExit("need --degree or --kpoly")
    coeffs = tuple(int(x) for x in args.degree.split(","))
    value = hilbert_at(ideal, DivisorClass(ring.r, coeffs))
    if args.json:
        print(json.dumps({"degree": list(coeffs), "dimension": value}))
    else:
        print(value)
    return 0


def cmd_symmetry(args):
    import random

    from .geometry import build_qr
    from .groebner import MonomialIdeal
    from .picard import weyl_group, weyl_generators
    from .ring import QQ, cox_ring, parse_polynomial
    from .symmetry import (
        groebner_cone_spotcheck,
        hs_invariant,
        monomial_action_witness,
        twisted_initial_check,
    )
    from .tables import load_tables
    from .verification import sample_points

    tables = load_tables()
    field = _field(args.field)
    r = args.r
    ring = cox_ring(r)
    rng = random.Random(args.seed)
    pts = (_load_points(args.points, field, r) if args.points
           else sample_points(r, args.seed, field=field))
    order = {4: tables.m4_order, 5: tables.m5_order, 6: tables.m6_order}[r]
    group = weyl_group(r)
    ok = True
    results = {}
    if args.check == "hs":
        from .tables import m4_ideal, m5_ideal, m6_ideal

        ideal = {4: m4_ideal, 5: m5_ideal, 6: m6_ideal}[r]()
        ok = hs_invariant(ideal, weyl_generators(r))
        results["hs_invariant"] = ok
    elif args.check == "monomial":
        gens = build_qr(pts, field, r)
        g = rng.choice(group.elements)
        f = rng.choice(gens)
        report = monomial_action_witness(gens, g, f)
        ok = report.is_witness
        results["witness"] = str(report.witness) if report.witness else None
        results["solution_dimension"] = report.solution_dimension
    elif args.check == "twist":
        gens = build_qr(pts, field, r)
        g = rng.choice(group.elements)
        ok = twisted_initial_check(gens, order, g)
        results["twisted_initial_check"] = ok
    elif args.check == "cone":
        gens = build_qr(pts, field, r)
        w = tuple(rng.randint(1, 60) for _ in range(ring.nvars))
        g = rng.choice(weyl_generators(r))
        res = groebner_cone_spotcheck(gens, w, g, order)
        results["cone_spotcheck"] = res
        ok = res is True or res == "nongeneric"
    payload = {"check": args.check, "r": r, "seed": args.seed, "ok": bool(ok), **results}
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return 0 if ok else 1


def cmd_search(args):
    from .curvegraph import search_quadratic_gb
    from .ring import cox_ring
    from .verification import sample_points

    field = _field(args.field)
    pts = sample_points(5, args.seed, field=field) if args.confirm else None
    result = search_quadratic_gb(5, workers=args.workers, points=pts, field=field,
                                 confirm_with_gb=args.confirm)
    ring = cox_ring(5)
    payload = {
        "survivors": result.survivor_count,
        "hilbert_classes": len(result.hilbert_classes),
        "realizable_classes": len(result.realizable),
        "classes": [
            {
                "edges": sorted(sel.edge_ideal().names()),
                "weights": list(w),
                "omits_variable": om,
            }
            for sel, w, om in zip(result.realizable, result.weights, result.omits_variable)
        ],
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"pruned survivors: {payload['survivors']}")
        print(f"orbit classes passing the Hilbert filter: {payload['hilbert_classes']}")
        print(f"realizable quadratic initial ideals (orbit classes): {payload['realizable_classes']}")
    return 0


def cmd_verify(args):
    from .verification import VERIFIER_IDS, verify

    field = _field(args.field) if args.field else None
    points = None
    if args.points:
        points = _load_points(args.points, field or _field("q"))
    targets = list(VERIFIER_IDS) if args.target == "all" else [args.target]
    all_ok = True
    for target in targets:
        rep = verify(target, points=points, seed=args.seed, field=field, slow=args.slow)
        if args.json:
            print(json.dumps(rep.to_json(), indent=2))
        else:
            print(rep.summary())
        all_ok &= rep.passed
    return 0 if all_ok else 1


def cmd_graph(args):
    from .curvegraph import build_graph

    graph = build_graph(args.r)
    if args.dot:
        print(graph.to_dot())
    else:
        names = graph.curves.names
        for (i, j), color in zip(graph.edges, graph.colors):
            print(f"{names[i]} -- {names[j]}  color {list(color)}")
    return 0


def cmd_emit_tables(args):
    from .tables import load_tables

    print(json.dumps(load_tables().emit(), indent=2))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="coxlab", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="list exceptional curves and conic classes")
    p.add_argument("--r", type=int, required=True, choices=(4, 5, 6))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("weyl", help="Weyl group data")
    p.add_argument("--r", type=int, required=True, choices=(4, 5, 6))
    p.add_argument("--order", action="store_true", help="print the group order")
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("build-qr", help="conic relations from a points file")
    p.add_argument("--points", required=True)
    p.add_argument("--r", type=int, required=True, choices=(4, 5, 6))
    p.add_argument("--field", default="q")
    p.set_defaults(func=cmd_build_qr)

    p = sub.add_parser("gb", help="reduced Groebner basis of an ideal file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--order", required=True,
                   help="m4|m5|m6, 'revlex:e1>e2>...', or 'weights:[...];tiebreak:revlex:...'")
    p.add_argument("--field", default="q")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("hilbert", help="graded dimensions / K-polynomial of a monomial ideal")
    p.add_argument("--monomial-ideal", required=True)
    p.add_argument("--degree", help='comma separated "m,a1,..,ar"')
    p.add_argument("--kpoly", action="store_true")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("symmetry", help="Weyl-action spot checks")
    p.add_argument("--check", required=True, choices=("hs", "monomial", "twist", "cone"))
    p.add_argument("--r", type=int, default=4, choices=(4, 5, 6))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", default="q")
    p.add_argument("--points")
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("search", help="classify quadratic initial ideals (r=5)")
    p.add_argument("quadratic-gb", nargs="?", default="quadratic-gb")
    p.add_argument("--r", type=int, default=5, choices=(5,))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", default="q")
    p.add_argument("--confirm", action="store_true",
                   help="confirm each class with a Groebner run at sample points")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a named verifier (or 'all')")
    p.add_argument("target")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field")
    p.add_argument("--points")
    p.add_argument("--slow", action="store_true", help="include the slow r=6 Groebner tier")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="the curve graph L_r")
    p.add_argument("--r", type=int, required=True, choices=(4, 5, 6))
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("emit-tables", help="dump the embedded tables for audit")
    p.set_defaults(func=cmd_emit_tables)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--emit-tables" in argv:
        argv = [a for a in argv if a != "--emit-tables"] or ["emit-tables"]
        if argv != ["emit-tables"]:
            argv = ["emit-tables"]
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
