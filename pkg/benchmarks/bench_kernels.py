#!/usr/bin/env python3
"""Benchmark the compiled Groebner kernel against the pure-Python engine.

Builds the conic-relation ideals at random general points over F_32003 and
runs both backends on the bundled weight orders, verifying that the reduced
bases agree before reporting timings.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--seed S]
"""

import argparse
import random
import time

from coxlab import kernels
from coxlab.geometry import build_qr, check_general_position, eckart_witnesses, plane_point
from coxlab.groebner import buchberger
from coxlab.ring import PrimeField
from coxlab.tables import load_tables


def sample(r, rng, field):
    while True:
        pts = [plane_point(rng.randint(-9, 9), rng.randint(-9, 9), 1, field) for _ in range(r)]
        if not check_general_position(pts, field).ok:
            continue
        if r >= 6 and eckart_witnesses(pts, field):
            continue
        return pts


def run_case(label, gens, order, repeat):
    pure_times, comp_times = [], []
    pure = comp = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        pure = buchberger(gens, order, use_kernel=False)
        pure_times.append(time.perf_counter() - t0)
        if kernels.HAVE_COMPILED:
            t0 = time.perf_counter()
            comp = buchberger(gens, order, use_kernel=True)
            comp_times.append(time.perf_counter() - t0)
    tp = min(pure_times)
    line = f"{label:28s} pure {tp*1000:9.1f} ms"
    if kernels.HAVE_COMPILED:
        tc = min(comp_times)
        agree = [p.terms for p in pure.basis] == [p.terms for p in comp.basis]
        line += f"   compiled {tc*1000:9.1f} ms   speedup {tp/tc:5.1f}x   identical: {agree}"
        if not agree:
            raise SystemExit(f"{label}: compiled and pure bases differ")
    else:
        line += "   (compiled kernel not built)"
    print(line)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    print(f"active backend: {kernels.IMPLEMENTATION}")
    tables = load_tables()
    field = PrimeField(32003)
    rng = random.Random(args.seed)

    pts4 = [plane_point(1, 0, 0, field), plane_point(0, 1, 0, field),
            plane_point(0, 0, 1, field), plane_point(1, 1, 1, field)]
    run_case("Q4, standard points", build_qr(pts4, field), tables.m4_order, args.repeat)

    pts5 = sample(5, rng, field)
    run_case("Q5, random points", build_qr(pts5, field), tables.m5_order, args.repeat)

    q5 = build_qr(pts5, field)
    from coxlab.picard import weyl_group

    g = weyl_group(5).elements[321]
    run_case("Q5, twisted order", q5, tables.m5_order.twist(g.inverse()), args.repeat)

    pts6 = sample(6, rng, field)
    run_case("Q6, random points", build_qr(pts6, field), tables.m6_order, max(1, args.repeat // 3))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
