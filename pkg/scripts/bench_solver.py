#!/usr/bin/env python3
"""Timing table: polynomial solver vs oracle across instance sizes.

The oracle's territory search explodes combinatorially while the solver
stays polynomial; this prints both runtimes per size (oracle skipped
above its vertex cap).

Usage: python scripts/bench_solver.py [--sizes 10 20 40 80 160]
"""

import argparse
import sys
import time

sys.path.insert(0, "src")

from atflood.generators import GenSpec, connected_instance
from atflood.oracle import OracleBudgetError, oracle_min_moves
from atflood.solver import solve


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40, 80, 160])
    parser.add_argument("--colors", type=int, default=5)
    parser.add_argument("--reps", type=int, default=3)
    args = parser.parse_args()

    print(f"{'family':<12} {'n':>5} {'solver ms':>10} {'oracle ms':>10} {'optimum':>8}")
    for family in ("interval", "permutation"):
        for n in args.sizes:
            solver_ms = oracle_ms = 0.0
            opt = None
            oracle_ok = True
            for rep in range(args.reps):
                spec = GenSpec(family=family, n=n, colors=args.colors, seed=rep * 1009 + n)
                g, src = connected_instance(spec, 0)
                t0 = time.perf_counter()
                res = solve(g, src)
                solver_ms += (time.perf_counter() - t0) * 1000
                opt = res.optimum
                if oracle_ok:
                    try:
                        t0 = time.perf_counter()
                        oracle_min_moves(g, src)
                        oracle_ms += (time.perf_counter() - t0) * 1000
                    except OracleBudgetError:
                        oracle_ok = False
            oracle_cell = f"{oracle_ms / args.reps:>10.2f}" if oracle_ok else f"{'> cap':>10}"
            print(
                f"{family:<12} {n:>5} {solver_ms / args.reps:>10.2f} "
                f"{oracle_cell} {opt:>8}"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
