#!/usr/bin/env python3
"""Adjudicate the pair-program discount variants against the oracle.

The published recurrence admits several readings of its 0/1 discount and
slot pairing.  This script runs every variant over a seeded corpus of
interval, permutation and rejection instances (all sources each) and
reports exact-agreement rates; the winner ships as the solver default.

Usage: python scripts/calibrate.py [--per-family 120] [--variants derived printed transposed]
"""

import argparse
import sys
from collections import Counter

sys.path.insert(0, "src")

from atflood.atfree import is_atfree
from atflood.contraction import contract_monochromatic
from atflood.generators import GenSpec, InfeasibleSpecError, connected_instance
from atflood.oracle import oracle_min_moves
from atflood.ordering import ChainOrderError
from atflood.solver import NotAtFreeError, SolverInternalError, variant_value


def corpus(per_family: int):
    for family in ("interval", "permutation", "rejection"):
        produced = 0
        seed = 0
        while produced < per_family:
            seed += 1
            n = 8 if family == "rejection" else 9 + seed % 4
            k = 2 + seed % 4
            spec = GenSpec(
                family=family, n=n, colors=k, seed=seed * 2654435761 % (1 << 32),
                proper=seed % 2 == 0,
            )
            try:
                g, src = connected_instance(spec, 0)
            except InfeasibleSpecError:
                continue
            h, _, _ = contract_monochromatic(g, src)
            if h.n < 2 or h.n > 13 or not is_atfree(h):
                continue
            produced += 1
            yield family, seed, g


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--per-family", type=int, default=120)
    parser.add_argument(
        "--variants", nargs="+", default=["derived", "printed", "transposed"]
    )
    args = parser.parse_args()

    agree: Counter = Counter()
    wrong: Counter = Counter()
    errors: Counter = Counter()
    cases = 0
    mismatches: dict[str, list] = {v: [] for v in args.variants}

    for family, seed, g in corpus(args.per_family):
        for source in range(g.n):
            want = oracle_min_moves(g, source).optimum
            cases += 1
            for variant in args.variants:
                try:
                    got = variant_value(g, source, variant)
                except (ChainOrderError, SolverInternalError, NotAtFreeError) as exc:
                    errors[variant] += 1
                    if len(mismatches[variant]) < 5:
                        mismatches[variant].append(
                            (family, seed, source, "error", type(exc).__name__)
                        )
                    continue
                if got == want:
                    agree[variant] += 1
                else:
                    wrong[variant] += 1
                    if len(mismatches[variant]) < 5:
                        mismatches[variant].append((family, seed, source, want, got))

    print(f"corpus: {cases} (instance, source) cases")
    print(f"{'variant':<12} {'exact':>8} {'wrong':>8} {'errors':>8} {'rate':>8}")
    for variant in args.variants:
        total = agree[variant] + wrong[variant] + errors[variant]
        rate = agree[variant] / total if total else 0.0
        print(
            f"{variant:<12} {agree[variant]:>8} {wrong[variant]:>8} "
            f"{errors[variant]:>8} {rate:>8.4f}"
        )
    for variant in args.variants:
        if mismatches[variant]:
            print(f"\nfirst deviations for {variant}:")
            for row in mismatches[variant]:
                print("  ", row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
