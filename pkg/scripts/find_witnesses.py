#!/usr/bin/env python3
"""Height-bounded searches for rare-group septic witnesses.

Two modes:
  rare --height H    exhaustive sweep at exact height H with a cycle-type
                     screen for D7/C7-compatible censuses, then exact
                     classification of the survivors
  square-disc        trinomial/quadrinomial scan for square discriminants
                     (A7 / PSL(3,2) candidates)

The curated witnesses frozen in galois7.families came out of these sweeps.
"""

import argparse
import sys
import time
from itertools import product
from math import gcd

from galois7.classify import classify_35
from galois7.factorz import is_irreducible_deg7, modp_degree_pattern
from galois7.intpoly import IntPoly, discriminant7, is_perfect_square

ALLOWED = {(1, 1, 1, 1, 1, 1, 1), (7,), (1, 2, 2, 2)}
SCREEN_PRIMES = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43]


def census_screen(coeffs):
    seen7 = False
    good = 0
    for p in SCREEN_PRIMES:
        pat = modp_degree_pattern(coeffs, p)
        if pat is None:
            continue
        if pat not in ALLOWED:
            return False
        seen7 = seen7 or pat == (7,)
        good += 1
        if good >= 8:
            break
    return seen7 and good >= 5


def sweep_rare(h):
    t0 = time.time()
    survivors = []
    scanned = 0
    for a7 in range(1, h + 1):
        for rest in product(range(-h, h + 1), repeat=6):
            for a0 in range(-h, h + 1):
                if a0 == 0:
                    continue
                tup = (a7,) + rest + (a0,)
                if max(abs(c) for c in tup) != h:
                    continue
                g = 0
                for c in tup:
                    g = gcd(g, abs(c))
                    if g == 1:
                        break
                if g != 1:
                    continue
                scanned += 1
                coeffs = tuple(reversed(tup))
                if sum(coeffs) == 0:
                    continue
                if sum(c if i % 2 == 0 else -c for i, c in enumerate(coeffs)) == 0:
                    continue
                if census_screen(coeffs):
                    survivors.append(tup)
    print(f"height {h}: scanned {scanned}, {len(survivors)} survivors "
          f"({time.time() - t0:.0f}s)", file=sys.stderr)
    for tup in survivors:
        f = IntPoly.from_descending(tup)
        if not is_irreducible_deg7(f):
            continue
        label = classify_35(f).label
        print(f"{','.join(map(str, tup))} -> {label.value}")


def sweep_square_disc(bound):
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if b == 0:
                continue
            f = IntPoly([b, a, 0, 0, 0, 0, 0, 1])
            d = discriminant7(f)
            if d and is_perfect_square(d) and is_irreducible_deg7(f):
                label = classify_35(f).label
                print(f"x^7 + {a}x + {b} -> {label.value}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    sub = ap.add_subparsers(dest="mode", required=True)
    rare = sub.add_parser("rare")
    rare.add_argument("--height", type=int, required=True)
    sq = sub.add_parser("square-disc")
    sq.add_argument("--bound", type=int, default=60)
    args = ap.parse_args()
    if args.mode == "rare":
        sweep_rare(args.height)
    else:
        sweep_square_disc(args.bound)


if __name__ == "__main__":
    main()
