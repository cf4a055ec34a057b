"""Stress the four matrix constructions against each other on random pairs.

Any disagreement is printed with the offending pair and the run exits 1, so
this doubles as a quick regression sweep after touching any construction.
"""

import argparse
import sys
from random import Random

from gstirling.corpus import random_pair
from gstirling.network import build_initial, path_matrix
from gstirling.stirling import (
    stirling_explicit,
    stirling_recurrence,
    stirling_symmetric,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=500, help="number of random pairs")
    ap.add_argument("--max-n", type=int, default=8, help="largest sequence length")
    ap.add_argument("--naive-cap", type=int, default=6,
                    help="also run the subset-enumeration route up to this n")
    args = ap.parse_args()

    rng = Random(args.seed)
    bad = 0
    for trial in range(args.count):
        sp = random_pair(rng, rng.randint(0, args.max_n))
        reference = stirling_recurrence(sp)
        routes = {
            "explicit": stirling_explicit(sp),
            "symmetric": stirling_symmetric(sp),
            "network": path_matrix(build_initial(sp)),
        }
        if sp.n <= args.naive_cap:
            routes["naive"] = stirling_explicit(sp, naive=True)
        for name, matrix in routes.items():
            if matrix != reference:
                bad += 1
                print(f"trial {trial}: {name} disagrees with recurrence")
                print(f"  a = {sp.a}")
                print(f"  e = {sp.e}")
    print(f"{args.count} pairs checked, {bad} disagreements")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
