"""Exhaustively audit the growth-condition criterion on an integer grid.

Every pair with non-decreasing a drawn from the a-range and e drawn freely
from the e-range is classified twice: by the restricted-growth check and by
scanning every minor of S^{a,e}.  The two verdicts must coincide, and each
rejected pair must carry a strictly negative witness entry.
"""

import argparse
import sys
import time
from itertools import combinations_with_replacement, product

from gstirling.core import SequencePair
from gstirling.stirling import rgs_check, stirling_recurrence
from gstirling.tnn import decide_tnn, is_tnn_exhaustive


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--length", type=int, default=4)
    ap.add_argument("--a-min", type=int, default=0)
    ap.add_argument("--a-max", type=int, default=2)
    ap.add_argument("--e-min", type=int, default=-1)
    ap.add_argument("--e-max", type=int, default=3)
    args = ap.parse_args()

    a_values = range(args.a_min, args.a_max + 1)
    e_values = range(args.e_min, args.e_max + 1)
    started = time.perf_counter()
    accepted = rejected = mismatches = 0
    for a in combinations_with_replacement(a_values, args.length):
        for e in product(e_values, repeat=args.length):
            sp = SequencePair(a, e)
            is_rgs = rgs_check(sp).is_rgs
            minor = is_tnn_exhaustive(stirling_recurrence(sp))
            if (minor is None) != is_rgs:
                mismatches += 1
                print(f"MISMATCH a={a} e={e}: rgs={is_rgs}, minor={minor}")
                continue
            if is_rgs:
                accepted += 1
            else:
                rejected += 1
                w = decide_tnn(sp).witness
                if w is None or w.value >= 0:
                    mismatches += 1
                    print(f"BAD WITNESS a={a} e={e}: {w}")
    elapsed = time.perf_counter() - started
    total = accepted + rejected + mismatches
    print(
        f"{total} pairs in {elapsed:.1f}s: {accepted} growth-restricted (TNN), "
        f"{rejected} rejected with negative witnesses, {mismatches} mismatches"
    )
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
