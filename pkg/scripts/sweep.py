"""Exhaustive verification table for n = 1..N.

    python scripts/sweep.py --max-n 5
    python scripts/sweep.py --max-n 6 --combined
"""

import argparse
import time

from loopspec.oracle import verify_theorem


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--combined", action="store_true")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    rule = "combined" if args.combined else "walk_det"

    print(f"rule={rule}")
    print(f"{'n':>2} {'graphs':>9} {'certified':>9} {'classes':>7} {'buckets':>7} "
          f"{'mixed':>5} {'viol':>4} {'secs':>7}")
    for n in range(1, args.max_n + 1):
        t = time.perf_counter()
        rep = verify_theorem(n, workers=args.workers, rule=rule)
        dt = time.perf_counter() - t
        print(f"{n:>2} {rep.total_graphs:>9} {rep.certified_count:>9} {rep.iso_classes:>7} "
              f"{rep.buckets:>7} {rep.cospectral_classes_with_nonisomorphic_members:>5} "
              f"{len(rep.violations):>4} {dt:>7.2f}")
        for v in rep.violations:
            print("   violation:", v)


if __name__ == "__main__":
    main()
