"""Sampled share of loopy graphs whose walk determinant is square-free.

Exploratory only; the numbers depend on the seed and sample size.
"""

import argparse

from loopspec.oracle import satisfaction_frequency


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        f = satisfaction_frequency(n, args.samples, args.seed)
        print(f"n={n:<3} {float(f):.4f}  ({f.numerator}/{f.denominator})")


if __name__ == "__main__":
    main()
