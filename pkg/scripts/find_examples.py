"""Search a full sweep for interesting instances.

Prints non-isomorphic cospectral pairs with invertible walk matrices (with
their level), and classes certified by the combined rule only.
"""

import argparse
import itertools

from loopspec.certify import construct_q
from loopspec.factor import is_square_free
from loopspec.graphs import LoopyGraph
from loopspec.linalg import ones_vector
from loopspec.oracle import build_index, combined_condition, split_bucket
from loopspec.spectral import discriminant


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6)
    args = ap.parse_args()
    n = args.n
    z = ones_vector(n)
    idx = build_index(n, method="orbit", with_dets=True)

    print("# non-isomorphic cospectral pairs, det W != 0")
    for key in sorted(idx.buckets):
        reps = [c[0] for c in split_bucket(n, idx.buckets[key]) if idx.dets[c[0]]]
        for a, b in itertools.combinations(reps, 2):
            ga, gb = LoopyGraph(n, a), LoopyGraph(n, b)
            q = construct_q((ga.adj, z), (gb.adj, z))
            print(ga.compact(), gb.compact(), "det", idx.dets[a], "level", q.level)

    print("# certified by the combined rule but not by square-free det W")
    for key in sorted(idx.buckets):
        disc = discriminant(key[0])
        for cls in split_bucket(n, idx.buckets[key]):
            d = idx.dets[cls[0]]
            if combined_condition(d, disc) and not is_square_free(d):
                print(LoopyGraph(n, cls[0]).compact(), "det", d, "disc", disc)


if __name__ == "__main__":
    main()
