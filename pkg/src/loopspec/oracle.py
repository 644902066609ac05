"""Exhaustive search for Phi-cospectral mates among small loopy graphs.

Graphs are bucketed by their exact generalized characteristic polynomial
with the all-ones vector. Two graphs share a bucket iff they are Phi-cospectral.

Two sweep methods are available:

``direct``
    computes Phi and det W for every labelled graph.
``orbit``
    computes them once per isomorphism class and assigns the result to every
    relabelling in the class. Much faster at n = 6, and relies on both
    quantities being invariant under relabelling (det W up to sign).
"""

from __future__ import annotations

import math
import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .factor import is_square_free
from .graphs import LoopyGraph, TooLargeError, is_isomorphic, num_bits, orbit
from .linalg import DimensionMismatch, bareiss_det, ones_vector
from .spectral import discriminant, generalized_charpoly, walk_matrix

MAX_SWEEP_N = 6

Key = tuple[tuple[int, ...], tuple[int, ...]]


def fingerprint(g: LoopyGraph) -> Key:
    return generalized_charpoly(g.adj, ones_vector(g.n)).key()


def walk_det(g: LoopyGraph) -> int:
    return bareiss_det(walk_matrix(g.adj, ones_vector(g.n)))


@dataclass
class FingerprintIndex:
    n: int
    buckets: dict[Key, list[int]]
    # walk-matrix determinant per encoding, filled when requested. The orbit
    # sweep stores |det|, since relabelling flips the sign with the permutation.
    dets: dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.buckets.values())

    def bucket_of(self, g: LoopyGraph) -> list[int]:
        return self.buckets.get(fingerprint(g), [])


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_SWEEP_N:
        raise TooLargeError(f"n={n} exceeds the sweep bound {MAX_SWEEP_N}")


def _direct_chunk(n: int, start: int, stop: int) -> list[tuple[int, Key, int]]:
    out = []
    z = ones_vector(n)
    for bits in range(start, stop):
        adj = LoopyGraph(n, bits).adj
        out.append((bits, generalized_charpoly(adj, z).key(), bareiss_det(walk_matrix(adj, z))))
    return out


def iso_classes(n: int) -> Iterable[tuple[int, list[int]]]:
    """(smallest encoding, sorted orbit) for every isomorphism class."""
    seen = bytearray(1 << num_bits(n))
    for bits in range(len(seen)):
        if seen[bits]:
            continue
        orb = sorted(orbit(n, bits))
        for e in orb:
            seen[e] = 1
        yield bits, orb


def build_index(n: int, method: str = "direct", workers: int = 1,
                with_dets: bool = False) -> FingerprintIndex:
    """Bucket all 2^(n(n+1)/2) labelled graphs by (c0, c1).

    Bucket lists are in increasing encoding order regardless of method or
    worker count.
    """
    _check_n(n)
    buckets: dict[Key, list[int]] = defaultdict(list)
    dets: dict[int, int] = {}
    total = 1 << num_bits(n)
    if method == "direct":
        if workers > 1:
            step = -(-total // (4 * workers))
            ranges = [(s, min(s + step, total)) for s in range(0, total, step)]
            with ProcessPoolExecutor(workers) as pool:
                parts = list(pool.map(_direct_chunk, [n] * len(ranges),
                                      [r[0] for r in ranges], [r[1] for r in ranges]))
        else:
            parts = [_direct_chunk(n, 0, total)]
        for part in parts:
            for bits, key, det in part:
                buckets[key].append(bits)
                if with_dets:
                    dets[bits] = det
    elif method == "orbit":
        for rep, orb in iso_classes(n):
            g = LoopyGraph(n, rep)
            buckets[fingerprint(g)].extend(orb)
            if with_dets:
                det = abs(walk_det(g))
                for e in orb:
                    dets[e] = det
        for v in buckets.values():
            v.sort()
    else:
        raise ValueError(f"unknown sweep method {method!r}")
    return FingerprintIndex(n, dict(buckets), dets)


def find_mates(g: LoopyGraph, idx: FingerprintIndex) -> list[LoopyGraph]:
    """Members of g's bucket that are not isomorphic to g."""
    if g.n != idx.n:
        raise DimensionMismatch(f"graph on {g.n} vertices, index for n={idx.n}")
    out = []
    for bits in idx.bucket_of(g):
        h = LoopyGraph(g.n, bits)
        if not is_isomorphic(g, h):
            out.append(h)
    return out


def split_bucket(n: int, members: list[int]) -> list[list[int]]:
    """Partition a bucket into isomorphism classes (orbit membership)."""
    remaining = set(members)
    classes = []
    for bits in members:
        if bits not in remaining:
            continue
        orb = orbit(n, bits)
        cls = sorted(remaining & orb)
        remaining -= orb
        classes.append(cls)
    return classes


@dataclass
class VerificationReport:
    n: int
    total_graphs: int
    certified_count: int
    cospectral_classes_with_nonisomorphic_members: int
    violations: list[dict]
    buckets: int = 0
    iso_classes: int = 0
    zero_det_count: int = 0
    method: str = "direct"

    @property
    def holds(self) -> bool:
        return not self.violations


def combined_condition(det: int, disc: int) -> bool:
    """det != 0, gcd(disc, det) square-free, and 4 does not divide det or disc is odd."""
    if det == 0:
        return False
    if det % 4 == 0 and disc % 2 == 0:
        return False
    return is_square_free(math.gcd(abs(disc), abs(det)))


def verify_theorem(n: int, method: str | None = None, workers: int = 1,
                   rule: str = "walk_det") -> VerificationReport:
    """Check that no certified graph has a non-isomorphic Phi-cospectral mate.

    ``rule`` is ``walk_det`` (square-free walk determinant) or ``combined``
    (walk determinant together with the discriminant). ``method`` defaults to
    ``direct`` for n <= 5 and ``orbit`` for n = 6.
    """
    _check_n(n)
    if rule not in ("walk_det", "combined"):
        raise ValueError(f"unknown rule {rule!r}")
    if method is None:
        method = "direct" if n <= 5 else "orbit"
    idx = build_index(n, method=method, workers=workers, with_dets=True)
    cache: dict[tuple[int, int], bool] = {}

    def certified(bits: int, disc: int) -> bool:
        d = idx.dets[bits]
        k = (d, disc)
        if k not in cache:
            cache[k] = is_square_free(d) if rule == "walk_det" else combined_condition(d, disc)
        return cache[k]

    certified_count = 0
    n_classes = 0
    mixed = 0
    violations = []
    for key in sorted(idx.buckets):
        members = idx.buckets[key]
        disc = discriminant(key[0]) if rule == "combined" else 0
        flags = [certified(b, disc) for b in members]
        certified_count += sum(flags)
        classes = split_bucket(n, members)
        n_classes += len(classes)
        if len(classes) < 2:
            continue
        mixed += 1
        for bits, flag in zip(members, flags):
            if flag:
                g = LoopyGraph(n, bits)
                violations.append({"graph": g.compact(), "det_walk": walk_det(g),
                                   "mates": [h.compact() for h in find_mates(g, idx)]})
    return VerificationReport(
        n=n,
        total_graphs=idx.total,
        certified_count=certified_count,
        cospectral_classes_with_nonisomorphic_members=mixed,
        violations=violations,
        buckets=len(idx.buckets),
        iso_classes=n_classes,
        zero_det_count=sum(1 for d in idx.dets.values() if d == 0),
        method=method,
    )


def satisfaction_frequency(n: int, samples: int, seed: int) -> Fraction:
    """Share of uniform random loopy graphs whose walk determinant is square-free."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    nb = num_bits(n)
    hits = 0
    for _ in range(samples):
        if is_square_free(walk_det(LoopyGraph(n, rng.getrandbits(nb)))):
            hits += 1
    return Fraction(hits, samples)


# -- flat-file persistence ---------------------------------------------------

def key_to_str(key: Key) -> str:
    c0, c1 = key
    return ",".join(map(str, c0)) + "|" + ",".join(map(str, c1))


def key_from_str(text: str) -> Key:
    a, b = text.split("|")
    parse = lambda s: tuple(int(v) for v in s.split(",")) if s else ()  # noqa: E731
    return parse(a), parse(b)


def save_index(idx: FingerprintIndex, path: str | Path) -> None:
    """One line per bucket: ``c0|c1<TAB>hex,hex,...``."""
    width = max(1, (num_bits(idx.n) + 3) // 4)
    with open(path, "w") as fh:
        fh.write(f"# loopspec fingerprint index n={idx.n}\n")
        for key in sorted(idx.buckets):
            encs = ",".join(f"{b:0{width}x}" for b in idx.buckets[key])
            fh.write(f"{key_to_str(key)}\t{encs}\n")


def load_index(path: str | Path) -> FingerprintIndex:
    with open(path) as fh:
        header = fh.readline().strip()
        if not header.startswith("# loopspec fingerprint index n="):
            raise ValueError(f"{path}: not a fingerprint index file")
        n = int(header.rsplit("=", 1)[1])
        buckets = {}
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            k, encs = line.split("\t")
            buckets[key_from_str(k)] = [int(e, 16) for e in encs.split(",")]
    return FingerprintIndex(n, buckets)
