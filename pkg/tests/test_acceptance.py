"""Acceptance criteria, one test per criterion.

Each test names the criterion it checks; the terminal summary prints one
PASS/FAIL line per test.
"""

import itertools
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from loopspec.certify import WALK_DET, certify_walk_det, construct_q
from loopspec.factor import factor, is_probable_prime
from loopspec.graphs import LoopyGraph, enumerate_all
from loopspec.linalg import bareiss_det, fp_poly, fp_poly_gcd, fp_rank, identity, ones_vector, transpose
from loopspec.oracle import build_index, verify_theorem
from loopspec.spectral import GeneralizedCharPoly, beta_decompose, generalized_charpoly, recompose, walk_matrix

from conftest import EXAMPLE6_ADJ, EXAMPLE6_WALK
from oracles import bivariate_phi, split_phi, trial_factor


def _rmul(a, b):
    return tuple(tuple(sum(Fraction(a[i][k]) * b[k][j] for k in range(len(b)))
                       for j in range(len(b[0]))) for i in range(len(a)))


def test_criterion_1_six_vertex_walk_matrix():
    start = time.perf_counter()
    g = LoopyGraph.from_adjacency(EXAMPLE6_ADJ)
    w = walk_matrix(g.adj, ones_vector(6))
    det = bareiss_det(w)
    cert = certify_walk_det(g.adj, ones_vector(6))
    elapsed = time.perf_counter() - start
    assert w == EXAMPLE6_WALK
    assert det == -3
    assert cert.verdict == WALK_DET
    assert elapsed < 1.0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_criterion_2_verify_theorem(n):
    rep = verify_theorem(n)
    assert rep.total_graphs == 1 << (n * (n + 1) // 2)
    assert rep.violations == []


@pytest.mark.long_running
def test_criterion_2_verify_theorem_n6():
    rep = verify_theorem(6)
    assert rep.total_graphs == 2_097_152
    assert rep.violations == []


def test_criterion_3_phi_matches_cofactor_oracle():
    count = 0
    for n in (1, 2, 3):
        z = ones_vector(n)
        for g in enumerate_all(n):
            c0, c1, rest = split_phi(bivariate_phi(g.adj, z), n)
            assert rest == {}
            assert generalized_charpoly(g.adj, z) == GeneralizedCharPoly(c0, c1)
            count += 1
    assert count == 2 + 8 + 64


def test_criterion_4a_level_divides_det():
    pairs = 0
    for n in (1, 2, 3, 4):
        idx = build_index(n, with_dets=True)
        for members in idx.buckets.values():
            for a, b in itertools.combinations(members, 2):
                if idx.dets[a] == 0 or idx.dets[b] == 0:
                    continue
                za = ones_vector(n)
                q = construct_q((LoopyGraph(n, a).adj, za), (LoopyGraph(n, b).adj, za))
                assert abs(idx.dets[a]) % q.level == 0
                pairs += 1
    assert pairs > 0


def test_criterion_4b_exact_prime_gives_corank_one():
    checked = {}
    for n in (1, 2, 3, 4, 5):
        for g in enumerate_all(n):
            w = walk_matrix(g.adj, ones_vector(n))
            d = bareiss_det(w)
            if d == 0:
                continue
            for p, e in factor(d).prime_powers:
                if e == 1:
                    assert fp_rank(w, p) == n - 1
                    checked[n] = checked.get(n, 0) + 1
    # |det W| is 0 or 1 for every graph on n <= 4 vertices, so the statement is
    # vacuous there; n = 5 is included to exercise it on real divisors
    assert set(checked) == {5}
    assert checked[5] > 0


def test_criterion_4c_beta_decomposition():
    for n in (1, 2, 3):
        for g in enumerate_all(n):
            phi = generalized_charpoly(g.adj, ones_vector(n))
            for p in (2, 3, 5):
                d = beta_decompose(phi, p)
                assert recompose(d) == (fp_poly(phi.c0, p), fp_poly(phi.c1, p))
                assert fp_poly_gcd(d.phi1, d.phi2, p) == (1,)


def test_criterion_4d_construct_q_identities():
    invoked = 0
    for n in (2, 3, 4):
        idx = build_index(n, with_dets=True)
        z = ones_vector(n)
        for members in idx.buckets.values():
            for a, b in itertools.product(members, repeat=2):
                if idx.dets[a] == 0:
                    continue
                x, y = LoopyGraph(n, a).adj, LoopyGraph(n, b).adj
                q = construct_q((x, z), (y, z)).q
                qt = transpose(q)
                assert _rmul(q, walk_matrix(x, z)) == walk_matrix(y, z)
                assert _rmul(q, qt) == identity(n)
                assert _rmul(_rmul(q, x), qt) == y
                assert tuple(row[0] for row in _rmul(q, tuple((v,) for v in z))) == z
                invoked += 1
    assert invoked > 0


@pytest.mark.parametrize("n", range(2, 9))
def test_criterion_5_simple_graph_divisibility(n):
    rng = random.Random(1000 + n)
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(500):
        g = LoopyGraph.from_edges(n, [e for e in pairs if rng.getrandbits(1)])
        assert not any(g.loops())
        assert bareiss_det(walk_matrix(g.adj, ones_vector(n))) % (2 ** (n // 2)) == 0


def test_criterion_6_factorization():
    for m in range(-10**5, 10**5 + 1):
        if m == 0:
            continue
        f = factor(m)
        assert dict(f.prime_powers) == trial_factor(m)
        assert f.recombine() == m
    rng = random.Random(64)
    for _ in range(100):
        m = rng.getrandbits(64) or 1
        f = factor(m)
        assert f.recombine() == m
        for p, e in f.prime_powers:
            assert e >= 1 and is_probable_prime(p)
            # primality cross-check independent of Miller-Rabin for small factors
            if p < 10**6:
                assert trial_factor(p) == {p: 1}


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "loopspec", *args],
                          capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_criterion_7_determinism():
    for args in (["frequency", "--n", "6", "--samples", "500", "--seed", "17"],
                 ["verify", "--n", "4"],
                 ["verify", "--n", "4", "--combined"]):
        first, second = _cli(*args), _cli(*args)
        assert first[0] == 0
        assert first == second
