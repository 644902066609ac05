"""Characterization certificates and rational orthogonal matrix diagnostics."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .factor import Factorization, factor
from .graphs import LoopyGraph, to_compact
from .linalg import (
    DimensionMismatch,
    Matrix,
    RationalMatrix,
    SingularMatrixError,
    bareiss_det,
    fp_kernel,
    fp_rank,
    fp_roots,
    matvec,
    rational_inverse,
)
from .spectral import (
    beta_decompose,
    discriminant,
    find_single_root_shift,
    generalized_charpoly,
    shifted_pair,
    walk_matrix,
)

WALK_DET = "CharacterizedByWalkDet"
COMBINED = "CharacterizedByCombined"
INCONCLUSIVE = "Inconclusive"

COMBINED_NOTE = ("conditional on the cited discriminant facts: primes dividing the level divide "
                 "the discriminant, and odd such primes divide it squared")


@dataclass(frozen=True)
class Certificate:
    verdict: str
    n: int
    det_walk: int
    det_factorization: Factorization | None  # None when det_walk == 0
    discriminant: int | None = None
    failing_primes: tuple[int, ...] = ()
    input_hash: str = ""
    rule: str = "walk_det"

    @property
    def zero_det(self) -> bool:
        return self.det_walk == 0

    @property
    def certified(self) -> bool:
        return self.verdict != INCONCLUSIVE


def input_hash(x: Sequence[Sequence[int]], z: Sequence[int]) -> str:
    """Hex bit encoding for 0/1 graphs with the all-ones vector, else a SHA-256."""
    n = len(x)
    if all(v in (0, 1) for row in x for v in row) and all(v == 1 for v in z):
        return to_compact(LoopyGraph.from_adjacency(x)).split(":")[1]
    text = ";".join(",".join(map(str, row)) for row in x) + "|" + ",".join(map(str, z))
    return "sha256:" + hashlib.sha256(f"{n}:{text}".encode()).hexdigest()


def certify_walk_det(x: Sequence[Sequence[int]], z: Sequence[int]) -> Certificate:
    """Certified iff det of the walk matrix is square-free."""
    det = bareiss_det(walk_matrix(x, z))
    h = input_hash(x, z)
    if det == 0:
        return Certificate(INCONCLUSIVE, len(x), 0, None, input_hash=h)
    f = factor(det)
    failing = tuple(p for p, e in f.prime_powers if e >= 2)
    verdict = INCONCLUSIVE if failing else WALK_DET
    return Certificate(verdict, len(x), det, f, failing_primes=failing, input_hash=h)


def certify_combined(x: Sequence[Sequence[int]], z: Sequence[int]) -> Certificate:
    """Walk determinant combined with the discriminant of the characteristic polynomial.

    Certified iff det W != 0, gcd(disc, det W) is square-free, and either
    4 does not divide det W or disc is odd.
    """
    g = generalized_charpoly(x, z)
    disc = discriminant(g.c0)
    det = bareiss_det(walk_matrix(x, z))
    h = input_hash(x, z)
    if det == 0:
        return Certificate(INCONCLUSIVE, len(x), 0, None, disc, input_hash=h, rule="combined")
    f = factor(det)
    common = math.gcd(abs(disc), abs(det))
    failing = [p for p, e in factor(common).prime_powers if e >= 2]
    if det % 4 == 0 and disc % 2 == 0 and 2 not in failing:
        failing.append(2)
    failing.sort()
    verdict = INCONCLUSIVE if failing else COMBINED
    return Certificate(verdict, len(x), det, f, disc, tuple(failing), h, rule="combined")


# -- rational orthogonal matrices --------------------------------------------

@dataclass(frozen=True)
class RationalOrthogonal:
    q: RationalMatrix
    level: int

    def scaled(self) -> Matrix:
        """level * Q as an integer matrix."""
        return tuple(tuple(int(e * self.level) for e in row) for row in self.q)

    def is_signed_permutation(self) -> bool:
        return all(sum(e != 0 for e in row) == 1 and all(e in (0, 1, -1) for e in row)
                   for row in self.q)


class NotCospectralError(ValueError):
    pass


class SingularWalkMatrixError(ValueError):
    pass


class VerificationFailed(AssertionError):
    """An identity that must hold for Q did not; indicates an arithmetic bug."""


def level_of(q: RationalMatrix) -> int:
    lvl = 1
    for row in q:
        for e in row:
            lvl = lvl * e.denominator // math.gcd(lvl, e.denominator)
    return lvl


def _ratmul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in bt) for r in a)


def construct_q(a: tuple, b: tuple, w_inv: RationalMatrix | None = None) -> RationalOrthogonal:
    """Q = W_{Y,eta} W_{X,z}^{-1}, checked to be orthogonal with Q X Q^T = Y, Q z = eta.

    ``w_inv`` may pass a precomputed inverse of W_{X,z}.
    """
    (x, z), (y, eta) = a, b
    if len(x) != len(y):
        raise DimensionMismatch(f"pairs of size {len(x)} and {len(y)}")
    if generalized_charpoly(x, z) != generalized_charpoly(y, eta):
        raise NotCospectralError("pairs have different generalized characteristic polynomials")
    wx = walk_matrix(x, z)
    wy = walk_matrix(y, eta)
    if w_inv is None:
        try:
            w_inv = rational_inverse(wx)
        except SingularMatrixError:
            raise SingularWalkMatrixError("walk matrix of the first pair is singular") from None
    q = _ratmul(wy, w_inv)
    n = len(x)
    qt = tuple(zip(*q))
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    if _ratmul(q, qt) != ident:
        raise VerificationFailed("Q Q^T != I")
    if _ratmul(_ratmul(q, x), qt) != tuple(tuple(Fraction(v) for v in row) for row in y):
        raise VerificationFailed("Q X Q^T != Y")
    if matvec(q, z) != tuple(Fraction(v) for v in eta):
        raise VerificationFailed("Q z != eta")
    if _ratmul(q, wx) != tuple(tuple(Fraction(v) for v in row) for row in wy):
        raise VerificationFailed("Q W_X != W_Y")
    return RationalOrthogonal(q, level_of(q))


# -- per-prime trace of the level bound --------------------------------------

@dataclass
class LevelPrimeReport:
    p: int
    n: int
    det_walk: int
    level: int
    divides_det: bool
    square_divides_det: bool
    status: str = ""
    rank_x: int | None = None
    rank_y: int | None = None
    t0: int | None = None
    beta_roots: list[int] = field(default_factory=list)
    kernels_equal: bool | None = None
    stronger_bound_holds: bool | None = None
    concluded_p_not_dividing_level: bool | None = None
    p_divides_level: bool = False
    consistent: bool = True
    notes: list[str] = field(default_factory=list)


def _same_kernel(wa, wb, p) -> bool:
    ka, kb = fp_kernel(wa, p), fp_kernel(wb, p)
    if len(ka) != len(kb):
        return False
    return (all(all(v % p == 0 for v in matvec(wb, k)) for k in ka)
            and all(all(v % p == 0 for v in matvec(wa, k)) for k in kb))


def level_prime_check(a: tuple, b: tuple, p: int,
                      q: RationalOrthogonal | None = None) -> LevelPrimeReport:
    """Run the chain of arguments showing p does not divide the level of Q.

    Status values:
      not_a_divisor      p does not divide det W, so p cannot divide the level
      inapplicable       p^2 divides det W; the rank argument is unavailable
      chain_complete     ranks n-1, a shift t0 found, kernels agree after shifting
      no_shift           ranks n-1 but no single-root shift; by contraposition
                         p does not divide the level
      chain_broken       some step failed unexpectedly
    """
    (x, z), (y, eta) = a, b
    if q is None:
        q = construct_q(a, b)
    n = len(x)
    wx = walk_matrix(x, z)
    det = bareiss_det(wx)
    rep = LevelPrimeReport(p=p, n=n, det_walk=det, level=q.level,
                           divides_det=det % p == 0,
                           square_divides_det=det % (p * p) == 0,
                           p_divides_level=q.level % p == 0)
    if not rep.divides_det:
        rep.status = "not_a_divisor"
        rep.concluded_p_not_dividing_level = True
        rep.notes.append("the level divides det W, and p does not")
    elif rep.square_divides_det:
        rep.status = "inapplicable"
        rep.notes.append("p^2 divides det W; rank n-1 is not guaranteed")
        rep.rank_x = fp_rank(wx, p)
        rep.rank_y = fp_rank(walk_matrix(y, eta), p)
    else:
        wy = walk_matrix(y, eta)
        rep.rank_x = fp_rank(wx, p)
        rep.rank_y = fp_rank(wy, p)
        g = generalized_charpoly(x, z)
        rep.beta_roots = fp_roots(beta_decompose(g, p).beta, p)
        if rep.rank_x != n - 1 or rep.rank_y != n - 1:
            rep.status = "chain_broken"
            rep.notes.append("expected both walk matrices to have rank n-1 mod p")
        else:
            rep.t0 = find_single_root_shift(g, p)
            if rep.t0 is None:
                rep.status = "no_shift"
                rep.concluded_p_not_dividing_level = True
                rep.notes.append("no shift leaves a single root; p | level would force one")
            else:
                wxt = walk_matrix(shifted_pair(x, z, rep.t0), z)
                wyt = walk_matrix(shifted_pair(y, eta, rep.t0), eta)
                rep.kernels_equal = _same_kernel(wxt, wyt, p)
                if rep.kernels_equal:
                    rep.status = "chain_complete"
                    rep.concluded_p_not_dividing_level = True
                    scale = det // p
                    rep.stronger_bound_holds = all(
                        (e * scale).denominator == 1 for row in q.q for e in row)
                else:
                    rep.status = "chain_broken"
                    rep.notes.append("kernels of the shifted walk matrices differ")
    if rep.concluded_p_not_dividing_level:
        rep.consistent = not rep.p_divides_level and rep.stronger_bound_holds is not False
    return rep


def relevant_primes(det: int) -> list[int]:
    if det == 0:
        return []
    return [p for p, _ in factor(det).prime_powers]

