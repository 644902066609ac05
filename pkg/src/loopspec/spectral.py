"""Walk matrices, the generalized characteristic polynomial and mod-p structure.

For a symmetric integer matrix X and integer vector z,

    Phi(lambda, t) = det(lambda*I - X - t*z*z^T) = c0(lambda) + t*c1(lambda)

with c0 the characteristic polynomial of X and c1 = -z^T adj(lambda*I - X) z.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import (
    DimensionMismatch,
    Matrix,
    Poly,
    as_matrix,
    degree,
    fp_monic,
    fp_poly,
    fp_poly_divmod,
    fp_poly_gcd,
    fp_poly_mul,
    fp_roots,
    matvec,
    poly_add,
    poly_derivative,
    poly_scale,
    poly_trim,
    resultant,
)


@dataclass(frozen=True)
class GeneralizedCharPoly:
    c0: Poly
    c1: Poly

    @property
    def n(self) -> int:
        return degree(self.c0)

    def at(self, t: int) -> Poly:
        """The univariate polynomial c0 + t*c1, i.e. charpoly of X + t z z^T."""
        return poly_add(self.c0, poly_scale(self.c1, t))

    def key(self) -> tuple[Poly, Poly]:
        return (self.c0, self.c1)


@dataclass(frozen=True)
class BetaDecomposition:
    """Phi = beta * (phi1 + t*phi2) mod p with gcd(phi1, phi2) = 1."""

    p: int
    beta: Poly
    phi1: Poly
    phi2: Poly


def _check_pair(x, z) -> None:
    if len(z) != len(x) or any(len(row) != len(x) for row in x):
        raise DimensionMismatch(f"matrix of size {len(x)} with vector of length {len(z)}")


def walk_matrix(x: Sequence[Sequence[int]], z: Sequence[int]) -> Matrix:
    """The n x n matrix whose column j is X^j z."""
    _check_pair(x, z)
    n = len(x)
    cols = [tuple(z)]
    for _ in range(n - 1):
        cols.append(matvec(x, cols[-1]))
    return tuple(tuple(col[i] for col in cols) for i in range(n))


def generalized_charpoly(x: Sequence[Sequence[int]], z: Sequence[int]) -> GeneralizedCharPoly:
    """(c0, c1) by Faddeev-LeVerrier.

    adj(lambda*I - X) = sum_k B_k lambda^(n-1-k) with B_0 = I and
    B_k = X B_{k-1} + a_k I where a_k = -tr(X B_{k-1}) / k is the coefficient
    of lambda^(n-k) in the characteristic polynomial. The division is exact.
    """
    _check_pair(x, z)
    n = len(x)
    x = [list(row) for row in x]
    z = list(z)
    b = [[int(i == j) for j in range(n)] for i in range(n)]
    desc0 = [1]
    desc1 = []
    for k in range(1, n + 1):
        # -z^T B_{k-1} z
        bz = [sum(r[j] * z[j] for j in range(n)) for r in b]
        desc1.append(-sum(z[i] * bz[i] for i in range(n)))
        xb = [[sum(xr[m] * b[m][j] for m in range(n)) for j in range(n)] for xr in x]
        tr = sum(xb[i][i] for i in range(n))
        assert tr % k == 0
        a_k = -tr // k
        desc0.append(a_k)
        for i in range(n):
            xb[i][i] += a_k
        b = xb
    # B_n = 0 by Cayley-Hamilton; not needed
    return GeneralizedCharPoly(poly_trim(reversed(desc0)), poly_trim(reversed(desc1)))


def phi_cospectral(a: tuple, b: tuple) -> bool:
    """True iff the pairs (X, z) and (Y, eta) have identical Phi."""
    (x, z), (y, eta) = a, b
    if len(x) != len(y):
        raise DimensionMismatch(f"pairs of size {len(x)} and {len(y)}")
    return generalized_charpoly(x, z) == generalized_charpoly(y, eta)


class NonMonicError(ValueError):
    pass


class DegreeZeroError(ValueError):
    pass


def discriminant(phi: Poly) -> int:
    """Discriminant of a monic polynomial, (-1)^(n(n-1)/2) Res(phi, phi')."""
    n = degree(phi)
    if n < 1:
        raise DegreeZeroError("discriminant needs degree >= 1")
    if phi[-1] != 1:
        raise NonMonicError(f"leading coefficient {phi[-1]} != 1")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(phi, poly_derivative(phi))


def minimal_poly_mod_p(x: Sequence[Sequence[int]], z: Sequence[int], p: int) -> Poly:
    """Least-degree monic psi over F_p with psi(X) z = 0 mod p.

    Runs Krylov vectors z, Xz, X^2 z, ... through incremental elimination,
    tracking each reduced vector as a polynomial combination, until one
    reduces to zero.
    """
    _check_pair(x, z)
    n = len(x)
    xm = [[e % p for e in row] for row in x]
    # echelon basis: pivot column -> (reduced vector, its polynomial)
    basis: dict[int, tuple[list[int], list[int]]] = {}
    v = [e % p for e in z]
    for j in range(n + 1):
        vec = list(v)
        poly = [0] * j + [1]
        for c in sorted(basis):
            if vec[c]:
                bv, bp = basis[c]
                f = vec[c]
                vec = [(a - f * b) % p for a, b in zip(vec, bv)]
                poly = [(a - f * (bp[i] if i < len(bp) else 0)) % p
                        for i, a in enumerate(poly)]
        piv = next((c for c in range(n) if vec[c]), None)
        if piv is None:
            return fp_monic(tuple(poly), p)
        inv = pow(vec[piv], -1, p)
        basis[piv] = ([a * inv % p for a in vec], [a * inv % p for a in poly])
        v = [sum(r[k] * v[k] for k in range(n)) % p for r in xm]
    raise AssertionError("Krylov sequence of length n+1 must be dependent")


def beta_decompose(g: GeneralizedCharPoly, p: int) -> BetaDecomposition:
    beta = fp_poly_gcd(g.c0, g.c1, p)
    phi1, r1 = fp_poly_divmod(g.c0, beta, p)
    phi2, r2 = fp_poly_divmod(g.c1, beta, p)
    if r1 or r2:
        raise ArithmeticError("gcd does not divide its inputs mod p")
    return BetaDecomposition(p, beta, phi1, phi2)


def recompose(d: BetaDecomposition) -> tuple[Poly, Poly]:
    """(beta*phi1, beta*phi2) mod p, for checking against (c0, c1) mod p."""
    return fp_poly_mul(d.beta, d.phi1, d.p), fp_poly_mul(d.beta, d.phi2, d.p)


def shifted_pair(x: Sequence[Sequence[int]], z: Sequence[int], t: int) -> Matrix:
    """X + t z z^T."""
    _check_pair(x, z)
    return as_matrix([[x[i][j] + t * z[i] * z[j] for j in range(len(z))] for i in range(len(z))])


def find_single_root_shift(g: GeneralizedCharPoly, p: int) -> int | None:
    """First t in 0..p-1 for which c0 + t*c1 has at most one root in F_p.

    None when no such shift exists.
    """
    c0 = fp_poly(g.c0, p)
    c1 = fp_poly(g.c1, p)
    for t in range(p):
        if len(fp_roots(poly_add(c0, poly_scale(c1, t)), p)) <= 1:
            return t
    return None
