"""Exact integer, rational and F_p linear algebra.

Matrices are tuples of row tuples of Python ints, vectors are tuples of ints,
polynomials are tuples of coefficients in ascending degree with no trailing
zeros (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]
Poly = tuple[int, ...]
RationalMatrix = tuple[tuple[Fraction, ...], ...]

# Degree of the zero polynomial. Distinct from every natural number.
ZERO_DEGREE = -1


class SingularMatrixError(ArithmeticError):
    """Raised when an inverse is requested for a matrix with zero determinant."""


class DimensionMismatch(ValueError):
    pass


class ZeroPolynomialError(ValueError):
    pass


# -- construction helpers ----------------------------------------------------

def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise DimensionMismatch("matrix must be square with dimension >= 1")
    return m


def as_vector(entries: Sequence[int]) -> Vector:
    return tuple(int(x) for x in entries)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def ones_vector(n: int) -> Vector:
    return (1,) * n


def is_symmetric(m: Sequence[Sequence[int]]) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def transpose(m):
    return tuple(zip(*m))


def matmul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


# -- determinants and inverses -----------------------------------------------

def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination.

    Every intermediate value is a minor of ``m`` and hence an integer; the
    divisions below are exact.
    """
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def rational_inverse(m: Sequence[Sequence[int]]) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix has zero determinant")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


# -- characteristic polynomials ----------------------------------------------

def charpoly(m: Sequence[Sequence[int]]) -> Poly:
    """det(lambda*I - m) by the Berkowitz algorithm (no divisions).

    Works over any commutative ring, so it is also valid for matrices already
    reduced mod p.
    """
    n = len(m)
    # descending coefficients of the charpoly of the leading k x k block
    prev = [1]
    for k in range(n):
        # block [[A, C], [R, a]] with A the leading k x k part
        a = m[k][k]
        row = m[k][:k]
        v = [m[i][k] for i in range(k)]
        toep = [1, -a]
        for _ in range(k):
            toep.append(-dot(row, v))
            v = [dot(m[i][:k], v) for i in range(k)]
        new = []
        for i in range(k + 2):
            s = 0
            for j in range(max(0, i - k - 1), min(i, k) + 1):
                s += toep[i - j] * prev[j]
            new.append(s)
        prev = new
    return poly_trim(reversed(prev))


# -- polynomials over Z ------------------------------------------------------

def poly_trim(coeffs) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    return len(p) - 1 if p else ZERO_DEGREE


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    return poly_trim(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def poly_scale(a: Poly, c: int) -> Poly:
    return poly_trim(c * x for x in a)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_scale(b, -1))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_eval(a: Poly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_derivative(a: Poly) -> Poly:
    return poly_trim(i * c for i, c in enumerate(a) if i > 0)


def poly_eval_matrix(a: Poly, m: Matrix) -> Matrix:
    """Evaluate ``a`` at the square matrix ``m`` (Horner)."""
    n = len(m)
    acc = zeros(n)
    ident = identity(n)
    for c in reversed(a):
        prod = matmul(acc, m)
        acc = tuple(tuple(x + c * e for x, e in zip(r, ir)) for r, ir in zip(prod, ident))
    return acc


def sylvester_matrix(a: Poly, b: Poly) -> Matrix:
    """Sylvester matrix with the deg(b) shifted rows of ``a`` on top."""
    da, db = degree(a), degree(b)
    size = da + db
    ra, rb = a[::-1], b[::-1]
    rows = []
    for i in range(db):
        rows.append((0,) * i + ra + (0,) * (size - da - 1 - i))
    for i in range(da):
        rows.append((0,) * i + rb + (0,) * (size - db - 1 - i))
    return tuple(rows)


def resultant(a: Poly, b: Poly) -> int:
    """Res(a, b) = lc(a)^deg(b) * prod of b over the roots of a.

    Computed as the Bareiss determinant of the Sylvester matrix.
    """
    if not a or not b:
        raise ZeroPolynomialError("resultant of the zero polynomial")
    da, db = degree(a), degree(b)
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    return bareiss_det(sylvester_matrix(a, b))


# -- arithmetic over F_p -----------------------------------------------------

def mat_mod(m, p: int) -> Matrix:
    return tuple(tuple(x % p for x in row) for row in m)


def _rref_mod(m, p: int):
    a = [[x % p for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def fp_rank(m, p: int) -> int:
    """Rank of ``m`` reduced mod the prime ``p``."""
    return len(_rref_mod(m, p)[1])


def fp_kernel(m, p: int) -> list[Vector]:
    """Basis of the right null space of ``m`` mod ``p``, entries in 0..p-1."""
    a, pivots = _rref_mod(m, p)
    cols = len(m[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-a[r][f]) % p
        basis.append(tuple(v))
    return basis


def fp_det(m, p: int) -> int:
    """Determinant of ``m`` over F_p, in 0..p-1."""
    a = [[x % p for x in row] for row in m]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return det % p


def fp_poly(a, p: int) -> Poly:
    return poly_trim(x % p for x in a)


def fp_monic(a: Poly, p: int) -> Poly:
    a = fp_poly(a, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return tuple((x * inv) % p for x in a)


def fp_poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    return fp_poly(poly_mul(a, b), p)


def fp_poly_divmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    a = list(fp_poly(a, p))
    b = fp_poly(b, p)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial mod p")
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = a[-1] * inv % p
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        while a and a[-1] == 0:
            a.pop()
    return poly_trim(q), tuple(a)


class BothZeroError(ValueError):
    """gcd(0, 0) is undefined."""


def fp_poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    """Monic gcd in F_p[lambda] by the Euclidean algorithm."""
    a, b = fp_poly(a, p), fp_poly(b, p)
    if not a and not b:
        raise BothZeroError("both polynomials vanish mod p")
    while b:
        a, b = b, fp_poly_divmod(a, b, p)[1]
    return fp_monic(a, p)


def fp_roots(a: Poly, p: int) -> list[int]:
    """Roots of ``a`` in F_p by evaluation at every field element."""
    a = fp_poly(a, p)
    return [x for x in range(p) if poly_eval(a, x) % p == 0]
