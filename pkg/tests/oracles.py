"""Slow, independent reference computations used only by the tests."""

from functools import lru_cache
from itertools import product

# Bivariate polynomials in (lambda, t) as {(i, j): coeff} for lambda^i t^j.


def _padd(a, b, sign=1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
        if out[k] == 0:
            del out[k]
    return out


def _pmul(a, b):
    out = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


def cofactor_det(entries):
    """Determinant of a square matrix of bivariate polynomials by Laplace
    expansion along the first row, memoized on the remaining column set."""
    n = len(entries)

    @lru_cache(maxsize=None)
    def minor(row, cols):
        if row == n:
            return {(0, 0): 1}
        acc = {}
        for k, c in enumerate(cols):
            e = entries[row][c]
            if not e:
                continue
            sub = minor(row + 1, cols[:k] + cols[k + 1:])
            acc = _padd(acc, _pmul(e, sub), -1 if k % 2 else 1)
        return acc

    return minor(0, tuple(range(n)))


def bivariate_phi(x, z):
    """det(lambda*I - X - t*z*z^T) as {(i, j): coeff}."""
    n = len(x)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            e = {}
            if i == j:
                e[(1, 0)] = 1
            if x[i][j]:
                e[(0, 0)] = -x[i][j]
            if z[i] * z[j]:
                e[(0, 1)] = -z[i] * z[j]
            row.append(e)
        entries.append(row)
    return cofactor_det(entries)


def split_phi(phi, n):
    """(c0, c1, other) coefficient lists from a bivariate dict."""
    c0 = [phi.get((i, 0), 0) for i in range(n + 1)]
    c1 = [phi.get((i, 1), 0) for i in range(n + 1)]
    other = {k: v for k, v in phi.items() if k[1] >= 2}
    while c0 and c0[-1] == 0:
        c0.pop()
    while c1 and c1[-1] == 0:
        c1.pop()
    return tuple(c0), tuple(c1), other


def univariate_charpoly(x):
    n = len(x)
    entries = [[({(1, 0): 1} if i == j else {}) | ({(0, 0): -x[i][j]} if x[i][j] else {})
                for j in range(n)] for i in range(n)]
    phi = cofactor_det(entries)
    return split_phi(phi, n)[0]


def cofactor_int_det(m):
    return cofactor_det([[{(0, 0): v} if v else {} for v in row] for row in m]).get((0, 0), 0)


def trial_factor(m):
    """{prime: exponent} of |m| by plain trial division."""
    m = abs(m)
    out = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def brute_kernel_size(m, p):
    """Number of vectors v in F_p^n with m v = 0, by enumeration."""
    n = len(m[0])
    count = 0
    for v in product(range(p), repeat=n):
        if all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in m):
            count += 1
    return count
