from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopspec.linalg import (
    ZERO_DEGREE,
    BothZeroError,
    SingularMatrixError,
    ZeroPolynomialError,
    bareiss_det,
    charpoly,
    degree,
    fp_det,
    fp_kernel,
    fp_poly_divmod,
    fp_poly_gcd,
    fp_rank,
    identity,
    is_symmetric,
    matmul,
    matvec,
    poly_eval_matrix,
    rational_inverse,
    resultant,
    zeros,
)

from conftest import EXAMPLE6_ADJ, EXAMPLE6_WALK
from oracles import brute_kernel_size, cofactor_int_det, univariate_charpoly


def square_matrices(max_n=5, lo=-6, hi=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                           min_size=n, max_size=n))


# -- determinants -------------------------------------------------------------

def test_det_six_vertex_walk_matrix():
    assert bareiss_det(EXAMPLE6_WALK) == -3


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_det_identity(n):
    assert bareiss_det(identity(n)) == 1


def test_det_small_cases():
    assert bareiss_det([[2, 0], [0, 2]]) == 4
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 1], [1, 1]]) == 0
    assert bareiss_det([[7]]) == 7


@given(square_matrices())
def test_det_matches_cofactor_expansion(m):
    assert bareiss_det(m) == cofactor_int_det(m)


@given(square_matrices(), st.sampled_from([2, 3, 5, 7, 13]))
def test_det_mod_p_matches_field_det(m, p):
    assert bareiss_det(m) % p == fp_det(m, p)


def test_det_large_entries_stay_exact():
    big = 10**40
    m = [[big, 1], [1, big]]
    assert bareiss_det(m) == big * big - 1


# -- inverses -----------------------------------------------------------------

def test_inverse_examples():
    assert rational_inverse(identity(3)) == tuple(
        tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3))
    half = Fraction(1, 2)
    assert rational_inverse([[2, 0], [0, 2]]) == ((half, 0), (0, half))
    with pytest.raises(SingularMatrixError):
        rational_inverse([[1, 1], [1, 1]])


@given(square_matrices(max_n=4))
def test_inverse_times_matrix_is_identity(m):
    if bareiss_det(m) == 0:
        with pytest.raises(SingularMatrixError):
            rational_inverse(m)
        return
    inv = rational_inverse(m)
    assert matmul(inv, m) == identity(len(m))
    for row in inv:
        for e in row:
            assert e.denominator > 0


# -- characteristic polynomial ------------------------------------------------

def test_charpoly_examples():
    assert charpoly([[1]]) == (-1, 1)
    assert charpoly(zeros(2)) == (0, 0, 1)
    assert charpoly(EXAMPLE6_ADJ) == univariate_charpoly(EXAMPLE6_ADJ)
    assert charpoly(EXAMPLE6_ADJ) == (-3, -2, 10, 3, -7, -1, 1)


@given(square_matrices(max_n=5))
def test_charpoly_matches_cofactor_oracle(m):
    assert charpoly(m) == univariate_charpoly(m)


@given(square_matrices(max_n=5))
def test_cayley_hamilton(m):
    assert poly_eval_matrix(charpoly(m), m) == zeros(len(m))


@given(square_matrices(max_n=6))
def test_charpoly_constant_term(m):
    n = len(m)
    cp = charpoly(m)
    assert degree(cp) == n and cp[-1] == 1
    assert cp[0] == (-1) ** n * bareiss_det(m)


# -- F_p rank and kernel ------------------------------------------------------

def test_rank_examples():
    assert fp_rank(identity(4), 7) == 4
    assert fp_rank(zeros(3), 7) == 0
    assert fp_rank(EXAMPLE6_WALK, 3) == 5
    assert fp_rank(EXAMPLE6_WALK, 5) == 6


def test_kernel_examples():
    assert fp_kernel(identity(3), 5) == []
    assert len(fp_kernel(zeros(2), 5)) == 2
    (v,) = fp_kernel(EXAMPLE6_WALK, 3)
    assert any(v)
    assert all(x % 3 == 0 for x in matvec(EXAMPLE6_WALK, v))
    assert all(0 <= x < 3 for x in v)


@given(square_matrices(max_n=4, lo=-3, hi=3), st.sampled_from([2, 3, 5]))
@settings(max_examples=60)
def test_rank_nullity(m, p):
    rank = fp_rank(m, p)
    kernel = fp_kernel(m, p)
    assert rank + len(kernel) == len(m)
    for v in kernel:
        assert all(x % p == 0 for x in matvec(m, v))
    # the kernel has exactly p^dim elements
    assert brute_kernel_size(m, p) == p ** len(kernel)


# -- polynomials over F_p -----------------------------------------------------

def test_gcd_examples():
    assert fp_poly_gcd((-1, 0, 1), (-1, 1), 5) == (4, 1)  # lambda - 1
    assert fp_poly_gcd((0, 1), (1, 1), 3) == (1,)
    assert fp_poly_gcd((2, 2), (4,), 7) == (1,)
    with pytest.raises(BothZeroError):
        fp_poly_gcd((3, 6), (9,), 3)


polys = st.lists(st.integers(-20, 20), min_size=1, max_size=6).map(tuple)


@given(polys, polys, st.sampled_from([2, 3, 5, 7, 11]))
def test_gcd_divides_both(a, b, p):
    if all(x % p == 0 for x in a) and all(x % p == 0 for x in b):
        return
    g = fp_poly_gcd(a, b, p)
    assert g[-1] == 1
    assert fp_poly_divmod(a, g, p)[1] == ()
    assert fp_poly_divmod(b, g, p)[1] == ()


# -- resultant ----------------------------------------------------------------

def test_resultant_examples():
    # Res(a, b) = prod of b over the roots of a (a monic)
    assert resultant((-1, 1), (-3, 1)) == -2
    assert resultant((-3, 1), (-1, 1)) == 2
    assert resultant((-1, 0, 1), (0, 1)) == -1
    assert resultant((1, -2, 1), (-2, 2)) == 0
    with pytest.raises(ZeroPolynomialError):
        resultant((), (1, 1))


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=3),
       st.lists(st.integers(-4, 4), min_size=1, max_size=3))
def test_resultant_of_products_of_linear_factors(roots_a, roots_b):
    from loopspec.linalg import poly_mul
    a, b = (1,), (1,)
    for r in roots_a:
        a = poly_mul(a, (-r, 1))
    for s in roots_b:
        b = poly_mul(b, (-s, 1))
    expected = 1
    for r in roots_a:
        for s in roots_b:
            expected *= r - s
    assert resultant(a, b) == expected


def test_zero_polynomial_degree_sentinel():
    assert degree(()) == ZERO_DEGREE
    assert ZERO_DEGREE < 0


def test_is_symmetric():
    assert is_symmetric(EXAMPLE6_ADJ)
    assert not is_symmetric([[0, 1], [0, 0]])
