"""Determinants against an independent Leibniz-expansion oracle."""

import itertools

import pytest

from detfsing import KernelError, Polynomial, PolyMatrix, poly_det

from conftest import random_poly, simple_ring


def leibniz_det(M):
    """Sum over permutations with inversion-count signs; independent of the
    expansion used by poly_det."""
    ring = M.ring
    n = M.rows
    acc = Polynomial.zero(ring)
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        term = Polynomial.one(ring)
        for r in range(n):
            term = term * M[r, perm[r]]
        acc = acc + term if inversions % 2 == 0 else acc - term
    return acc


def generic(m, n, p=5):
    from detfsing.determinantal import generic_matrix

    return generic_matrix(m, n, p)


def test_det_two_by_three_block():
    # columns 2 and 3 of a generic 2x3 matrix
    M = generic(2, 3)
    sub = M.submatrix((0, 1), (1, 2))
    R = M.ring
    v, w = M[0, 1], M[0, 2]
    y, z = M[1, 1], M[1, 2]
    assert poly_det(sub) == v * z - w * y


def test_det_identity_is_one():
    R = simple_ring(2, 7)
    one, zero = Polynomial.one(R), Polynomial.zero(R)
    M = PolyMatrix(R, 3, 3, [one, zero, zero, zero, one, zero, zero, zero, one])
    assert poly_det(M).is_one()


def test_det_three_by_three_generic_leibniz():
    M = generic(3, 3)
    d = poly_det(M)
    assert len(d) == 6
    assert d == leibniz_det(M)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_det_random_matches_leibniz(n, rng):
    R = simple_ring(3, 7)
    for _ in range(8):
        M = PolyMatrix(R, n, n,
                       [random_poly(R, rng, max_terms=2, max_exp=2) for _ in range(n * n)])
        assert poly_det(M) == leibniz_det(M)


def test_det_rejects_non_square_and_oversize():
    R = simple_ring(2, 5)
    z = Polynomial.zero(R)
    with pytest.raises(KernelError):
        poly_det(PolyMatrix(R, 1, 2, [z, z]))
    big = PolyMatrix(R, 9, 9, [z] * 81)
    with pytest.raises(KernelError):
        poly_det(big)


def test_transpose_and_submatrix():
    M = generic(2, 3)
    T = M.transpose()
    assert (T.rows, T.cols) == (3, 2)
    assert T[2, 1] == M[1, 2]
