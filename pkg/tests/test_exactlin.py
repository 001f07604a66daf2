"""Unit tests for the exact linear algebra core."""

import random
from fractions import Fraction

import pytest

from verolink.errors import IndexNotFinite
from verolink.exactlin import (IntMatrix, RatMatrix, det, hermite_normal_form,
                               invariant_factors, is_unimodular,
                               kernel_lattice, rational_nullspace,
                               rational_rank, same_column_space,
                               smith_normal_form)


def random_int_matrix(rng, rows, cols, lo=-6, hi=6):
    return IntMatrix([[rng.randint(lo, hi) for _ in range(cols)]
                      for _ in range(rows)])


def random_unimodular(rng, k, steps=12):
    """Product of elementary row operations; determinant is +-1."""
    data = IntMatrix.identity(k).data
    for _ in range(steps):
        i, j = rng.randrange(k), rng.randrange(k)
        if i == j:
            continue
        q = rng.randint(-3, 3)
        data[i] = [a + q * b for a, b in zip(data[i], data[j])]
    return IntMatrix(data)


# -- Hermite normal form -------------------------------------------------

def test_hnf_identity():
    M = IntMatrix.identity(2)
    H, U = hermite_normal_form(M)
    assert H == M
    assert U == IntMatrix.identity(2)


def test_hnf_already_diagonal():
    M = IntMatrix([[2, 0], [0, 2]])
    H, _ = hermite_normal_form(M)
    assert H == M


def test_hnf_hand_reduction():
    # Row reduction over the integers: subtracting the rows leaves (0, -2),
    # normalized to positive pivot 2; the entry above stays reduced.
    M = IntMatrix([[1, 1], [1, -1]])
    H, U = hermite_normal_form(M)
    assert H == IntMatrix([[1, 1], [0, 2]])
    assert U.mul(M) == H
    assert is_unimodular(U)


@pytest.mark.parametrize("seed", range(8))
def test_hnf_random_invariants(seed):
    rng = random.Random(seed)
    M = random_int_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
    H, U = hermite_normal_form(M)
    assert U.mul(M) == H
    assert is_unimodular(U)
    # Echelon shape with positive pivots and reduced entries above.
    previous = -1
    for i in range(H.rows):
        row = H.data[i]
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is None:
            assert all(all(x == 0 for x in H.data[k]) for k in range(i, H.rows))
            break
        assert lead > previous
        assert row[lead] > 0
        for k in range(i):
            assert 0 <= H.data[k][lead] < row[lead]
        previous = lead


# -- Smith normal form ---------------------------------------------------

def check_snf(M):
    res = smith_normal_form(M)
    assert res.U.mul(M).mul(res.W) == res.S
    assert is_unimodular(res.U)
    assert is_unimodular(res.W)
    diag = res.S.diagonal()
    for i in range(M.rows):
        for j in range(M.cols):
            if i != j:
                assert res.S.data[i][j] == 0
    nonzero = [d for d in diag if d != 0]
    assert all(d > 0 for d in nonzero)
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    assert all(d == 0 for d in diag[len(nonzero):])
    return res


def test_snf_divisibility_reordering():
    res = check_snf(IntMatrix([[2, 0, 0], [0, 2, 0], [0, 0, 1]]))
    assert res.S.diagonal() == [1, 2, 2]


def test_snf_zero_matrix():
    res = check_snf(IntMatrix([[0, 0], [0, 0]]))
    assert res.S.is_zero()


def test_snf_recombination_recovers_input():
    rng = random.Random(7)
    M = random_int_matrix(rng, 4, 3)
    res = check_snf(M)
    # Unimodular transforms invert exactly over the integers.
    Uinv = _int_inverse(res.U)
    Winv = _int_inverse(res.W)
    assert Uinv.mul(res.S).mul(Winv) == M


def _int_inverse(M):
    """Inverse of a unimodular matrix via its Hermite form (which is I)."""
    H, U = hermite_normal_form(M)
    assert H == IntMatrix.identity(M.rows)
    return U


@pytest.mark.parametrize("seed", range(10))
def test_snf_random_invariants(seed):
    rng = random.Random(100 + seed)
    check_snf(random_int_matrix(rng, rng.randint(1, 5), rng.randint(1, 5)))


# -- kernels -------------------------------------------------------------

def test_kernel_single_relation():
    K = kernel_lattice(IntMatrix([[1, 1]]))
    assert K.columns() == [(1, -1)]


def test_kernel_of_identity_is_empty():
    K = kernel_lattice(IntMatrix.identity(3))
    assert K.cols == 0
    assert K.rows == 3


@pytest.mark.parametrize("seed", range(8))
def test_kernel_random_invariants(seed):
    rng = random.Random(200 + seed)
    M = random_int_matrix(rng, rng.randint(1, 4), rng.randint(1, 6))
    K = kernel_lattice(M)
    if K.cols:
        assert M.mul(K).is_zero()
        # Saturation: all invariant factors of the kernel basis are one.
        factors = smith_normal_form(K).invariant_factors
        assert all(d == 1 for d in factors)
    assert K.cols == M.cols - rational_rank(M.to_rational())


# -- invariant factors ----------------------------------------------------

def test_invariant_factors_trivial_quotient():
    M = IntMatrix([[2, 1], [0, 3]])
    assert invariant_factors(M, M) == []


def test_invariant_factors_index_two():
    sub = IntMatrix.from_columns([(2, 0), (0, 1)])
    amb = IntMatrix.identity(2)
    assert invariant_factors(sub, amb) == [2]


def test_invariant_factors_rank_drop():
    sub = IntMatrix.from_columns([(1, 0)])
    amb = IntMatrix.identity(2)
    with pytest.raises(IndexNotFinite):
        invariant_factors(sub, amb)


@pytest.mark.parametrize("seed", range(6))
def test_invariant_factors_basis_independent(seed):
    # Re-basing the sublattice by a unimodular transform keeps the factors.
    rng = random.Random(300 + seed)
    k = rng.randint(2, 4)
    diag = sorted(rng.choice([1, 1, 2, 2, 3, 4, 6]) for _ in range(k))
    sub = IntMatrix([[diag[i] if i == j else 0 for j in range(k)]
                     for i in range(k)])
    amb = IntMatrix.identity(k)
    expected = invariant_factors(sub, amb)
    rebased = sub.mul(random_unimodular(rng, k))
    assert invariant_factors(rebased, amb) == expected


# -- rational nullspaces ---------------------------------------------------

def test_nullspace_identity_empty():
    N = rational_nullspace(IntMatrix.identity(3).to_rational())
    assert N.cols == 0


def test_nullspace_all_ones_row():
    N = rational_nullspace(RatMatrix([[1, 1, 1, 1]]))
    assert N.cols == 3


@pytest.mark.parametrize("seed", range(10))
def test_nullspace_random_invariants(seed):
    rng = random.Random(400 + seed)
    M = random_int_matrix(rng, rng.randint(1, 4), rng.randint(1, 6)).to_rational()
    N = rational_nullspace(M)
    if N.cols:
        assert M.mul(N).is_zero()
    assert rational_rank(M) + N.cols == M.cols


def test_nullspace_with_fractional_entries():
    M = RatMatrix([[Fraction(1, 2), Fraction(1, 3)]])
    N = rational_nullspace(M)
    assert N.cols == 1
    assert M.mul(N).is_zero()


def test_same_column_space():
    A = RatMatrix.from_columns([(1, 0), (0, 1)])
    B = RatMatrix.from_columns([(1, 1), (1, -1)])
    C = RatMatrix.from_columns([(1, 0)])
    assert same_column_space(A, B)
    assert not same_column_space(A, C)


def test_det_small_cases():
    assert det(IntMatrix.identity(3)) == 1
    assert det(IntMatrix([[2, 1], [1, 1]])) == 1
    assert det(IntMatrix([[2, 4], [1, 2]])) == 0
    assert det(IntMatrix([[0, 1], [1, 0]])) == -1
