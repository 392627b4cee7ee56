import random

from twistfloer.snf import matmul, smith_normal_form

from helpers import (bareiss_det, determinantal_invariant_factors,
                     random_int_matrix)


def check_full(M):
    res = smith_normal_form(M)
    U, D, V = res
    # transform identity, exactly
    got = matmul(matmul([list(r) for r in U], [list(r) for r in M]),
                 [list(r) for r in V])
    assert tuple(tuple(r) for r in got) == D
    # unimodularity
    assert abs(bareiss_det(U)) == 1
    assert abs(bareiss_det(V)) == 1
    assert matmul([list(r) for r in U], [list(r) for r in res.U_inv]) == \
        [[1 if i == j else 0 for j in range(len(U))] for i in range(len(U))]
    assert matmul([list(r) for r in V], [list(r) for r in res.V_inv]) == \
        [[1 if i == j else 0 for j in range(len(V))] for i in range(len(V))]
    # diagonal, nonnegative, divisibility chain
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    diag = res.diagonal()
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert b == 0 or (a != 0 and b % a == 0)
    return res


def test_nilpotent_jordan_block():
    res = check_full([[0, 1], [0, 0]])
    assert res.diagonal() == (1, 0)


def test_identity():
    res = check_full([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert res.diagonal() == (1, 1, 1)


def test_divisibility_normalization():
    res = check_full([[2, 0], [0, 3]])
    assert res.diagonal() == (1, 6)


def test_zero_and_empty():
    assert check_full([[0, 0], [0, 0]]).diagonal() == (0, 0)
    res = smith_normal_form([])
    assert res.D == ()


def test_against_determinantal_divisors():
    rng = random.Random(42)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        M = random_int_matrix(rng, rows, cols, 15)
        res = check_full(M)
        assert res.invariant_factors() == determinantal_invariant_factors(M)
