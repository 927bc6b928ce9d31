import random

import numpy as np
import pytest

from pathdepth.linalg import FieldSpec, QQ, rank_gf2, rank_sparse


def _dense_rank_mod(M, p):
    A = [[x % p for x in r] for r in M]
    r = 0
    for c in range(len(A[0]) if A else 0):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        r += 1
    return r


def _sparse(M):
    return [{c: v for c, v in enumerate(row) if v} for row in M]


def test_field_parse():
    assert FieldSpec.parse("2") == FieldSpec(2)
    assert FieldSpec.parse("Q").is_rational
    assert FieldSpec.parse("GF(5)") == FieldSpec(5)
    assert str(FieldSpec(3)) == "GF(3)" and str(QQ) == "QQ"
    for bad in ("4", "1", "x"):
        with pytest.raises(ValueError):
            FieldSpec.parse(bad)


def test_gf2_rank_small():
    assert rank_gf2([0b011, 0b110, 0b101]) == 2
    assert rank_gf2([]) == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_rank_mod_p_matches_dense(p):
    rng = random.Random(p)
    for _ in range(50):
        m, n = rng.randint(1, 8), rng.randint(1, 8)
        M = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(m)]
        assert rank_sparse(_sparse(M), FieldSpec(p)) == _dense_rank_mod(M, p)


def test_rational_rank_matches_numpy():
    rng = random.Random(0)
    for _ in range(50):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        M = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        assert rank_sparse(_sparse(M), QQ) == np.linalg.matrix_rank(np.array(M, dtype=float))


def test_characteristic_matters():
    M = [[1, 1], [1, -1]]
    assert rank_sparse(_sparse(M), FieldSpec(2)) == 1
    assert rank_sparse(_sparse(M), QQ) == 2
