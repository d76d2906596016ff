"""Fraction-free elimination against a plain Gauss-Jordan oracle."""

import random
from fractions import Fraction

import pytest

from curvemotive import _linalg


def gauss_jordan_inverse(a):
    """Straightforward rational Gauss-Jordan, used as the independent oracle."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(i == j) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            raise ZeroDivisionError("singular")
        m[col], m[pivot_row] = m[pivot_row], m[col]
        pivot = m[col][col]
        m[col] = [x / pivot for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def test_identity_and_transpose():
    assert _linalg.identity(2) == ((1, 0), (0, 1))
    assert _linalg.transpose(((1, 2), (3, 4))) == ((1, 3), (2, 4))


def test_mat_mul_small():
    a = ((1, 2), (3, 4))
    b = ((0, 1), (1, 0))
    assert _linalg.mat_mul(a, b) == ((2, 1), (4, 3))
    assert _linalg.vec_mat((1, 1), a) == (4, 6)


def test_determinant_known():
    assert _linalg.determinant(((2,),)) == 2
    assert _linalg.determinant(((1, 2), (3, 4))) == -2
    assert _linalg.determinant(((0, 1), (1, 0))) == -1
    assert _linalg.determinant(((1, 1), (1, 1))) == 0


def test_inverse_matches_gauss_jordan_on_random_matrices():
    rng = random.Random(20260809)
    inverted = 0
    for _ in range(200):
        n = rng.randint(1, 6)
        a = tuple(tuple(rng.randint(-4, 4) for _ in range(n)) for _ in range(n))
        try:
            expected = gauss_jordan_inverse(a)
        except ZeroDivisionError:
            with pytest.raises(_linalg.SingularMatrixError):
                _linalg.inverse(a)
            continue
        assert _linalg.inverse(a) == expected
        inverted += 1
    assert inverted > 100


def test_leading_principal_minors():
    a = ((2, 1, 0), (1, 2, 1), (0, 1, 2))
    assert _linalg.leading_principal_minors(a) == (2, 3, 4)
