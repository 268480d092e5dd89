import random
from fractions import Fraction

import pytest

from oakit import integer_det, integer_rank


def gauss_det(matrix):
    """Reference determinant by fraction-valued Gaussian elimination."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            for c in range(col, n):
                a[r][c] -= f * a[col][c]
    assert det.denominator == 1
    return int(det)


def gauss_rank(matrix):
    a = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    cols = len(a[0]) if a else 0
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, len(a)) if a[r][col]), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        for r in range(row + 1, len(a)):
            f = a[r][col] / a[row][col]
            for c in range(col, cols):
                a[r][c] -= f * a[row][c]
        row += 1
        rank += 1
    return rank


def test_small_determinants():
    assert integer_det([[5]]) == 5
    assert integer_det([[1, 2], [3, 4]]) == -2
    assert integer_det([[2, 0], [0, 3]]) == 6
    assert integer_det([[1, 1], [1, 1]]) == 0


def test_identity_and_permutation():
    eye = [[int(i == j) for j in range(6)] for i in range(6)]
    assert integer_det(eye) == 1
    perm = [[int(j == (i + 1) % 5) for j in range(5)] for i in range(5)]
    assert integer_det(perm) in (-1, 1)
    assert integer_det(perm) == gauss_det(perm)


def test_determinant_matches_gaussian_elimination():
    rng = random.Random(20240517)
    for size in (2, 3, 4, 5, 6):
        for _ in range(20):
            m = [
                [rng.randrange(-6, 7) for _ in range(size)] for _ in range(size)
            ]
            assert integer_det(m) == gauss_det(m)


def test_rank_matches_gaussian_elimination():
    rng = random.Random(987123)
    for rows, cols in ((3, 5), (5, 3), (4, 4), (6, 6), (7, 4)):
        for _ in range(20):
            m = [
                [rng.randrange(-4, 5) for _ in range(cols)] for _ in range(rows)
            ]
            assert integer_rank(m) == gauss_rank(m)


def test_rank_of_structured_matrices():
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[1, 2, 3], [2, 4, 6]]) == 1
    ones = [[1] * 4 for _ in range(4)]
    assert integer_rank(ones) == 1
    # rank-deficient by construction: last row is the sum of the others
    m = [[1, 0, 2], [0, 1, 5], [1, 1, 7]]
    assert integer_rank(m) == 2


def test_det_needs_square_input():
    with pytest.raises(ValueError):
        integer_det([[1, 2, 3], [4, 5, 6]])


def test_large_entries_stay_exact():
    # Hilbert-like integer matrix with a huge determinant; exactness matters.
    m = [[(i + j + 1) ** 3 for j in range(5)] for i in range(5)]
    assert integer_det(m) == gauss_det(m)
