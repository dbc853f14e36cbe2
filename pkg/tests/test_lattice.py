import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from multitile.lattice import (
    IntMatrix,
    InvalidMatrix,
    det,
    is_complete_coset_set,
    is_expansive,
    same_coset,
    schur_stable,
)

B33 = IntMatrix(((-1, 1), (-3, 1)))


def test_det():
    assert det(IntMatrix.of(2)) == 2
    assert det(B33) == 2  # (-1)(1) - (1)(-3)
    assert det(IntMatrix(((1, 0), (0, 1)))) == 1


@pytest.mark.parametrize("B, expected", [
    (2, True),
    (1, False),
    (-3, True),
    (-1, False),
    (0, False),
    (((-1, 1), (-3, 1)), True),  # lambda^2 + 2, |lambda| = sqrt 2
    (((1, 1), (0, 1)), False),
    (((2, 0), (0, 1)), False),
    (((1, -1), (1, 1)), True),  # 1 +- i
    (((0, 1), (1, 0)), False),
    (((1, 2), (2, 1)), False),  # eigenvalues 3, -1
])
def test_is_expansive(B, expected):
    assert is_expansive(IntMatrix.of(B)) is expected


def test_schur_stable_simple_roots():
    # (2z - 1)(3z + 1): roots 1/2, -1/3
    assert schur_stable([-1, -1, 6])
    # (z - 2)(z + 1/3) scaled: 3z^2 - 5z - 2
    assert not schur_stable([-2, -5, 3])
    assert schur_stable([5])


def test_matrix_shape_checked():
    with pytest.raises(InvalidMatrix):
        IntMatrix(((1, 2, 3),))
    with pytest.raises(InvalidMatrix):
        IntMatrix(((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_expansive_agrees_with_float_eigenvalues():
    rng = random.Random(20240611)
    checked = 0
    for _ in range(1000):
        n = rng.choice((1, 2))
        rows = tuple(tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(n))
        moduli = np.abs(np.linalg.eigvals(np.array(rows, dtype=float)))
        if np.any(np.abs(moduli - 1) < 1e-6):
            continue  # too close to call in floating point
        assert is_expansive(IntMatrix(rows)) == bool(np.all(moduli > 1 + 1e-9)), rows
        checked += 1
    assert checked > 900


def test_same_coset_examples():
    assert same_coset(1, -1, IntMatrix.of(2))
    # B^-1 (0, 1) = (-1/2, -1/2)
    assert not same_coset((0, 1), (0, 0), B33)
    assert same_coset((3, -7), (3, -7), B33)
    assert same_coset((1, 1), (0, 0), B33)  # B (0, 1) = (1, 1)


small = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
matrices = st.tuples(small, small).filter(lambda r: det(IntMatrix(r)) != 0).map(IntMatrix)


@given(matrices, small, small, small)
def test_same_coset_is_equivalence(B, x, y, z):
    assert same_coset(x, x, B)
    assert same_coset(x, y, B) == same_coset(y, x, B)
    if same_coset(x, y, B) and same_coset(y, z, B):
        assert same_coset(x, z, B)


@given(matrices, small, small)
def test_same_coset_matches_rational_inverse(B, x, y):
    d = det(B)
    diff = [a - b for a, b in zip(x, y)]
    sol = [Fraction(sum(a * v for a, v in zip(row, diff)), d) for row in B.adjugate()]
    assert same_coset(x, y, B) == all(s.denominator == 1 for s in sol)


def test_complete_coset_sets():
    assert is_complete_coset_set({0, 1}, IntMatrix.of(2))
    assert is_complete_coset_set({0, 1, 2}, IntMatrix.of(-3))
    assert not is_complete_coset_set({0, 2}, IntMatrix.of(2))
    assert is_complete_coset_set({(0, 0), (0, 1)}, B33)
    assert not is_complete_coset_set({(0, 0), (1, 1)}, B33)


@given(matrices, st.lists(small, min_size=1, max_size=8))
def test_complete_coset_set_has_det_elements(B, pts):
    if is_complete_coset_set(pts, B):
        assert len(set(pts)) == abs(det(B))


@given(st.fractions(), st.fractions())
def test_rational_arithmetic_is_exact(a, b):
    assert (a + b) - b == a
    if a != 0:
        assert a * (1 / a) == 1
