from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from aperyres.errors import DimensionMismatch
from aperyres.ring import (
    ANY,
    GradedMatrix,
    Polynomial,
    RingContext,
    degree,
    format_poly,
    is_homogeneous,
    matrix_product,
    monomials_of_degree,
    substitute,
)

CTX = RingContext(4, (4, 9, 14, 11))
x = lambda i, e=1: Polynomial.var(i, 4, e)
one = Polynomial.constant(1, 4)


def test_degree_and_homogeneity():
    assert degree((1, 0, 0, 1), CTX) == 15
    assert is_homogeneous(x(1) * x(2) - x(3) * x(0, 3), CTX) == 23
    assert is_homogeneous(x(1) * x(3) - x(0, 6), CTX) is None
    assert is_homogeneous(Polynomial.zero(), CTX) == ANY


def test_arithmetic():
    p = x(1) + x(2)
    assert p * p == x(1, 2) + x(1) * x(2) * 2 + x(2, 2)
    assert p - p == 0
    assert (p * Fraction(1, 2)).coeff((0, 1, 0, 0)) == Fraction(1, 2)
    assert (p * Fraction(2, 2)).coeff((0, 1, 0, 0)) == 1
    assert x(1) ** 0 == one


def test_substitute_is_simultaneous():
    p = x(1) * x(2)
    q = substitute(p, {1: x(2), 2: x(1)})
    assert q == p
    assert substitute(x(2) - x(1, 2), {2: x(1, 2)}) == 0
    assert substitute(x(1) * x(0), {0: 0}) == 0


def test_format():
    assert format_poly(x(1, 2) - x(2) * x(0)) == "x_1^2 - x_2*y"
    assert format_poly(Polynomial.zero()) == "0"


def test_matrix_product_shapes():
    A = GradedMatrix((0,), (18, 23), {(0, 0): x(1, 2), (0, 1): x(1) * x(2)})
    B = GradedMatrix((18, 23), (32,), {(0, 0): x(2), (1, 0): -x(1)})
    P = matrix_product(A, B)
    assert P.is_zero()
    with pytest.raises(DimensionMismatch):
        matrix_product(B, B)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 40))
def test_monomials_of_degree_by_enumeration(b):
    found = set(monomials_of_degree(CTX, b))
    brute = {
        (e0, e1, e2, e3)
        for e0 in range(b // 4 + 1)
        for e1 in range(b // 9 + 1)
        for e2 in range(b // 14 + 1)
        for e3 in range(b // 11 + 1)
        if 4 * e0 + 9 * e1 + 14 * e2 + 11 * e3 == b
    }
    assert found == brute
