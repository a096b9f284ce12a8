from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from semitrace.linalg import Span, integral_row, nullspace, primitive, rank, rref

matrices = st.integers(1, 5).flatmap(lambda w: st.lists(
    st.lists(st.integers(-4, 4), min_size=w, max_size=w), min_size=0, max_size=5).map(
    lambda rows: (rows, w)))


def test_primitive_and_integral_row():
    assert primitive([4, -6, 8]) == [2, -3, 4]
    assert primitive([-2, 4]) == [1, -2]
    assert primitive([0, 0]) == [0, 0]
    assert integral_row([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]


@given(matrices)
def test_rank_matches_sympy(case):
    rows, width = case
    expected = sympy.Matrix(rows).rank() if rows else 0
    assert rank(rows, width) == expected


@given(matrices)
def test_nullspace_matches_sympy(case):
    rows, width = case
    basis = nullspace(rows, width)
    expected = width - (sympy.Matrix(rows).rank() if rows else 0)
    assert len(basis) == expected
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    if basis:
        assert sympy.Matrix(basis).rank() == len(basis)


@given(matrices)
def test_span_membership(case):
    rows, width = case
    span = Span(width)
    for r in rows:
        span.add(r)
    for r in rows:
        assert r in span
    assert [0] * width in span


def test_rref_is_reduced():
    rows = [[1, 2, 3], [2, 4, 7], [0, 0, 1]]
    echelon = rref(rows, 3)
    pivots = [c for c, _ in echelon]
    assert pivots == [0, 2]
    for c, row in echelon:
        assert all(other[c] == 0 for c2, other in echelon if c2 != c)
