"""Exact matrix algebra and the semi-tensor product."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import ShapeError
from src.core.linalg import RationalMatrix, ldl_pivots, stp, to_fraction


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(
                st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=n, max_size=n),
                min_size=m,
                max_size=m,
            ).map(RationalMatrix.from_rows)
        )
    )


# --- semi-tensor product -------------------------------------------------

def test_stp_with_identity_is_ordinary_product():
    a = RationalMatrix.from_rows([[1, 2], [3, Fraction(1, 2)]])
    assert stp(a, RationalMatrix.identity(2)) == a


def test_stp_row_times_delta():
    row = RationalMatrix.row_vector([1, 2, 3, 4])
    assert stp(row, RationalMatrix.delta(2, 1)) == RationalMatrix.row_vector([1, 2])
    assert stp(row, RationalMatrix.delta(2, 2)) == RationalMatrix.row_vector([3, 4])


def test_stp_of_deltas():
    assert stp(RationalMatrix.delta(2, 1), RationalMatrix.delta(2, 2)) == RationalMatrix.delta(4, 2)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_delta_law(m, n):
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            assert stp(RationalMatrix.delta(m, i), RationalMatrix.delta(n, j)) == RationalMatrix.delta(m * n, (i - 1) * n + j)


@settings(max_examples=40, deadline=None)
@given(matrices(), matrices(), matrices())
def test_stp_associative(a, b, c):
    assert stp(stp(a, b), c) == stp(a, stp(b, c))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_stp_conformable_reduces_to_product(data):
    a = data.draw(matrices())
    b = data.draw(st.lists(
        st.lists(st.integers(-5, 5), min_size=2, max_size=2), min_size=a.ncols, max_size=a.ncols
    ).map(RationalMatrix.from_rows))
    assert stp(a, b) == a @ b


# --- elimination ---------------------------------------------------------

def test_nullspace_and_rank():
    a = RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    kernel = a.nullspace()
    assert a.rank() == 2
    assert kernel.shape == (3, 1)
    assert (a @ kernel).is_zero()


def test_nullspace_of_empty_row_set_is_everything():
    assert RationalMatrix.zeros(0, 3).nullspace() == RationalMatrix.identity(3)


def test_zero_size_products():
    assert RationalMatrix.zeros(3, 0) @ RationalMatrix.zeros(0, 2) == RationalMatrix.zeros(3, 2)
    assert RationalMatrix.zeros(3, 0).rank() == 0


def test_column_basis_keeps_original_columns():
    a = RationalMatrix.from_rows([[1, 2, 0], [1, 2, 1]])
    assert a.column_basis() == RationalMatrix.from_rows([[1, 0], [1, 1]])


def test_primitive_columns():
    a = RationalMatrix.from_columns([[Fraction(-1, 2), Fraction(1, 3), 0]], 3)
    assert a.primitive_columns().column(0) == (3, -2, 0)


def test_solve_consistent_and_inconsistent():
    a = RationalMatrix.from_rows([[1, 1], [1, -1]])
    x = a.solve(RationalMatrix.column_vector([3, 1]))
    assert x.flat() == (2, 1)
    singular = RationalMatrix.from_rows([[1, 1], [2, 2]])
    assert singular.solve(RationalMatrix.column_vector([1, 3])) is None


def test_inverse_exact():
    a = RationalMatrix.from_rows([[2, 1], [1, 1]])
    assert a @ a.inverse() == RationalMatrix.identity(2)
    with pytest.raises(ShapeError):
        RationalMatrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_ldl_pivots():
    assert ldl_pivots(RationalMatrix.diagonal([2, 3])) == [2, 3]
    assert ldl_pivots(RationalMatrix.from_rows([[1, 2], [2, 1]])) == [1, -3]


def test_to_fraction_reads_exactly():
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction(0.1) == Fraction(1, 10)
    assert to_fraction(7) == Fraction(7)
    with pytest.raises(TypeError):
        to_fraction(True)


def test_ragged_rows_rejected():
    with pytest.raises(ShapeError):
        RationalMatrix.from_rows([[1, 2], [3]])
