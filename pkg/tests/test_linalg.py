"""Exact scalar and matrix arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from siegelalg.errors import ValidationError
from siegelalg.linalg import (
    GR_I,
    GR_ONE,
    GaussianRational,
    Matrix,
    from_real_rows,
    gr,
    in_span,
)


class TestGaussianRational:
    def test_arithmetic_exact(self):
        a = gr(Fraction(1, 3), Fraction(1, 2))
        b = gr(Fraction(2, 3), Fraction(-1, 2))
        assert a + b == gr(1, 0)
        assert (a * b).re == Fraction(2, 9) + Fraction(1, 4)
        assert a - a == gr(0, 0)

    def test_division_roundtrip(self):
        a = gr(Fraction(3, 7), Fraction(-5, 2))
        b = gr(Fraction(1, 4), Fraction(2, 3))
        assert (a / b) * b == a

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            gr(1) / gr(0)

    def test_conjugation_involution(self):
        a = gr(Fraction(2, 5), Fraction(-7, 3))
        assert a.conjugate().conjugate() == a

    def test_abs2_nonnegative_and_zero_iff_zero(self):
        assert gr(0, 0).abs2() == 0
        z = gr(Fraction(-1, 2), Fraction(1, 3))
        assert z.abs2() == Fraction(1, 4) + Fraction(1, 9)
        assert z.abs2() > 0

    def test_coercion(self):
        assert gr(1, 2) * 2 == gr(2, 4)
        assert 1 + gr(0, 1) == gr(1, 1)
        assert GR_I * GR_I == gr(-1)


class TestRref:
    def test_identity(self):
        res = Matrix.identity(3).rref()
        assert res.rank == 3
        assert res.pivots == (0, 1, 2)

    def test_zero_matrix(self):
        res = Matrix.zeros(2, 2).rref()
        assert res.rank == 0
        assert res.pivots == ()

    def test_dependent_rows(self):
        m = from_real_rows([[1, 2], [2, 4]])
        res = m.rref()
        assert res.rank == 1
        assert res.pivots == (0,)

    def test_idempotent(self):
        m = from_real_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        once = m.rref().matrix
        assert once.rref().matrix == once


class TestNullspace:
    def test_identity_has_trivial_kernel(self):
        assert Matrix.identity(2).nullspace_basis() == []

    def test_single_equation(self):
        m = from_real_rows([[1, -1]])
        (v,) = m.nullspace_basis()
        assert v == (GR_ONE, GR_ONE)

    def test_rank_one(self):
        m = from_real_rows([[1, 2], [2, 4]])
        (v,) = m.nullspace_basis()
        # free column 1 set to one
        assert v == (gr(-2), GR_ONE)

    def test_zero_rows_matrix(self):
        m = Matrix.zeros(0, 3)
        basis = m.nullspace_basis()
        assert len(basis) == 3


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


@st.composite
def small_matrices(draw):
    nrows = draw(st.integers(min_value=1, max_value=4))
    ncols = draw(st.integers(min_value=1, max_value=4))
    rows = [
        [draw(small_fractions) for _ in range(ncols)] for _ in range(nrows)
    ]
    return from_real_rows(rows)


@given(small_matrices())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(m):
    assert m.rank() + len(m.nullspace_basis()) == m.ncols


@given(small_matrices())
@settings(max_examples=60, deadline=None)
def test_nullspace_vectors_annihilated(m):
    for v in m.nullspace_basis():
        assert all(x.is_zero() for x in m.apply(v))


@given(small_matrices(), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_row_permutation_invariance(m, rnd):
    rows = list(m.entries)
    rnd.shuffle(rows)
    permuted = Matrix(m.nrows, m.ncols, tuple(rows))
    assert permuted.rank() == m.rank()
    assert len(permuted.nullspace_basis()) == len(m.nullspace_basis())


@given(small_matrices())
@settings(max_examples=40, deadline=None)
def test_rref_idempotence(m):
    reduced = m.rref().matrix
    assert reduced.rref().matrix == reduced


class TestMatrixStructure:
    def test_real_flag_rejects_complex(self):
        with pytest.raises(ValidationError):
            Matrix.from_rows([[gr(0, 1)]], real=True)

    def test_hermitian_detection(self):
        h = Matrix.from_rows([[gr(2), gr(1, 3)], [gr(1, -3), gr(5)]])
        assert h.is_hermitian()
        assert not Matrix.from_rows([[gr(0), gr(1)], [gr(0), gr(0)]]).is_hermitian()

    def test_matmul_and_conj_transpose(self):
        a = Matrix.from_rows([[gr(0, 1), gr(1)]])
        assert a.conj_transpose().entries[0][0] == gr(0, -1)
        prod = a @ a.conj_transpose()
        assert prod.entry(0, 0) == gr(2)

    def test_in_span(self):
        v1 = [gr(1), gr(0)]
        v2 = [gr(0), gr(1)]
        assert in_span([v1], [gr(3), gr(0)], 2)
        assert not in_span([v1], v2, 2)
        assert in_span([v1, v2], [gr(5), gr(-7)], 2)
        assert in_span([], [gr(0), gr(0)], 2)
