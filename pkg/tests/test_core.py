"""Core types and the sign-conjugation map."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signconj import (
    DimensionMismatchError,
    EmptySignVectorError,
    FirstCoordinateNotOneError,
    MalformedSignError,
    Matrix,
    NotSquareError,
    Permutation,
    SignVector,
    admissible_sign_vectors,
    as_scalar,
    conjugate_by_signature,
    parse_sign_vector,
    sign_conjugate,
    signature_matrix,
)

signs_st = st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(1), *[st.sampled_from((1, -1))] * (n - 1))
)
scalar_st = st.fractions(min_value=-9, max_value=9, max_denominator=9)


def square_matrix_st(n_max=5):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(
            st.lists(scalar_st, min_size=n, max_size=n), min_size=n, max_size=n
        )
    )


def matrix_and_signs_st(n_max=5):
    return st.integers(1, n_max).flatmap(
        lambda n: st.tuples(
            st.lists(st.lists(scalar_st, min_size=n, max_size=n), min_size=n, max_size=n),
            st.tuples(st.just(1), *[st.sampled_from((1, -1))] * (n - 1)),
        )
    )


class TestScalar:
    def test_string_forms(self):
        assert as_scalar("2/3") == Fraction(2, 3)
        assert as_scalar("-5") == Fraction(-5)
        assert as_scalar(7) == Fraction(7)

    def test_rejects_decimals_and_floats(self):
        with pytest.raises(ValueError):
            as_scalar("1.5")
        with pytest.raises(TypeError):
            as_scalar(1.5)

    def test_lowest_terms(self):
        x = as_scalar("4/6")
        assert (x.numerator, x.denominator) == (2, 3)


class TestMatrix:
    def test_shape_and_entries(self):
        a = Matrix([[1, 2, 3], [4, 5, 6]])
        assert (a.rows, a.cols) == (2, 3)
        assert a[1, 2] == 6

    def test_ragged_rows_rejected(self):
        with pytest.raises(DimensionMismatchError):
            Matrix([[1, 2], [3]])

    def test_product_identity_law(self):
        a = Matrix([[1, 2], [3, 4]])
        assert a @ Matrix.identity(2) == a

    def test_transposition_squared_is_identity(self):
        swap = Matrix([[0, 1], [1, 0]])
        assert swap @ swap == Matrix.identity(2)

    def test_product_hand_expansion(self):
        assert Matrix([[1, 1], [0, 1]]) @ Matrix([[1, 0], [1, 1]]) == Matrix([[2, 1], [1, 1]])

    def test_product_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            Matrix([[1, 2]]) @ Matrix([[1, 2]])

    def test_add_transpose_scale(self):
        a = Matrix([[1, 2], [3, 4]])
        assert a + (-a) == Matrix.zero(2)
        assert a.transpose() == Matrix([[1, 3], [2, 4]])
        assert a * Fraction(1, 2) == Matrix([["1/2", 1], ["3/2", 2]])

    def test_empty_shapes(self):
        assert (Matrix([], cols=0).rows, Matrix([], cols=0).cols) == (0, 0)
        tall = Matrix([[], [], []])
        assert (tall.rows, tall.cols) == (3, 0)

    def test_hashable_and_immutable(self):
        a = Matrix([[1]])
        assert hash(a) == hash(Matrix([[1]]))
        with pytest.raises(AttributeError):
            a.rows = 5


class TestSignVector:
    def test_parse_spec_forms(self):
        assert parse_sign_vector("1,1,-1").signs == (1, 1, -1)
        assert parse_sign_vector("+").signs == (1,)
        assert parse_sign_vector("+1 -1  +1").signs == (1, -1, 1)

    def test_parse_rejects_first_minus(self):
        with pytest.raises(FirstCoordinateNotOneError):
            parse_sign_vector("-1,1")

    def test_parse_rejects_unknown_token(self):
        with pytest.raises(MalformedSignError):
            parse_sign_vector("1,0,1")

    def test_parse_rejects_empty(self):
        with pytest.raises(EmptySignVectorError):
            parse_sign_vector("  ")

    def test_constructor_invariants(self):
        with pytest.raises(MalformedSignError):
            SignVector([1, 2])
        with pytest.raises(EmptySignVectorError):
            SignVector([])

    def test_admissible_count_and_order(self):
        vs = list(admissible_sign_vectors(3))
        assert [v.signs for v in vs] == [(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)]


class TestPermutation:
    def test_validation(self):
        with pytest.raises(DimensionMismatchError):
            Permutation((1, 1, 3))

    def test_matrix_and_inverse(self):
        p = Permutation((2, 3, 1))
        assert p.matrix() @ p.inverse().matrix() == Matrix.identity(3)
        assert p(1) == 2 and p.inverse()(2) == 1


class TestSignConjugation:
    def test_three_by_three_pattern(self):
        a = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        expected = Matrix([[1, 2, -3], [4, 5, -6], [-7, -8, 9]])
        assert sign_conjugate(a, parse_sign_vector("1,1,-1")) == expected

    def test_all_ones_is_identity_map(self):
        a = Matrix([[1, 2], [3, 4]])
        assert sign_conjugate(a, SignVector.all_ones(2)) == a

    def test_involution_example(self):
        a = Matrix([[0, 7], [-3, 5]])
        c = parse_sign_vector("1,-1")
        assert sign_conjugate(sign_conjugate(a, c), c) == a

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            sign_conjugate(Matrix([[1, 2], [3, 4]]), parse_sign_vector("1,-1,1"))
        with pytest.raises(NotSquareError):
            sign_conjugate(Matrix([[1, 2, 3], [4, 5, 6]]), parse_sign_vector("1,-1"))

    def test_signature_matrix_values(self):
        assert signature_matrix(parse_sign_vector("1,-1")) == Matrix([[1, 0], [0, -1]])
        assert signature_matrix(parse_sign_vector("1,1,-1")) == Matrix.diagonal((1, 1, -1))

    def test_signature_matrix_self_inverse(self):
        p = signature_matrix(parse_sign_vector("1,-1,1"))
        assert p @ p == Matrix.identity(3)

    def test_conjugate_by_signature_hand_value(self):
        a = Matrix([[1, 2], [3, 4]])
        assert conjugate_by_signature(a, parse_sign_vector("1,-1")) == Matrix([[1, -2], [-3, 4]])

    def test_conjugate_by_signature_fixes_identity(self):
        for c in admissible_sign_vectors(4):
            assert conjugate_by_signature(Matrix.identity(4), c) == Matrix.identity(4)

    def test_matches_entrywise_on_pattern(self):
        a = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        c = parse_sign_vector("1,-1,-1")
        expected = Matrix([[1, -2, -3], [-4, 5, 6], [-7, 8, 9]])
        assert sign_conjugate(a, c) == expected
        assert conjugate_by_signature(a, c) == expected

    @given(matrix_and_signs_st())
    def test_entrywise_equals_product_route(self, data):
        rows, signs = data
        a, c = Matrix(rows), SignVector(signs)
        assert sign_conjugate(a, c) == conjugate_by_signature(a, c)

    @given(matrix_and_signs_st())
    def test_involution_and_diagonal(self, data):
        rows, signs = data
        a, c = Matrix(rows), SignVector(signs)
        conj = sign_conjugate(a, c)
        assert sign_conjugate(conj, c) == a
        assert all(conj[i, i] == a[i, i] for i in range(a.rows))

    @given(matrix_and_signs_st(), scalar_st, scalar_st)
    def test_linearity(self, data, alpha, beta):
        rows, signs = data
        a, c = Matrix(rows), SignVector(signs)
        b = a.transpose()
        lhs = sign_conjugate(a * alpha + b * beta, c)
        assert lhs == sign_conjugate(a, c) * alpha + sign_conjugate(b, c) * beta

    @given(matrix_and_signs_st())
    def test_multiplicative(self, data):
        rows, signs = data
        a, c = Matrix(rows), SignVector(signs)
        b = a.transpose()
        assert sign_conjugate(a @ b, c) == sign_conjugate(a, c) @ sign_conjugate(b, c)
