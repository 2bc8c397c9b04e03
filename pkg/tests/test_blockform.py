"""Block canonical forms and their invariant factorizations."""

import random

import pytest

from signconj import (
    Matrix,
    NotSignAntisymmetricError,
    NotSignSymmetricError,
    Permutation,
    antisym_block_form,
    antisym_part,
    assemble_antidiag,
    assemble_diag,
    block_permutation,
    char_poly,
    determinant,
    factor_invariants_antisym,
    factor_invariants_sym,
    index_partition,
    parse_sign_vector,
    permanent,
    sym_block_form,
    sym_part,
)
from oracles import random_matrix, random_sign_vector


class TestIndexPartition:
    @pytest.mark.parametrize(
        "signs,plus,minus",
        [
            ("1,1,-1", (1, 2), (3,)),
            ("1,-1,1,-1", (1, 3), (2, 4)),
            ("1,1,1,1", (1, 2, 3, 4), ()),
        ],
    )
    def test_examples(self, signs, plus, minus):
        part = index_partition(parse_sign_vector(signs))
        assert part.plus_indices == plus
        assert part.minus_indices == minus
        assert 1 in part.plus_indices


class TestBlockPermutation:
    @pytest.mark.parametrize(
        "signs,images",
        [
            ("1,-1,1", (1, 3, 2)),
            ("1,1,-1", (1, 2, 3)),
            ("1,-1,-1,1", (1, 4, 2, 3)),
        ],
    )
    def test_examples(self, signs, images):
        assert block_permutation(parse_sign_vector(signs)) == Permutation(images)

    def test_orthogonal(self):
        p = block_permutation(parse_sign_vector("1,-1,1,-1")).matrix()
        assert p.transpose() @ p == Matrix.identity(4)


class TestSymBlockForm:
    def test_identity_permutation_case(self):
        a = Matrix([[1, 2, 0], [3, 4, 0], [0, 0, 5]])
        form = sym_block_form(a, parse_sign_vector("1,1,-1"))
        assert form.plus_block == Matrix([[1, 2], [3, 4]])
        assert form.minus_block == Matrix([[5]])
        assert form.permutation == Permutation((1, 2, 3))
        assert form.conjugated == a

    def test_interleaved_case(self):
        a = Matrix([[1, 0, 5], [0, 2, 0], [7, 0, 3]])
        form = sym_block_form(a, parse_sign_vector("1,-1,1"))
        assert form.permutation == Permutation((1, 3, 2))
        assert form.plus_block == Matrix([[1, 5], [7, 3]])
        assert form.minus_block == Matrix([[2]])
        assert form.conjugated == assemble_diag(form.plus_block, form.minus_block)

    def test_all_ones_gives_empty_minus_block(self):
        a = Matrix([[1, 2], [3, 4]])
        form = sym_block_form(a, parse_sign_vector("1,1"))
        assert form.plus_block == a
        assert (form.minus_block.rows, form.minus_block.cols) == (0, 0)
        assert form.conjugated == a

    def test_rejects_unfixed_matrix(self):
        with pytest.raises(NotSignSymmetricError):
            sym_block_form(Matrix([[1, 2], [3, 4]]), parse_sign_vector("1,-1"))

    def test_random_sym_matrices_block_diagonalize(self):
        rng = random.Random(21)
        for _ in range(60):
            n = rng.randint(1, 8)
            c = random_sign_vector(rng, n)
            a = sym_part(random_matrix(rng, n), c)
            form = sym_block_form(a, c)
            assert form.conjugated == assemble_diag(form.plus_block, form.minus_block)


class TestAntisymBlockForm:
    def test_two_by_two(self):
        a = Matrix([[0, 2], [3, 0]])
        form = antisym_block_form(a, parse_sign_vector("1,-1"))
        assert form.upper_block == Matrix([[2]])
        assert form.lower_block == Matrix([[3]])
        assert form.assembled == a
        assert form.conjugated == a

    def test_identity_permutation_case(self):
        a = Matrix([[0, 0, 1], [0, 0, 2], [3, 4, 0]])
        form = antisym_block_form(a, parse_sign_vector("1,1,-1"))
        assert form.upper_block == Matrix([[1], [2]])
        assert form.lower_block == Matrix([[3, 4]])
        assert form.assembled == a

    def test_all_ones_admits_only_zero(self):
        form = antisym_block_form(Matrix.zero(2), parse_sign_vector("1,1"))
        assert (form.upper_block.rows, form.upper_block.cols) == (2, 0)
        assert (form.lower_block.rows, form.lower_block.cols) == (0, 2)
        assert form.assembled == Matrix.zero(2)

    def test_rejects_unnegated_matrix(self):
        with pytest.raises(NotSignAntisymmetricError):
            antisym_block_form(Matrix([[1, 2], [3, 4]]), parse_sign_vector("1,-1"))

    def test_random_antisym_matrices_antidiagonalize(self):
        rng = random.Random(22)
        for _ in range(60):
            n = rng.randint(1, 8)
            c = random_sign_vector(rng, n)
            a = antisym_part(random_matrix(rng, n), c)
            form = antisym_block_form(a, c)
            assert form.conjugated == form.assembled
            assert form.assembled == assemble_antidiag(form.upper_block, form.lower_block)


class TestSymFactorizations:
    def test_hand_value(self):
        a = Matrix([[1, 0, 5], [0, 2, 0], [7, 0, 3]])
        rep = factor_invariants_sym(a, parse_sign_vector("1,-1,1"))
        assert rep.det_full == rep.det_product == -64
        assert rep.char_full == rep.char_product
        assert rep.perm_full == rep.perm_product

    def test_block_numbers(self):
        a = Matrix([[1, 2, 0], [3, 4, 0], [0, 0, 5]])
        rep = factor_invariants_sym(a, parse_sign_vector("1,1,-1"))
        assert rep.det_full == -10
        assert rep.perm_full == 50

    def test_empty_minus_block_factors_trivially(self):
        a = Matrix([[1, 2], [3, 4]])
        rep = factor_invariants_sym(a, parse_sign_vector("1,1"))
        assert rep.char_product == char_poly(a)
        assert rep.det_product == determinant(a)
        assert rep.perm_product == permanent(a)

    def test_random(self):
        rng = random.Random(23)
        for _ in range(40):
            n = rng.randint(1, 7)
            c = random_sign_vector(rng, n)
            a = sym_part(random_matrix(rng, n), c)
            rep = factor_invariants_sym(a, c)
            assert rep.char_full == rep.char_product
            assert rep.det_full == rep.det_product
            assert rep.perm_full == rep.perm_product


class TestAntisymFactorizations:
    def test_balanced_two_by_two(self):
        rep = factor_invariants_antisym(Matrix([[0, 2], [3, 0]]), parse_sign_vector("1,-1"))
        assert rep.det_full == -6
        assert rep.det_blocks_signed == -6
        assert rep.perm_full == rep.perm_blocks == 6
        assert rep.sign_exponent == 1

    def test_unbalanced_vanishes(self):
        a = Matrix([[0, 0, 1], [0, 0, 2], [3, 4, 0]])
        rep = factor_invariants_antisym(a, parse_sign_vector("1,1,-1"))
        assert rep.det_full == 0
        assert rep.perm_full == 0
        assert rep.det_blocks_signed is None

    def test_zero_matrix(self):
        rep = factor_invariants_antisym(Matrix.zero(3), parse_sign_vector("1,-1,1"))
        assert rep.det_full == 0 and rep.perm_full == 0

    def test_printed_alternative_sign_fails_at_n2(self):
        # determinant of [[0, f], [g, 0]] is -f*g, so any sign rule of the
        # form (-1)^n (which is +1 at n=2) is refuted by this witness
        a = Matrix([[0, 2], [3, 0]])
        rep = factor_invariants_antisym(a, parse_sign_vector("1,-1"))
        blocks_det = determinant(rep_upper(a)) * determinant(rep_lower(a))
        assert rep.det_full == (-1) ** (2 // 2) * blocks_det
        assert rep.det_full != (-1) ** 2 * blocks_det

    def test_balanced_random_even_sizes(self):
        rng = random.Random(24)
        for n in (2, 4, 6):
            for _ in range(20):
                # build a sign vector with exactly n/2 plus signs, first fixed
                tail = [1] * (n // 2 - 1) + [-1] * (n // 2)
                rng.shuffle(tail)
                c = parse_sign_vector(",".join(str(s) for s in [1] + tail))
                a = antisym_part(random_matrix(rng, n), c)
                rep = factor_invariants_antisym(a, c)
                assert rep.det_full == rep.det_blocks_signed
                assert rep.perm_full == rep.perm_blocks

    def test_unbalanced_random(self):
        rng = random.Random(25)
        for _ in range(40):
            n = rng.randint(2, 8)
            c = random_sign_vector(rng, n)
            r = sum(1 for s in c if s == 1)
            if 2 * r == n:
                continue
            a = antisym_part(random_matrix(rng, n), c)
            rep = factor_invariants_antisym(a, c)
            assert rep.det_full == 0
            assert rep.perm_full == 0


def rep_upper(a: Matrix) -> Matrix:
    return Matrix([[a[0, 1]]])


def rep_lower(a: Matrix) -> Matrix:
    return Matrix([[a[1, 0]]])
