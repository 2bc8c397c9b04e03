"""Permutation-similarity canonical forms for sign-symmetric matrices.

A matrix fixed by a sign conjugation is permutation similar to a
block-diagonal matrix with one block per sign class; a matrix negated by
it is permutation similar to a block anti-diagonal matrix.  Both use the
same permutation: list the +1 positions in order, then the -1 positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Matrix, Permutation, SignVector, sign_conjugate
from .errors import NotSignAntisymmetricError, NotSignSymmetricError
from .invariants import Polynomial, char_poly, determinant, permanent


@dataclass(frozen=True)
class IndexPartition:
    """1-based positions of the +1 signs and of the -1 signs."""

    plus_indices: tuple[int, ...]
    minus_indices: tuple[int, ...]

    @property
    def plus_count(self) -> int:
        return len(self.plus_indices)


@dataclass(frozen=True)
class SymBlockForm:
    partition: IndexPartition
    permutation: Permutation
    plus_block: Matrix  # rows and columns with sign +1
    minus_block: Matrix  # rows and columns with sign -1
    conjugated: Matrix  # P^-1 * A * P, equal to diag(plus_block, minus_block)


@dataclass(frozen=True)
class AntisymBlockForm:
    partition: IndexPartition
    permutation: Permutation
    upper_block: Matrix  # +1 rows x -1 columns
    lower_block: Matrix  # -1 rows x +1 columns
    assembled: Matrix  # zero diagonal blocks, upper/lower on the anti-diagonal
    conjugated: Matrix  # P^-1 * A * P, equal to `assembled`


@dataclass(frozen=True)
class SymFactorReport:
    """Both sides of each factorization identity for a fixed matrix."""

    char_full: Polynomial
    char_product: Polynomial
    det_full: Fraction
    det_product: Fraction
    perm_full: Fraction
    perm_product: Fraction


@dataclass(frozen=True)
class AntisymFactorReport:
    """Invariants of a negated matrix and, when the sign classes balance,
    the signed block products they factor into.

    The determinant factors with sign (-1)^(n/2): the block anti-diagonal
    form needs (n/2)^2 column transpositions to become block diagonal, and
    (-1)^((n/2)^2) = (-1)^(n/2).  The superficially plausible sign (-1)^n
    is wrong whenever n = 2 (mod 4); tests pin this down at n=2.
    """

    plus_count: int
    minus_count: int
    det_full: Fraction
    perm_full: Fraction
    det_blocks_signed: Fraction | None  # (-1)^(n/2) * det(upper) * det(lower)
    perm_blocks: Fraction | None  # perm(upper) * perm(lower)
    sign_exponent: int | None  # n // 2 when balanced


def index_partition(c: SignVector) -> IndexPartition:
    """Increasing lists of the +1 and -1 positions (1-based)."""
    plus = tuple(i + 1 for i, s in enumerate(c.signs) if s == 1)
    minus = tuple(i + 1 for i, s in enumerate(c.signs) if s == -1)
    return IndexPartition(plus, minus)


def block_permutation(c: SignVector) -> Permutation:
    """Permutation sending position k to the k-th entry of plus ++ minus."""
    part = index_partition(c)
    return Permutation(part.plus_indices + part.minus_indices)


def _pick(a: Matrix, row_ids: tuple[int, ...], col_ids: tuple[int, ...]) -> Matrix:
    return Matrix(
        (tuple(a.entries[i - 1][j - 1] for j in col_ids) for i in row_ids),
        cols=len(col_ids),
    )


def assemble_diag(d: Matrix, e: Matrix) -> Matrix:
    """Block-diagonal matrix diag(d, e); either block may be 0x0."""
    n = d.rows + e.rows
    rows = [tuple(row) + (0,) * e.cols for row in d.entries]
    rows += [(0,) * d.cols + tuple(row) for row in e.entries]
    return Matrix(rows, cols=n)


def assemble_antidiag(f: Matrix, g: Matrix) -> Matrix:
    """Block matrix with zero diagonal blocks and f, g on the anti-diagonal;
    f is r x (n-r) and g is (n-r) x r."""
    r, s = f.rows, g.rows
    rows = [(0,) * r + tuple(row) for row in f.entries]
    rows += [tuple(row) + (0,) * s for row in g.entries]
    return Matrix(rows, cols=r + s)


def _conjugate_by_permutation(a: Matrix, p: Permutation) -> Matrix:
    pm = p.matrix()
    # permutation matrices are orthogonal, so the inverse is the transpose
    return pm.transpose() @ a @ pm


def sym_block_form(a: Matrix, c: SignVector) -> SymBlockForm:
    """Block-diagonal form of a matrix the conjugation fixes.

    Raises unless the matrix actually is fixed: corrupted inputs fail
    loudly instead of silently dropping their off-block entries.
    """
    if sign_conjugate(a, c) != a:
        raise NotSignSymmetricError("matrix is not fixed by this sign conjugation")
    part = index_partition(c)
    perm = block_permutation(c)
    plus_block = _pick(a, part.plus_indices, part.plus_indices)
    minus_block = _pick(a, part.minus_indices, part.minus_indices)
    conjugated = _conjugate_by_permutation(a, perm)
    if conjugated != assemble_diag(plus_block, minus_block):
        raise AssertionError("permutation conjugate disagrees with block assembly")
    return SymBlockForm(part, perm, plus_block, minus_block, conjugated)


def antisym_block_form(a: Matrix, c: SignVector) -> AntisymBlockForm:
    """Block anti-diagonal form of a matrix the conjugation negates."""
    if sign_conjugate(a, c) != -a:
        raise NotSignAntisymmetricError("matrix is not negated by this sign conjugation")
    part = index_partition(c)
    perm = block_permutation(c)
    upper = _pick(a, part.plus_indices, part.minus_indices)
    lower = _pick(a, part.minus_indices, part.plus_indices)
    assembled = assemble_antidiag(upper, lower)
    conjugated = _conjugate_by_permutation(a, perm)
    if conjugated != assembled:
        raise AssertionError("permutation conjugate disagrees with block assembly")
    return AntisymBlockForm(part, perm, upper, lower, assembled, conjugated)


def factor_invariants_sym(a: Matrix, c: SignVector) -> SymFactorReport:
    """Characteristic polynomial, determinant, and permanent of a fixed
    matrix next to the products over its two diagonal blocks."""
    form = sym_block_form(a, c)
    d, e = form.plus_block, form.minus_block
    return SymFactorReport(
        char_full=char_poly(a),
        char_product=char_poly(d) * char_poly(e),
        det_full=determinant(a),
        det_product=determinant(d) * determinant(e),
        perm_full=permanent(a),
        perm_product=permanent(d) * permanent(e),
    )


def factor_invariants_antisym(a: Matrix, c: SignVector) -> AntisymFactorReport:
    """Determinant and permanent of a negated matrix; both vanish unless
    the sign classes have equal size, in which case they factor through
    the two anti-diagonal blocks."""
    form = antisym_block_form(a, c)
    r = form.partition.plus_count
    s = len(c) - r
    det_full = determinant(a)
    perm_full = permanent(a)
    if r != s:
        if det_full != 0 or perm_full != 0:
            raise AssertionError("unbalanced anti-diagonal form must have det = perm = 0")
        return AntisymFactorReport(r, s, det_full, perm_full, None, None, None)
    sign = -1 if r % 2 else 1
    det_blocks = sign * determinant(form.upper_block) * determinant(form.lower_block)
    perm_blocks = permanent(form.upper_block) * permanent(form.lower_block)
    return AntisymFactorReport(r, s, det_full, perm_full, det_blocks, perm_blocks, r)
