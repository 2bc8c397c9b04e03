"""Splitting a matrix into the parts a sign conjugation fixes and negates.

The two parts are complementary masks decided by the sign pattern
c_i * c_j, they sum back to the input, and the order-two principal
minor/permanent sums are additive across the split.  The classic
transpose-based symmetric/antisymmetric split has the same additivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import Matrix, SignVector, sign_conjugate
from .errors import DimensionMismatchError, OrderOutOfRangeError, RangeError
from .invariants import sum_principal_minors, sum_principal_permanents

HALF = Fraction(1, 2)


class Symmetry(Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"
    NEITHER = "neither"


@dataclass(frozen=True)
class DecompositionPair:
    sym: Matrix
    antisym: Matrix


def _check_pair(a: Matrix, c: SignVector) -> None:
    a.require_square("sign decomposition")
    if a.rows != len(c):
        raise DimensionMismatchError(f"matrix is {a.rows}x{a.cols} but sign vector has length {len(c)}")


def sym_part(a: Matrix, c: SignVector) -> Matrix:
    """Entries where c_i * c_j = +1, zero elsewhere.

    The mask comes from c alone (never from comparing A with its
    conjugate), so the operation is well defined for every A.  Equals
    (A + conjugate)/2.
    """
    _check_pair(a, c)
    return Matrix(
        (
            tuple(e if ci * cj == 1 else 0 for e, cj in zip(row, c.signs))
            for row, ci in zip(a.entries, c.signs)
        ),
        cols=a.cols,
    )


def antisym_part(a: Matrix, c: SignVector) -> Matrix:
    """Entries where c_i * c_j = -1, zero elsewhere; diagonal is always zero."""
    _check_pair(a, c)
    return Matrix(
        (
            tuple(e if ci * cj == -1 else 0 for e, cj in zip(row, c.signs))
            for row, ci in zip(a.entries, c.signs)
        ),
        cols=a.cols,
    )


def split(a: Matrix, c: SignVector) -> DecompositionPair:
    """Both mask parts; they reconstruct A exactly."""
    return DecompositionPair(sym_part(a, c), antisym_part(a, c))


def classify(a: Matrix, c: SignVector) -> Symmetry:
    """SYMMETRIC if the conjugation fixes A, ANTISYMMETRIC if it negates A.

    The zero matrix satisfies both definitions and reports SYMMETRIC.
    """
    conjugated = sign_conjugate(a, c)
    if conjugated == a:
        return Symmetry.SYMMETRIC
    if conjugated == -a:
        return Symmetry.ANTISYMMETRIC
    return Symmetry.NEITHER


def classic_split(a: Matrix) -> DecompositionPair:
    """Transpose-based split: ((A + A^T)/2, (A - A^T)/2)."""
    a.require_square("transpose split")
    t = a.transpose()
    return DecompositionPair((a + t) * HALF, (a - t) * HALF)


def subspace_dims(n: int, r: int) -> tuple[int, int]:
    """Dimensions (kept entries) of the two mask subspaces for a sign
    vector with r entries equal to +1: (r^2 + (n-r)^2, 2r(n-r))."""
    if not 1 <= r <= n:
        raise RangeError(f"need 1 <= r <= n, got r={r}, n={n}")
    return r * r + (n - r) * (n - r), 2 * r * (n - r)


def _order2_triple(a: Matrix, pair: DecompositionPair, summer) -> tuple[Fraction, Fraction, Fraction]:
    if a.rows < 2:
        raise OrderOutOfRangeError("order-2 additivity needs n >= 2")
    return summer(a, 2), summer(pair.sym, 2), summer(pair.antisym, 2)


def minor2_additivity(a: Matrix, c: SignVector) -> tuple[Fraction, Fraction, Fraction]:
    """(sum of order-2 minors of A, of the fixed part, of the negated part);
    the first equals the sum of the other two."""
    return _order2_triple(a, split(a, c), sum_principal_minors)


def permanent2_additivity(a: Matrix, c: SignVector) -> tuple[Fraction, Fraction, Fraction]:
    """Order-2 principal permanent sums across the sign split."""
    return _order2_triple(a, split(a, c), sum_principal_permanents)


def classic_minor2_additivity(a: Matrix) -> tuple[Fraction, Fraction, Fraction]:
    """Order-2 principal minor sums across the transpose split."""
    return _order2_triple(a, classic_split(a), sum_principal_minors)


def classic_permanent2_additivity(a: Matrix) -> tuple[Fraction, Fraction, Fraction]:
    """Order-2 principal permanent sums across the transpose split."""
    return _order2_triple(a, classic_split(a), sum_principal_permanents)
