"""Exact matrix invariants: trace, determinant, permanent, rank, principal
minors/permanents, and the characteristic and permanental polynomials.

The exponential-cost kernels (permanent, subset sums) first clear the
global denominator and run on plain Python ints, which is 20-50x faster
than Fraction arithmetic and just as exact; results are rescaled back to
rationals at the end.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .core import Matrix, ScalarLike, as_scalar
from .errors import (
    IndexOutOfRangeError,
    OrderOutOfRangeError,
    SizeCapExceededError,
)

DEFAULT_PERMANENT_CAP = 20
DEFAULT_PERM_POLY_CAP = 12
DEFAULT_MINOR_SUM_CAP = 16


class Polynomial:
    """Polynomial with exact rational coefficients, ascending by power."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[ScalarLike]):
        coeffs = [as_scalar(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def one(cls) -> Polynomial:
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __call__(self, x: ScalarLike) -> Fraction:
        x = as_scalar(x)
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return Polynomial(merged)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return Polynomial(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coefficients)})"

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0 and self.degree > 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = f"{mag}"
            elif power == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{power}" if mag == 1 else f"{mag}*x^{power}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _clear_denominators(a: Matrix) -> tuple[list[list[int]], int]:
    """Return (den*A as int rows, den) where den is the lcm of all denominators."""
    den = 1
    for row in a.entries:
        for e in row:
            den = den * e.denominator // math.gcd(den, e.denominator)
    rows = [[e.numerator * (den // e.denominator) for e in row] for row in a.entries]
    return rows, den


def _det_bareiss_int(rows: list[list[int]]) -> int:
    """Fraction-free elimination; every interior division is exact."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            lead = row_i[k]
            pivot_val = row_k[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot_val - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _perm_ryser_int(rows: Sequence[Sequence[int]]) -> int:
    """Permanent by inclusion-exclusion over column subsets, walked in
    Gray-code order so each step updates the row sums in O(n)."""
    n = len(rows)
    if n == 0:
        return 1
    cols = [tuple(row[j] for row in rows) for j in range(n)]
    sums = [0] * n
    total = 0
    gray = 0
    sign = 1
    for k in range(1, 1 << n):
        # the bit flipped between consecutive Gray codes is the lowest set bit of k
        j = (k & -k).bit_length() - 1
        bit = 1 << j
        gray ^= bit
        col = cols[j]
        if gray & bit:
            for i in range(n):
                sums[i] += col[i]
        else:
            for i in range(n):
                sums[i] -= col[i]
        sign = -sign
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        total += prod if sign > 0 else -prod
    return total if n % 2 == 0 else -total


def _char_poly_int(rows: list[list[int]]) -> list[int]:
    """Ascending coefficients of det(x*I - N) for an integer matrix N.

    Faddeev-LeVerrier recursion; the division by k is exact because the
    coefficients of an integer matrix's characteristic polynomial are
    integers and so is every intermediate matrix.
    """
    n = len(rows)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        nk = [
            [sum(rows[i][l] * m[l][j] for l in range(n)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(nk[i][i] for i in range(n))
        if tr % k:
            raise AssertionError("inexact division in characteristic recursion")
        c = -(tr // k)
        coeffs[n - k] = c
        if k < n:
            m = nk
            for i in range(n):
                m[i][i] += c
    return coeffs


def trace(a: Matrix) -> Fraction:
    """Sum of the diagonal entries."""
    a.require_square("trace")
    return sum((a.entries[i][i] for i in range(a.rows)), Fraction(0))


def determinant(a: Matrix) -> Fraction:
    """Exact determinant via fraction-free elimination on the cleared matrix."""
    a.require_square("determinant")
    rows, den = _clear_denominators(a)
    return Fraction(_det_bareiss_int(rows), den ** a.rows)


def permanent(a: Matrix, *, cap: int = DEFAULT_PERMANENT_CAP) -> Fraction:
    """Exact permanent; cost 2^n, guarded by `cap`."""
    a.require_square("permanent")
    if a.rows > cap:
        raise SizeCapExceededError(f"permanent of a {a.rows}x{a.rows} matrix exceeds cap {cap}")
    rows, den = _clear_denominators(a)
    return Fraction(_perm_ryser_int(rows), den ** a.rows)


def rank(a: Matrix) -> int:
    """Rank over the rationals by exact Gaussian elimination."""
    rows = [list(row) for row in a.entries]
    r = 0
    for col in range(a.cols):
        pivot = next((i for i in range(r, a.rows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        for i in range(r + 1, a.rows):
            if rows[i][col]:
                factor = rows[i][col] / lead
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == a.rows:
            break
    return r


def _validated_index_set(a: Matrix, indices: Iterable[int]) -> tuple[int, ...]:
    picked = tuple(sorted(int(i) for i in indices))
    n = a.rows
    for i in picked:
        if not 1 <= i <= n:
            raise IndexOutOfRangeError(f"index {i} outside 1..{n}")
    if len(set(picked)) != len(picked):
        raise IndexOutOfRangeError(f"index set {picked} repeats a position")
    return picked


def _submatrix(a: Matrix, picked: tuple[int, ...]) -> Matrix:
    return Matrix(
        (tuple(a.entries[i - 1][j - 1] for j in picked) for i in picked), cols=len(picked)
    )


def principal_minor(a: Matrix, indices: Iterable[int]) -> Fraction:
    """Determinant of the submatrix on 1-based row-and-column set `indices`.

    The empty set yields 1, so the coefficient law for the characteristic
    polynomial holds down to order 0.
    """
    a.require_square("principal minor")
    return determinant(_submatrix(a, _validated_index_set(a, indices)))


def principal_permanent(a: Matrix, indices: Iterable[int]) -> Fraction:
    """Permanent of the submatrix on 1-based row-and-column set `indices`."""
    a.require_square("principal permanent")
    picked = _validated_index_set(a, indices)
    return permanent(_submatrix(a, picked), cap=max(len(picked), DEFAULT_PERMANENT_CAP))


def _check_order(a: Matrix, k: int, cap: int, what: str) -> None:
    a.require_square(what)
    if not 0 <= k <= a.rows:
        raise OrderOutOfRangeError(f"order {k} outside 0..{a.rows}")
    if a.rows > cap:
        raise SizeCapExceededError(f"{what} over a {a.rows}x{a.rows} matrix exceeds cap {cap}")


def sum_principal_minors(a: Matrix, k: int, *, cap: int = DEFAULT_MINOR_SUM_CAP) -> Fraction:
    """Sum of all order-k principal minors (the empty minor at k=0 is 1)."""
    _check_order(a, k, cap, "principal minor sum")
    rows, den = _clear_denominators(a)
    total = 0
    for subset in combinations(range(a.rows), k):
        sub = [[rows[i][j] for j in subset] for i in subset]
        total += _det_bareiss_int(sub)
    return Fraction(total, den**k)


def sum_principal_permanents(a: Matrix, k: int, *, cap: int = DEFAULT_MINOR_SUM_CAP) -> Fraction:
    """Sum of all order-k principal permanents."""
    _check_order(a, k, cap, "principal permanent sum")
    rows, den = _clear_denominators(a)
    total = 0
    for subset in combinations(range(a.rows), k):
        sub = [[rows[i][j] for j in subset] for i in subset]
        total += _perm_ryser_int(sub)
    return Fraction(total, den**k)


def char_poly(a: Matrix) -> Polynomial:
    """Characteristic polynomial det(A - x*I), ascending coefficients.

    Computed by the Faddeev-LeVerrier recursion on the denominator-cleared
    matrix; the subset-sum coefficient law is kept as an independent
    cross-check in the tests, not as the production path.
    """
    a.require_square("characteristic polynomial")
    n = a.rows
    rows, den = _clear_denominators(a)
    monic = _char_poly_int(rows)
    sign = -1 if n % 2 else 1
    return Polynomial(sign * Fraction(monic[k], den ** (n - k)) for k in range(n + 1))


def perm_poly(a: Matrix, *, cap: int = DEFAULT_PERM_POLY_CAP) -> Polynomial:
    """Permanental polynomial perm(A - x*I), ascending coefficients.

    Assembled from the order-k principal permanent sums; there is no
    known polynomial-time route, so total cost grows as 3^n and `cap`
    keeps it at desk scale.
    """
    a.require_square("permanental polynomial")
    n = a.rows
    if n > cap:
        raise SizeCapExceededError(f"permanental polynomial of a {n}x{n} matrix exceeds cap {cap}")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        sign = -1 if (n - k) % 2 else 1
        coeffs[n - k] = sign * sum_principal_permanents(a, k, cap=max(n, DEFAULT_MINOR_SUM_CAP))
    return Polynomial(coeffs)
