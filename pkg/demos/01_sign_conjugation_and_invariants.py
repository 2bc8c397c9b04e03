"""Walkthrough: the sign-conjugation map and what it leaves unchanged.

Run: python demos/01_sign_conjugation_and_invariants.py
"""

from signconj import (
    Matrix,
    char_poly,
    conjugate_by_signature,
    determinant,
    parse_sign_vector,
    perm_poly,
    permanent,
    rank,
    sign_conjugate,
    signature_matrix,
    trace,
)

a = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
c = parse_sign_vector("1,1,-1")

print("A =", a)
print("c =", c)

b = sign_conjugate(a, c)
print("\nConjugate (entrywise c_i * a_ij * c_j):")
print("  ", b)

p = signature_matrix(c)
print("\nSame thing as a triple product diag(c) * A * diag(c):")
print("  ", conjugate_by_signature(a, c))
print("diag(c) is its own inverse:", p @ p == Matrix.identity(3))

print("\nEverything of spectral interest is unchanged, exactly:")
for name, fn in [
    ("trace", trace),
    ("determinant", determinant),
    ("permanent", permanent),
    ("rank", rank),
]:
    print(f"  {name:12} {fn(a)!s:>8}  ->  {fn(b)!s:>8}   equal: {fn(a) == fn(b)}")

print(f"  {'char poly':12} {char_poly(a)}   equal: {char_poly(a) == char_poly(b)}")
print(f"  {'perm poly':12} {perm_poly(a)}   equal: {perm_poly(a) == perm_poly(b)}")

print("\nApplying the same conjugation twice recovers A:", sign_conjugate(b, c) == a)
