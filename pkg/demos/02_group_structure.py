"""Walkthrough: the 2^(n-1) conjugation maps form an abelian group.

Run: python demos/02_group_structure.py
"""

from signconj import (
    Matrix,
    admissible_sign_vectors,
    cayley_table,
    compose,
    identity_element,
    sign_conjugate,
    to_bits,
)

n = 3
print(f"Admissible sign vectors for n={n} (first coordinate pinned to +1):")
for c in admissible_sign_vectors(n):
    print(f"  {c}   bits={to_bits(c)!r}")

print("\nComposition is coordinatewise multiplication, e.g.")
c, d = list(admissible_sign_vectors(n))[1:3]
print(f"  ({c}) o ({d}) = {compose(c, d)}")

print("\nCayley table (rows o columns):")
table = cayley_table(n)
width = max(len(str(e)) for e in table.elements)
header = " " * (width + 3) + "  ".join(f"{str(e):>{width}}" for e in table.elements)
print(header)
for e, row in zip(table.elements, table.products):
    print(f"{str(e):>{width}} | " + "  ".join(f"{str(x):>{width}}" for x in row))

print("\nEvery element squares to the identity:")
for c in table.elements:
    print(f"  ({c})^2 = {compose(c, c)}  == id: {compose(c, c) == identity_element(n)}")

print("\nThe tail bits turn composition into XOR:")
for c in table.elements[:2]:
    for d in table.elements[:2]:
        lhs = to_bits(compose(c, d))
        rhs = "".join("1" if x != y else "0" for x, y in zip(to_bits(c), to_bits(d)))
        print(f"  bits({c} o {d}) = {lhs!r} = {to_bits(c)!r} XOR {to_bits(d)!r} -> {lhs == rhs}")

print("\nDistinctness, witnessed on the all-ones matrix:")
dense = Matrix([[1] * n for _ in range(n)])
images = {sign_conjugate(dense, c) for c in admissible_sign_vectors(n)}
print(f"  {len(images)} distinct images from {2 ** (n - 1)} maps")
