"""Exact arithmetic for sign conjugation of square matrices.

Conjugating a matrix by a signature matrix diag(c), with c a ±1 vector
whose first coordinate is +1, preserves trace, determinant, permanent,
rank, all principal minors and permanents, and both the characteristic
and permanental polynomials.  This package computes all of those
quantities exactly over the rationals, exposes the abelian group the
maps form, the fixed/negated decomposition with its block canonical
forms, and the census of distinct conjugates via graph connectivity.
"""

from .blockform import (
    AntisymBlockForm,
    AntisymFactorReport,
    IndexPartition,
    SymBlockForm,
    SymFactorReport,
    antisym_block_form,
    assemble_antidiag,
    assemble_diag,
    block_permutation,
    factor_invariants_antisym,
    factor_invariants_sym,
    index_partition,
    sym_block_form,
)
from .core import (
    Matrix,
    Permutation,
    Scalar,
    SignVector,
    admissible_sign_vectors,
    as_scalar,
    conjugate_by_signature,
    parse_sign_vector,
    sign_conjugate,
    signature_matrix,
)
from .decomposition import (
    DecompositionPair,
    Symmetry,
    antisym_part,
    classic_minor2_additivity,
    classic_permanent2_additivity,
    classic_split,
    classify,
    minor2_additivity,
    permanent2_additivity,
    split,
    subspace_dims,
    sym_part,
)
from .errors import (
    DimensionMismatchError,
    EmptySignVectorError,
    FirstCoordinateNotOneError,
    IndexOutOfRangeError,
    MalformedSignError,
    MatrixParseError,
    NotSignAntisymmetricError,
    NotSignSymmetricError,
    NotSquareError,
    OrderOutOfRangeError,
    RangeError,
    SignConjError,
    SizeCapExceededError,
)
from .group import (
    CayleyTable,
    cayley_table,
    compose,
    from_bits,
    identity_element,
    to_bits,
)
from .invariants import (
    Polynomial,
    char_poly,
    determinant,
    perm_poly,
    permanent,
    principal_minor,
    principal_permanent,
    rank,
    sum_principal_minors,
    sum_principal_permanents,
    trace,
)
from .orbit import (
    ComponentLabeling,
    OrbitReport,
    graph_components,
    orbit_size,
    stabilizer_elements,
)
from .verification import CheckOutcome, VerificationReport, verify_matrix

__version__ = "0.1.0"

__all__ = [
    "AntisymBlockForm",
    "AntisymFactorReport",
    "CayleyTable",
    "CheckOutcome",
    "ComponentLabeling",
    "DecompositionPair",
    "DimensionMismatchError",
    "EmptySignVectorError",
    "FirstCoordinateNotOneError",
    "IndexOutOfRangeError",
    "IndexPartition",
    "MalformedSignError",
    "Matrix",
    "MatrixParseError",
    "NotSignAntisymmetricError",
    "NotSignSymmetricError",
    "NotSquareError",
    "OrbitReport",
    "OrderOutOfRangeError",
    "Permutation",
    "Polynomial",
    "RangeError",
    "Scalar",
    "SignConjError",
    "SignVector",
    "SizeCapExceededError",
    "SymBlockForm",
    "SymFactorReport",
    "Symmetry",
    "VerificationReport",
    "admissible_sign_vectors",
    "antisym_block_form",
    "antisym_part",
    "as_scalar",
    "assemble_antidiag",
    "assemble_diag",
    "block_permutation",
    "cayley_table",
    "char_poly",
    "classic_minor2_additivity",
    "classic_permanent2_additivity",
    "classic_split",
    "classify",
    "compose",
    "conjugate_by_signature",
    "determinant",
    "factor_invariants_antisym",
    "factor_invariants_sym",
    "from_bits",
    "graph_components",
    "identity_element",
    "index_partition",
    "minor2_additivity",
    "orbit_size",
    "parse_sign_vector",
    "perm_poly",
    "permanent",
    "permanent2_additivity",
    "principal_minor",
    "principal_permanent",
    "rank",
    "sign_conjugate",
    "signature_matrix",
    "split",
    "stabilizer_elements",
    "subspace_dims",
    "sum_principal_minors",
    "sum_principal_permanents",
    "sym_block_form",
    "sym_part",
    "to_bits",
    "trace",
    "verify_matrix",
]
