"""One-shot verification: every exact identity the library promises,
checked against a concrete matrix.

Checks run over all admissible sign vectors when n <= 8, or over a
seeded random sample for larger matrices.  Every outcome carries both
sides of the asserted equality so a failure is diagnosable from the
report alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .blockform import (
    antisym_block_form,
    assemble_antidiag,
    assemble_diag,
    factor_invariants_antisym,
    factor_invariants_sym,
    sym_block_form,
)
from .core import (
    Matrix,
    SignVector,
    admissible_sign_vectors,
    conjugate_by_signature,
    sign_conjugate,
    signature_matrix,
)
from .decomposition import (
    antisym_part,
    classic_minor2_additivity,
    classic_permanent2_additivity,
    minor2_additivity,
    permanent2_additivity,
    subspace_dims,
    sym_part,
)
from .group import compose
from .invariants import (
    DEFAULT_PERM_POLY_CAP,
    DEFAULT_PERMANENT_CAP,
    Polynomial,
    char_poly,
    determinant,
    perm_poly,
    permanent,
    rank,
    sum_principal_minors,
    sum_principal_permanents,
    trace,
)
from .orbit import DEFAULT_ENUMERATION_CAP, graph_components, orbit_size, stabilizer_elements

EXHAUSTIVE_MAX_N = 8

ANTIDIAG_SIGN_NOTE = (
    "anti-diagonal determinant sign is (-1)^(n/2); "
    "the (-1)^n form gives the wrong sign when n = 2 (mod 4)"
)


def format_value(value) -> str:
    """Canonical string for scalars, polynomials, matrices, and tuples."""
    if isinstance(value, (Fraction, int)):
        return str(value)
    if isinstance(value, Polynomial):
        return "[" + ", ".join(str(c) for c in value.coefficients) + "]"
    if isinstance(value, Matrix):
        return "[" + "; ".join(
            ", ".join(str(e) for e in row) for row in value.entries
        ) + "]"
    if isinstance(value, SignVector):
        return str(value)
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(format_value(v) for v in value) + ")"
    return str(value)


@dataclass
class CheckOutcome:
    name: str
    passed: bool = True
    lhs: str = ""
    rhs: str = ""
    note: str = ""

    def record(self, lhs, rhs, context: str = "") -> None:
        """Fold one compared pair into the outcome, keeping the first failure."""
        if not self.passed:
            return
        if lhs != rhs:
            self.passed = False
            self.lhs = format_value(lhs)
            self.rhs = format_value(rhs)
            if context:
                self.note = (self.note + "; " if self.note else "") + f"failed at {context}"
        elif not self.lhs:
            self.lhs = format_value(lhs)
            self.rhs = format_value(rhs)


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckOutcome, ...]
    skipped: tuple[tuple[str, str], ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckOutcome]:
        return [c for c in self.checks if not c.passed]


def _choose_vectors(n: int, samples: int | None, seed: int) -> list[SignVector]:
    if samples is None and n <= EXHAUSTIVE_MAX_N:
        return list(admissible_sign_vectors(n))
    count = samples if samples is not None else 16
    rng = random.Random(seed)
    return [
        SignVector([1] + [rng.choice((1, -1)) for _ in range(n - 1)])
        for _ in range(max(1, count))
    ]


def verify_matrix(
    a: Matrix,
    *,
    samples: int | None = None,
    seed: int = 0,
    perm_cap: int = DEFAULT_PERMANENT_CAP,
    permpoly_cap: int = DEFAULT_PERM_POLY_CAP,
    orbit_cap: int = DEFAULT_ENUMERATION_CAP,
    threads: int = 1,
) -> VerificationReport:
    """Run the full battery of identity checks against one square matrix."""
    a.require_square("verification")
    n = a.rows
    vectors = _choose_vectors(n, samples, seed)
    skipped: list[tuple[str, str]] = []

    do_perm = n <= perm_cap
    do_permpoly = n <= permpoly_cap
    if not do_perm:
        skipped.append(("permanent_invariant", f"n={n} exceeds permanent cap {perm_cap}"))
    if not do_permpoly:
        for name in ("perm_poly_invariant", "permanent_sum_invariant",
                     "permanent2_additivity_sign_split", "permanent2_additivity_transpose_split",
                     "sym_part_factorizations", "antisym_part_factorizations"):
            skipped.append((name, f"n={n} exceeds permanental-polynomial cap {permpoly_cap}"))

    base = {
        "trace": trace(a),
        "det": determinant(a),
        "rank": rank(a),
        "char": char_poly(a),
    }
    if do_perm:
        base["perm"] = permanent(a, cap=perm_cap)
    if do_permpoly:
        base["permpoly"] = perm_poly(a, cap=permpoly_cap)
    minor_sums = [sum_principal_minors(a, k, cap=max(n, 16)) for k in range(n + 1)]
    perm_sums = (
        [sum_principal_permanents(a, k, cap=max(n, 16)) for k in range(n + 1)]
        if do_permpoly
        else None
    )

    checks: dict[str, CheckOutcome] = {}

    def check(name: str, note: str = "") -> CheckOutcome:
        if name not in checks:
            checks[name] = CheckOutcome(name=name, note=note)
        return checks[name]

    identity = Matrix.identity(n)
    transpose = a.transpose()

    for idx, c in enumerate(vectors):
        label = f"c={c}"
        conj = sign_conjugate(a, c)

        check("entrywise_matches_signature_product").record(
            conj, conjugate_by_signature(a, c), label
        )
        p = signature_matrix(c)
        check("signature_matrix_self_inverse").record(p @ p, identity, label)
        check("diagonal_preserved").record(
            tuple(conj.entries[i][i] for i in range(n)),
            tuple(a.entries[i][i] for i in range(n)),
            label,
        )
        check("involution").record(sign_conjugate(conj, c), a, label)

        check("trace_invariant").record(trace(conj), base["trace"], label)
        check("determinant_invariant").record(determinant(conj), base["det"], label)
        check("rank_invariant").record(rank(conj), base["rank"], label)
        check("char_poly_invariant").record(char_poly(conj), base["char"], label)
        check("minor_sum_invariant").record(
            [sum_principal_minors(conj, k, cap=max(n, 16)) for k in range(n + 1)],
            minor_sums,
            label,
        )
        if do_perm:
            check("permanent_invariant").record(permanent(conj, cap=perm_cap), base["perm"], label)
        if do_permpoly:
            check("perm_poly_invariant").record(
                perm_poly(conj, cap=permpoly_cap), base["permpoly"], label
            )
            check("permanent_sum_invariant").record(
                [sum_principal_permanents(conj, k, cap=max(n, 16)) for k in range(n + 1)],
                perm_sums,
                label,
            )

        other = vectors[(idx + 1) % len(vectors)]
        check("composition_matches_pointwise_product").record(
            sign_conjugate(conj, other), sign_conjugate(a, compose(c, other)), label
        )
        check("multiplicative_over_product").record(
            sign_conjugate(a @ transpose, c), conj @ sign_conjugate(transpose, c), label
        )

        fixed = sym_part(a, c)
        negated = antisym_part(a, c)
        check("split_reconstructs").record(fixed + negated, a, label)
        check("split_parts_fixed_and_negated").record(
            (sign_conjugate(fixed, c), sign_conjugate(negated, c)), (fixed, -negated), label
        )
        half = Fraction(1, 2)
        check("mask_matches_half_sum").record(
            (fixed, negated), ((a + conj) * half, (a - conj) * half), label
        )
        r = sum(1 for s in c.signs if s == 1)
        kept_fixed = sum(1 for i in range(n) for j in range(n) if c[i] * c[j] == 1)
        kept_negated = n * n - kept_fixed
        check("mask_dimensions").record((kept_fixed, kept_negated), subspace_dims(n, r), label)

        if n >= 2:
            lhs, rhs_sym, rhs_anti = minor2_additivity(a, c)
            check("minor2_additivity_sign_split").record(lhs, rhs_sym + rhs_anti, label)
            if do_permpoly:
                lhs, rhs_sym, rhs_anti = permanent2_additivity(a, c)
                check("permanent2_additivity_sign_split").record(lhs, rhs_sym + rhs_anti, label)

        sym_form = sym_block_form(fixed, c)
        check("sym_part_block_similarity").record(
            sym_form.conjugated,
            assemble_diag(sym_form.plus_block, sym_form.minus_block),
            label,
        )
        anti_form = antisym_block_form(negated, c)
        check("antisym_part_block_similarity").record(
            anti_form.conjugated,
            assemble_antidiag(anti_form.upper_block, anti_form.lower_block),
            label,
        )
        if do_permpoly:
            rep = factor_invariants_sym(fixed, c)
            check("sym_part_factorizations").record(
                (rep.char_full, rep.det_full, rep.perm_full),
                (rep.char_product, rep.det_product, rep.perm_product),
                label,
            )
            arep = factor_invariants_antisym(negated, c)
            out = check("antisym_part_factorizations", note=ANTIDIAG_SIGN_NOTE)
            if arep.det_blocks_signed is None:
                out.record((arep.det_full, arep.perm_full), (Fraction(0), Fraction(0)), label)
            else:
                out.record(
                    (arep.det_full, arep.perm_full),
                    (arep.det_blocks_signed, arep.perm_blocks),
                    label,
                )

    if n >= 2:
        lhs, rhs_sym, rhs_anti = classic_minor2_additivity(a)
        check("minor2_additivity_transpose_split").record(lhs, rhs_sym + rhs_anti)
        if do_permpoly:
            lhs, rhs_sym, rhs_anti = classic_permanent2_additivity(a)
            check("permanent2_additivity_transpose_split").record(lhs, rhs_sym + rhs_anti)
    else:
        skipped.append(("minor2_additivity", "n=1 has no order-2 minors"))

    if n <= EXHAUSTIVE_MAX_N:
        dense = Matrix([[1] * n for _ in range(n)])
        distinct = {sign_conjugate(dense, c) for c in admissible_sign_vectors(n)}
        check("distinct_maps_on_dense_witness").record(len(distinct), 1 << (n - 1))
    else:
        skipped.append(("distinct_maps_on_dense_witness", f"n={n} exceeds exhaustive cap {EXHAUSTIVE_MAX_N}"))

    t = graph_components(a).count
    if n <= orbit_cap:
        report = orbit_size(a, cap=orbit_cap, threads=threads)
        check("orbit_matches_component_count").record(
            len(report.enumerated), 1 << (n - t)
        )
        stab = stabilizer_elements(a, cap=orbit_cap)
        check("stabilizer_matches_brute_force").record(len(stab), 1 << (t - 1))
        check("orbit_times_stabilizer").record(
            report.orbit_size * report.stabilizer_size, 1 << (n - 1)
        )
    else:
        skipped.append(("orbit_enumeration", f"n={n} exceeds orbit cap {orbit_cap}"))
        check("orbit_times_stabilizer").record((1 << (n - t)) * (1 << (t - 1)), 1 << (n - 1))

    ordered = tuple(checks.values())
    return VerificationReport(ordered, tuple(skipped))
