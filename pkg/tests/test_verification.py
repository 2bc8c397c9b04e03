"""Verification battery: outcome bookkeeping, caps, and edge dimensions."""

import random

from signconj import Matrix, verify_matrix
from signconj.verification import CheckOutcome, format_value
from oracles import random_matrix


class TestCheckOutcome:
    def test_records_first_pair(self):
        out = CheckOutcome(name="x")
        out.record(5, 5)
        assert out.passed and out.lhs == "5" and out.rhs == "5"

    def test_failure_keeps_first_mismatch(self):
        out = CheckOutcome(name="x")
        out.record(1, 1, "c=1,1")
        out.record(2, 3, "c=1,-1")
        out.record(4, 5, "c=-1,-1")
        assert not out.passed
        assert (out.lhs, out.rhs) == ("2", "3")
        assert "c=1,-1" in out.note

    def test_format_value(self):
        from fractions import Fraction

        from signconj import Polynomial, parse_sign_vector

        assert format_value(Fraction(2, 3)) == "2/3"
        assert format_value(Polynomial([1, -2])) == "[1, -2]"
        assert format_value(Matrix([[1, 2], [3, 4]])) == "[1, 2; 3, 4]"
        assert format_value(parse_sign_vector("1,-1")) == "1,-1"
        assert format_value((1, 2)) == "(1, 2)"


class TestVerifyMatrix:
    def test_random_matrices_pass(self):
        rng = random.Random(77)
        for _ in range(8):
            n = rng.randint(1, 5)
            report = verify_matrix(random_matrix(rng, n))
            assert report.passed, [c.name for c in report.failures()]
            assert all(c.lhs == c.rhs for c in report.checks)

    def test_one_by_one(self):
        report = verify_matrix(Matrix([[7]]))
        assert report.passed
        assert ("minor2_additivity", "n=1 has no order-2 minors") in report.skipped

    def test_zero_matrix(self):
        report = verify_matrix(Matrix.zero(3))
        assert report.passed

    def test_caps_produce_skips_not_failures(self):
        a = Matrix.identity(4)
        report = verify_matrix(a, permpoly_cap=3, perm_cap=3, orbit_cap=3)
        assert report.passed
        skipped_names = {name for name, _ in report.skipped}
        assert "permanent_invariant" in skipped_names
        assert "perm_poly_invariant" in skipped_names
        assert "orbit_enumeration" in skipped_names
        run_names = {c.name for c in report.checks}
        assert "permanent_invariant" not in run_names
        assert "orbit_times_stabilizer" in run_names

    def test_sampled_vectors_deterministic(self):
        a = Matrix([[1, 2], [3, 4]])
        first = verify_matrix(a, samples=4, seed=11)
        second = verify_matrix(a, samples=4, seed=11)
        assert [(c.name, c.lhs, c.rhs) for c in first.checks] == [
            (c.name, c.lhs, c.rhs) for c in second.checks
        ]

    def test_check_roster_covers_every_theorem(self):
        report = verify_matrix(Matrix([[1, 2], [3, 4]]))
        names = {c.name for c in report.checks}
        expected = {
            "trace_invariant",
            "determinant_invariant",
            "permanent_invariant",
            "rank_invariant",
            "char_poly_invariant",
            "perm_poly_invariant",
            "minor_sum_invariant",
            "permanent_sum_invariant",
            "entrywise_matches_signature_product",
            "signature_matrix_self_inverse",
            "diagonal_preserved",
            "involution",
            "composition_matches_pointwise_product",
            "multiplicative_over_product",
            "split_reconstructs",
            "split_parts_fixed_and_negated",
            "mask_matches_half_sum",
            "mask_dimensions",
            "minor2_additivity_sign_split",
            "permanent2_additivity_sign_split",
            "minor2_additivity_transpose_split",
            "permanent2_additivity_transpose_split",
            "sym_part_block_similarity",
            "antisym_part_block_similarity",
            "sym_part_factorizations",
            "antisym_part_factorizations",
            "distinct_maps_on_dense_witness",
            "orbit_matches_component_count",
            "stabilizer_matches_brute_force",
            "orbit_times_stabilizer",
        }
        assert expected <= names

    def test_antidiag_sign_note_present(self):
        report = verify_matrix(Matrix([[1, 2], [3, 4]]))
        notes = {c.name: c.note for c in report.checks}
        assert "(-1)^(n/2)" in notes["antisym_part_factorizations"]
