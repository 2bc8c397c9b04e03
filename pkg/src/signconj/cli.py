"""Command-line front end.

Subcommands: apply, invariants, decompose, blockform, orbit, cayley,
verify.  Matrices come from CSV (one row per line, entries integer or
p/q) or a JSON document {"n": ..., "entries": [[...]]}; reports go to
stdout as deterministic JSON with every rational rendered exactly as
"p/q" (bare integer when the denominator is 1).  Exit codes: 0 success,
1 a check failed, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import blockform, decomposition, group, invariants, orbit
from .core import Matrix, SignVector, as_scalar, parse_sign_vector, sign_conjugate
from .errors import MatrixParseError, SignConjError
from .invariants import (
    DEFAULT_PERM_POLY_CAP,
    DEFAULT_PERMANENT_CAP,
    Polynomial,
)
from .orbit import DEFAULT_ENUMERATION_CAP
from .verification import CheckOutcome, verify_matrix


def _scalar_str(x: Fraction) -> str:
    return str(x)


def _matrix_json(a: Matrix) -> list[list[str]]:
    return [[_scalar_str(e) for e in row] for row in a.entries]


def _poly_json(p: Polynomial) -> list[str]:
    return [_scalar_str(c) for c in p.coefficients]


def _matrix_digest(a: Matrix) -> str:
    canon = f"{a.rows};{a.cols};" + ";".join(
        ",".join(_scalar_str(e) for e in row) for row in a.entries
    )
    return hashlib.sha256(canon.encode()).hexdigest()


def _parse_entry(token) -> Fraction:
    if isinstance(token, float):
        raise MatrixParseError(f"entry {token!r} is a float; use integers or 'p/q' strings")
    try:
        return as_scalar(token)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise MatrixParseError(f"bad matrix entry {token!r}: {exc}") from None


def _matrix_from_rows(raw_rows) -> Matrix:
    if not isinstance(raw_rows, list) or not raw_rows:
        raise MatrixParseError("matrix needs at least one row")
    rows = []
    for raw in raw_rows:
        if not isinstance(raw, list):
            raise MatrixParseError("entries must be a list of rows")
        rows.append([_parse_entry(tok) for tok in raw])
    if len({len(r) for r in rows}) != 1:
        raise MatrixParseError("matrix rows have unequal lengths")
    return Matrix(rows)


def parse_matrix_document(text: str, fmt: str) -> Matrix:
    """Parse CSV or JSON matrix text into an exact Matrix."""
    if fmt == "csv":
        lines = [line.strip() for line in text.splitlines()]
        rows = [
            [tok.strip() for tok in line.split(",")]
            for line in lines
            if line and not line.startswith("#")
        ]
        return _matrix_from_rows([[tok for tok in row] for row in rows])
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"invalid JSON: {exc}") from None
    if isinstance(doc, list):
        return _matrix_from_rows(doc)
    if not isinstance(doc, dict) or "entries" not in doc:
        raise MatrixParseError('JSON matrix must be a nested array or {"n": ..., "entries": ...}')
    m = _matrix_from_rows(doc["entries"])
    if "n" in doc and doc["n"] != m.rows:
        raise MatrixParseError(f'document says n={doc["n"]} but there are {m.rows} rows')
    if "m" in doc and doc["m"] != m.cols:
        raise MatrixParseError(f'document says m={doc["m"]} but rows have {m.cols} entries')
    return m


def load_matrix(path: str, fmt: str | None) -> Matrix:
    file = Path(path)
    if fmt is None:
        suffix = file.suffix.lower()
        if suffix == ".csv":
            fmt = "csv"
        elif suffix == ".json":
            fmt = "json"
        else:
            raise MatrixParseError(
                f"cannot infer format from {file.name!r}; pass --format csv|json"
            )
    try:
        text = file.read_text()
    except OSError as exc:
        raise MatrixParseError(f"cannot read {path}: {exc}") from None
    return parse_matrix_document(text, fmt)


def _check_json(c: CheckOutcome) -> dict:
    out = {"name": c.name, "passed": c.passed, "lhs": c.lhs, "rhs": c.rhs}
    if c.note:
        out["note"] = c.note
    return out


def _emit(report: dict, failed: bool) -> int:
    print(json.dumps(report, indent=2))
    return 1 if failed else 0


def _inputs_block(args, a: Matrix | None) -> dict:
    inputs: dict = {}
    if a is not None:
        inputs["matrix"] = {
            "path": args.matrix,
            "rows": a.rows,
            "cols": a.cols,
            "sha256": _matrix_digest(a),
        }
    for key in ("signs", "classic", "n", "samples", "seed", "perm_cap", "permpoly_cap",
                "orbit_cap", "threads"):
        if hasattr(args, key) and getattr(args, key) is not None:
            inputs[key.replace("_", "-")] = getattr(args, key)
    return inputs


def _cmd_apply(args) -> int:
    a = load_matrix(args.matrix, args.format)
    c = parse_sign_vector(args.signs)
    conjugated = sign_conjugate(a, c)
    report = {
        "command": "apply",
        "inputs": _inputs_block(args, a),
        "results": {"conjugated": _matrix_json(conjugated)},
    }
    return _emit(report, failed=False)


def _cmd_invariants(args) -> int:
    a = load_matrix(args.matrix, args.format)
    a.require_square("invariants")
    results: dict = {
        "trace": _scalar_str(invariants.trace(a)),
        "determinant": _scalar_str(invariants.determinant(a)),
        "rank": invariants.rank(a),
        "char_poly": _poly_json(invariants.char_poly(a)),
    }
    omitted = {}
    if a.rows <= args.perm_cap:
        results["permanent"] = _scalar_str(invariants.permanent(a, cap=args.perm_cap))
    else:
        omitted["permanent"] = f"n={a.rows} exceeds --perm-cap {args.perm_cap}"
    if a.rows <= args.permpoly_cap:
        results["perm_poly"] = _poly_json(invariants.perm_poly(a, cap=args.permpoly_cap))
    else:
        omitted["perm_poly"] = f"n={a.rows} exceeds --permpoly-cap {args.permpoly_cap}"
    report = {"command": "invariants", "inputs": _inputs_block(args, a), "results": results}
    if omitted:
        report["omitted"] = omitted
    return _emit(report, failed=False)


def _additivity_checks(a: Matrix, c: SignVector | None) -> list[CheckOutcome]:
    checks = []
    if a.rows < 2:
        return checks
    if c is not None:
        pairs = [
            ("order2_minor_sum_additive", decomposition.minor2_additivity(a, c)),
            ("order2_permanent_sum_additive", decomposition.permanent2_additivity(a, c)),
        ]
    else:
        pairs = [
            ("order2_minor_sum_additive", decomposition.classic_minor2_additivity(a)),
            ("order2_permanent_sum_additive", decomposition.classic_permanent2_additivity(a)),
        ]
    for name, (lhs, rhs_sym, rhs_anti) in pairs:
        out = CheckOutcome(name=name)
        out.record(lhs, rhs_sym + rhs_anti)
        checks.append(out)
    return checks


def _cmd_decompose(args) -> int:
    a = load_matrix(args.matrix, args.format)
    if args.classic:
        pair = decomposition.classic_split(a)
        c = None
        mode = "transpose"
    else:
        c = parse_sign_vector(args.signs)
        pair = decomposition.split(a, c)
        mode = "signs"
    checks = _additivity_checks(a, c)
    reconstruct = CheckOutcome(name="parts_reconstruct_input")
    reconstruct.record(pair.sym + pair.antisym, a)
    checks.insert(0, reconstruct)
    report = {
        "command": "decompose",
        "inputs": _inputs_block(args, a),
        "results": {
            "mode": mode,
            "sym_part": _matrix_json(pair.sym),
            "antisym_part": _matrix_json(pair.antisym),
        },
        "checks": [_check_json(ch) for ch in checks],
    }
    return _emit(report, failed=any(not ch.passed for ch in checks))


def _cmd_blockform(args) -> int:
    a = load_matrix(args.matrix, args.format)
    c = parse_sign_vector(args.signs)
    kind = decomposition.classify(a, c)
    checks = []
    gate = CheckOutcome(name="matrix_symmetry_class")
    gate.record(
        kind.value,
        kind.value if kind is not decomposition.Symmetry.NEITHER else "symmetric or antisymmetric",
    )
    checks.append(gate)
    results: dict = {"classification": kind.value}
    if kind is decomposition.Symmetry.SYMMETRIC:
        form = blockform.sym_block_form(a, c)
        rep = blockform.factor_invariants_sym(a, c)
        results.update(
            {
                "plus_indices": list(form.partition.plus_indices),
                "minus_indices": list(form.partition.minus_indices),
                "permutation": list(form.permutation.images),
                "plus_block": _matrix_json(form.plus_block),
                "minus_block": _matrix_json(form.minus_block),
                "conjugated": _matrix_json(form.conjugated),
            }
        )
        similar = CheckOutcome(name="conjugate_is_block_diagonal")
        similar.record(
            form.conjugated, blockform.assemble_diag(form.plus_block, form.minus_block)
        )
        checks.append(similar)
        for name, lhs, rhs in (
            ("char_poly_factors", rep.char_full, rep.char_product),
            ("determinant_factors", rep.det_full, rep.det_product),
            ("permanent_factors", rep.perm_full, rep.perm_product),
        ):
            out = CheckOutcome(name=name)
            out.record(lhs, rhs)
            checks.append(out)
    elif kind is decomposition.Symmetry.ANTISYMMETRIC:
        form = blockform.antisym_block_form(a, c)
        rep = blockform.factor_invariants_antisym(a, c)
        results.update(
            {
                "plus_indices": list(form.partition.plus_indices),
                "minus_indices": list(form.partition.minus_indices),
                "permutation": list(form.permutation.images),
                "upper_block": _matrix_json(form.upper_block),
                "lower_block": _matrix_json(form.lower_block),
                "conjugated": _matrix_json(form.conjugated),
            }
        )
        similar = CheckOutcome(name="conjugate_is_block_antidiagonal")
        similar.record(form.conjugated, form.assembled)
        checks.append(similar)
        out = CheckOutcome(name="determinant_and_permanent_factor")
        if rep.det_blocks_signed is None:
            out.record((rep.det_full, rep.perm_full), (Fraction(0), Fraction(0)))
        else:
            out.record((rep.det_full, rep.perm_full), (rep.det_blocks_signed, rep.perm_blocks))
            out.note = "determinant sign is (-1)^(n/2)"
        checks.append(out)
    report = {
        "command": "blockform",
        "inputs": _inputs_block(args, a),
        "results": results,
        "checks": [_check_json(ch) for ch in checks],
    }
    return _emit(report, failed=any(not ch.passed for ch in checks))


def _cmd_orbit(args) -> int:
    a = load_matrix(args.matrix, args.format)
    labeling = orbit.graph_components(a)
    rep = orbit.orbit_size(a, cap=args.orbit_cap, threads=args.threads)
    results: dict = {
        "component_labels": list(labeling.labels),
        "component_count": labeling.count,
        "orbit_size": rep.orbit_size,
        "stabilizer_size": rep.stabilizer_size,
    }
    if rep.enumerated is not None:
        results["enumerated_orbit"] = [_matrix_json(m) for m in rep.enumerated]
        results["stabilizer"] = [str(c) for c in orbit.stabilizer_elements(a, cap=args.orbit_cap)]
    else:
        results["enumeration"] = f"skipped: n={a.rows} exceeds --orbit-cap {args.orbit_cap}"
    report = {"command": "orbit", "inputs": _inputs_block(args, a), "results": results}
    return _emit(report, failed=False)


def _cmd_cayley(args) -> int:
    table = group.cayley_table(args.n)
    report = {
        "command": "cayley",
        "inputs": _inputs_block(args, None),
        "results": {
            "elements": [str(e) for e in table.elements],
            "table": [[str(e) for e in row] for row in table.products],
        },
    }
    return _emit(report, failed=False)


def _cmd_verify(args) -> int:
    a = load_matrix(args.matrix, args.format)
    a.require_square("verify")
    rep = verify_matrix(
        a,
        samples=args.samples,
        seed=args.seed,
        perm_cap=args.perm_cap,
        permpoly_cap=args.permpoly_cap,
        orbit_cap=args.orbit_cap,
        threads=args.threads,
    )
    report = {
        "command": "verify",
        "inputs": _inputs_block(args, a),
        "checks": [_check_json(c) for c in rep.checks],
        "skipped": [{"name": name, "reason": reason} for name, reason in rep.skipped],
        "passed": rep.passed,
    }
    return _emit(report, failed=not rep.passed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signconj",
        description="Exact sign-conjugation toolkit: invariants, decompositions, "
        "block forms, orbits, and a one-shot verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--matrix", required=True, help="matrix file (CSV or JSON)")
        p.add_argument("--format", choices=("csv", "json"), default=None,
                       help="override format inferred from the file extension")

    def add_cap_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--perm-cap", type=int, default=DEFAULT_PERMANENT_CAP,
                       help="largest n for permanent computation")
        p.add_argument("--permpoly-cap", type=int, default=DEFAULT_PERM_POLY_CAP,
                       help="largest n for the permanental polynomial")

    p = sub.add_parser("apply", help="print the sign conjugate of a matrix")
    add_matrix_options(p)
    p.add_argument("--signs", required=True, help="sign vector, e.g. '1,1,-1'")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("invariants", help="trace, determinant, permanent, rank, polynomials")
    add_matrix_options(p)
    add_cap_options(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("decompose", help="split into fixed and negated parts")
    add_matrix_options(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--signs", help="sign vector for the mask split")
    mode.add_argument("--classic", action="store_true", help="transpose-based split")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("blockform", help="permutation-similar block canonical form")
    add_matrix_options(p)
    p.add_argument("--signs", required=True)
    p.set_defaults(func=_cmd_blockform)

    p = sub.add_parser("orbit", help="graph components and distinct-conjugate census")
    add_matrix_options(p)
    p.add_argument("--orbit-cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                   help="largest n for explicit orbit enumeration")
    p.add_argument("--threads", type=int, default=1, help="worker threads for enumeration")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("cayley", help="composition table of the sign-conjugation group")
    p.add_argument("--n", type=int, required=True, help="matrix dimension (n <= 6)")
    p.set_defaults(func=_cmd_cayley)

    p = sub.add_parser("verify", help="run every identity check against a matrix")
    add_matrix_options(p)
    add_cap_options(p)
    p.add_argument("--orbit-cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--samples", type=int, default=None,
                   help="number of random sign vectors (default: all of them when n <= 8)")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled sign vectors")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) is not None and getattr(args, "threads", 1) < 1:
        print("error: --threads must be a positive integer", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (SignConjError, MatrixParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
