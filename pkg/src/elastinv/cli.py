"""Command-line interface: ``elastinv <command> ...`` or ``python -m elastinv``.

Exit codes: 0 success (``orbit-check``: same orbit), 1 ``orbit-check``
found different orbits, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .binary_forms import cartan_pullback, cartan_pushforward
from .covariant_tables import s4s4_covariant_basis, s8_covariant_basis
from .diophantine import (DEFAULT_CAP, DiophantineSystem, candidate_transvectants,
                          irreducible_solutions)
from .errors import ElastinvError
from .harmonic import SYM4_INDEX, harmonic_decompose_elasticity
from .invariants import default_workers, full_basis_many, harmonic_forms, orbit_equivalent
from .scalars import EXACT, FLOAT, parse_scalar, split_complex
from .serialization import (InputError, dump_scalar, form_from_json, form_to_json,
                            harmonic_from_json, harmonic_to_json, load_json_text,
                            read_tensor, rows_to_csv, tensor_to_json)
from .tensor_core import rotate_elasticity, rotation_from_quaternion

CONVENTIONS = """\
conventions:
  Voigt order      slots 1..6 = 11, 22, 33, 23, 13, 12; raw components, no 2 or sqrt(2) weights.
                   CSV input holds the 21 upper-triangle entries C11 C12 .. C16 C22 .. C66.
  decomposition    lambda0 = tr d, mu0 = tr v  (d_ij = C_kkij, v_ij = C_kikj);
                   a = (5 dev d - 4 dev v)/7, b = (-2 dev d + 3 dev v)/7;
                   D = harmonic part of the quartic C(x, x, x, x).
  binary forms     raw coefficient c_j multiplies u^(p-j) v^j.
  transvectant     (f, g)_r = sum_i (-1)^i binom(r, i) d^r f/du^(r-i)dv^i * d^r g/du^i dv^(r-i),
                   no extra normalisation.
  Cartan map       x = (u^2 - v^2)/2, y = (u^2 + v^2)/(2i), z = uv.
  numbers          exact mode reads and writes "p/q" strings; complex values are [re, im];
                   binary-form coefficients are always written as [re, im].
  threads          ELASTINV_THREADS caps worker processes for multi-file runs.
"""


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _read_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return load_json_text(fh.read(), path)


def cmd_decompose(args) -> int:
    C = read_tensor(args.file, args.mode)
    p = harmonic_decompose_elasticity(C)
    mode = args.mode

    def mat(s):
        return [[dump_scalar(s[i, j], mode) for j in range(3)] for i in range(3)]

    out = {
        "lambda0": dump_scalar(p.lambda0, mode),
        "mu0": dump_scalar(p.mu0, mode),
        "a": mat(p.a),
        "b": mat(p.b),
        "D": [dump_scalar(p.D[idx], mode) for idx in SYM4_INDEX],
        "D_index": ["".join(str(i + 1) for i in idx) for idx in SYM4_INDEX],
    }
    _emit(_dumps(out), args.output)
    return 0


def _invariant_rows(vec, mode):
    rows = []
    for ident, value in vec:
        re, im = split_complex(value, mode)
        rows.append({"id": str(ident), "family": ident.family, "degree": ident.degree,
                     "label": ident.label, "value_re": re, "value_im": im})
    return rows


def cmd_invariants(args) -> int:
    tensors = [read_tensor(path, args.mode) for path in args.files]
    vectors = full_basis_many(tensors, workers=default_workers())
    if args.format == "csv":
        header = ["file", "id", "family", "degree", "label", "value_re", "value_im"]
        rows = [[path] + list(r.values()) for path, vec in zip(args.files, vectors)
                for r in _invariant_rows(vec, args.mode)]
        _emit(rows_to_csv(header, rows), args.output)
        return 0
    if len(vectors) == 1:
        out = _invariant_rows(vectors[0], args.mode)
    else:
        out = [{"file": path, "invariants": _invariant_rows(vec, args.mode)}
               for path, vec in zip(args.files, vectors)]
    _emit(_dumps(out), args.output)
    return 0


def cmd_covariants(args) -> int:
    if args.from_tensor:
        if len(args.files) != 1:
            raise InputError("--from-tensor expects exactly one tensor file")
        _, f, h, k = harmonic_forms(read_tensor(args.files[0], args.mode))
        forms = [f] if args.space == "s8" else [h, k]
    else:
        need = 1 if args.space == "s8" else 2
        if len(args.files) != need:
            raise InputError(f"--space {args.space} expects {need} binary-form file(s)")
        forms = [form_from_json(_read_json(p), args.mode) for p in args.files]
    basis = s8_covariant_basis(*forms) if args.space == "s8" else s4s4_covariant_basis(*forms)
    out = []
    for cov in basis.values():
        degree = list(cov.degree) if isinstance(cov.degree, tuple) else cov.degree
        out.append({"id": cov.id, "degree": degree, "order": cov.order,
                    "raw": form_to_json(cov.form)["raw"]})
    _emit(_dumps(out), args.output)
    return 0


def cmd_convert(args) -> int:
    obj = _read_json(args.file)
    if isinstance(obj, dict) and "raw" in obj:
        out = harmonic_to_json(cartan_pushforward(form_from_json(obj, args.mode)))
    elif isinstance(obj, dict) and "order" in obj:
        out = form_to_json(cartan_pullback(harmonic_from_json(obj, args.mode)))
    else:
        raise InputError(f"{args.file}: expected a binary form ('raw') or a harmonic tensor ('order')")
    _emit(_dumps(out), args.output)
    return 0


def cmd_orbit_check(args) -> int:
    C1 = read_tensor(args.file1, args.mode)
    C2 = read_tensor(args.file2, args.mode)
    tol = 0.0 if args.mode == EXACT else args.tol
    res = orbit_equivalent(C1, C2, tol)
    out = {"verdict": "same" if res.equivalent else "different",
           "max_discrepancy": res.max_discrepancy,
           "worst": None if res.worst is None else str(res.worst),
           "worst_label": None if res.worst is None else res.worst.label,
           "tol": tol, "mode": args.mode}
    _emit(_dumps(out), args.output)
    return 0 if res.equivalent else 1


def _int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_hilbert(args) -> int:
    system = DiophantineSystem.gordan(args.orders_a, args.orders_b)
    sols = irreducible_solutions(system, args.cap)
    p, q = len(args.orders_a), len(args.orders_b)
    out = {
        "orders_a": args.orders_a,
        "orders_b": args.orders_b,
        "solutions": [{"alpha": list(x[:p]), "beta": list(x[p:p + q]),
                       "u": x[-3], "v": x[-2], "r": x[-1]} for x in sols],
        "candidates": [str(c) for c in candidate_transvectants(args.orders_a, args.orders_b, args.cap)],
    }
    _emit(_dumps(out), args.output)
    return 0


def cmd_rotate(args) -> int:
    parts = args.quaternion.split(",")
    if len(parts) != 4:
        raise InputError(f"--quaternion: expected w,x,y,z, got {args.quaternion!r}")
    q = [parse_scalar(t, args.mode) for t in parts]
    g = rotation_from_quaternion(*q)
    C = read_tensor(args.file, args.mode)
    _emit(_dumps(tensor_to_json(rotate_elasticity(g, C))), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elastinv",
        description="Harmonic decomposition, covariants and the 297 polynomial invariants "
                    "of 3D elasticity tensors.",
        epilog=CONVENTIONS, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT,
                        help="arithmetic mode (default: exact)")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text,
                           epilog=CONVENTIONS, formatter_class=argparse.RawDescriptionHelpFormatter)
        p.set_defaults(func=func)
        return p

    p = add("decompose", cmd_decompose, "split a tensor into (lambda0, mu0, a, b, D)")
    p.add_argument("file", help="tensor file (.json or .csv)")

    p = add("invariants", cmd_invariants, "evaluate the 297 invariants")
    p.add_argument("files", nargs="+", help="tensor file(s) (.json or .csv)")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = add("covariants", cmd_covariants, "evaluate a covariant table on binary forms")
    p.add_argument("files", nargs="+", help="binary-form JSON file(s), or one tensor with --from-tensor")
    p.add_argument("--space", choices=("s8", "s4s4"), required=True)
    p.add_argument("--from-tensor", action="store_true",
                   help="take f (s8) or (h, k) (s4s4) from an elasticity tensor file")

    p = add("convert", cmd_convert, "map a harmonic tensor to its binary form or back")
    p.add_argument("file", help="harmonic-tensor or binary-form JSON")

    p = add("orbit-check", cmd_orbit_check, "decide whether two tensors differ by a rotation")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="relative tolerance in float mode (exact mode always uses 0)")

    p = add("hilbert", cmd_hilbert, "irreducible solutions of the joint-covariant Diophantine system")
    p.add_argument("--orders-a", type=_int_list, required=True, help="comma-separated orders")
    p.add_argument("--orders-b", type=_int_list, required=True, help="comma-separated orders")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest component searched")

    p = add("rotate", cmd_rotate, "rotate a tensor by the rotation of a quaternion")
    p.add_argument("file")
    p.add_argument("--quaternion", required=True, help="w,x,y,z (rationals allowed as p/q)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, --version and usage errors
        return exc.code
    try:
        return args.func(args)
    except (InputError, ElastinvError, ValueError, OSError, KeyError) as exc:
        print(f"elastinv {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
