"""``vnbasis`` command-line driver.

Exit codes: 0 success, 1 verification failed, 2 no unitary basis exists,
64 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from .algebra import EXACT, FLOAT, AlgebraSpec, TraceForm, markov_weights
from .construct import build_uv, existence_check, matrix_unit_basis
from .cyclotomic import FLOAT_TOL
from .errors import InvalidArgument
from .serialize import (
    block_from_json,
    block_to_json,
    dumps,
    gram_report_to_json,
    rational_to_json,
    scalar_to_json,
    spec_from_json,
    spec_to_json,
)
from .verify import all_unitary, gram

__all__ = ["main", "run"]

log = logging.getLogger("vnbasis")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_NO_BASIS = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--backend", choices=["exact", "float"], default=None)
    common.add_argument("--tol", type=float, default=None, help="float-mode zero tolerance")
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    common.add_argument("--format", choices=["json", "pretty"], default="json")

    parser = _Parser(prog="vnbasis", description="Orthonormal unitary bases of block algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in [
        ("exists", "test whether an orthonormal unitary basis exists"),
        ("construct", "build a basis and write it as JSON"),
        ("markov", "print the Markov trace weights n_i / sum n_j^2"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--spec", required=True, help="inline JSON or path to a JSON file")
        if name == "construct":
            p.add_argument("--family", choices=["uv", "matrix-units"], default="uv")

    for name, help_ in [
        ("verify", "check unitarity, orthonormality and span of a basis file"),
        ("gram", "dump the Gram matrix of a basis file"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--basis", required=True, help="basis JSON file, or - for stdin")
        p.add_argument(
            "--form", choices=[f.value for f in TraceForm], default=TraceForm.NORMALIZED.value
        )
    return parser


def _load_json(source: str, *, inline_ok: bool):
    text = source
    if source == "-":
        text = sys.stdin.read()
    elif not (inline_ok and source.lstrip()[:1] in ("{", "[")):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc


def _load_spec(source: str) -> AlgebraSpec:
    try:
        return spec_from_json(_load_json(source, inline_ok=True))
    except InvalidArgument as exc:
        raise UsageError(str(exc)) from exc


def _load_basis(source: str):
    obj = _load_json(source, inline_ok=False)
    items = obj.get("basis") if isinstance(obj, dict) else obj
    if not isinstance(items, list) or not items:
        raise UsageError("basis file holds no elements")
    try:
        basis = [block_from_json(x) for x in items]
    except InvalidArgument as exc:
        raise UsageError(str(exc)) from exc
    spec = basis[0].spec
    if any(x.spec != spec for x in basis):
        raise UsageError("basis elements belong to different algebras")
    return basis


def _resolve_backend(args, default: str) -> str:
    backend = {"exact": EXACT, "float": FLOAT, None: default}[args.backend]
    if backend == EXACT and args.tol is not None:
        log.warning("--tol has no effect with the exact backend; ignoring it")
    if args.tol is not None and args.tol < 0:
        raise UsageError("--tol must be nonnegative")
    return backend


def _emit(args, obj) -> None:
    text = dumps(obj, pretty=args.format == "pretty")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _existence_json(spec: AlgebraSpec) -> tuple[dict, bool]:
    check = existence_check(spec)
    if check.exists:
        return {"exists": True, "c": rational_to_json(check.c)}, True
    return {"exists": False, "witness": list(check.witness)}, False


def cmd_exists(args) -> int:
    spec = _load_spec(args.spec)
    report, ok = _existence_json(spec)
    _emit(args, report)
    return EXIT_OK if ok else EXIT_NO_BASIS


def cmd_markov(args) -> int:
    spec = _load_spec(args.spec)
    _emit(args, {"spec": spec_to_json(spec), "weights": [rational_to_json(w) for w in markov_weights(spec)]})
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = _load_spec(args.spec)
    backend = _resolve_backend(args, EXACT)
    if args.family == "matrix-units":
        family = matrix_unit_basis(spec, backend)
        _emit(
            args,
            {
                "family": "matrix-units",
                "spec": spec_to_json(spec),
                "scalar": backend,
                "basis": [block_to_json(x) for x, _ in family],
                "norms_squared": [rational_to_json(w) for _, w in family],
            },
        )
        return EXIT_OK
    report, ok = _existence_json(spec)
    if not ok:
        _emit(args, report)
        return EXIT_NO_BASIS
    result = build_uv(spec, backend)
    out = {
        "family": "uv",
        "spec": spec_to_json(spec),
        "scalar": backend,
        "c": report["c"],
        "offsets": result.offsets,
        "U": block_to_json(result.U),
        "V": block_to_json(result.V),
        "basis": [block_to_json(x) for x in result.basis],
    }
    if backend == EXACT:
        out["order"] = result.U.order
    _emit(args, out)
    return EXIT_OK


def _prepared_basis(args):
    basis = _load_basis(args.basis)
    backend = _resolve_backend(args, basis[0].scalar)
    if backend == FLOAT:
        basis = [x.to_float() for x in basis]
    elif basis[0].scalar == FLOAT:
        raise UsageError("a float basis cannot be verified exactly")
    tol = args.tol if args.tol is not None else FLOAT_TOL
    return basis, tol


def cmd_gram(args) -> int:
    basis, tol = _prepared_basis(args)
    _emit(args, gram_report_to_json(gram(basis, TraceForm(args.form), tol)))
    return EXIT_OK


def cmd_verify(args) -> int:
    basis, tol = _prepared_basis(args)
    report = gram(basis, TraceForm(args.form), tol)
    unitary = all_unitary(basis, tol)
    passed = unitary and report.is_orthonormal and report.spans
    _emit(
        args,
        {
            "pass": passed,
            "form": report.form.value,
            "count": report.count,
            "alg_dim": basis[0].spec.alg_dim,
            "unitary": unitary,
            "is_orthogonal": report.is_orthogonal,
            "is_normalized": report.is_normalized,
            "spans": report.spans,
            "norms_squared": [scalar_to_json(v) for v in report.norms_squared],
        },
    )
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


COMMANDS = {
    "exists": cmd_exists,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "gram": cmd_gram,
    "markov": cmd_markov,
}


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(levelname)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"vnbasis: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
