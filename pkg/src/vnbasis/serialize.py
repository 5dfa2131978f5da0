"""JSON encodings.

Exact values are lossless: a Cyclo is ``{"order": L, "coeffs": [[num, den], ...]}``
(length ``L``, reduced rationals), rationals elsewhere are ``"p/q"``
strings.  Float scalars are ``[re, im]``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import EXACT, FLOAT, AlgebraSpec, BlockMatrix, Scalar
from .cyclotomic import ComplexF, Cyclo
from .errors import InvalidArgument
from .verify import GramReport

__all__ = [
    "dumps",
    "rational_to_json",
    "rational_from_json",
    "scalar_to_json",
    "scalar_from_json",
    "spec_to_json",
    "spec_from_json",
    "block_to_json",
    "block_from_json",
    "gram_report_to_json",
]


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def rational_to_json(r) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def rational_from_json(s) -> Fraction:
    try:
        return Fraction(s)
    except (TypeError, ValueError) as exc:
        raise InvalidArgument(f"not a rational: {s!r}") from exc


def scalar_to_json(x: Scalar):
    if isinstance(x, Cyclo):
        return {
            "order": x.order,
            "coeffs": [[c.numerator, c.denominator] for c in x.coeffs],
        }
    return [x.re, x.im]


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, dict):
        try:
            order = obj["order"]
            coeffs = [Fraction(int(p), int(q)) for p, q in obj["coeffs"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidArgument(f"malformed cyclotomic scalar: {obj!r}") from exc
        if len(coeffs) != order:
            raise InvalidArgument(f"cyclotomic scalar of order {order} needs {order} coefficients")
        return Cyclo(order, coeffs)
    if isinstance(obj, list) and len(obj) == 2:
        return ComplexF(float(obj[0]), float(obj[1]))
    raise InvalidArgument(f"malformed scalar: {obj!r}")


def spec_to_json(spec: AlgebraSpec) -> dict:
    return {"blocks": [{"k": k, "n": n} for k, n in spec.blocks]}


def spec_from_json(obj) -> AlgebraSpec:
    """Accepts ``{"blocks": [{"k":..,"n":..}, ...]}`` or a bare list of ``[k, n]`` pairs."""
    blocks = obj.get("blocks") if isinstance(obj, dict) else obj
    if not isinstance(blocks, list):
        raise InvalidArgument(f"malformed spec: {obj!r}")
    pairs = []
    for b in blocks:
        if isinstance(b, dict):
            if set(b) != {"k", "n"}:
                raise InvalidArgument(f"block needs exactly keys k and n: {b!r}")
            pairs.append((b["k"], b["n"]))
        elif isinstance(b, (list, tuple)) and len(b) == 2:
            pairs.append(tuple(b))
        else:
            raise InvalidArgument(f"malformed block: {b!r}")
    return AlgebraSpec(tuple(pairs))


def block_to_json(x: BlockMatrix) -> dict:
    out = {"spec": spec_to_json(x.spec), "scalar": x.scalar}
    if x.scalar == EXACT:
        out["order"] = x.order
    out["blocks"] = [[[scalar_to_json(e) for e in row] for row in blk] for blk in x.blocks]
    return out


def block_from_json(obj) -> BlockMatrix:
    if not isinstance(obj, dict) or "spec" not in obj or "blocks" not in obj:
        raise InvalidArgument("block matrix needs 'spec' and 'blocks'")
    spec = spec_from_json(obj["spec"])
    kind = obj.get("scalar", EXACT)
    if kind not in (EXACT, FLOAT):
        raise InvalidArgument(f"unknown scalar kind {kind!r}")
    blocks = tuple(
        tuple(tuple(scalar_from_json(e) for e in row) for row in blk) for blk in obj["blocks"]
    )
    x = BlockMatrix(spec, blocks)
    if x.scalar != kind:
        raise InvalidArgument(f"entries do not match declared scalar kind {kind!r}")
    if kind == EXACT and "order" in obj:
        x = x.lift(obj["order"])
    return x


def gram_report_to_json(report: GramReport) -> dict:
    return {
        "form": report.form.value,
        "gram": [[scalar_to_json(v) for v in row] for row in report.gram],
        "is_orthogonal": report.is_orthogonal,
        "is_normalized": report.is_normalized,
        "spans": report.spans,
        "norms_squared": [scalar_to_json(v) for v in report.norms_squared],
    }
