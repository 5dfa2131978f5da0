"""Certificates for candidate bases: Gram reports, lemma sums, structure tests."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    BlockMatrix,
    Scalar,
    TraceForm,
    _is_zero,
    block_add,
    block_adjoint,
    block_mul,
    block_scale,
    inner,
    is_unitary,
)
from .cyclotomic import FLOAT_TOL
from .errors import InvalidArgument

__all__ = [
    "GramReport",
    "gram",
    "lemma_sum",
    "is_scalar_multiple_of_identity",
    "is_diagonal",
    "is_circulant_blocks",
    "all_unitary",
]


@dataclass(frozen=True, eq=False)
class GramReport:
    gram: tuple[tuple[Scalar, ...], ...]
    form: TraceForm
    is_orthogonal: bool
    norms_squared: tuple[Scalar, ...]
    spans: bool
    tol: float = FLOAT_TOL

    @property
    def count(self) -> int:
        return len(self.gram)

    @property
    def is_normalized(self) -> bool:
        return all(_is_zero(v - 1, self.tol) for v in self.norms_squared)

    @property
    def is_orthonormal(self) -> bool:
        return self.is_orthogonal and self.is_normalized


def _check_uniform(basis: Sequence[BlockMatrix]) -> None:
    if not basis:
        raise InvalidArgument("empty basis")
    spec, kind = basis[0].spec, basis[0].scalar
    for x in basis[1:]:
        if x.spec != spec:
            raise InvalidArgument("basis elements belong to different algebras")
        if x.scalar != kind:
            raise InvalidArgument("basis elements use different scalar backends")


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("VNBASIS_THREADS", "1")))
    except ValueError:
        return 1


def gram(
    basis: Sequence[BlockMatrix],
    form: TraceForm = TraceForm.NORMALIZED,
    tol: float = FLOAT_TOL,
    *,
    full: bool = False,
    workers: int | None = None,
) -> GramReport:
    """Gram matrix ``G[i][j] = <basis[i], basis[j]>`` with verdicts.

    Only the upper triangle is evaluated unless ``full`` is set; the lower
    triangle is then filled by conjugation.  Exact entries are tested for
    zero without tolerance; ``tol`` applies to float entries only.
    """
    _check_uniform(basis)
    form = TraceForm(form)
    N = len(basis)
    if basis[0].scalar == "cyclotomic":
        L = math.lcm(*(x.order for x in basis))
        basis = [x.lift(L) for x in basis]

    def row(i: int) -> list[Scalar]:
        start = 0 if full else i
        return [inner(basis[i], basis[j], form) for j in range(start, N)]

    workers = workers or _default_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, range(N)))
    else:
        rows = [row(i) for i in range(N)]

    if full:
        g = [list(r) for r in rows]
    else:
        g = [[None] * N for _ in range(N)]
        for i, r in enumerate(rows):
            for off, v in enumerate(r):
                g[i][i + off] = v
                if off:
                    g[i + off][i] = v.conj()

    orthogonal = all(_is_zero(g[i][j], tol) for i in range(N) for j in range(N) if i != j)
    norms = tuple(g[i][i] for i in range(N))
    spans = orthogonal and N == basis[0].spec.alg_dim and not any(_is_zero(v, tol) for v in norms)
    return GramReport(tuple(tuple(r) for r in g), form, orthogonal, norms, spans, tol)


def lemma_sum(elements: Sequence[BlockMatrix], weights: Sequence) -> BlockMatrix:
    """``sum_i weights[i] * x_i* x_i``.

    Weights carry squared normalizations (e.g. ``1/k`` for a ``k**-1/2``
    scaling) that exact scalars cannot hold inside the elements.
    """
    if len(elements) != len(weights):
        raise InvalidArgument(f"{len(elements)} elements but {len(weights)} weights")
    if not elements:
        raise InvalidArgument("empty family")
    total = None
    for x, w in zip(elements, weights):
        term = block_scale(block_mul(block_adjoint(x), x), w)
        total = term if total is None else block_add(total, term)
    return total


def is_scalar_multiple_of_identity(x: BlockMatrix, tol: float = FLOAT_TOL) -> Scalar | None:
    """The scalar ``c`` with ``x = c * I`` across all blocks, else ``None``."""
    c = x.blocks[0][0][0]
    for blk in x.blocks:
        for a, row in enumerate(blk):
            for b, e in enumerate(row):
                if not _is_zero(e - c if a == b else e, tol):
                    return None
    return c


def is_diagonal(x: BlockMatrix, tol: float = FLOAT_TOL) -> bool:
    return all(
        _is_zero(e, tol)
        for blk in x.blocks
        for a, row in enumerate(blk)
        for b, e in enumerate(row)
        if a != b
    )


def is_circulant_blocks(x: BlockMatrix, tol: float = FLOAT_TOL) -> bool:
    """Every block satisfies ``c[i][j] == c[k][l]`` when ``j - i = l - k (mod n)``."""
    for blk in x.blocks:
        n = len(blk)
        for i in range(n):
            for j in range(n):
                ref = blk[0][(j - i) % n]
                if not _is_zero(blk[i][j] - ref, tol):
                    return False
    return True


def all_unitary(basis: Sequence[BlockMatrix], tol: float = FLOAT_TOL) -> bool:
    return all(is_unitary(x, tol) for x in basis)
