"""Block-compressed elements of M = (+)_i I_{k_i} (x) M_{n_i}(C).

An element is stored as one dense ``n_i x n_i`` matrix per block; the
multiplicity ``k_i`` only enters through traces and :func:`embed`.
Scalars are either exact :class:`~vnbasis.cyclotomic.Cyclo` values sharing
one order, or :class:`~vnbasis.cyclotomic.ComplexF`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .cyclotomic import FLOAT_TOL, ComplexF, Cyclo, lift_order
from .errors import InvalidArgument

__all__ = [
    "AlgebraSpec",
    "BlockMatrix",
    "TraceForm",
    "Scalar",
    "spec_new",
    "block_mul",
    "block_add",
    "block_sub",
    "block_scale",
    "block_adjoint",
    "block_identity",
    "block_zero",
    "trace",
    "inner",
    "embed",
    "is_unitary",
    "markov_weights",
]

Scalar = Union[Cyclo, ComplexF]
EXACT = "cyclotomic"
FLOAT = "float"


@dataclass(frozen=True)
class AlgebraSpec:
    """Ordered blocks ``(k_i, n_i)``: multiplicity and matrix size."""

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        if not blocks:
            raise InvalidArgument("an algebra needs at least one block")
        for b in blocks:
            if len(b) != 2:
                raise InvalidArgument(f"block {b!r} is not a (k, n) pair")
            for v in b:
                if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                    raise InvalidArgument(f"block entries must be positive integers, got {b!r}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def ks(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.blocks)

    @property
    def ns(self) -> tuple[int, ...]:
        return tuple(n for _, n in self.blocks)

    @property
    def ambient_dim(self) -> int:
        return sum(k * n for k, n in self.blocks)

    @property
    def alg_dim(self) -> int:
        return sum(n * n for _, n in self.blocks)


def spec_new(pairs: Iterable[Sequence[int]]) -> AlgebraSpec:
    return AlgebraSpec(tuple(tuple(p) for p in pairs))


class TraceForm(enum.Enum):
    UNNORMALIZED = "unnormalized"
    NORMALIZED = "normalized"
    MARKOV = "markov"


def _scalar_kind(x) -> str:
    if isinstance(x, Cyclo):
        return EXACT
    if isinstance(x, ComplexF):
        return FLOAT
    raise InvalidArgument(f"unsupported scalar {x!r}")


@dataclass(frozen=True, eq=False)
class BlockMatrix:
    """An element ``(+)_i I_{k_i} (x) A_i``; ``blocks[i]`` is ``A_i`` as nested tuples.

    Exact entries of mixed orders are lifted to their lcm on construction.
    """

    spec: AlgebraSpec
    blocks: tuple[tuple[tuple[Scalar, ...], ...], ...]

    def __post_init__(self):
        if len(self.blocks) != self.spec.m:
            raise InvalidArgument(f"{len(self.blocks)} blocks for a spec with {self.spec.m}")
        blocks = tuple(tuple(tuple(row) for row in blk) for blk in self.blocks)
        kinds = set()
        for blk, n in zip(blocks, self.spec.ns):
            if len(blk) != n or any(len(row) != n for row in blk):
                raise InvalidArgument(f"block is not {n}x{n}")
            for row in blk:
                kinds.update(_scalar_kind(x) for x in row)
        if len(kinds) != 1:
            raise InvalidArgument("all entries must use one scalar backend")
        if kinds == {EXACT}:
            L = 1
            for blk in blocks:
                for row in blk:
                    for x in row:
                        L = math.lcm(L, x.order)
            blocks = tuple(
                tuple(tuple(lift_order(x, L) for x in row) for row in blk) for blk in blocks
            )
        object.__setattr__(self, "blocks", blocks)

    @property
    def scalar(self) -> str:
        return _scalar_kind(self.blocks[0][0][0])

    @property
    def order(self) -> int | None:
        return self.blocks[0][0][0].order if self.scalar == EXACT else None

    def entries(self) -> Iterable[Scalar]:
        for blk in self.blocks:
            for row in blk:
                yield from row

    def lift(self, order: int) -> "BlockMatrix":
        if self.scalar != EXACT or order == self.order:
            return self
        return BlockMatrix(
            self.spec,
            tuple(tuple(tuple(lift_order(x, order) for x in row) for row in blk) for blk in self.blocks),
        )

    def to_float(self) -> "BlockMatrix":
        if self.scalar == FLOAT:
            return self
        return BlockMatrix(
            self.spec,
            tuple(tuple(tuple(x.to_complex() for x in row) for row in blk) for blk in self.blocks),
        )

    def __matmul__(self, other: "BlockMatrix") -> "BlockMatrix":
        return block_mul(self, other)

    def __add__(self, other: "BlockMatrix") -> "BlockMatrix":
        return block_add(self, other)

    def __sub__(self, other: "BlockMatrix") -> "BlockMatrix":
        return block_sub(self, other)

    def adjoint(self) -> "BlockMatrix":
        return block_adjoint(self)

    def equals(self, other: "BlockMatrix", tol: float = FLOAT_TOL) -> bool:
        diff = block_sub(self, other)
        return all(_is_zero(x, tol) for x in diff.entries())


def _is_zero(x: Scalar, tol: float) -> bool:
    return x.is_zero() if isinstance(x, Cyclo) else x.is_zero(tol)


def _zero(kind: str, order: int | None) -> Scalar:
    return Cyclo.zero(order or 1) if kind == EXACT else ComplexF(0.0, 0.0)


def _one(kind: str, order: int | None) -> Scalar:
    return Cyclo.one(order or 1) if kind == EXACT else ComplexF(1.0, 0.0)


def _align(x: BlockMatrix, y: BlockMatrix) -> tuple[BlockMatrix, BlockMatrix]:
    if x.spec != y.spec:
        raise InvalidArgument(f"spec mismatch: {x.spec.blocks} vs {y.spec.blocks}")
    if x.scalar != y.scalar:
        raise InvalidArgument(f"backend mismatch: {x.scalar} vs {y.scalar}")
    if x.scalar == EXACT and x.order != y.order:
        L = math.lcm(x.order, y.order)
        return x.lift(L), y.lift(L)
    return x, y


def block_identity(spec: AlgebraSpec, scalar: str = EXACT, order: int = 1) -> BlockMatrix:
    one, zero = _one(scalar, order), _zero(scalar, order)
    return BlockMatrix(
        spec,
        tuple(
            tuple(tuple(one if a == b else zero for b in range(n)) for a in range(n))
            for n in spec.ns
        ),
    )


def block_zero(spec: AlgebraSpec, scalar: str = EXACT, order: int = 1) -> BlockMatrix:
    zero = _zero(scalar, order)
    return BlockMatrix(spec, tuple(tuple((zero,) * n for _ in range(n)) for n in spec.ns))


def _matmul(a, b):
    n = len(a)
    cols = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = row[0] * col[0]
            for t in range(1, n):
                acc = acc + row[t] * col[t]
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def block_mul(x: BlockMatrix, y: BlockMatrix) -> BlockMatrix:
    x, y = _align(x, y)
    return BlockMatrix(x.spec, tuple(_matmul(a, b) for a, b in zip(x.blocks, y.blocks)))


def block_add(x: BlockMatrix, y: BlockMatrix) -> BlockMatrix:
    x, y = _align(x, y)
    return BlockMatrix(
        x.spec,
        tuple(
            tuple(tuple(p + q for p, q in zip(ra, rb)) for ra, rb in zip(a, b))
            for a, b in zip(x.blocks, y.blocks)
        ),
    )


def block_sub(x: BlockMatrix, y: BlockMatrix) -> BlockMatrix:
    x, y = _align(x, y)
    return BlockMatrix(
        x.spec,
        tuple(
            tuple(tuple(p - q for p, q in zip(ra, rb)) for ra, rb in zip(a, b))
            for a, b in zip(x.blocks, y.blocks)
        ),
    )


def block_scale(x: BlockMatrix, c) -> BlockMatrix:
    """Multiply every block by the scalar ``c`` (rational, Cyclo or ComplexF)."""
    if isinstance(c, Cyclo) and x.scalar == EXACT and c.order != x.order:
        L = math.lcm(c.order, x.order)
        x, c = x.lift(L), lift_order(c, L)
    return BlockMatrix(
        x.spec, tuple(tuple(tuple(e * c for e in row) for row in blk) for blk in x.blocks)
    )


def block_adjoint(x: BlockMatrix) -> BlockMatrix:
    return BlockMatrix(
        x.spec,
        tuple(tuple(tuple(e.conj() for e in col) for col in zip(*blk)) for blk in x.blocks),
    )


def _block_weights(spec: AlgebraSpec, form: TraceForm) -> list[Fraction]:
    if form is TraceForm.UNNORMALIZED:
        return [Fraction(k) for k in spec.ks]
    if form is TraceForm.NORMALIZED:
        D = spec.ambient_dim
        return [Fraction(k, D) for k in spec.ks]
    if form is TraceForm.MARKOV:
        return markov_weights(spec)
    raise InvalidArgument(f"unknown trace form {form!r}")


def trace(x: BlockMatrix, form: TraceForm = TraceForm.NORMALIZED) -> Scalar:
    """Weighted block traces.

    Unnormalized: ``sum k_i Tr(A_i)``; normalized divides that by the
    ambient dimension; Markov weights block ``i`` by ``n_i / alg_dim``
    regardless of ``k_i``.
    """
    weights = _block_weights(x.spec, TraceForm(form))
    acc = _zero(x.scalar, x.order)
    for w, blk in zip(weights, x.blocks):
        diag = blk[0][0]
        for a in range(1, len(blk)):
            diag = diag + blk[a][a]
        acc = acc + diag * w
    return acc


def inner(x: BlockMatrix, y: BlockMatrix, form: TraceForm = TraceForm.NORMALIZED) -> Scalar:
    """``<x, y> = tau(x y*)``: linear in ``x``, conjugate-linear in ``y``."""
    x, y = _align(x, y)
    weights = _block_weights(x.spec, TraceForm(form))
    dot = type(x.blocks[0][0][0]).dot
    acc = _zero(x.scalar, x.order)
    for w, a, b in zip(weights, x.blocks, y.blocks):
        flat_a = [e for row in a for e in row]
        flat_b = [e for row in b for e in row]
        acc = acc + dot(flat_a, flat_b) * w
    return acc


def embed(x: BlockMatrix) -> list[list[Scalar]]:
    """Dense ``D x D`` block-diagonal matrix with ``k_i`` copies of ``A_i``."""
    D = x.spec.ambient_dim
    zero = _zero(x.scalar, x.order)
    out = [[zero] * D for _ in range(D)]
    pos = 0
    for (k, n), blk in zip(x.spec.blocks, x.blocks):
        for _ in range(k):
            for a in range(n):
                for b in range(n):
                    out[pos + a][pos + b] = blk[a][b]
            pos += n
    return out


def is_unitary(x: BlockMatrix, tol: float = FLOAT_TOL) -> bool:
    prod = block_mul(x, block_adjoint(x))
    for blk in prod.blocks:
        for a, row in enumerate(blk):
            for b, e in enumerate(row):
                if not _is_zero(e - 1 if a == b else e, tol):
                    return False
    return True


def markov_weights(spec: AlgebraSpec) -> list[Fraction]:
    """Trace of a minimal projection in each block: ``n_i / sum_j n_j**2``."""
    d = spec.alg_dim
    return [Fraction(n, d) for n in spec.ns]
