"""Fourier/circulant construction of orthonormal unitary bases.

For an algebra with block sizes ``n_1, ..., n_m`` put ``d = sum n_i**2``,
``w = exp(2*pi*i/d)`` and offsets ``s_i = n_1**2 + ... + n_{i-1}**2``.
Block ``i`` of ``U`` is ``w**s_i * diag(1, w**n_i, ..., w**((n_i-1)*n_i))``
and block ``i`` of ``V`` is the circulant with eigenvalues
``1, w, ..., w**(n_i-1)``.  The products ``U**k V**k`` for ``k < d`` are
pairwise orthogonal: the trace of ``U**r V**r`` telescopes to
``(w**d - 1) / (w**r - 1) = 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    EXACT,
    FLOAT,
    AlgebraSpec,
    BlockMatrix,
    Scalar,
    block_identity,
    block_mul,
    is_unitary,
)
from .cyclotomic import FLOAT_TOL, ComplexF, Cyclo, lift_order, root_of_unity, unit_phase
from .errors import InvalidArgument, NotProportionalError

__all__ = [
    "ConstructionResult",
    "Existence",
    "FourierMatrix",
    "fourier",
    "circulant_from_eigenvalues",
    "offsets",
    "build_uv",
    "product_basis",
    "existence_check",
    "unitary_basis",
    "matrix_unit_basis",
]

Matrix = tuple[tuple[Scalar, ...], ...]


def _check_backend(backend: str) -> str:
    if backend in ("exact", EXACT):
        return EXACT
    if backend == FLOAT:
        return FLOAT
    raise InvalidArgument(f"unknown backend {backend!r}")


@dataclass(frozen=True)
class FourierMatrix:
    """``matrix * sqrt(scale_sq)`` is the unitary DFT matrix.

    Exact mode keeps the ``1/sqrt(n)`` factor out of the entries
    (``scale_sq = 1/n``); float mode applies it (``scale_sq = 1``).
    """

    matrix: Matrix
    scale_sq: Fraction


def fourier(n: int, backend: str = EXACT) -> FourierMatrix:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")
    if _check_backend(backend) == EXACT:
        g = tuple(tuple(root_of_unity(n, j * t) for t in range(n)) for j in range(n))
        return FourierMatrix(g, Fraction(1, n))
    r = 1 / math.sqrt(n)
    f = tuple(tuple(unit_phase(n, j * t) * r for t in range(n)) for j in range(n))
    return FourierMatrix(f, Fraction(1))


def circulant_from_eigenvalues(lams: Sequence[Scalar]) -> Matrix:
    """Circulant ``C = F diag(lams) F*`` expanded entrywise.

    ``C[j][t] = (1/n) sum_p lams[p] * zeta_n**((j - t) * p)``, so the Fourier
    vector ``(zeta_n**(j*p))_j`` has eigenvalue ``lams[p]``.  With
    ``lams = (1, zeta_n, ..., zeta_n**(n-1))`` this is the cyclic shift
    with ones at ``C[j][(j + 1) % n]``.
    """
    n = len(lams)
    if n < 1:
        raise InvalidArgument("need at least one eigenvalue")
    if all(isinstance(x, Cyclo) for x in lams):
        L = math.lcm(n, *(x.order for x in lams))
        lam = [lift_order(x, L) for x in lams]
        phase = [root_of_unity(L, (L // n) * q) for q in range(n)]
        inv_n = Fraction(1, n)
        row0 = []
        for j in range(n):
            acc = Cyclo.zero(L)
            for p in range(n):
                acc = acc + lam[p] * phase[(j * p) % n]
            row0.append(acc * inv_n)
    elif all(isinstance(x, ComplexF) for x in lams):
        row0 = []
        for j in range(n):
            acc = ComplexF(0.0, 0.0)
            for p in range(n):
                acc = acc + lams[p] * unit_phase(n, j * p)
            row0.append(acc * (1 / n))
    else:
        raise InvalidArgument("eigenvalues must all be Cyclo or all ComplexF")
    # C[j][t] depends only on (j - t) mod n
    return tuple(tuple(row0[(j - t) % n] for t in range(n)) for j in range(n))


def offsets(spec: AlgebraSpec) -> list[int]:
    """``s_1 = 0`` and ``s_i = sum_{j<i} n_j**2``."""
    out, acc = [], 0
    for n in spec.ns:
        out.append(acc)
        acc += n * n
    return out


@dataclass(frozen=True, eq=False)
class ConstructionResult:
    U: BlockMatrix
    V: BlockMatrix
    basis: list[BlockMatrix]
    offsets: list[int]


def _uv_blocks(spec: AlgebraSpec, backend: str) -> tuple[list[Matrix], list[Matrix]]:
    d = spec.alg_dim
    s = offsets(spec)
    if backend == EXACT:
        L = math.lcm(d, *spec.ns)
        w = lambda e: root_of_unity(L, (L // d) * e)  # noqa: E731
        zero = Cyclo.zero(L)
    else:
        w = lambda e: unit_phase(d, e)  # noqa: E731
        zero = ComplexF(0.0, 0.0)
    u_blocks, v_blocks = [], []
    for n, si in zip(spec.ns, s):
        u_blocks.append(
            tuple(
                tuple(w(si + a * n) if a == b else zero for b in range(n)) for a in range(n)
            )
        )
        v_blocks.append(circulant_from_eigenvalues([w(p) for p in range(n)]))
    return u_blocks, v_blocks


def product_basis(U: BlockMatrix, V: BlockMatrix, count: int, tol: float = FLOAT_TOL) -> list[BlockMatrix]:
    """``[U**k @ V**k for k in range(count)]`` by repeated multiplication."""
    if not (is_unitary(U, tol) and is_unitary(V, tol)):
        raise InvalidArgument("product_basis needs unitary U and V")
    if count < 1:
        raise InvalidArgument("count must be at least 1")
    ident = block_identity(U.spec, U.scalar, U.order or 1)
    u_pow, v_pow = ident, ident
    out = [block_mul(u_pow, v_pow)]
    for _ in range(1, count):
        u_pow = block_mul(u_pow, U)
        v_pow = block_mul(v_pow, V)
        out.append(block_mul(u_pow, v_pow))
    return out


def build_uv(spec: AlgebraSpec, backend: str = EXACT) -> ConstructionResult:
    """The diagonal ``U``, block-circulant ``V`` and their product basis.

    Blocks depend only on the sizes ``n_i``; the multiplicities of ``spec``
    only affect traces.  Exact scalars live in Q(zeta_L) with
    ``L = lcm(d, n_1, ..., n_m)``.
    """
    backend = _check_backend(backend)
    u_blocks, v_blocks = _uv_blocks(spec, backend)
    U = BlockMatrix(spec, tuple(u_blocks))
    V = BlockMatrix(spec, tuple(v_blocks))
    return ConstructionResult(U, V, product_basis(U, V, spec.alg_dim), offsets(spec))


@dataclass(frozen=True)
class Existence:
    """Outcome of the proportionality test ``n_i = c * k_i``."""

    exists: bool
    c: Fraction | None = None
    witness: tuple[int, int] | None = None


def existence_check(spec: AlgebraSpec) -> Existence:
    k1, n1 = spec.blocks[0]
    for j, (k, n) in enumerate(spec.blocks[1:], start=2):
        if n * k1 != n1 * k:
            return Existence(False, witness=(1, j))
    return Existence(True, c=Fraction(n1, k1))


def unitary_basis(spec: AlgebraSpec, backend: str = EXACT) -> list[BlockMatrix]:
    """Orthonormal unitary basis under the normalized trace of ``spec``.

    Raises :class:`NotProportionalError` when no such basis exists.  When
    ``n_i = c * k_i`` the normalized trace of ``spec`` is a fixed multiple
    of the one with multiplicities ``n_i``, so the blocks of
    :func:`build_uv` carry over unchanged.
    """
    check = existence_check(spec)
    if not check.exists:
        raise NotProportionalError(check.witness)
    return build_uv(spec, backend).basis


def matrix_unit_basis(spec: AlgebraSpec, backend: str = EXACT) -> list[tuple[BlockMatrix, Fraction]]:
    """Elements ``I_{k_s} (x) e_ij`` with unnormalized squared norm ``k_s``.

    Ordered by block, then row, then column.
    """
    backend = _check_backend(backend)
    one = Cyclo.one() if backend == EXACT else ComplexF(1.0, 0.0)
    zero = Cyclo.zero() if backend == EXACT else ComplexF(0.0, 0.0)
    out = []
    for s, (k, n) in enumerate(spec.blocks):
        for i in range(n):
            for j in range(n):
                blocks = []
                for t, nt in enumerate(spec.ns):
                    blocks.append(
                        tuple(
                            tuple(
                                one if (t == s and a == i and b == j) else zero
                                for b in range(nt)
                            )
                            for a in range(nt)
                        )
                    )
                out.append((BlockMatrix(spec, tuple(blocks)), Fraction(k)))
    return out
