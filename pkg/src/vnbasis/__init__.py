"""Orthonormal unitary bases of finite-dimensional block algebras.

Elements of ``M = (+)_i I_{k_i} (x) M_{n_i}(C)`` are built from diagonal
and circulant unitaries and certified orthonormal in exact cyclotomic
arithmetic.
"""

from .algebra import (
    AlgebraSpec,
    BlockMatrix,
    TraceForm,
    block_adjoint,
    block_identity,
    block_mul,
    embed,
    inner,
    is_unitary,
    markov_weights,
    spec_new,
    trace,
)
from .construct import (
    build_uv,
    circulant_from_eigenvalues,
    existence_check,
    fourier,
    matrix_unit_basis,
    product_basis,
    unitary_basis,
)
from .cyclotomic import ComplexF, Cyclo, cyclotomic_polynomial, lift_order, root_of_unity
from .errors import InvalidArgument, NotProportionalError
from .verify import GramReport, gram, is_circulant_blocks, is_diagonal, is_scalar_multiple_of_identity, lemma_sum

__version__ = "0.1.0"
