import itertools
from fractions import Fraction

import numpy as np
import pytest

from oracles import dense
from vnbasis.algebra import BlockMatrix, TraceForm, block_identity, block_scale, spec_new
from vnbasis.construct import build_uv, existence_check, matrix_unit_basis, unitary_basis
from vnbasis.cyclotomic import Cyclo, root_of_unity
from vnbasis.errors import InvalidArgument
from vnbasis.verify import (
    gram,
    is_circulant_blocks,
    is_diagonal,
    is_scalar_multiple_of_identity,
    lemma_sum,
)

N, UN, MK = TraceForm.NORMALIZED, TraceForm.UNNORMALIZED, TraceForm.MARKOV


def block_scalars(x):
    """Per-block scalar c_i when x = (+) c_i I, else None."""
    out = []
    for blk in x.blocks:
        c = blk[0][0]
        n = len(blk)
        if any(blk[a][b] != (c if a == b else 0) for a in range(n) for b in range(n)):
            return None
        out.append(c)
    return out


class TestGram:
    def test_single_identity(self):
        rep = gram([block_identity(spec_new([(1, 1)]))], N)
        assert rep.gram == ((1,),) and rep.spans
        rep = gram([block_identity(spec_new([(2, 2)]))], N)
        assert rep.gram == ((1,),) and rep.is_orthogonal and not rep.spans

    def test_uv_two_by_two(self):
        rep = gram(build_uv(spec_new([(2, 2)])).basis, N)
        assert rep.is_orthonormal and rep.spans
        assert all(rep.gram[i][j] == (1 if i == j else 0) for i in range(4) for j in range(4))

    def test_matrix_units(self):
        family = matrix_unit_basis(spec_new([(1, 1), (2, 2)]))
        rep = gram([x for x, _ in family], UN)
        assert rep.is_orthogonal and rep.spans and not rep.is_normalized
        assert [v.to_rational() for v in rep.norms_squared] == [1, 2, 2, 2, 2]

    def test_duplicate_detected(self):
        basis = build_uv(spec_new([(2, 2)])).basis
        rep = gram(basis[:3] + [basis[0]], N)
        assert not rep.is_orthogonal and not rep.spans

    def test_conjugate_symmetric(self):
        for pairs in ([(1, 1), (2, 2)], [(3, 3)], [(1, 2), (2, 4)]):
            for basis in (build_uv(spec_new(pairs)).basis, [x for x, _ in matrix_unit_basis(spec_new(pairs))]):
                g = gram(basis, UN, full=True).gram
                n = len(g)
                assert all(g[i][j] == g[j][i].conj() for i in range(n) for j in range(n))

    def test_full_matches_triangle(self):
        basis = build_uv(spec_new([(1, 1), (1, 2)])).basis
        a, b = gram(basis, N).gram, gram(basis, N, full=True).gram
        assert all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))

    def test_threads(self):
        basis = build_uv(spec_new([(2, 2), (1, 1)])).basis
        a = gram(basis, N, workers=4)
        assert a.is_orthonormal and a.spans

    def test_rejects_empty_and_mixed(self):
        with pytest.raises(InvalidArgument):
            gram([], N)
        with pytest.raises(InvalidArgument):
            gram([block_identity(spec_new([(1, 1)])), block_identity(spec_new([(2, 1)]))], N)
        with pytest.raises(InvalidArgument):
            gram([block_identity(spec_new([(1, 1)])), block_identity(spec_new([(1, 1)]), "float")], N)

    def test_float_tolerance(self):
        basis = [x.to_float() for x in build_uv(spec_new([(1, 1), (2, 2)])).basis]
        assert gram(basis, N).is_orthonormal
        nudged = basis[1] + block_scale(basis[0], 1e-6)
        perturbed = [basis[0], nudged] + basis[2:]
        assert not gram(perturbed, N).is_orthogonal
        assert gram(perturbed, N, tol=1e-3).is_orthogonal

    @pytest.mark.parametrize("pairs", [[(1, 1)], [(2, 2)], [(1, 1), (2, 2)], [(1, 1), (1, 1), (1, 1)], [(1, 2), (1, 1), (2, 1)], [(2, 1), (3, 2)]])
    def test_spans_implies_independent(self, pairs):
        spec = spec_new(pairs)
        assert spec.ambient_dim <= 8
        candidates = [build_uv(spec).basis, [x for x, _ in matrix_unit_basis(spec)]]
        for basis in candidates:
            rep = gram(basis, UN)
            if rep.spans:
                vecs = np.array([dense(x).ravel() for x in basis])
                assert np.linalg.matrix_rank(vecs) == len(basis)


class TestLemmaSum:
    def test_unitaries_unit_weights(self):
        spec = spec_new([(1, 1), (2, 2)])
        basis = build_uv(spec).basis
        s = lemma_sum(basis, [1] * len(basis))
        assert is_scalar_multiple_of_identity(s) == spec.alg_dim

    @pytest.mark.parametrize("k, n", [(1, 1), (2, 2), (1, 3), (3, 2)])
    def test_matrix_units_single_block(self, k, n):
        family = matrix_unit_basis(spec_new([(k, n)]))
        s = lemma_sum([x for x, _ in family], [Fraction(1, w) for _, w in family])
        assert is_scalar_multiple_of_identity(s) == Fraction(n, k)

    def test_obstruction_example(self):
        family = matrix_unit_basis(spec_new([(1, 1), (1, 2)]))
        s = lemma_sum([x for x, _ in family], [1] * 5)
        assert block_scalars(s) == [1, 2]
        assert is_scalar_multiple_of_identity(s) is None

    def test_length_mismatch(self):
        with pytest.raises(InvalidArgument):
            lemma_sum([block_identity(spec_new([(1, 1)]))], [1, 2])

    def test_invariance_two_families(self):
        for pairs in ([(2, 2)], [(1, 1), (2, 2)], [(1, 2), (2, 4)], [(2, 1), (4, 2)]):
            spec = spec_new(pairs)
            D = spec.ambient_dim
            units = matrix_unit_basis(spec)
            basis = unitary_basis(spec)
            # normalized trace: unit x has squared norm k/D; unitaries have norm 1
            a = lemma_sum([x for x, _ in units], [Fraction(D) / w for _, w in units])
            b = lemma_sum(basis, [1] * len(basis))
            assert a.equals(b)
            # unnormalized trace: k for units, D for unitaries
            a = lemma_sum([x for x, _ in units], [1 / w for _, w in units])
            b = lemma_sum(basis, [Fraction(1, D)] * len(basis))
            assert a.equals(b)

    def test_obstruction_small_grid(self):
        for m in (1, 2):
            for blocks in itertools.product(itertools.product(range(1, 4), repeat=2), repeat=m):
                spec = spec_new(blocks)
                units = matrix_unit_basis(spec)
                s = lemma_sum([x for x, _ in units], [1 / w for _, w in units])
                c = is_scalar_multiple_of_identity(s)
                assert (c is not None) == existence_check(spec).exists


class TestScalarIdentity:
    def test_examples(self):
        assert is_scalar_multiple_of_identity(block_identity(spec_new([(1, 2), (3, 1)]))) == 1
        spec = spec_new([(1, 1), (1, 1)])
        x = BlockMatrix(spec, (((Cyclo.one(),),), ((Cyclo(1, [2]),),)))
        assert is_scalar_multiple_of_identity(x) is None

    def test_unitary_sum_gives_dimension(self):
        basis = build_uv(spec_new([(2, 2)])).basis
        assert is_scalar_multiple_of_identity(lemma_sum(basis, [1] * 4)) == 4

    def test_complex_scalar(self):
        w = root_of_unity(3, 1)
        x = BlockMatrix(spec_new([(1, 2)]), (((w, Cyclo.zero(3)), (Cyclo.zero(3), w)),))
        assert is_scalar_multiple_of_identity(x) == w


class TestStructure:
    def test_identity(self):
        ident = block_identity(spec_new([(1, 3), (2, 2)]))
        assert is_diagonal(ident) and is_circulant_blocks(ident)

    def test_uv(self):
        r = build_uv(spec_new([(1, 1), (2, 2)]))
        assert is_diagonal(r.U)
        assert is_circulant_blocks(r.V) and not is_diagonal(r.V)

    def test_non_circulant(self):
        o, z = Cyclo.one(), Cyclo.zero()
        x = BlockMatrix(spec_new([(1, 2)]), (((o, z), (z, z)),))
        assert is_diagonal(x) and not is_circulant_blocks(x)
