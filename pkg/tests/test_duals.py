import numpy as np
import pytest

import oracles
from rieszlab import (
    DimensionError,
    IllConditionedError,
    NoBiorthogonalSequenceError,
    NotBiorthogonalError,
    VectorSequence,
    VerdictKind,
    biorthogonality_residual,
    classify,
    co_completeness_check,
    completeness_defect,
    duality_identity_residual,
    injectivity_witness,
    minimal_dual,
    numerical_rank,
    orthonormal,
    weighted_pair,
    young_example,
)


def seq_of(*vectors):
    return VectorSequence.from_columns(np.column_stack([np.asarray(v, dtype=complex) for v in vectors]))


def random_seq(seed, dim, count):
    return VectorSequence.from_columns(oracles.random_columns(seed, dim, count))


class TestMinimalDual:
    def test_orthonormal_self_dual(self):
        dual = minimal_dual(orthonormal(4))
        np.testing.assert_allclose(dual.columns, np.eye(4), atol=1e-14)

    def test_weighted_reciprocal(self):
        pair = weighted_pair(5)
        dual = minimal_dual(pair.primal)
        np.testing.assert_allclose(dual.columns, pair.partner.columns, atol=1e-13)

    def test_hand_example(self):
        seq = seq_of([1, 0], [1, 1])
        # Gram inverse is [[2,-1],[-1,1]], so the dual columns are (1,-1), (0,1)
        dual = minimal_dual(seq)
        np.testing.assert_allclose(dual.columns, [[1, 0], [-1, 1]], atol=1e-14)

    def test_residual_contract(self):
        for seed in range(10):
            seq = random_seq(seed, 8, 5)
            dual = minimal_dual(seq)
            assert biorthogonality_residual(seq, dual) <= 1e-8

    def test_involution_on_bases(self):
        for seed in range(5):
            seq = random_seq(seed, 6, 6)
            again = minimal_dual(minimal_dual(seq))
            assert np.abs(again.columns - seq.columns).max() <= 1e-8

    def test_span_equality(self):
        seq = random_seq(4, 7, 3)
        dual = minimal_dual(seq)
        joined = np.concatenate([seq.columns, dual.columns], axis=1)
        assert numerical_rank(joined) == numerical_rank(seq.columns)

    def test_dual_lives_in_span(self):
        # For an incomplete system the dual is non-unique up to components in
        # the orthogonal complement; the minimal one has none.
        for seq in (young_example(4).primal, random_seq(9, 8, 3)):
            dual = minimal_dual(seq)
            u, s, _ = np.linalg.svd(seq.columns, full_matrices=True)
            rank = int(np.count_nonzero(s > s[0] * max(seq.columns.shape) * 1e-12))
            complement = u[:, rank:]
            assert np.linalg.norm(complement.conj().T @ dual.columns) <= 1e-10

    def test_complement_perturbation_preserves_biorthogonality(self):
        seq = young_example(4).primal
        dual = minimal_dual(seq)
        u, s, _ = np.linalg.svd(seq.columns, full_matrices=True)
        direction = u[:, -1]  # orthogonal to the span
        shifted = VectorSequence.from_columns(
            dual.columns + np.outer(direction, np.arange(1.0, 5.0))
        )
        assert biorthogonality_residual(seq, shifted) <= 1e-12
        assert biorthogonality_residual(seq, dual) <= 1e-12

    def test_dependent_columns_rejected(self):
        with pytest.raises(NoBiorthogonalSequenceError):
            minimal_dual(seq_of([1, 0], [1, 0]))

    def test_ill_conditioned_rejected(self):
        seq = seq_of([1, 0], [1, 1e-10])
        with pytest.raises(IllConditionedError):
            minimal_dual(seq)


class TestDualityIdentityResidual:
    def test_orthonormal(self):
        seq = orthonormal(3)
        assert duality_identity_residual(seq, seq) <= 1e-15

    def test_basis_with_minimal_dual_reconstructs(self):
        for seed in range(8):
            seq = random_seq(seed, 7, 7)
            dual = minimal_dual(seq)
            assert duality_identity_residual(seq, dual) <= 1e-8
            assert classify(seq).kind is VerdictKind.RIESZ_BASIS

    @pytest.mark.parametrize("n", [4, 9])
    def test_young_pair_residual(self, n):
        pair = young_example(n)
        residual = duality_identity_residual(pair.primal, pair.partner)
        assert residual == pytest.approx(np.sqrt(n + 1), rel=1e-12)
        # independent oracle: eigensolve of R^H R for the assembled residual
        assembled = pair.primal.columns @ pair.partner.columns.conj().T - np.eye(n + 1)
        assert oracles.spectral_norm(assembled) == pytest.approx(np.sqrt(n + 1), rel=1e-10)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionError):
            duality_identity_residual(orthonormal(3), orthonormal(4))


class TestCoCompleteness:
    def test_orthonormal(self):
        assert co_completeness_check(orthonormal(5)) == (0, 0, True)

    def test_young(self):
        result = co_completeness_check(young_example(4).primal)
        assert result == (1, 1, True)

    def test_weighted_complete(self):
        assert co_completeness_check(weighted_pair(5).primal) == (0, 0, True)

    def test_incomplete_random(self):
        for seed in range(6):
            seq = random_seq(seed, 9, 5)
            result = co_completeness_check(seq)
            assert result.equal
            assert result.defect_primal == 4

    def test_propagates_missing_dual(self):
        with pytest.raises(NoBiorthogonalSequenceError):
            co_completeness_check(seq_of([1, 0], [2, 0]))


class TestInjectivityWitness:
    def test_zero_coefficients(self):
        seq = orthonormal(3)
        out = injectivity_witness(seq, seq, np.zeros(3))
        np.testing.assert_allclose(np.asarray(out), np.zeros(3), atol=1e-15)

    def test_young_unit_coefficient(self):
        pair = young_example(4)
        out = injectivity_witness(pair.primal, pair.partner, [1, 0, 0, 0])
        np.testing.assert_allclose(np.asarray(out), [1, 0, 0, 0], atol=1e-14)

    def test_recovers_random_coefficients(self):
        rng = np.random.default_rng(0)
        for seed in range(6):
            seq = random_seq(seed, 6, 6)
            dual = minimal_dual(seq)
            c = rng.standard_normal(6) + 1j * rng.standard_normal(6)
            out = np.asarray(injectivity_witness(seq, dual, c))
            assert np.linalg.norm(out - c) <= 1e-8 * max(1.0, np.linalg.norm(c))

    def test_rejects_non_biorthogonal_pair(self):
        seq = orthonormal(3)
        skewed = VectorSequence.from_columns(2.0 * np.eye(3))
        with pytest.raises(NotBiorthogonalError):
            injectivity_witness(seq, skewed, [1, 0, 0])


class TestReconstructionShadow:
    def test_two_sided_pair_with_complete_dual_is_basis(self):
        # Square independent system: the dual route alone certifies the verdict.
        for seed in range(5):
            seq = random_seq(seed + 40, 5, 5)
            dual = minimal_dual(seq)
            assert biorthogonality_residual(seq, dual) <= 1e-8
            assert completeness_defect(dual) == 0
            assert duality_identity_residual(seq, dual) <= 1e-8
            assert classify(seq).kind is VerdictKind.RIESZ_BASIS
