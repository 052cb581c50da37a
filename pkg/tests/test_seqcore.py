import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

import oracles
from rieszlab import (
    AmbientSpace,
    CoefficientVector,
    DimensionError,
    GramMatrix,
    VectorSequence,
    analysis,
    frame_apply,
    gram,
    inner,
    numerical_rank,
    orthonormal,
    rank_tolerance,
    synthesis,
    young_example,
)


def seq_of(*vectors):
    return VectorSequence.from_columns(np.column_stack([np.asarray(v, dtype=complex) for v in vectors]))


class TestTypes:
    def test_ambient_space_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            AmbientSpace(0)
        assert AmbientSpace(3).dim == 3

    def test_sequence_rejects_nan(self):
        with pytest.raises(ValueError, match="non-finite"):
            VectorSequence.from_columns(np.array([[np.nan, 1.0], [0.0, 1.0]]))

    def test_sequence_rejects_dim_mismatch(self):
        with pytest.raises(DimensionError):
            VectorSequence(AmbientSpace(3), np.eye(2))

    def test_sequence_needs_members(self):
        with pytest.raises(ValueError):
            VectorSequence.from_columns(np.zeros((3, 0)))

    def test_columns_are_immutable(self):
        seq = orthonormal(3)
        assert not seq.columns.flags.writeable
        with pytest.raises(ValueError):
            seq.columns[0, 0] = 5.0

    def test_coefficient_vector_validates(self):
        with pytest.raises(ValueError):
            CoefficientVector(np.array([1.0, np.inf]))
        cv = CoefficientVector(np.array([1.0, 2.0]))
        assert len(cv) == 2
        np.testing.assert_array_equal(np.asarray(cv), [1.0, 2.0])

    def test_gram_matrix_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            GramMatrix(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_gram_matrix_rejects_indefinite(self):
        with pytest.raises(ValueError, match="semidefinite"):
            GramMatrix(np.array([[1.0, 0.0], [0.0, -1.0]]))

    def test_inner_convention(self):
        # <x, y> = y^H x: linear in the first slot, conjugate-linear in the second
        x = np.array([1.0 + 1j, 0.0])
        y = np.array([2.0, 1j])
        assert inner(x, y) == pytest.approx(2.0 + 2j)
        assert inner(y, x) == pytest.approx(np.conj(inner(x, y)))


class TestSynthesis:
    def test_identity_columns(self):
        np.testing.assert_allclose(synthesis(orthonormal(3), [1, 2, 3]), [1, 2, 3])

    def test_hand_sum(self):
        seq = seq_of([1, 0], [1, 1])
        np.testing.assert_allclose(synthesis(seq, [1, -1]), [0, -1])

    def test_young_column_sum(self):
        # brute-force oracle: add the four columns by hand
        seq = young_example(4).primal
        expected = seq.columns[:, 0] + seq.columns[:, 1] + seq.columns[:, 2] + seq.columns[:, 3]
        np.testing.assert_allclose(synthesis(seq, [1, 1, 1, 1]), expected)
        np.testing.assert_allclose(expected, [4, 1, 1, 1, 1])

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            synthesis(orthonormal(3), [1, 2])


class TestAnalysis:
    def test_identity_columns(self):
        coeffs = analysis(orthonormal(2), np.array([3.0, 4.0j]))
        np.testing.assert_allclose(np.asarray(coeffs), [3.0, 4.0j])

    def test_hand_inner_products(self):
        seq = seq_of([1, 0], [1, 1])
        np.testing.assert_allclose(np.asarray(analysis(seq, [1, 1])), [1, 2])

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            analysis(orthonormal(3), [1, 2])

    @pytest.mark.parametrize("seed", range(5))
    def test_adjoint_identity_random(self, seed):
        rng = np.random.default_rng(seed)
        cols = oracles.random_columns(seed, 6, 4)
        seq = VectorSequence.from_columns(cols)
        c = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        h = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        lhs = inner(synthesis(seq, c), h)
        rhs = np.sum(c * np.conj(np.asarray(analysis(seq, h))))
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


class TestGram:
    def test_orthonormal(self):
        np.testing.assert_array_equal(gram(orthonormal(3)).entries, np.eye(3))

    def test_hand_entries(self):
        seq = seq_of([1, 0], [1, 1])
        np.testing.assert_allclose(gram(seq).entries, [[1, 1], [1, 2]])

    def test_young_identity_plus_ones(self):
        entries = gram(young_example(4).primal).entries
        np.testing.assert_allclose(entries, np.eye(4) + np.ones((4, 4)))

    @pytest.mark.parametrize("seed", range(4))
    def test_matches_loop_assembly(self, seed):
        cols = oracles.random_columns(seed, 5, 7)
        entries = gram(VectorSequence.from_columns(cols)).entries
        expected = oracles.gram_by_loops(cols)
        np.testing.assert_allclose(entries, expected, rtol=1e-12, atol=1e-14)

    def test_rank_matches_columns(self):
        cols = oracles.random_columns(11, 6, 3)
        cols = np.concatenate([cols, cols @ np.array([[1.0], [2.0], [3.0]])], axis=1)
        assert numerical_rank(gram(VectorSequence.from_columns(cols)).entries) == 3
        assert numerical_rank(cols) == 3


class TestFrameApply:
    def test_orthonormal_resolution(self):
        h = np.array([1.0, 2.0, 3.0 + 1j])
        np.testing.assert_allclose(frame_apply(orthonormal(3), h), h)

    def test_scaled_identity(self):
        seq = VectorSequence.from_columns(2.0 * np.eye(3))
        h = np.array([1.0, -1.0, 0.5])
        np.testing.assert_allclose(frame_apply(seq, h), 4.0 * h)

    def test_matches_matrix_assembly(self):
        cols = oracles.random_columns(2, 5, 3)
        seq = VectorSequence.from_columns(cols)
        h = oracles.random_columns(3, 5, 1)[:, 0]
        np.testing.assert_allclose(frame_apply(seq, h), (cols @ cols.conj().T) @ h, rtol=1e-12)


_small_part = hnp.arrays(
    np.float64,
    st.tuples(st.integers(1, 6), st.integers(1, 6)),
    elements=st.floats(-10, 10, allow_nan=False),
)


@settings(max_examples=50, deadline=None)
@given(real=_small_part, data=st.data())
def test_adjoint_identity_property(real, data):
    imag = data.draw(
        hnp.arrays(np.float64, real.shape, elements=st.floats(-10, 10, allow_nan=False))
    )
    seq = VectorSequence.from_columns(real + 1j * imag)
    c = data.draw(
        hnp.arrays(np.float64, (seq.count,), elements=st.floats(-5, 5, allow_nan=False))
    )
    h = data.draw(
        hnp.arrays(np.float64, (seq.dim,), elements=st.floats(-5, 5, allow_nan=False))
    )
    lhs = inner(synthesis(seq, c.astype(complex)), h.astype(complex))
    rhs = np.sum(c * np.conj(np.asarray(analysis(seq, h.astype(complex)))))
    scale = 1.0 + abs(lhs) + abs(rhs)
    assert abs(lhs - rhs) <= 1e-12 * scale


@settings(max_examples=50, deadline=None)
@given(
    seed=st.integers(0, 10_000),
    alpha=st.complex_numbers(max_magnitude=5.0, allow_nan=False, allow_infinity=False),
    beta=st.complex_numbers(max_magnitude=5.0, allow_nan=False, allow_infinity=False),
)
def test_frame_apply_linearity_property(seed, alpha, beta):
    rng = np.random.default_rng(seed)
    seq = VectorSequence.from_columns(oracles.random_columns(seed, 4, 3))
    h1 = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    h2 = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    combined = frame_apply(seq, alpha * h1 + beta * h2)
    split = alpha * frame_apply(seq, h1) + beta * frame_apply(seq, h2)
    scale = 1.0 + np.linalg.norm(combined) + np.linalg.norm(split)
    assert np.linalg.norm(combined - split) <= 1e-12 * scale


def test_rank_tolerance_scales_with_sigma():
    assert rank_tolerance(np.eye(4)) == pytest.approx(4e-12)
    assert rank_tolerance(10 * np.eye(4)) == pytest.approx(4e-11)
    assert numerical_rank(np.zeros((3, 3))) == 0
