"""Vector-system data model and the synthesis / analysis / Gram operators.

A truncated sequence (f_k)_{k=1..m} in an n-dimensional complex space is
stored as the columns of an n-by-m matrix.  The inner product used across
the whole package is

    <x, y> = y^H x,

conjugate-linear in the second slot.  Under this convention the analysis
operator h -> (<h, f_k>)_k is the conjugate transpose of the column matrix,
and the Gram matrix has entry (j, k) = <f_k, f_j> = (F^H F)[j, k].

All values are immutable; every operation is a pure function, so instances
can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError

#: Relative scale of the shared numerical-rank threshold:
#: sigma_max * max(n, m) * RANK_TOL_SCALE.  One constant serves both the
#: completeness-defect and bijectivity tests.
RANK_TOL_SCALE = 1e-12

HERMITIAN_RTOL = 1e-12
PSD_RTOL = 1e-10


def _as_complex_matrix(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if arr.ndim != 2:
        raise DimensionError(f"{name} must be two-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def _as_complex_vector(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if arr.ndim != 1:
        raise DimensionError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = arr.copy()
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class AmbientSpace:
    """Finite model of the ambient space: complex n-space."""

    dim: int

    def __post_init__(self) -> None:
        if int(self.dim) != self.dim or self.dim < 1:
            raise ValueError(f"ambient dimension must be a positive integer, got {self.dim}")
        object.__setattr__(self, "dim", int(self.dim))


@dataclass(frozen=True)
class VectorSequence:
    """Vectors f_1..f_m stored as the columns of an (ambient.dim x m) matrix."""

    ambient: AmbientSpace
    columns: np.ndarray

    def __post_init__(self) -> None:
        cols = _as_complex_matrix(self.columns, "columns")
        if cols.shape[0] != self.ambient.dim:
            raise DimensionError(
                f"columns have {cols.shape[0]} rows but the ambient dimension is {self.ambient.dim}"
            )
        if cols.shape[1] < 1:
            raise ValueError("a vector sequence needs at least one member")
        object.__setattr__(self, "columns", _frozen(cols))

    @classmethod
    def from_columns(cls, columns) -> "VectorSequence":
        cols = _as_complex_matrix(columns, "columns")
        return cls(AmbientSpace(cols.shape[0]), cols)

    @property
    def dim(self) -> int:
        return self.ambient.dim

    @property
    def count(self) -> int:
        return self.columns.shape[1]

    def member(self, k: int) -> np.ndarray:
        """The k-th vector (0-based)."""
        return self.columns[:, k]


@dataclass(frozen=True)
class CoefficientVector:
    """Finite coefficient vector, the stand-in for an l^2 sequence."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        vec = _as_complex_vector(self.entries, "entries")
        object.__setattr__(self, "entries", _frozen(vec))

    def __len__(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.array(self.entries, dtype=dtype)


@dataclass(frozen=True)
class GramMatrix:
    """Hermitian positive-semidefinite matrix of pairwise inner products.

    Entry (j, k) holds <f_k, f_j>.  Hermitian symmetry and positive
    semidefiniteness are validated at construction; the (ascending)
    eigenvalues computed during validation are kept for reuse.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        mat = _as_complex_matrix(self.entries, "entries")
        if mat.shape[0] != mat.shape[1]:
            raise DimensionError(f"Gram matrix must be square, got shape {mat.shape}")
        scale = float(np.abs(mat).max())
        if scale > 0.0:
            asym = float(np.abs(mat - mat.conj().T).max())
            if asym > HERMITIAN_RTOL * scale:
                raise ValueError(f"matrix is not Hermitian within tolerance (defect {asym:.3e})")
        eigenvalues = np.linalg.eigvalsh(mat)
        if eigenvalues[-1] > 0.0 and eigenvalues[0] < -PSD_RTOL * eigenvalues[-1]:
            raise ValueError(
                f"matrix is not positive semidefinite within tolerance (lambda_min {eigenvalues[0]:.3e})"
            )
        object.__setattr__(self, "entries", _frozen(mat))
        object.__setattr__(self, "_eigenvalues", _frozen(eigenvalues))

    @property
    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues in ascending order."""
        return self._eigenvalues  # type: ignore[attr-defined]

    def __array__(self, dtype=None, copy=None):
        return np.array(self.entries, dtype=dtype)


def inner(x, y) -> complex:
    """The package-wide inner product <x, y> = y^H x."""
    return complex(np.vdot(np.asarray(y, dtype=complex), np.asarray(x, dtype=complex)))


def coefficient_entries(coeffs) -> np.ndarray:
    """Coerce a CoefficientVector or array-like into a validated 1-d array."""
    if isinstance(coeffs, CoefficientVector):
        return coeffs.entries
    return _as_complex_vector(coeffs, "coefficients")


def _ambient_vector(vector, dim: int) -> np.ndarray:
    vec = _as_complex_vector(vector, "vector")
    if vec.shape[0] != dim:
        raise DimensionError(f"vector has length {vec.shape[0]}, expected ambient dimension {dim}")
    return vec


def synthesis(seq: VectorSequence, coeffs) -> np.ndarray:
    """Sum_k c_k f_k, the synthesis operator applied to the coefficients."""
    c = coefficient_entries(coeffs)
    if c.shape[0] != seq.count:
        raise DimensionError(f"{c.shape[0]} coefficients supplied for {seq.count} vectors")
    return seq.columns @ c


def analysis(seq: VectorSequence, vector) -> CoefficientVector:
    """The coefficient vector (<h, f_k>)_k, adjoint of synthesis."""
    h = _ambient_vector(vector, seq.dim)
    return CoefficientVector(seq.columns.conj().T @ h)


def gram(seq: VectorSequence) -> GramMatrix:
    """The Gram matrix F^H F with entry (j, k) = <f_k, f_j>."""
    return GramMatrix(seq.columns.conj().T @ seq.columns)


def frame_apply(seq: VectorSequence, vector) -> np.ndarray:
    """Sum_k <h, f_k> f_k, i.e. synthesis composed with analysis."""
    h = _ambient_vector(vector, seq.dim)
    return seq.columns @ (seq.columns.conj().T @ h)


def rank_tolerance(matrix) -> float:
    """Shared rank threshold sigma_max * max(n, m) * 1e-12 for a matrix."""
    arr = np.asarray(matrix, dtype=complex)
    sigma = np.linalg.svd(arr, compute_uv=False)
    if sigma.size == 0:
        return 0.0
    return float(sigma[0]) * max(arr.shape) * RANK_TOL_SCALE


def numerical_rank(matrix) -> int:
    """Number of singular values above the shared rank threshold."""
    arr = np.asarray(matrix, dtype=complex)
    sigma = np.linalg.svd(arr, compute_uv=False)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    tol = float(sigma[0]) * max(arr.shape) * RANK_TOL_SCALE
    return int(np.count_nonzero(sigma > tol))
