"""Constructors for the named vector systems and Gabor time-frequency systems.

The weighted, alternating and Young-style families come with their designated
biorthogonal partners.  Gabor systems sample time-shifted, frequency-modulated
Gaussians g(x) = exp(-pi x^2) on a uniform grid over [-X, X); with column
scaling sqrt(1/s) the discrete inner products are Riemann sums of the
corresponding integrals, so closed-form values are available as oracles:
the column norm approaches 2^(-1/4) and

    |<v_1, v_2>| = 2^(-1/2) * exp(-pi ((t1-t2)^2 + (m1-m2)^2) / 2)

for nodes (t1, m1), (t2, m2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import DimensionError, SingularOperatorError, TruncationError
from .seqcore import VectorSequence, rank_tolerance

#: Time shifts must stay this far from the grid edge; three widths of the
#: Gaussian leave a tail amplitude of exp(-9 pi) ~ 5e-13.
SAFE_WINDOW_MARGIN = 3.0

#: Seeded random bases are redrawn while the condition number exceeds this.
RIESZ_CONDITION_LIMIT = 1e6


@dataclass(frozen=True)
class PointSet2D:
    """Distinct time-frequency nodes (tau, mu) with their minimal separation."""

    nodes: Tuple[Tuple[float, float], ...]

    def __post_init__(self) -> None:
        nodes = tuple((float(t), float(m)) for t, m in self.nodes)
        if not nodes:
            raise ValueError("a point set needs at least one node")
        arr = np.asarray(nodes, dtype=float)
        if not np.all(np.isfinite(arr)):
            raise ValueError("nodes contain non-finite coordinates")
        separation = math.inf
        if len(nodes) > 1:
            diff = arr[:, None, :] - arr[None, :, :]
            dist = np.sqrt((diff**2).sum(axis=2))
            dist[np.diag_indices(len(nodes))] = math.inf
            separation = float(dist.min())
            if separation <= 0.0:
                raise ValueError("nodes must be pairwise distinct")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "_separation", separation)

    @property
    def separation(self) -> float:
        """Minimal pairwise Euclidean distance (+inf for a single node)."""
        return self._separation  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class GaborDiscretization:
    """Uniform grid on [-X, X) with step 1/s and column scaling sqrt(1/s).

    The half-open grid holds exactly 2*X*s samples, so the squared scaling
    times the sample count equals the window length 2X exactly and discrete
    inner products are Riemann sums.
    """

    half_width: float
    samples_per_unit: int

    def __post_init__(self) -> None:
        if not (self.half_width > 0.0 and math.isfinite(self.half_width)):
            raise ValueError("half_width must be positive and finite")
        if int(self.samples_per_unit) != self.samples_per_unit or self.samples_per_unit < 1:
            raise ValueError("samples_per_unit must be a positive integer")
        total = 2.0 * self.half_width * self.samples_per_unit
        if abs(total - round(total)) > 1e-9:
            raise ValueError("the window must hold a whole number of samples")
        object.__setattr__(self, "half_width", float(self.half_width))
        object.__setattr__(self, "samples_per_unit", int(self.samples_per_unit))

    @property
    def grid_step(self) -> float:
        return 1.0 / self.samples_per_unit

    @property
    def normalization(self) -> float:
        return math.sqrt(1.0 / self.samples_per_unit)

    @property
    def sample_count(self) -> int:
        return int(round(2.0 * self.half_width * self.samples_per_unit))

    def grid(self) -> np.ndarray:
        return -self.half_width + np.arange(self.sample_count) / self.samples_per_unit


@dataclass(frozen=True)
class GeneratedPair:
    """A constructed system plus its designated biorthogonal partner, if any."""

    primal: VectorSequence
    partner: Optional[VectorSequence] = None

    def __post_init__(self) -> None:
        if self.partner is not None:
            if (
                self.partner.dim != self.primal.dim
                or self.partner.count != self.primal.count
            ):
                raise DimensionError("partner must match the primal system's shape")


def orthonormal(n: int) -> VectorSequence:
    """The identity columns e_1..e_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return VectorSequence.from_columns(np.eye(n, dtype=complex))


def riesz_from_operator(operator) -> VectorSequence:
    """Columns V e_k for a numerically invertible square V."""
    v = np.asarray(operator, dtype=complex)
    if v.ndim != 2 or v.shape[0] != v.shape[1]:
        raise DimensionError(f"operator must be square, got shape {v.shape}")
    sigma = np.linalg.svd(v, compute_uv=False)
    if sigma[0] == 0.0 or sigma[-1] <= rank_tolerance(v):
        raise SingularOperatorError("operator is numerically singular")
    return VectorSequence.from_columns(v)


def random_riesz(n: int, seed=0) -> VectorSequence:
    """Seeded random Riesz basis.

    Entries are complex Gaussian, (x + iy)/sqrt(2) with x, y standard normal,
    redrawn until the condition number is at most 1e6.  Identical seeds give
    identical systems.
    """
    rng = np.random.default_rng(seed)
    while True:
        v = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
        sigma = np.linalg.svd(v, compute_uv=False)
        if sigma[-1] > 0.0 and sigma[0] / sigma[-1] <= RIESZ_CONDITION_LIMIT:
            return riesz_from_operator(v)


def weighted_pair(n: int) -> GeneratedPair:
    """The pair (e_k / k) and (k e_k): biorthogonal, only one side bounded."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = np.arange(1, n + 1, dtype=float)
    primal = VectorSequence.from_columns(np.diag(1.0 / k).astype(complex))
    partner = VectorSequence.from_columns(np.diag(k).astype(complex))
    return GeneratedPair(primal, partner)


def alternating_weighted_pair(n: int) -> GeneratedPair:
    """(e_1, 2e_2, e_3/3, 4e_4, e_5/5, ...) with its reciprocal partner.

    Both sides have unbounded weight subsequences as n grows.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    k = np.arange(1, n + 1, dtype=float)
    weights = np.where(k == 1, 1.0, np.where(k % 2 == 0, k, 1.0 / k))
    primal = VectorSequence.from_columns(np.diag(weights).astype(complex))
    partner = VectorSequence.from_columns(np.diag(1.0 / weights).astype(complex))
    return GeneratedPair(primal, partner)


def young_example(n_vectors: int) -> GeneratedPair:
    """(e_k + e_1)_{k=2..N+1} paired with (e_k)_{k=2..N+1} in dimension N+1.

    Both members are biorthogonal; the primal's span gets arbitrarily close
    to e_1 as N grows (distance 1/sqrt(N+1)) while the partner misses e_1
    exactly at every size.
    """
    if n_vectors < 1:
        raise ValueError("n_vectors must be >= 1")
    dim = n_vectors + 1
    partner_cols = np.zeros((dim, n_vectors), dtype=complex)
    partner_cols[1:, :] = np.eye(n_vectors)
    primal_cols = partner_cols.copy()
    primal_cols[0, :] = 1.0
    return GeneratedPair(
        VectorSequence.from_columns(primal_cols),
        VectorSequence.from_columns(partner_cols),
    )


def young_general(subspace_dim: int, n_vectors: int, complement_dim: int = 1) -> GeneratedPair:
    """Orthonormal vectors in a subspace, each shifted by a complement vector.

    The ambient dimension is complement_dim + subspace_dim.  The partner
    consists of the first n_vectors orthonormal directions of the subspace;
    the primal adds to each of them one vector cycled from an orthonormal
    basis of the complement (every complement direction is reused, the finite
    stand-in for unbounded repetition).  complement_dim == 1 reduces to
    `young_example`.
    """
    if min(subspace_dim, n_vectors, complement_dim) < 1:
        raise DimensionError("all dimensions must be >= 1")
    if n_vectors > subspace_dim:
        raise DimensionError(
            f"cannot pick {n_vectors} orthonormal vectors in a {subspace_dim}-dimensional subspace"
        )
    dim = complement_dim + subspace_dim
    partner_cols = np.zeros((dim, n_vectors), dtype=complex)
    primal_cols = np.zeros((dim, n_vectors), dtype=complex)
    for k in range(n_vectors):
        partner_cols[complement_dim + k, k] = 1.0
        primal_cols[complement_dim + k, k] = 1.0
        primal_cols[k % complement_dim, k] = 1.0
    return GeneratedPair(
        VectorSequence.from_columns(primal_cols),
        VectorSequence.from_columns(partner_cols),
    )


def gaussian_gabor(points: PointSet2D, disc: GaborDiscretization) -> VectorSequence:
    """Sampled Gaussian Gabor system, one column per node (tau, mu).

    Column entries are sqrt(1/s) * exp(-pi (x_l - tau)^2) * exp(2 pi i mu x_l)
    over the grid.  Every time shift must satisfy |tau| <= X - 3 so the
    Gaussian tail lost to truncation stays below the working tolerances.
    """
    safe = disc.half_width - SAFE_WINDOW_MARGIN
    for tau, mu in points.nodes:
        if abs(tau) > safe:
            raise TruncationError(
                f"node ({tau}, {mu}) outside the safe window |tau| <= {safe}"
            )
    x = disc.grid()
    taus = np.array([t for t, _ in points.nodes])
    mus = np.array([m for _, m in points.nodes])
    envelopes = np.exp(-np.pi * (x[:, None] - taus[None, :]) ** 2)
    phases = np.exp(2j * np.pi * x[:, None] * mus[None, :])
    return VectorSequence.from_columns(disc.normalization * envelopes * phases)


def lattice_points(a: float, b: float, max_index: int) -> PointSet2D:
    """All nodes (j*a, k*b) with |j|, |k| <= max_index."""
    if not (a > 0.0 and b > 0.0):
        raise ValueError("lattice steps must be positive")
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    span = range(-max_index, max_index + 1)
    return PointSet2D(tuple((j * a, k * b) for j in span for k in span))


def punctured_lattice(max_index: int) -> PointSet2D:
    """The integer lattice window with the node (1, 0) removed."""
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    span = range(-max_index, max_index + 1)
    nodes = tuple(
        (float(j), float(k)) for j in span for k in span if (j, k) != (1, 0)
    )
    return PointSet2D(nodes)


def als_point_set(n_max: int) -> PointSet2D:
    """{(-1,0), (1,0)} plus (0, +-sqrt(2n)) and (+-sqrt(2n), 0) for n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    nodes = [(-1.0, 0.0), (1.0, 0.0)]
    for n in range(1, n_max + 1):
        r = math.sqrt(2.0 * n)
        nodes.extend([(0.0, r), (0.0, -r), (r, 0.0), (-r, 0.0)])
    return PointSet2D(tuple(nodes))
