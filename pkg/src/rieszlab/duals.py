"""Biorthogonal dual construction and reconstruction-identity checks.

A linearly independent system has a unique biorthogonal partner inside its
own span, with columns F Gram^{-1}; it has minimal column norms among all
biorthogonal partners.  With that dual, the composition h -> sum_k <h, g_k> f_k
reconstructs every vector of the span, which is what
`duality_identity_residual` measures.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .diagnostics import (
    BIORTHOGONALITY_TOL,
    biorthogonality_residual,
    completeness_defect,
    riesz_bounds,
)
from .errors import (
    DimensionError,
    IllConditionedError,
    NoBiorthogonalSequenceError,
    NotBiorthogonalError,
)
from .seqcore import (
    VectorSequence,
    analysis,
    coefficient_entries,
    gram,
    rank_tolerance,
    synthesis,
)


class CoCompleteness(NamedTuple):
    defect_primal: int
    defect_dual: int
    equal: bool


def _check_pair(seq: VectorSequence, partner: VectorSequence) -> None:
    if seq.count != partner.count or seq.dim != partner.dim:
        raise DimensionError(
            f"shape mismatch: {seq.dim}x{seq.count} vs {partner.dim}x{partner.count}"
        )


def minimal_dual(seq: VectorSequence) -> VectorSequence:
    """The biorthogonal partner with columns F Gram^{-1}.

    Requires linearly independent columns: a dependent system is not minimal
    and admits no biorthogonal sequence at all.  The Gram system is solved
    from a factorization (never via an explicit inverse), and the result is
    accepted only if the biorthogonality residual meets the 1e-8 contract;
    otherwise IllConditionedError is raised instead of returning a silently
    degraded dual.
    """
    lower = riesz_bounds(seq).lower
    tol = rank_tolerance(seq.columns)
    if lower <= tol**2:
        raise NoBiorthogonalSequenceError(
            "columns are linearly dependent (not minimal); no biorthogonal sequence exists"
        )
    gram_entries = gram(seq).entries
    try:
        dual_adjoint = np.linalg.solve(gram_entries, seq.columns.conj().T)
    except np.linalg.LinAlgError as exc:
        raise IllConditionedError(f"Gram factorization failed: {exc}") from exc
    partner = VectorSequence(seq.ambient, dual_adjoint.conj().T)
    residual = biorthogonality_residual(seq, partner)
    if residual > BIORTHOGONALITY_TOL:
        raise IllConditionedError(
            f"biorthogonality residual {residual:.3e} exceeds {BIORTHOGONALITY_TOL:.0e}; "
            "the system is too ill-conditioned for a trustworthy dual"
        )
    return partner


def duality_identity_residual(seq: VectorSequence, partner: VectorSequence) -> float:
    """Spectral norm of (h -> sum_k <h, g_k> f_k) minus the identity."""
    _check_pair(seq, partner)
    residual = seq.columns @ partner.columns.conj().T - np.eye(seq.dim)
    return float(np.linalg.norm(residual, 2))


def co_completeness_check(seq: VectorSequence) -> CoCompleteness:
    """Completeness defects of a system and of its minimal dual.

    The minimal dual spans exactly the span of the original columns, so the
    two defects always agree; `equal` reports that comparison.
    """
    partner = minimal_dual(seq)
    defect_primal = completeness_defect(seq)
    defect_dual = completeness_defect(partner)
    return CoCompleteness(defect_primal, defect_dual, defect_primal == defect_dual)


def injectivity_witness(seq: VectorSequence, partner: VectorSequence, coeffs):
    """Recover coefficients through the dual: (<sum_k c_k f_k, g_j>)_j.

    For a biorthogonal pair this returns the input coefficients, which is the
    computation showing the synthesis operator has no kernel.
    """
    _check_pair(seq, partner)
    residual = biorthogonality_residual(seq, partner)
    if residual > BIORTHOGONALITY_TOL:
        raise NotBiorthogonalError(
            f"pair is not biorthogonal: residual {residual:.3e} exceeds {BIORTHOGONALITY_TOL:.0e}"
        )
    c = coefficient_entries(coeffs)
    return analysis(partner, synthesis(seq, c))
