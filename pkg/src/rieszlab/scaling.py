"""Truncation-scaling studies: how system metrics grow with size.

A family spec names a generator and a strictly increasing list of sizes.  For
the weighted, alternating, Young, orthonormal and seeded-random families the
size is the ambient dimension of the truncation (the Young construction with
ambient dimension n uses n-1 vectors); for the Gabor families it is the
lattice index bound, with the grid fixed by the discretization parameters.

Per size the study records the two-sided bound constants, the distance from a
probe vector to the span, the dual's upper bound constant and the
reconstruction-identity residual, then fits log(metric) against log(size) and
turns the exponents into coarse asymptotic verdicts.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np

from . import diagnostics, duals, generators
from .errors import FitDomainError, IllConditionedError
from .generators import GaborDiscretization, PointSet2D
from .seqcore import rank_tolerance

#: Environment variable capping the number of worker threads.
THREADS_ENV_VAR = "RIESZLAB_THREADS"

#: Values below this are treated as "essentially zero" by the verdict rules.
ESSENTIALLY_ZERO = 1e-6

_EXPONENT_BAND = 0.2
_FIT_QUALITY_MIN = 0.9

GENERATOR_IDS = (
    "orthonormal",
    "weightedPair",
    "alternatingWeightedPair",
    "youngExample",
    "youngGeneral",
    "rieszSeeded",
    "gaborPunctured",
    "gaborALS",
    "gaborFullLattice",
)

#: JSON metric name -> SizeMetrics attribute.
METRIC_FIELDS = (
    ("rieszLowerF", "riesz_lower"),
    ("besselUpperF", "bessel_upper"),
    ("defectDistanceF", "defect_distance"),
    ("besselUpperDual", "bessel_upper_dual"),
    ("dualityResidual", "duality_residual"),
)


class TrendVerdict(str, Enum):
    DIVERGES = "Diverges"
    VANISHES_TO_ZERO = "VanishesToZero"
    STAYS_BOUNDED = "StaysBounded"
    STAYS_BOUNDED_BELOW = "StaysBoundedBelow"


class GrowthFit(NamedTuple):
    exponent: float
    r_squared: float


@dataclass(frozen=True)
class FamilySpec:
    generator_id: str
    sizes: Tuple[int, ...]
    parameters: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.generator_id not in GENERATOR_IDS:
            raise ValueError(
                f"unknown generator {self.generator_id!r}; expected one of {GENERATOR_IDS}"
            )
        sizes = tuple(int(s) for s in self.sizes)
        if len(sizes) < 3:
            raise ValueError("a family needs at least three sizes for an exponent fit")
        if any(s < 1 for s in sizes) or any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ValueError("sizes must be positive and strictly increasing")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "parameters", dict(self.parameters))


@dataclass(frozen=True)
class SizeMetrics:
    size: int
    riesz_lower: float
    bessel_upper: float
    defect_distance: Optional[float]
    bessel_upper_dual: Optional[float]
    duality_residual: Optional[float]


@dataclass(frozen=True)
class ScalingReport:
    per_size: Tuple[SizeMetrics, ...]
    fits: dict
    verdicts: dict

    def to_dict(self) -> dict:
        rows = []
        for row in self.per_size:
            record = {"size": row.size}
            for json_name, attr in METRIC_FIELDS:
                record[json_name] = getattr(row, attr)
            rows.append(record)
        return {
            "perSize": rows,
            "fits": {
                name: {"exponent": fit.exponent, "r2": fit.r_squared}
                for name, fit in self.fits.items()
            },
            "verdicts": {name: verdict.value for name, verdict in self.verdicts.items()},
        }

    def csv_text(self) -> str:
        header = "size," + ",".join(name for name, _ in METRIC_FIELDS)
        lines = [header]
        for row in self.per_size:
            cells = [str(row.size)]
            for _, attr in METRIC_FIELDS:
                value = getattr(row, attr)
                cells.append("" if value is None else format(value, ".17g"))
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


def fit_growth(sizes: Sequence[int], values: Sequence[float]) -> GrowthFit:
    """Least-squares slope of log(value) against log(size), with r^2.

    Constant values give slope 0 with r^2 = 1 (the fit is exact).
    """
    s = np.asarray(sizes, dtype=float)
    v = np.asarray(values, dtype=float)
    if s.ndim != 1 or s.shape != v.shape or s.size < 3:
        raise ValueError("need matching size/value lists of length >= 3")
    if np.any(v <= 0.0) or not np.all(np.isfinite(v)):
        raise FitDomainError("growth fits require strictly positive finite values")
    x = np.log(s)
    y = np.log(v)
    x_centered = x - x.mean()
    slope = float(x_centered @ (y - y.mean()) / (x_centered @ x_centered))
    intercept = float(y.mean() - slope * x.mean())
    residuals = y - (slope * x + intercept)
    ss_res = float(residuals @ residuals)
    ss_tot = float((y - y.mean()) @ (y - y.mean()))
    if ss_tot == 0.0:
        r_squared = 1.0
    else:
        r_squared = min(1.0, max(0.0, 1.0 - ss_res / ss_tot))
    return GrowthFit(slope, r_squared)


def _trend_verdict(values: Sequence[float], fit: Optional[GrowthFit]) -> TrendVerdict:
    if fit is not None and fit.r_squared > _FIT_QUALITY_MIN:
        if fit.exponent > _EXPONENT_BAND:
            return TrendVerdict.DIVERGES
        if fit.exponent < -_EXPONENT_BAND:
            return TrendVerdict.VANISHES_TO_ZERO
    if min(values) > ESSENTIALLY_ZERO:
        return TrendVerdict.STAYS_BOUNDED_BELOW
    return TrendVerdict.STAYS_BOUNDED


def _worker_count(n_jobs: int) -> int:
    cap = os.environ.get(THREADS_ENV_VAR)
    workers = min(n_jobs, os.cpu_count() or 1)
    if cap:
        workers = min(workers, max(1, int(cap)))
    return max(1, workers)


def _gabor_disc(params: dict) -> GaborDiscretization:
    return GaborDiscretization(
        half_width=float(params.get("halfWidth", 6.0)),
        samples_per_unit=int(params.get("samplesPerUnit", 16)),
    )


def _build_member(generator_id: str, size: int, params: dict):
    """Build one truncation; returns (system, designated partner or None)."""
    if generator_id == "orthonormal":
        return generators.orthonormal(size), None
    if generator_id == "weightedPair":
        pair = generators.weighted_pair(size)
        return pair.primal, pair.partner
    if generator_id == "alternatingWeightedPair":
        pair = generators.alternating_weighted_pair(size)
        return pair.primal, pair.partner
    if generator_id == "youngExample":
        if size < 2:
            raise ValueError("youngExample needs ambient dimension >= 2")
        pair = generators.young_example(size - 1)
        return pair.primal, pair.partner
    if generator_id == "youngGeneral":
        complement = int(params.get("complementDim", 1))
        if size <= complement:
            raise ValueError("ambient dimension must exceed the complement dimension")
        pair = generators.young_general(size - complement, size - complement, complement)
        return pair.primal, pair.partner
    if generator_id == "rieszSeeded":
        seed = int(params.get("seed", 0))
        return generators.random_riesz(size, seed=(seed, size)), None
    disc = _gabor_disc(params)
    if generator_id == "gaborPunctured":
        points = generators.punctured_lattice(size)
    elif generator_id == "gaborALS":
        points = generators.als_point_set(size)
    else:  # gaborFullLattice
        points = generators.lattice_points(1.0, 1.0, size)
    return generators.gaussian_gabor(points, disc), None


def _probe_vector(dim: int, params: dict) -> np.ndarray:
    index = int(params.get("probeIndex", 0))
    if not 0 <= index < dim:
        raise ValueError(f"probe index {index} outside ambient dimension {dim}")
    probe = np.zeros(dim, dtype=complex)
    probe[index] = 1.0
    return probe


def _evaluate_size(generator_id: str, size: int, params: dict) -> SizeMetrics:
    try:
        system, partner = _build_member(generator_id, size, params)
        lower, upper = diagnostics.riesz_bounds(system)
        defect_distance = diagnostics.span_distance(system, _probe_vector(system.dim, params))
        if partner is not None:
            dual_upper = diagnostics.bessel_bound(partner)
            duality_residual = duals.duality_identity_residual(system, partner)
        else:
            tol = rank_tolerance(system.columns)
            if lower > tol**2:
                # The minimal dual's Gram is the inverse Gram, so its optimal
                # upper bound is available without forming the dual.
                dual_upper = 1.0 / lower
                try:
                    duality_residual = duals.duality_identity_residual(
                        system, duals.minimal_dual(system)
                    )
                except IllConditionedError:
                    duality_residual = None
            else:
                dual_upper = None
                duality_residual = None
    except Exception as exc:
        raise type(exc)(f"size {size}: {exc}") from exc
    return SizeMetrics(size, lower, upper, defect_distance, dual_upper, duality_residual)


def _assemble_report(rows: Sequence[SizeMetrics]) -> ScalingReport:
    fits = {}
    verdicts = {}
    for json_name, attr in METRIC_FIELDS:
        pairs = [(row.size, getattr(row, attr)) for row in rows if getattr(row, attr) is not None]
        if not pairs:
            continue
        sizes = [s for s, _ in pairs]
        values = [v for _, v in pairs]
        fit = None
        # Series touching the essentially-zero floor are rounding noise, not
        # power laws; they are reported without a growth fit.
        if len(values) >= 3 and min(values) > ESSENTIALLY_ZERO:
            fit = fit_growth(sizes, values)
            fits[json_name] = fit
        verdicts[json_name] = _trend_verdict(values, fit)
    return ScalingReport(tuple(rows), fits, verdicts)


def run_family(spec: FamilySpec) -> ScalingReport:
    """Evaluate a generator family across its sizes and fit growth exponents.

    Sizes are evaluated independently (in parallel when allowed); the report
    rows are ordered by size regardless of completion order.
    """
    workers = _worker_count(len(spec.sizes))
    if workers == 1:
        rows = [_evaluate_size(spec.generator_id, s, spec.parameters) for s in spec.sizes]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(
                pool.map(
                    lambda s: _evaluate_size(spec.generator_id, s, spec.parameters),
                    spec.sizes,
                )
            )
    return _assemble_report(rows)


def gabor_refinement_study(
    points: PointSet2D, discretizations: Sequence[GaborDiscretization]
) -> ScalingReport:
    """Bound constants of one Gabor system under grid refinement.

    Rows are keyed by samples_per_unit; stable values across refinements mean
    the discrete bounds track the underlying system rather than the grid.
    """
    discs = list(discretizations)
    if not discs:
        raise ValueError("need at least one discretization")
    rates = [d.samples_per_unit for d in discs]
    if any(b <= a for a, b in zip(rates, rates[1:])):
        raise ValueError("discretizations must have strictly increasing sampling rates")
    rows = []
    for disc in discs:
        system = generators.gaussian_gabor(points, disc)
        lower, upper = diagnostics.riesz_bounds(system)
        rows.append(
            SizeMetrics(disc.samples_per_unit, lower, upper, None, None, None)
        )
    return _assemble_report(rows)
