"""Command-line front end.

Subcommands: analyze, dual, example, family, gabor.  Exit codes are stable:
0 ok, 2 usage or parse error, 3 numeric failure, 4 no biorthogonal dual,
5 unsafe Gabor truncation.  All randomness sits behind --seed (default 0);
identical invocations produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import diagnostics, duals, generators, matrixio, scaling
from .diagnostics import BIORTHOGONALITY_TOL, TWO_ROUTE_RTOL, VerdictKind
from .errors import (
    CriteriaDisagreementError,
    DimensionError,
    FitDomainError,
    IllConditionedError,
    MatrixParseError,
    NoBiorthogonalSequenceError,
    NotARieszBasisError,
    SingularOperatorError,
    TruncationError,
)
from .matrixio import SCHEMA_VERSION, finite_or_none
from .seqcore import RANK_TOL_SCALE, VectorSequence

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_NO_DUAL = 4
EXIT_TRUNCATION = 5

_EXAMPLE_NAMES = ("orthonormal", "weighted", "alternating", "young", "youngGeneral", "riesz")

_FAMILY_ALIASES = {
    "orthonormal": "orthonormal",
    "weighted": "weightedPair",
    "alternating": "alternatingWeightedPair",
    "young": "youngExample",
    "youngGeneral": "youngGeneral",
    "riesz": "rieszSeeded",
}


class UsageError(Exception):
    pass


def _tolerances() -> dict:
    return {
        "rankToleranceScale": RANK_TOL_SCALE,
        "twoRouteRelative": TWO_ROUTE_RTOL,
        "biorthogonality": BIORTHOGONALITY_TOL,
    }


def _emit(payload: dict, json_path) -> None:
    if json_path:
        matrixio.write_report(json_path, payload)
    else:
        sys.stdout.write(matrixio.report_text(payload))


def _analysis_payload(seq: VectorSequence, source: str) -> dict:
    verdict = diagnostics.classify(seq)
    spectrum = diagnostics.gram_spectrum(seq)
    residuals = {"biorthogonality": None, "dualityIdentity": None}
    if verdict.kind is not VerdictKind.LINEARLY_DEPENDENT:
        try:
            partner = duals.minimal_dual(seq)
        except IllConditionedError:
            partner = None
        if partner is not None:
            residuals = {
                "biorthogonality": diagnostics.biorthogonality_residual(seq, partner),
                "dualityIdentity": duals.duality_identity_residual(seq, partner),
            }
    return {
        "schemaVersion": SCHEMA_VERSION,
        "input": source,
        "bounds": {
            "rieszLower": finite_or_none(verdict.bounds.riesz_lower),
            "besselUpper": finite_or_none(verdict.bounds.bessel_upper),
        },
        "defect": verdict.bounds.completeness_defect,
        "conditioning": finite_or_none(verdict.bounds.conditioning),
        "gramSpectrum": {
            "lambdaMin": finite_or_none(spectrum.lambda_min),
            "lambdaMax": finite_or_none(spectrum.lambda_max),
            "bijective": spectrum.bijective,
        },
        "residuals": {
            "biorthogonality": finite_or_none(residuals["biorthogonality"]),
            "dualityIdentity": finite_or_none(residuals["dualityIdentity"]),
        },
        "verdict": verdict.kind.value,
        "tolerances": _tolerances(),
    }


def _cmd_analyze(args) -> int:
    seq = matrixio.read_matrix(args.input)
    _emit(_analysis_payload(seq, args.input), args.json)
    return EXIT_OK


def _cmd_dual(args) -> int:
    seq = matrixio.read_matrix(args.input)
    partner = duals.minimal_dual(seq)
    matrixio.write_matrix(args.out, partner)
    payload = _analysis_payload(seq, args.input)
    payload["dualPath"] = args.out
    payload["residuals"] = {
        "biorthogonality": finite_or_none(diagnostics.biorthogonality_residual(seq, partner)),
        "dualityIdentity": finite_or_none(duals.duality_identity_residual(seq, partner)),
    }
    _emit(payload, args.json)
    return EXIT_OK


def _example_systems(args):
    name = args.name
    n = args.n
    if n < 1:
        raise UsageError("--n must be >= 1")
    if name == "orthonormal":
        return generators.orthonormal(n), None
    if name == "weighted":
        pair = generators.weighted_pair(n)
    elif name == "alternating":
        pair = generators.alternating_weighted_pair(n)
    elif name == "young":
        pair = generators.young_example(n)
    elif name == "youngGeneral":
        pair = generators.young_general(n, n, args.complement_dim)
    elif name == "riesz":
        return generators.random_riesz(n, seed=args.seed), None
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown example {name!r}")
    return pair.primal, pair.partner


def _cmd_example(args) -> int:
    primal, partner = _example_systems(args)
    prefix = args.out or args.name
    primal_path = f"{prefix}_F.csv"
    matrixio.write_matrix(primal_path, primal)
    written = [primal_path]
    if partner is not None:
        partner_path = f"{prefix}_G.csv"
        matrixio.write_matrix(partner_path, partner)
        written.append(partner_path)
    for path in written:
        sys.stdout.write(path + "\n")
    return EXIT_OK


def _parse_int_list(text: str, flag: str):
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise UsageError(f"{flag} expects a comma-separated integer list: {exc}") from exc
    if not values:
        raise UsageError(f"{flag} expects a comma-separated integer list")
    return values


def _cmd_family(args) -> int:
    generator_id = _FAMILY_ALIASES.get(args.gen, args.gen)
    sizes = _parse_int_list(args.sizes, "--sizes")
    if len(sizes) < 3:
        raise UsageError("--sizes needs at least three sizes for an exponent fit")
    parameters = {
        "seed": args.seed,
        "probeIndex": args.probe_index,
        "complementDim": args.complement_dim,
        "halfWidth": args.half_width,
        "samplesPerUnit": args.samples,
    }
    try:
        spec = scaling.FamilySpec(generator_id, sizes, parameters)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = scaling.run_family(spec)
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "input": f"family:{generator_id} sizes={','.join(map(str, sizes))} seed={args.seed}",
        "tolerances": _tolerances(),
    }
    payload.update(report.to_dict())
    _emit(payload, args.json)
    if args.csv:
        matrixio.write_atomic(args.csv, report.csv_text())
    return EXIT_OK


def _gabor_points(args):
    if args.set == "lattice":
        return generators.lattice_points(args.a, args.b, args.max_index), (
            f"lattice a={args.a} b={args.b} maxIndex={args.max_index}"
        )
    if args.set == "punctured":
        return generators.punctured_lattice(args.max_index), (
            f"punctured maxIndex={args.max_index}"
        )
    if args.set == "als":
        return generators.als_point_set(args.nmax), f"als nmax={args.nmax}"
    if not args.nodes:
        raise UsageError("--set file requires --nodes PATH")
    return matrixio.read_point_set(args.nodes), f"nodes {args.nodes}"


def _cmd_gabor(args) -> int:
    points, source = _gabor_points(args)
    disc = generators.GaborDiscretization(args.half_width, args.samples)
    system = generators.gaussian_gabor(points, disc)
    lower, upper = diagnostics.riesz_bounds(system)
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "input": f"gabor {source} halfWidth={args.half_width} samples={args.samples}",
        "nodes": len(points),
        "gridSize": disc.sample_count,
        "bounds": {
            "rieszLower": finite_or_none(lower),
            "besselUpper": finite_or_none(upper),
        },
        "defect": diagnostics.completeness_defect(system),
        "tolerances": _tolerances(),
    }
    if args.refine:
        rates = sorted(set(_parse_int_list(args.refine, "--refine")) | {args.samples})
        discs = [generators.GaborDiscretization(args.half_width, s) for s in rates]
        payload["refinement"] = scaling.gabor_refinement_study(points, discs).to_dict()
    if args.dump_matrix:
        matrixio.write_matrix(args.dump_matrix, system)
        payload["matrixPath"] = args.dump_matrix
    _emit(payload, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rieszlab",
        description="Diagnostics for finite vector systems: two-sided bounds, "
        "duals, named examples, Gabor systems and scaling studies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("analyze", help="classify a matrix file and report its bounds")
    cmd.add_argument("input", help="complex-matrix CSV (columns are the vectors)")
    cmd.add_argument("--json", metavar="PATH", help="write the report here instead of stdout")
    cmd.set_defaults(func=_cmd_analyze)

    cmd = sub.add_parser("dual", help="write the minimal biorthogonal dual of a matrix file")
    cmd.add_argument("input")
    cmd.add_argument("--out", "-o", required=True, metavar="PATH", help="dual matrix CSV")
    cmd.add_argument("--json", metavar="PATH")
    cmd.set_defaults(func=_cmd_dual)

    cmd = sub.add_parser("example", help="write a named example system to CSV")
    cmd.add_argument("name", choices=_EXAMPLE_NAMES)
    cmd.add_argument("--n", type=int, required=True, help="size parameter of the construction")
    cmd.add_argument("--seed", type=int, default=0)
    cmd.add_argument("--complement-dim", type=int, default=1)
    cmd.add_argument("--out", "-o", metavar="PREFIX", help="output prefix (default: the name)")
    cmd.set_defaults(func=_cmd_example)

    cmd = sub.add_parser("family", help="run a truncation-scaling study")
    cmd.add_argument("--gen", required=True, help="generator name (young, weighted, ...)")
    cmd.add_argument("--sizes", required=True, help="comma-separated, strictly increasing")
    cmd.add_argument("--seed", type=int, default=0)
    cmd.add_argument("--probe-index", type=int, default=0)
    cmd.add_argument("--complement-dim", type=int, default=1)
    cmd.add_argument("--half-width", type=float, default=6.0)
    cmd.add_argument("--samples", type=int, default=16)
    cmd.add_argument("--json", metavar="PATH")
    cmd.add_argument("--csv", metavar="PATH", help="per-size metrics as flat CSV")
    cmd.set_defaults(func=_cmd_family)

    cmd = sub.add_parser("gabor", help="build a Gaussian Gabor system and report bounds")
    cmd.add_argument("--set", required=True, choices=("lattice", "punctured", "als", "file"))
    cmd.add_argument("--max-index", type=int, default=2)
    cmd.add_argument("--nmax", type=int, default=1)
    cmd.add_argument("--a", type=float, default=1.0)
    cmd.add_argument("--b", type=float, default=1.0)
    cmd.add_argument("--nodes", metavar="PATH", help="point-set CSV for --set file")
    cmd.add_argument("--half-width", type=float, default=6.0)
    cmd.add_argument("--samples", type=int, default=16)
    cmd.add_argument("--refine", metavar="RATES", help="extra sampling rates, e.g. 8,32")
    cmd.add_argument("--dump-matrix", metavar="PATH")
    cmd.add_argument("--json", metavar="PATH")
    cmd.set_defaults(func=_cmd_gabor)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, MatrixParseError, DimensionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoBiorthogonalSequenceError:
        print("error: no biorthogonal sequence exists (minimality fails)", file=sys.stderr)
        return EXIT_NO_DUAL
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION
    except (
        IllConditionedError,
        CriteriaDisagreementError,
        FitDomainError,
        SingularOperatorError,
        NotARieszBasisError,
        np.linalg.LinAlgError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
