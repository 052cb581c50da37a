#!/usr/bin/env python3
"""Truncation-scaling studies: reading asymptotics off finite sections.

Finite truncations cannot certify statements about infinite sequences, but
they can expose the trend: a quantity that grows like a positive power of the
size will not stay bounded in the limit.  `run_family` builds a family at
several sizes, fits log-log growth exponents and reports coarse verdicts.
"""

import rieszlab as rl


def show(label, spec):
    report = rl.run_family(spec)
    print(f"--- {label} ---")
    print(f"{'size':>6s} {'rieszLower':>12s} {'besselUpper':>12s} {'defectDist':>12s} {'dualUpper':>12s}")
    for row in report.per_size:
        dd = "-" if row.defect_distance is None else f"{row.defect_distance:12.6f}"
        du = "-" if row.bessel_upper_dual is None else f"{row.bessel_upper_dual:12.4f}"
        print(f"{row.size:6d} {row.riesz_lower:12.6f} {row.bessel_upper:12.4f} {dd:>12s} {du:>12s}")
    for name in sorted(report.verdicts):
        fit = report.fits.get(name)
        tail = f"exponent {fit.exponent:+.3f} (r^2 {fit.r_squared:.4f})" if fit else "no growth fit"
        print(f"  {name:18s} {report.verdicts[name].value:18s} {tail}")
    print()


sizes = (8, 16, 32, 64)

# The shifted-orthonormal family: the system's upper bound grows linearly
# with size (it will not stay a two-sided-bounded sequence in the limit),
# while the distance from the probe e_1 to the span vanishes like 1/sqrt(n).
show("shifted orthonormal family", rl.FamilySpec("youngExample", sizes))

# The weighted pair: the system itself flattens out (lower bound vanishing
# like n^-2), and its dual's upper bound explodes like n^2.
show("weighted pair", rl.FamilySpec("weightedPair", sizes))

# The orthonormal control: every metric flat, every verdict bounded.
show("orthonormal control", rl.FamilySpec("orthonormal", sizes))

# A Gabor family on growing punctured-lattice windows: the lower bound
# decays as nodes accumulate, the signature of a system that cannot keep a
# two-sided bound, while the upper bound stays put.
show(
    "Gaussian Gabor, punctured lattice",
    rl.FamilySpec("gaborPunctured", (1, 2, 3), {"halfWidth": 6.0, "samplesPerUnit": 16}),
)
