#!/usr/bin/env python3
"""Gallery of the named example families and what each one demonstrates.

Each construction isolates one phenomenon: biorthogonal pairs where only one
side keeps a finite upper bound, pairs where neither side does, and the
shifted-orthonormal family whose span swallows an extra direction in the
limit while its partner never does.
"""

import numpy as np

import rieszlab as rl


def describe(label, seq):
    lower, upper = rl.riesz_bounds(seq)
    print(f"  {label:14s} bounds=({lower:10.4f}, {upper:10.4f})  "
          f"defect={rl.completeness_defect(seq)}  verdict={rl.classify(seq).kind.value}")


print("=" * 70)
print("Weighted pair (e_k / k) and (k e_k), n = 8")
print("=" * 70)
pair = rl.weighted_pair(8)
describe("F = e_k/k:", pair.primal)
describe("G = k e_k:", pair.partner)
print(f"  biorthogonality residual: {rl.biorthogonality_residual(pair.primal, pair.partner):.2e}")
print("  Only F keeps its upper bound as n grows; G's blows up like n^2.")
print(f"  minimal_dual(F) equals G entrywise: "
      f"{np.abs(rl.minimal_dual(pair.primal).columns - pair.partner.columns).max():.2e}")

print()
print("=" * 70)
print("Alternating weighted pair, n = 8")
print("=" * 70)
pair = rl.alternating_weighted_pair(8)
describe("F:", pair.primal)
describe("G:", pair.partner)
print("  Both sides now carry growing weights: neither upper bound stays put.")

print()
print("=" * 70)
print("Shifted orthonormal family (e_k + e_1) with partner (e_k), N = 9")
print("=" * 70)
pair = rl.young_example(9)
describe("F = e_k + e_1:", pair.primal)
describe("G = e_k:", pair.partner)
e1 = np.zeros(10, dtype=complex)
e1[0] = 1.0
print(f"  distance from e_1 to span(F): {rl.span_distance(pair.primal, e1):.6f}"
      f"   (1/sqrt(N+1) = {1/np.sqrt(10):.6f})")
print(f"  distance from e_1 to span(G): {rl.span_distance(pair.partner, e1):.6f}   (misses it exactly)")
print("  F's span captures e_1 in the limit; G's never does, although the")
print("  two systems are biorthogonal at every size.")

print()
print("=" * 70)
print("General shifted construction: 2-dimensional complement, cycled")
print("=" * 70)
pair = rl.young_general(6, 6, complement_dim=2)
describe("F = g_k + y_k:", pair.primal)
describe("G = g_k:", pair.partner)
print(f"  biorthogonality residual: {rl.biorthogonality_residual(pair.primal, pair.partner):.2e}")

print()
print("=" * 70)
print("Seeded random bases are reproducible")
print("=" * 70)
one = rl.random_riesz(6, seed=42)
two = rl.random_riesz(6, seed=42)
print(f"  same seed, same columns: {np.array_equal(one.columns, two.columns)}")
print(f"  verdict: {rl.classify(one).kind.value}")
