"""Independent brute-force oracles used by the test suite.

These deliberately avoid the library's own computation paths: distances come
from an explicit orthonormal-basis projector, spectral quantities from dense
eigensolves of explicitly assembled matrices, and Gabor values from adaptive
quadrature of the underlying integrals.
"""

import numpy as np


def random_columns(seed, dim, count):
    rng = np.random.default_rng(seed)
    return (rng.standard_normal((dim, count)) + 1j * rng.standard_normal((dim, count))) / np.sqrt(2)


def projector_distance(columns, vector):
    """Distance to the column span via an explicit orthonormal projector."""
    u, s, _ = np.linalg.svd(np.asarray(columns, dtype=complex), full_matrices=False)
    if s[0] == 0.0:
        return float(np.linalg.norm(vector))
    rank = int(np.count_nonzero(s > s[0] * max(columns.shape) * 1e-12))
    basis = u[:, :rank]
    residual = vector - basis @ (basis.conj().T @ vector)
    return float(np.linalg.norm(residual))


def spectral_norm(matrix):
    """Largest singular value through the Hermitian eigenproblem of A^H A."""
    a = np.asarray(matrix, dtype=complex)
    lam = np.linalg.eigvalsh(a.conj().T @ a)
    return float(np.sqrt(max(lam[-1], 0.0)))


def gram_by_loops(columns):
    """Entrywise Gram assembly with explicit inner products."""
    cols = np.asarray(columns, dtype=complex)
    m = cols.shape[1]
    out = np.empty((m, m), dtype=complex)
    for j in range(m):
        for k in range(m):
            out[j, k] = np.vdot(cols[:, j], cols[:, k])
    return out


def gaussian_inner_product(tau1, mu1, tau2, mu2):
    """Quadrature value of the continuous Gabor inner product modulus."""
    from scipy.integrate import quad

    def integrand(x, part):
        value = (
            np.exp(-np.pi * (x - tau1) ** 2)
            * np.exp(-np.pi * (x - tau2) ** 2)
            * np.exp(2j * np.pi * (mu1 - mu2) * x)
        )
        return value.real if part == "re" else value.imag

    re = quad(lambda x: integrand(x, "re"), -np.inf, np.inf)[0]
    im = quad(lambda x: integrand(x, "im"), -np.inf, np.inf)[0]
    return abs(complex(re, im))
