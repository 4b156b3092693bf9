"""Shared independent oracles for the test suite.

These are deliberately written against different formulas and control flow
than the package internals: the brute-force evaluator uses the
shape-parameter form of the eigenfrequencies over a full 3D grid with no
tail, and the tail oracle uses adaptive quadrature instead of the
exponential series.
"""

import math

import numpy as np
import pytest


def brute_force_sums(alpha, beta, t, cutoff):
    """Direct mode summation with no tail, from the (alpha, beta) form.

    Returns a dict with the reduced F, E, N, C and face pressure sums of
    every mode with omega <= cutoff.
    """
    ux = math.pi * beta ** (1.0 / 3.0) * alpha ** (-2.0 / 3.0)
    uy = math.pi * alpha ** (1.0 / 3.0) * beta ** (-2.0 / 3.0)
    uz = math.pi * (alpha * beta) ** (1.0 / 3.0)
    nx = np.arange(int(cutoff / ux) + 2)
    ny = np.arange(int(cutoff / uy) + 2)
    nz = np.arange(int(cutoff / uz) + 2)
    NX, NY, NZ = np.meshgrid(nx, ny, nz, indexing="ij")
    wx2 = (ux * NX) ** 2
    wy2 = (uy * NY) ** 2
    wz2 = (uz * NZ) ** 2
    om = np.sqrt(wx2 + wy2 + wz2)
    zeros = (NX == 0).astype(int) + (NY == 0).astype(int) + (NZ == 0).astype(int)
    keep = (zeros <= 1) & (om <= cutoff) & (om > 0)
    g = np.where(zeros == 0, 2.0, 1.0)[keep]
    om = om[keep]
    x = om / t
    occ = 1.0 / np.expm1(x)
    return {
        "F": float(np.sum(g * np.log1p(-np.exp(-x)))),
        "E": float(np.sum(g * x * occ)),
        "N": float(np.sum(g * occ)),
        "C": float(np.sum(g * x * x * np.exp(x) * occ * occ)),
        "px": float(np.sum(g * occ * wx2[keep] / (t * om))),
        "py": float(np.sum(g * occ * wy2[keep] / (t * om))),
        "pz": float(np.sum(g * occ * wz2[keep] / (t * om))),
        "count": int(om.size),
        "sum_g": float(np.sum(g)),
    }


def quadrature_tail(kind, x_e):
    """Adaptive-quadrature evaluation of the four tail integrals."""
    from scipy.integrate import quad

    integrands = {
        "free": lambda x: x * x * np.log1p(-np.exp(-x)),
        "energy": lambda x: x**3 * np.exp(-x) / (-np.expm1(-x)),
        "number": lambda x: x * x * np.exp(-x) / (-np.expm1(-x)),
        "heat": lambda x: x**4 * np.exp(-x) / (-np.expm1(-x)) ** 2,
    }
    lo = x_e if x_e > 0 else 1e-12
    value, err = quad(integrands[kind], lo, np.inf, epsabs=1e-13, epsrel=1e-12,
                      limit=400)
    return value


@pytest.fixture
def brute_force():
    return brute_force_sums


@pytest.fixture
def quad_tail():
    return quadrature_tail
