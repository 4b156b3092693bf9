"""Bose-Einstein statistics kernels and smoothed-spectrum tail integrals.

All kernels take the dimensionless photon energy x = hbar*omega/(k_B*T)
and are written to stay finite for any positive x: small arguments go
through expm1/log1p and large ones underflow cleanly to zero instead of
overflowing.
"""

from __future__ import annotations

import math

import numpy as np

ZETA3 = 1.2020569031595942854  # Riemann zeta(3)

# Exact values of the four tail integrals at x_e = 0.
TAIL_AT_ZERO = {
    "free": -math.pi**4 / 45.0,
    "energy": math.pi**4 / 15.0,
    "number": 2.0 * ZETA3,
    "heat": 4.0 * math.pi**4 / 15.0,
}

TAIL_KINDS = ("free", "energy", "number", "heat")

_SERIES_CUTOFF = 1e-16   # stop when a term is this small relative to the sum
_MAX_TERMS = 200_000


def occupancy(x):
    """Mean Bose occupation 1/(exp(x) - 1) for x > 0.

    Accepts scalars or arrays.  Evaluated as exp(-x)/(-expm1(-x)), which
    is accurate for small x and underflows to exactly 0 for large x.
    """
    arr = np.asarray(x, dtype=np.float64)
    if np.any(arr <= 0):
        raise ValueError("occupancy requires x > 0")
    out = np.exp(-arr) / (-np.expm1(-arr))
    return float(out) if np.isscalar(x) or arr.ndim == 0 else out


def log1mexp(x):
    """ln(1 - exp(-x)) for x > 0, stable over the full float range."""
    arr = np.asarray(x, dtype=np.float64)
    if np.any(arr <= 0):
        raise ValueError("log1mexp requires x > 0")
    out = np.log1p(-np.exp(-arr))
    return float(out) if np.isscalar(x) or arr.ndim == 0 else out


def heat_kernel(x):
    """x^2 exp(x)/(exp(x)-1)^2, the per-mode heat-capacity weight."""
    arr = np.asarray(x, dtype=np.float64)
    if np.any(arr <= 0):
        raise ValueError("heat_kernel requires x > 0")
    z = np.exp(-arr)
    denom = -np.expm1(-arr)
    out = arr * arr * z / (denom * denom)
    return float(out) if np.isscalar(x) or arr.ndim == 0 else out


def tail_integral(kind: str, x_e: float) -> float:
    """Integral of the smoothed-spectrum kernel from x_e to infinity.

    kind="free"   : integral of x^2 ln(1 - e^-x)
    kind="energy" : integral of x^3 / (e^x - 1)
    kind="number" : integral of x^2 / (e^x - 1)
    kind="heat"   : integral of x^4 e^x / (e^x - 1)^2

    Expanding 1/(e^x - 1) = sum_k e^(-k x) and integrating termwise gives
    exact exponential series; each term is an elementary polynomial in
    x_e times e^(-k x_e).  The series is truncated once a term drops below
    1e-16 of the accumulated value.  At x_e = 0 the exact zeta-function
    limits are returned (the raw series converges too slowly there to be
    trusted at full precision).
    """
    if kind not in TAIL_AT_ZERO:
        raise ValueError(f"unknown tail kind {kind!r}; expected one of {TAIL_KINDS}")
    if x_e < 0:
        raise ValueError("x_e must be >= 0")
    if x_e < 1e-8:
        # corrections are O(x_e^2) * kernel scale < 1e-16 of the limit
        return TAIL_AT_ZERO[kind]

    xe = float(x_e)
    xe2 = xe * xe
    xe3 = xe2 * xe
    xe4 = xe2 * xe2
    total = 0.0
    for k in range(1, _MAX_TERMS + 1):
        w = math.exp(-k * xe)
        if w == 0.0:
            break
        ik = 1.0 / k
        if kind == "energy":
            term = w * (xe3 * ik + 3.0 * xe2 * ik**2 + 6.0 * xe * ik**3 + 6.0 * ik**4)
        elif kind == "number":
            term = w * (xe2 * ik + 2.0 * xe * ik**2 + 2.0 * ik**3)
        elif kind == "free":
            term = -w * (xe2 * ik**2 + 2.0 * xe * ik**3 + 2.0 * ik**4)
        else:  # heat
            term = w * (xe4 + 4.0 * xe3 * ik + 12.0 * xe2 * ik**2
                        + 24.0 * xe * ik**3 + 24.0 * ik**4)
        total += term
        if abs(term) <= _SERIES_CUTOFF * abs(total):
            break
    return total
