"""Electromagnetic eigenmodes of a cuboid cavity with ideally conducting walls.

A mode is indexed by a triple of non-negative integers (n_x, n_y, n_z) of
which at most one may be zero.  Its normalized frequency is

    omega = pi * a * sqrt((n_x/X)^2 + (n_y/Y)^2 + (n_z/Z)^2)

with a = (X*Y*Z)^(1/3), i.e. the physical frequency times a/c.  The
polarization degeneracy g is 1 when exactly one index is zero and 2 when
all three are nonzero.  Distinct triples with coincident frequencies are
kept as separate records; g never aggregates geometric coincidences.

The high-frequency continuum that replaces the sum beyond a cutoff has the
smoothed density omega^2/pi^2, so the weighted counting staircase
N(omega) = sum g approaches omega^3/(3*pi^2) from which enumeration
budgets are predicted.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .errors import CutoffBudgetError, NotAModeError
from .geometry import CuboidGeometry

ENV_MODE_BUDGET = "PHOTONBOX_MODE_BUDGET"
DEFAULT_ENUMERATION_BUDGET = 20_000_000
DEFAULT_SUMMATION_BUDGET = 2_000_000_000


class ModeRecord(NamedTuple):
    n_x: int
    n_y: int
    n_z: int
    g: int
    omega: float


def polarization_degeneracy(n: Sequence[int]) -> int:
    """Polarization multiplicity of an index triple; 0 signals "not a mode"."""
    nx, ny, nz = n
    for v in (nx, ny, nz):
        if not (isinstance(v, (int, np.integer)) and v >= 0):
            raise ValueError(f"mode indices must be non-negative integers, got {n!r}")
    zeros = (nx == 0) + (ny == 0) + (nz == 0)
    if zeros >= 2:
        return 0
    return 1 if zeros == 1 else 2


def normalized_frequency(n: Sequence[int], geom: CuboidGeometry) -> float:
    """Dimensionless eigenfrequency omega*a/c of the mode ``n``."""
    if polarization_degeneracy(n) == 0:
        raise NotAModeError(f"{tuple(n)} has fewer than two nonzero indices")
    ux, uy, uz = axis_scales(geom)
    nx, ny, nz = n
    return math.sqrt((ux * nx) ** 2 + (uy * ny) ** 2 + (uz * nz) ** 2)


def axis_scales(geom: CuboidGeometry) -> tuple[float, float, float]:
    """Per-axis frequency quanta (pi*a/X, pi*a/Y, pi*a/Z)."""
    a = geom.a
    return (math.pi * a / geom.x, math.pi * a / geom.y, math.pi * a / geom.z)


def predicted_mode_count(cutoff: float) -> int:
    """Upper estimate of the number of modes with omega <= cutoff."""
    weyl = cutoff**3 / (3.0 * math.pi**2)
    return int(1.25 * weyl) + 64


def mode_budget(default: int) -> int:
    """Budget from the environment, or ``default`` when unset."""
    env = os.environ.get(ENV_MODE_BUDGET)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{ENV_MODE_BUDGET} must be an integer, got {env!r}") from exc
    return default


@dataclass
class PlaneModes:
    """Modes of one lattice plane, compressed to the in-window subset.

    ``axes`` maps the plane decomposition (p, q, r) back to (x, y, z)
    indices.  ``w2_*`` are the squared per-axis frequency components
    (u_i * n_i)^2 of each selected mode; index arrays are only filled when
    the plane iterator runs in detail mode.
    """

    axes: tuple[int, int, int]
    n_p: int
    omega: np.ndarray
    g: np.ndarray
    w2_p: float
    w2_q: np.ndarray | None = None
    w2_r: np.ndarray | None = None
    idx_q: np.ndarray | None = None
    idx_r: np.ndarray | None = None


def iter_mode_planes(
    geom: CuboidGeometry,
    omega_lo: float,
    omega_hi: float,
    detail: bool = True,
) -> Iterator[PlaneModes]:
    """Stream modes with omega_lo < omega <= omega_hi, one lattice plane at a time.

    Planes are taken along the axis with the largest frequency quantum
    (fewest planes) in ascending index order; inside a plane the modes run
    in row-major (n_q, n_r) order.  The ordering is fully deterministic,
    which makes downstream sums bit-reproducible.
    """
    if omega_hi < omega_lo:
        raise ValueError("omega_hi must be >= omega_lo")
    u = axis_scales(geom)
    p = max(range(3), key=lambda i: (u[i], -i))
    q, r = [i for i in range(3) if i != p]
    up, uq, ur = u[p], u[q], u[r]

    # Loop bounds use ceiling plus one; the omega <= cutoff test below is
    # the authoritative filter.
    nq_max = int(math.ceil(omega_hi / uq)) + 1
    nr_max = int(math.ceil(omega_hi / ur)) + 1
    np_max = int(math.ceil(omega_hi / up)) + 1

    wq2 = (uq * np.arange(nq_max + 1, dtype=np.float64)) ** 2
    wr2 = (ur * np.arange(nr_max + 1, dtype=np.float64)) ** 2
    zq = (np.arange(nq_max + 1) == 0).astype(np.uint8)
    zr = (np.arange(nr_max + 1) == 0).astype(np.uint8)

    hi2 = omega_hi * omega_hi
    for n_p in range(np_max + 1):
        w2p = (up * n_p) ** 2
        if up * n_p > omega_hi:
            # every mode of this and later planes exceeds the window
            break
        rem = max(hi2 - w2p, 0.0)
        qm = min(nq_max, int(math.ceil(math.sqrt(rem) / uq)) + 1)
        rm = min(nr_max, int(math.ceil(math.sqrt(rem) / ur)) + 1)

        w2 = w2p + wq2[: qm + 1, None] + wr2[None, : rm + 1]
        omega = np.sqrt(w2)
        zeros = (1 if n_p == 0 else 0) + zq[: qm + 1, None] + zr[None, : rm + 1]
        sel = (zeros <= 1) & (omega <= omega_hi) & (omega > omega_lo)
        if not sel.any():
            continue
        g = np.where(zeros[sel] == 0, 2.0, 1.0)
        if detail:
            iq, ir = np.nonzero(sel)
            yield PlaneModes(
                axes=(p, q, r),
                n_p=n_p,
                omega=omega[sel],
                g=g,
                w2_p=w2p,
                w2_q=wq2[iq],
                w2_r=wr2[ir],
                idx_q=iq,
                idx_r=ir,
            )
        else:
            yield PlaneModes(axes=(p, q, r), n_p=n_p, omega=omega[sel], g=g, w2_p=w2p)


def enumerate_modes(
    geom: CuboidGeometry,
    cutoff: float,
    budget: int | None = None,
) -> Iterator[ModeRecord]:
    """Yield every mode with omega <= cutoff, ascending in omega.

    Ties are broken lexicographically by (n_x, n_y, n_z) so that the
    sequence for a smaller cutoff is always a prefix of the sequence for a
    larger one.  Raises :class:`CutoffBudgetError` when the predicted mode
    count exceeds the budget (argument, environment variable, or the
    package default, in that order of precedence).
    """
    if not cutoff > 0:
        raise ValueError("cutoff must be positive")
    limit = budget if budget is not None else mode_budget(DEFAULT_ENUMERATION_BUDGET)
    predicted = predicted_mode_count(cutoff)
    if predicted > limit:
        raise CutoffBudgetError(cutoff, predicted, limit)

    triples = []
    for plane in iter_mode_planes(geom, 0.0, cutoff, detail=True):
        n = np.empty((plane.omega.size, 3), dtype=np.int64)
        n[:, plane.axes[0]] = plane.n_p
        n[:, plane.axes[1]] = plane.idx_q
        n[:, plane.axes[2]] = plane.idx_r
        triples.append((n, plane.omega, plane.g))
    if not triples:
        return
    n_all = np.concatenate([t[0] for t in triples])
    omega_all = np.concatenate([t[1] for t in triples])
    g_all = np.concatenate([t[2] for t in triples])
    order = np.lexsort((n_all[:, 2], n_all[:, 1], n_all[:, 0], omega_all))
    for i in order:
        yield ModeRecord(
            int(n_all[i, 0]),
            int(n_all[i, 1]),
            int(n_all[i, 2]),
            int(g_all[i]),
            float(omega_all[i]),
        )
