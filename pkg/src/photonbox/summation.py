"""Deterministic compensated accumulation of mode sums.

Discrete sums over the spectrum stream plane by plane: each plane's
contribution is reduced with numpy's pairwise summation and folded into a
Neumaier compensated accumulator.  The plane order is fixed, so repeated
runs produce bit-identical totals.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import CuboidGeometry
from .spectrum import iter_mode_planes


class Neumaier:
    """Compensated running sum (Kahan with Neumaier's correction)."""

    __slots__ = ("_s", "_c")

    def __init__(self):
        self._s = 0.0
        self._c = 0.0

    def add(self, v: float) -> None:
        s = self._s
        t = s + v
        if abs(s) >= abs(v):
            self._c += (s - t) + v
        else:
            self._c += (v - t) + s
        self._s = t

    @property
    def value(self) -> float:
        return self._s + self._c


@dataclass
class ModeSums:
    """Running discrete-spectrum sums for one (geometry, t) evaluation.

    Reduced quantities: f = sum g ln(1-e^-x), e = sum g x/(e^x-1),
    n = sum g/(e^x-1), c = sum g x^2 e^x/(e^x-1)^2 and the three face
    pressure sums p[i] = sum g (u_i n_i)^2 / (t omega (e^x-1)), all with
    x = omega/t.
    """

    f: Neumaier = field(default_factory=Neumaier)
    e: Neumaier = field(default_factory=Neumaier)
    n: Neumaier = field(default_factory=Neumaier)
    c: Neumaier = field(default_factory=Neumaier)
    p: tuple[Neumaier, Neumaier, Neumaier] = field(
        default_factory=lambda: (Neumaier(), Neumaier(), Neumaier())
    )
    count: int = 0


def accumulate_shell(
    geom: CuboidGeometry,
    t: float,
    omega_lo: float,
    omega_hi: float,
    sums: ModeSums,
    want_pressures: bool = True,
) -> None:
    """Add every mode with omega_lo < omega <= omega_hi into ``sums``."""
    for plane in iter_mode_planes(geom, omega_lo, omega_hi, detail=want_pressures):
        om = plane.omega
        g = plane.g
        x = om / t
        z = np.exp(-x)
        denom = -np.expm1(-x)  # 1 - e^{-x}, never 0 for x > 0
        w = g * (z / denom)    # g times occupancy
        sums.f.add(float(np.sum(g * np.log1p(-z))))
        sums.e.add(float(np.sum(w * x)))
        sums.n.add(float(np.sum(w)))
        sums.c.add(float(np.sum(w * x * x / denom)))
        if want_pressures:
            pref = w / (t * om)
            sums.p[plane.axes[0]].add(plane.w2_p * float(np.sum(pref)))
            sums.p[plane.axes[1]].add(float(np.sum(pref * plane.w2_q)))
            sums.p[plane.axes[2]].add(float(np.sum(pref * plane.w2_r)))
        sums.count += om.size
