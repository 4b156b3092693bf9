"""Cuboid cavity geometry.

A cuboid with edges X, Y, Z (cm) is equivalently described by two
dimensionless shape parameters alpha = X/Z, beta = Y/Z and the volume
scale a = (X*Y*Z)^(1/3).  All reduced thermodynamic quantities depend on
the edges only through (alpha, beta) and the product T*a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def cbrt(v: float) -> float:
    """Real cube root (math.cbrt needs Python 3.11)."""
    return float(np.cbrt(v))


@dataclass(frozen=True)
class CuboidGeometry:
    """Cavity edges in cm (any consistent length unit works)."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ValueError(f"edge {name} must be a positive finite number, got {v!r}")

    @property
    def alpha(self) -> float:
        return self.x / self.z

    @property
    def beta(self) -> float:
        return self.y / self.z

    @property
    def volume(self) -> float:
        return self.x * self.y * self.z

    @property
    def a(self) -> float:
        """Volume scale (X*Y*Z)^(1/3)."""
        return cbrt(self.volume)

    @property
    def edges(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    @classmethod
    def from_shape(cls, alpha: float, beta: float, a: float = 1.0) -> "CuboidGeometry":
        """Build edges from shape parameters and the volume scale."""
        if not alpha > 0 or not beta > 0 or not a > 0:
            raise ValueError("alpha, beta and a must be positive")
        z = a / cbrt(alpha * beta)
        return cls(alpha * z, beta * z, z)

    def scaled(self, factor: float) -> "CuboidGeometry":
        """Same shape with all edges multiplied by ``factor``."""
        return CuboidGeometry(self.x * factor, self.y * factor, self.z * factor)


def merge_inline(m: int, cube_edge: float) -> CuboidGeometry:
    """Row of m identical cubes with the partitions removed: (m*e, e, e)."""
    if not (isinstance(m, int) and m >= 1):
        raise ValueError(f"m must be an integer >= 1, got {m!r}")
    if not cube_edge > 0:
        raise ValueError("cube_edge must be positive")
    return CuboidGeometry(m * cube_edge, cube_edge, cube_edge)


def merge_grid(mx: int, my: int, mz: int, cube_edge: float) -> CuboidGeometry:
    """Block of mx*my*mz cubes merged into one cuboid.

    Alternative arrangement of the same total volume, for sensitivity
    studies of the merging experiments.
    """
    for name, m in (("mx", mx), ("my", my), ("mz", mz)):
        if not (isinstance(m, int) and m >= 1):
            raise ValueError(f"{name} must be an integer >= 1, got {m!r}")
    if not cube_edge > 0:
        raise ValueError("cube_edge must be positive")
    return CuboidGeometry(mx * cube_edge, my * cube_edge, mz * cube_edge)
