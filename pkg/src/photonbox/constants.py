"""Physical constants in CGS units.

Everything in the package is dimensionless except at the user boundary,
where lengths are in centimeters and temperatures in kelvin.  The single
combination that matters internally is B = hbar*c/k_B (cm*K): a cavity of
volume scale a at temperature T behaves according to the reduced
temperature t = T*a/B alone.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

# CODATA 2018 exact defining values, CGS.
_HBAR = 1.054571817e-27  # erg*s
_C = 2.99792458e10       # cm/s
_KB = 1.380649e-16       # erg/K


@dataclass(frozen=True)
class PhysicalConstants:
    """CGS constants plus the derived length-temperature scale B.

    An explicit ``b_cm_k`` overrides the derived hbar*c/k_B, which is
    occasionally convenient when matching tabulated values.
    """

    hbar: float = _HBAR
    c: float = _C
    k_b: float = _KB
    b_cm_k: float | None = None

    def __post_init__(self):
        for name in ("hbar", "c", "k_b"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.b_cm_k is not None and not self.b_cm_k > 0:
            raise ValueError("b_cm_k must be positive")

    @property
    def B(self) -> float:
        """hbar*c/k_B in cm*K (about 0.2290)."""
        if self.b_cm_k is not None:
            return self.b_cm_k
        return self.hbar * self.c / self.k_b

    @property
    def sigma(self) -> float:
        """Stefan-Boltzmann constant, erg cm^-2 s^-1 K^-4."""
        return math.pi**2 * self.k_b**4 / (60.0 * self.hbar**3 * self.c**2)

    @classmethod
    def from_file(cls, path) -> "PhysicalConstants":
        """Load overrides from a JSON file; unknown keys are rejected."""
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        allowed = {"hbar", "c", "k_b", "b_cm_k"}
        unknown = set(data) - allowed
        if unknown:
            raise ValueError(f"unknown constant keys: {sorted(unknown)}")
        return cls(**data)


CODATA = PhysicalConstants()
