"""Photon gas thermodynamics in a finite cuboid cavity.

Exact electromagnetic mode summation up to a cutoff plus an analytic
smoothed-spectrum tail gives all thermodynamic functions of the enclosed
radiation, reproducing the finite-size deviations from the Stefan-
Boltzmann law, the anomalies of merging cavities, and the anisotropy of
the radiation pressure.
"""

from .bose import heat_kernel, log1mexp, occupancy, tail_integral
from .constants import CODATA, PhysicalConstants
from .errors import CutoffBudgetError, NotAModeError, PhotonboxError, SolverError
from .experiments import (
    EnergyPoint,
    MergeResult,
    PressurePoint,
    adiabatic_merge,
    energy_curve,
    isothermal_merge,
    pressure_curve,
    solve_temperature_for_entropy,
)
from .geometry import CuboidGeometry, merge_grid, merge_inline
from .spectrum import (
    ModeRecord,
    enumerate_modes,
    normalized_frequency,
    polarization_degeneracy,
)
from .thermo import (
    AdaptiveCutoff,
    CoreQuantities,
    FixedCutoff,
    ThermoReport,
    ThermoState,
    adaptive_core,
    auto_cutoff,
    entropy,
    evaluate,
    face_pressures,
    fixed_core,
    free_energy,
    heat_capacity,
    internal_energy,
    phi,
    photon_number,
    sb_energy_red,
    shape_forces,
)
from .units import (
    energy_erg,
    entropy_erg_per_k,
    pressure_dyn_per_cm2,
    reduced_temperature,
    stefan_boltzmann_energy_erg,
    temperature_kelvin,
)

__version__ = "0.1.0"

__all__ = [
    "AdaptiveCutoff",
    "CODATA",
    "CoreQuantities",
    "CuboidGeometry",
    "CutoffBudgetError",
    "EnergyPoint",
    "FixedCutoff",
    "MergeResult",
    "ModeRecord",
    "NotAModeError",
    "PhotonboxError",
    "PhysicalConstants",
    "PressurePoint",
    "SolverError",
    "ThermoReport",
    "ThermoState",
    "adaptive_core",
    "adiabatic_merge",
    "auto_cutoff",
    "energy_curve",
    "energy_erg",
    "entropy",
    "entropy_erg_per_k",
    "enumerate_modes",
    "evaluate",
    "face_pressures",
    "fixed_core",
    "free_energy",
    "heat_capacity",
    "heat_kernel",
    "internal_energy",
    "isothermal_merge",
    "log1mexp",
    "merge_grid",
    "merge_inline",
    "normalized_frequency",
    "occupancy",
    "phi",
    "photon_number",
    "polarization_degeneracy",
    "pressure_curve",
    "pressure_dyn_per_cm2",
    "reduced_temperature",
    "sb_energy_red",
    "shape_forces",
    "solve_temperature_for_entropy",
    "stefan_boltzmann_energy_erg",
    "tail_integral",
    "temperature_kelvin",
]
