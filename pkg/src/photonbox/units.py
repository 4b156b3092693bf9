"""Conversions between reduced quantities and absolute CGS units."""

from __future__ import annotations

from .constants import CODATA, PhysicalConstants
from .geometry import CuboidGeometry


def reduced_temperature(temperature_k: float, geom: CuboidGeometry,
                        constants: PhysicalConstants = CODATA) -> float:
    """t = T*a/B for a cavity with volume scale a (cm) at T (K)."""
    if not temperature_k > 0:
        raise ValueError("temperature must be positive")
    return temperature_k * geom.a / constants.B


def temperature_kelvin(t: float, geom: CuboidGeometry,
                       constants: PhysicalConstants = CODATA) -> float:
    """Absolute temperature in K for a reduced temperature t."""
    if not t > 0:
        raise ValueError("t must be positive")
    return t * constants.B / geom.a


def energy_erg(e_red: float, temperature_k: float,
               constants: PhysicalConstants = CODATA) -> float:
    """E in erg from E/(k_B T)."""
    return e_red * constants.k_b * temperature_k


def entropy_erg_per_k(s_red: float, constants: PhysicalConstants = CODATA) -> float:
    """S in erg/K from S/k_B."""
    return s_red * constants.k_b


def pressure_dyn_per_cm2(p_red: float, temperature_k: float, volume_cm3: float,
                         constants: PhysicalConstants = CODATA) -> float:
    """p in dyn/cm^2 from p V/(k_B T)."""
    return p_red * constants.k_b * temperature_k / volume_cm3


def stefan_boltzmann_energy_erg(temperature_k: float, volume_cm3: float,
                                constants: PhysicalConstants = CODATA) -> float:
    """(4 sigma / c) V T^4, the infinite-volume radiation energy."""
    return 4.0 * constants.sigma / constants.c * volume_cm3 * temperature_k**4
