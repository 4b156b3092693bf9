"""Numerical experiments: cavity merging and temperature sweeps.

The merging experiments connect M identical cubes into one inline cuboid
(M*e, e, e) and compare the photon gas before and after the partitions
are removed.  Removing them adiabatically conserves total entropy and
lowers the temperature while raising the photon number; removing them
isothermally requires an energy supply.  Both effects vanish in the
extensive regime t >> 1.

Cutoffs inside a merge are resolved by the adaptive rule once per cavity
and then pinned: the entropy solver must see S as a fixed smooth function
of t (an adaptive cutoff re-chosen at every iterate is discontinuous in
t, which would defeat the 1e-10 matching tolerance).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CODATA, PhysicalConstants
from .errors import SolverError
from .geometry import CuboidGeometry, cbrt, merge_inline
from .thermo import (
    AdaptiveCutoff,
    CoreQuantities,
    CutoffPolicy,
    ThermoState,
    adaptive_core,
    evaluate,
    fixed_core,
    sb_energy_red,
)
from .units import reduced_temperature

SOLVER_REL_TOL = 1e-12
MAX_BRACKET_EXPANSIONS = 200
MAX_SOLVER_ITERATIONS = 200

# Merges report entropy, energy and photon number; the heat capacity only
# serves as the Newton slope, so cutoff convergence does not watch it.
MERGE_WATCH = ("free", "energy", "number")


@dataclass(frozen=True)
class MergeResult:
    """Outcome of merging m cubes at initial reduced temperature t.

    Adiabatic removal fills t_ratio (= T'/T) and n_ratio; isothermal
    removal fills de_iso (energy supplied over the Stefan-Boltzmann total
    of the initial cubes).  entropy_residual is the relative mismatch of
    the entropy-conservation equation at the returned temperature.
    """

    m: int
    t: float
    t_ratio: float | None = None
    n_ratio: float | None = None
    de_iso: float | None = None
    entropy_residual: float | None = None
    t_prime_merged: float | None = None
    omega_e_cube: float | None = None
    omega_e_merged: float | None = None

    @property
    def temperature_drop(self) -> float | None:
        return None if self.t_ratio is None else 1.0 - self.t_ratio


@dataclass(frozen=True)
class EnergyPoint:
    """One row of a normalized-energy sweep."""

    t: float
    phi: float
    e_red: float
    s_red: float
    n_photons: float
    c_red: float
    omega_e: float


@dataclass(frozen=True)
class PressurePoint:
    """One row of a face-pressure-ratio sweep."""

    temperature_k: float
    t: float
    px_over_pav: float
    py_over_pav: float
    pz_over_pav: float


def solve_temperature_for_entropy(
    geom: CuboidGeometry,
    s_target: float,
    t_hint: float | None = None,
    rel_tol: float = SOLVER_REL_TOL,
    omega_e: float | None = None,
    hint_report: CoreQuantities | None = None,
) -> tuple[float, CoreQuantities]:
    """Reduced temperature t' with S_red(geom, t') = s_target.

    S_red is strictly increasing in t (the heat capacity is positive), so
    the root is unique.  A bracket around the initial guess is expanded by
    factors of two until it straddles the target; Newton steps using the
    heat capacity (dS/dt = C/t), safeguarded by bisection of the bracket,
    then drive the relative entropy mismatch below ``rel_tol``.

    The evaluation cutoff is ``omega_e`` when given, otherwise the
    adaptive rule resolves it once at the initial guess; either way it
    stays pinned for every iterate.  ``hint_report`` may pass quantities
    already evaluated at ``t_hint`` on the same cutoff.  Returns
    (t', quantities at t').
    """
    if not s_target > 0:
        raise ValueError("entropy target must be positive")
    if hint_report is not None and omega_e is None:
        raise ValueError("hint_report requires the matching omega_e")

    # Stefan-Boltzmann inversion as the default starting point.
    t0 = t_hint if t_hint is not None else cbrt(45.0 * s_target / (4.0 * math.pi**2))
    if omega_e is None:
        start = adaptive_core(geom, t0)
        omega = start.omega_e
        rep = start
    else:
        omega = omega_e
        rep = hint_report if hint_report is not None else fixed_core(geom, t0, omega)

    def report_at(t: float) -> CoreQuantities:
        return fixed_core(geom, t, omega)

    # Newton iteration with a lazily discovered bracket: monotonicity lets
    # the bounds tighten from the evaluated points alone, and bracket ends
    # are only probed (by factor-2 expansion) when a Newton step escapes.
    t_lo, t_hi = 0.0, math.inf
    t_cur, rep_cur = t0, rep
    best_t, best_rep = t_cur, rep_cur
    for _ in range(MAX_SOLVER_ITERATIONS + MAX_BRACKET_EXPANSIONS):
        mismatch = rep_cur.s_red - s_target
        if abs(mismatch) <= rel_tol * s_target:
            return t_cur, rep_cur
        if abs(mismatch) < abs(best_rep.s_red - s_target):
            best_t, best_rep = t_cur, rep_cur
        if mismatch > 0:
            t_hi = min(t_hi, t_cur)
        else:
            t_lo = max(t_lo, t_cur)
        t_next = t_cur * (1.0 - mismatch / rep_cur.c_red) if rep_cur.c_red > 0 else t_lo
        if not (t_lo < t_next < t_hi) or not math.isfinite(t_next):
            if math.isinf(t_hi):
                t_next = 2.0 * t_lo
            elif t_lo == 0.0:
                t_next = t_hi / 2.0
            else:
                t_next = math.sqrt(t_lo * t_hi)
        if t_next == t_cur or (math.isfinite(t_hi)
                               and t_hi - t_lo <= 4.0 * math.ulp(t_cur)):
            # interval exhausted at float resolution
            if abs(mismatch) <= 1e-9 * s_target:
                return t_cur, rep_cur
            raise SolverError("entropy solve stalled at float resolution",
                              s_target=s_target, t=t_cur,
                              residual=mismatch / s_target)
        t_cur = t_next
        rep_cur = report_at(t_cur)
    raise SolverError("entropy solve did not converge",
                      s_target=s_target, t=best_t,
                      residual=(best_rep.s_red - s_target) / s_target)


def adiabatic_merge(m: int, t: float, cube_edge: float = 1.0,
                    tol: float = 1e-6) -> MergeResult:
    """Remove the partitions at constant total entropy.

    Solves S_merged(t') = m * S_cube(t) for the merged cavity's reduced
    temperature t' (which uses a_merged = m^(1/3) * cube_edge) and reports
    T'/T together with the photon-number ratio after/before.
    """
    if not (isinstance(m, int) and m >= 1):
        raise ValueError("m must be an integer >= 1")
    if not t > 0:
        raise ValueError("t must be positive")
    cube = merge_inline(1, cube_edge)
    rep_cube = adaptive_core(cube, t, tol, watch=MERGE_WATCH)
    s_target = m * rep_cube.s_red
    merged = merge_inline(m, cube_edge)
    t_m0 = cbrt(m) * t
    rep_m0 = rep_cube if m == 1 else adaptive_core(merged, t_m0, tol,
                                                   watch=MERGE_WATCH)
    t_prime, rep_merged = solve_temperature_for_entropy(
        merged, s_target, t_hint=t_m0, omega_e=rep_m0.omega_e, hint_report=rep_m0
    )
    return MergeResult(
        m=m,
        t=t,
        t_ratio=t_prime / t_m0,
        n_ratio=rep_merged.n_photons / (m * rep_cube.n_photons),
        entropy_residual=abs(rep_merged.s_red - s_target) / s_target,
        t_prime_merged=t_prime,
        omega_e_cube=rep_cube.omega_e,
        omega_e_merged=rep_merged.omega_e,
    )


def isothermal_merge(m: int, t: float, cube_edge: float = 1.0,
                     tol: float = 1e-6) -> MergeResult:
    """Remove the partitions at constant temperature.

    The energy supplied by the thermostat is the internal-energy change at
    fixed T and total volume, normalized to the Stefan-Boltzmann energy of
    the initial cubes: de_iso = (E_merged - m E_cube) / (m E_SB).
    """
    if not (isinstance(m, int) and m >= 1):
        raise ValueError("m must be an integer >= 1")
    if not t > 0:
        raise ValueError("t must be positive")
    cube = merge_inline(1, cube_edge)
    rep_cube = adaptive_core(cube, t, tol, watch=MERGE_WATCH)
    merged = merge_inline(m, cube_edge)
    t_m0 = cbrt(m) * t
    rep_merged = rep_cube if m == 1 else adaptive_core(merged, t_m0, tol,
                                                       watch=MERGE_WATCH)
    # both sides are E/(k_B T) at the same T, so the reduced values subtract
    de = (rep_merged.e_red - m * rep_cube.e_red) / (m * sb_energy_red(t))
    return MergeResult(
        m=m,
        t=t,
        de_iso=de,
        omega_e_cube=rep_cube.omega_e,
        omega_e_merged=rep_merged.omega_e,
    )


def energy_curve(
    alpha: float,
    beta: float,
    t_grid,
    cutoff: CutoffPolicy | None = None,
) -> list[EnergyPoint]:
    """Normalized-energy sweep over a temperature grid for one cavity shape."""
    geom = CuboidGeometry.from_shape(alpha, beta, 1.0)
    policy = cutoff if cutoff is not None else AdaptiveCutoff()
    rows = []
    for t in t_grid:
        r = evaluate(ThermoState(geom, float(t), policy))
        rows.append(EnergyPoint(r.t, r.phi, r.e_red, r.s_red, r.n_photons,
                                r.c_red, r.omega_e))
    return rows


def pressure_curve(
    geom: CuboidGeometry,
    temperatures_k,
    cutoff: CutoffPolicy | None = None,
    constants: PhysicalConstants = CODATA,
) -> list[PressurePoint]:
    """Face pressures over the average pressure for a temperature grid in K.

    The average pressure is the trace third (p_x + p_y + p_z)/3, equal to
    E/(3V), so a cubic cavity gives ratios of exactly one.
    """
    policy = cutoff if cutoff is not None else AdaptiveCutoff()
    rows = []
    for temp in temperatures_k:
        t = reduced_temperature(float(temp), geom, constants)
        r = evaluate(ThermoState(geom, t, policy))
        # 3*p/trace rather than p/(trace/3): for a cube both the numerator
        # and the denominator round the same real number, so the ratios
        # come out exactly 1
        trace = r.p_x_red + r.p_y_red + r.p_z_red
        rows.append(PressurePoint(float(temp), t, 3.0 * r.p_x_red / trace,
                                  3.0 * r.p_y_red / trace, 3.0 * r.p_z_red / trace))
    return rows
