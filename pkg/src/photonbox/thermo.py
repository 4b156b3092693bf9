"""Thermodynamic functions of the photon gas in one cavity state.

Every quantity is evaluated as a discrete sum over modes with
omega <= omega_e plus an analytic tail over the smoothed spectrum
density omega^2/pi^2, in reduced form:

    F/(k_B T) = sum_{omega<=omega_e} g ln(1 - e^(-omega/t))
                + (t^3/pi^2) * integral_{omega_e/t}^inf x^2 ln(1-e^-x) dx

and analogously for energy, photon number and heat capacity.  The face
pressures use the per-mode direction weights of the discrete part and an
isotropic third of the energy tail each, which keeps the trace identity
p_x + p_y + p_z = E exact.

The reduced temperature t = T*a/B with a = V^(1/3) is the only
temperature/size combination anything depends on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .bose import tail_integral
from .errors import CutoffBudgetError
from .geometry import CuboidGeometry
from .spectrum import (
    DEFAULT_SUMMATION_BUDGET,
    mode_budget,
    predicted_mode_count,
)
from .summation import ModeSums, accumulate_shell

ADAPTIVE_GROWTH = 1.5
ADAPTIVE_SUCCESSES = 2
MIN_TAIL_ARGUMENT = 0.5   # adaptive cutoffs keep omega_e/t at or above this


@dataclass(frozen=True)
class FixedCutoff:
    """Sum every mode with omega <= omega_e; omega_e = 0 keeps only the tail."""

    omega_e: float

    def __post_init__(self):
        if not (math.isfinite(self.omega_e) and self.omega_e >= 0):
            raise ValueError("omega_e must be finite and >= 0")


@dataclass(frozen=True)
class AdaptiveCutoff:
    """Grow the cutoff from max(4*pi, 8*t) by factors of 1.5 until the
    monitored quantity moves by less than ``tol`` (relative) on two
    consecutive enlargements."""

    tol: float = 1e-6
    max_modes: int | None = None

    def __post_init__(self):
        if not (0 < self.tol < 1e-2):
            raise ValueError("tol must be in (0, 1e-2)")
        if self.max_modes is not None and self.max_modes <= 0:
            raise ValueError("max_modes must be positive")

    @property
    def budget(self) -> int:
        if self.max_modes is not None:
            return self.max_modes
        return mode_budget(DEFAULT_SUMMATION_BUDGET)


CutoffPolicy = FixedCutoff | AdaptiveCutoff


@dataclass(frozen=True)
class ThermoState:
    """Evaluation context: cavity shape, reduced temperature, cutoff policy."""

    geom: CuboidGeometry
    t: float
    cutoff: CutoffPolicy = AdaptiveCutoff()

    def __post_init__(self):
        if not (math.isfinite(self.t) and self.t > 0):
            raise ValueError("reduced temperature t must be positive")

    def with_cutoff(self, cutoff: CutoffPolicy) -> "ThermoState":
        return replace(self, cutoff=cutoff)


@dataclass(frozen=True)
class ThermoReport:
    """Reduced thermodynamic functions of one state.

    f_red = F/(k_B T), e_red = E/(k_B T), s_red = S/k_B, n_photons = <N>,
    c_red = C/k_B, p_*_red = p_* V/(k_B T), phi = E / ((pi^2/15) t^3 k_B T),
    omega_e = cutoff actually used.
    """

    t: float
    f_red: float
    e_red: float
    s_red: float
    n_photons: float
    c_red: float
    p_x_red: float
    p_y_red: float
    p_z_red: float
    phi: float
    omega_e: float

    @property
    def pressure_sum(self) -> float:
        return self.p_x_red + self.p_y_red + self.p_z_red


_SELECTOR_FIELDS = {
    "free": ("f_red",),
    "energy": ("e_red",),
    "entropy": ("s_red",),
    "number": ("n_photons",),
    "heat": ("c_red",),
    "phi": ("phi",),
    "pressure": ("p_x_red", "p_y_red", "p_z_red"),
    "report": ("f_red", "e_red", "n_photons", "c_red", "p_x_red", "p_y_red", "p_z_red"),
}


def sb_energy_red(t: float) -> float:
    """Stefan-Boltzmann reduced energy (pi^2/15) t^3 = E_SB/(k_B T)."""
    return math.pi**2 * t**3 / 15.0


@dataclass(frozen=True)
class CoreQuantities:
    """Scalar thermodynamic functions without the face pressures.

    Cheaper to accumulate than a full report; used by solvers that only
    need S, C, N and E.
    """

    t: float
    f_red: float
    e_red: float
    s_red: float
    n_photons: float
    c_red: float
    omega_e: float


def _assemble_core(geom: CuboidGeometry, t: float, omega_e: float,
                   sums: ModeSums) -> CoreQuantities:
    x_e = omega_e / t
    t3 = t**3 / math.pi**2
    f = sums.f.value + t3 * tail_integral("free", x_e)
    e = sums.e.value + t3 * tail_integral("energy", x_e)
    n = sums.n.value + t3 * tail_integral("number", x_e)
    c = sums.c.value + t3 * tail_integral("heat", x_e)
    return CoreQuantities(t=t, f_red=f, e_red=e, s_red=e - f, n_photons=n,
                          c_red=c, omega_e=omega_e)


def fixed_core(geom: CuboidGeometry, t: float, omega_e: float) -> CoreQuantities:
    """Core quantities at a fixed cutoff, skipping the pressure sums."""
    sums = ModeSums()
    if omega_e > 0:
        accumulate_shell(geom, t, 0.0, omega_e, sums, want_pressures=False)
    return _assemble_core(geom, t, omega_e, sums)


_CORE_FIELDS = {
    "free": "f_red",
    "energy": "e_red",
    "number": "n_photons",
    "heat": "c_red",
}


def adaptive_core(geom: CuboidGeometry, t: float, tol: float = 1e-6,
                  max_modes: int | None = None,
                  watch: tuple[str, ...] = ("free", "energy", "number", "heat"),
                  ) -> CoreQuantities:
    """Core quantities under the adaptive cutoff rule, pressure sums skipped.

    ``watch`` selects which quantities the convergence test monitors; the
    others are still computed at the final cutoff.
    """
    fields = tuple(_CORE_FIELDS[w] for w in watch)
    policy = AdaptiveCutoff(tol=tol, max_modes=max_modes)
    budget = policy.budget
    omega = adaptive_start(t)
    if predicted_mode_count(omega) > budget:
        raise CutoffBudgetError(omega, predicted_mode_count(omega), budget)
    sums = ModeSums()
    accumulate_shell(geom, t, 0.0, omega, sums, want_pressures=False)
    core = _assemble_core(geom, t, omega, sums)
    previous = tuple(getattr(core, f) for f in fields)
    successes = 0
    while successes < ADAPTIVE_SUCCESSES:
        omega_next = omega * ADAPTIVE_GROWTH
        predicted = predicted_mode_count(omega_next)
        if predicted > budget:
            raise CutoffBudgetError(omega_next, predicted, budget)
        accumulate_shell(geom, t, omega, omega_next, sums, want_pressures=False)
        omega = omega_next
        core = _assemble_core(geom, t, omega, sums)
        current = tuple(getattr(core, f) for f in fields)
        successes = successes + 1 if _relative_change(current, previous) < tol else 0
        previous = current
    return core


def _assemble(geom: CuboidGeometry, t: float, omega_e: float, sums: ModeSums) -> ThermoReport:
    x_e = omega_e / t
    t3 = t**3 / math.pi**2
    e_tail = t3 * tail_integral("energy", x_e)
    f = sums.f.value + t3 * tail_integral("free", x_e)
    e = sums.e.value + e_tail
    n = sums.n.value + t3 * tail_integral("number", x_e)
    c = sums.c.value + t3 * tail_integral("heat", x_e)
    p = [sums.p[i].value + e_tail / 3.0 for i in range(3)]

    # Equal edges give mathematically equal face pressures; alias them to
    # the first axis of each equal-edge group so symmetry is exact in the
    # output rather than true only to summation roundoff.
    edges = geom.edges
    p = [p[min(j for j in range(3) if edges[j] == edges[i])] for i in range(3)]

    return ThermoReport(
        t=t,
        f_red=f,
        e_red=e,
        s_red=e - f,
        n_photons=n,
        c_red=c,
        p_x_red=p[0],
        p_y_red=p[1],
        p_z_red=p[2],
        phi=e / sb_energy_red(t),
        omega_e=omega_e,
    )


def _fixed_report(geom: CuboidGeometry, t: float, omega_e: float) -> ThermoReport:
    sums = ModeSums()
    if omega_e > 0:
        accumulate_shell(geom, t, 0.0, omega_e, sums)
    return _assemble(geom, t, omega_e, sums)


def _relative_change(new: tuple[float, ...], old: tuple[float, ...]) -> float:
    worst = 0.0
    for a, b in zip(new, old):
        denom = max(abs(a), abs(b))
        if denom == 0.0:
            continue
        worst = max(worst, abs(a - b) / denom)
    return worst


def adaptive_start(t: float) -> float:
    omega = max(4.0 * math.pi, 8.0 * t)
    # keep the tail argument away from the slowly converging series region
    while omega < MIN_TAIL_ARGUMENT * t:
        omega *= ADAPTIVE_GROWTH
    return omega


def _adaptive_report(state: ThermoState, selector: str) -> ThermoReport:
    policy = state.cutoff
    assert isinstance(policy, AdaptiveCutoff)
    fields = _SELECTOR_FIELDS[selector]
    geom, t = state.geom, state.t
    budget = policy.budget

    omega = adaptive_start(t)
    if predicted_mode_count(omega) > budget:
        raise CutoffBudgetError(omega, predicted_mode_count(omega), budget)
    sums = ModeSums()
    accumulate_shell(geom, t, 0.0, omega, sums)
    report = _assemble(geom, t, omega, sums)
    previous = tuple(getattr(report, f) for f in fields)

    successes = 0
    while successes < ADAPTIVE_SUCCESSES:
        omega_next = omega * ADAPTIVE_GROWTH
        predicted = predicted_mode_count(omega_next)
        if predicted > budget:
            raise CutoffBudgetError(omega_next, predicted, budget)
        accumulate_shell(geom, t, omega, omega_next, sums)
        omega = omega_next
        report = _assemble(geom, t, omega, sums)
        current = tuple(getattr(report, f) for f in fields)
        if _relative_change(current, previous) < policy.tol:
            successes += 1
        else:
            successes = 0
        previous = current
    return report


def evaluate(state: ThermoState, selector: str = "report") -> ThermoReport:
    """Full thermodynamic report for one state.

    With an adaptive policy the cutoff is converged on ``selector``
    ("report" watches all quantities at once).
    """
    if selector not in _SELECTOR_FIELDS:
        raise ValueError(f"unknown selector {selector!r}")
    if isinstance(state.cutoff, FixedCutoff):
        return _fixed_report(state.geom, state.t, state.cutoff.omega_e)
    return _adaptive_report(state, selector)


def auto_cutoff(state: ThermoState, quantity: str = "report"):
    """(value, omega_e) of ``quantity`` under the adaptive cutoff rule."""
    if not isinstance(state.cutoff, AdaptiveCutoff):
        raise ValueError("auto_cutoff requires an adaptive cutoff policy")
    report = _adaptive_report(state, quantity)
    fields = _SELECTOR_FIELDS[quantity]
    if len(fields) == 1:
        return getattr(report, fields[0]), report.omega_e
    return tuple(getattr(report, f) for f in fields), report.omega_e


def free_energy(state: ThermoState) -> float:
    """F/(k_B T); always <= 0 since the vacuum term is omitted."""
    return evaluate(state, "free").f_red


def internal_energy(state: ThermoState) -> float:
    """E/(k_B T)."""
    return evaluate(state, "energy").e_red


def entropy(state: ThermoState) -> float:
    """S/k_B = E/(k_B T) - F/(k_B T)."""
    return evaluate(state, "entropy").s_red


def photon_number(state: ThermoState) -> float:
    """Mean number of photons."""
    return evaluate(state, "number").n_photons


def heat_capacity(state: ThermoState) -> float:
    """C/k_B at constant volume and shape."""
    return evaluate(state, "heat").c_red


def face_pressures(state: ThermoState) -> tuple[float, float, float]:
    """(p_x, p_y, p_z) times V/(k_B T); sums to E/(k_B T)."""
    r = evaluate(state, "pressure")
    return (r.p_x_red, r.p_y_red, r.p_z_red)


def phi(state: ThermoState) -> float:
    """Finite-size factor E / E_SB; tends to 1 for t >> 1."""
    return evaluate(state, "phi").phi


def shape_forces(state: ThermoState, rel_step: float = 1e-4) -> tuple[float, float]:
    """Generalized forces (dF/dalpha, dF/dbeta) at fixed (t, a), in k_B T.

    Centered finite differences with the cutoff held fixed across the
    stencil (an adaptive policy is resolved once, at the center state).
    """
    geom, t = state.geom, state.t
    if isinstance(state.cutoff, FixedCutoff):
        omega_e = state.cutoff.omega_e
    else:
        omega_e = _adaptive_report(state, "free").omega_e
    alpha, beta, a = geom.alpha, geom.beta, geom.a

    def f_at(al: float, be: float) -> float:
        g = CuboidGeometry.from_shape(al, be, a)
        return fixed_core(g, t, omega_e).f_red

    h_a = alpha * rel_step
    h_b = beta * rel_step
    lam_alpha = (f_at(alpha + h_a, beta) - f_at(alpha - h_a, beta)) / (2.0 * h_a)
    lam_beta = (f_at(alpha, beta + h_b) - f_at(alpha, beta - h_b)) / (2.0 * h_b)
    return (lam_alpha, lam_beta)
