import math

import numpy as np
import pytest

from photonbox import (
    AdaptiveCutoff,
    CuboidGeometry,
    CutoffBudgetError,
    FixedCutoff,
    ThermoState,
    auto_cutoff,
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
from photonbox.bose import ZETA3

CUBE = CuboidGeometry.from_shape(1.0, 1.0, 1.0)


def state(t, cutoff=None, geom=CUBE):
    return ThermoState(geom, t, cutoff if cutoff is not None else AdaptiveCutoff())


# ---------------------------------------------------------------- pure tail

def test_pure_tail_limits():
    # omega_e = 0 keeps only the smoothed spectrum: standard blackbody values
    for t in (0.3, 1.0, 7.5):
        r = evaluate(ThermoState(CUBE, t, FixedCutoff(0.0)))
        assert r.f_red == pytest.approx(-math.pi**2 * t**3 / 45.0, rel=1e-13)
        assert r.e_red == pytest.approx(math.pi**2 * t**3 / 15.0, rel=1e-13)
        assert r.s_red == pytest.approx(4.0 * math.pi**2 * t**3 / 45.0, rel=1e-13)
        assert r.n_photons == pytest.approx(2.0 * ZETA3 * t**3 / math.pi**2, rel=1e-13)
        assert r.c_red == pytest.approx(4.0 * math.pi**2 * t**3 / 15.0, rel=1e-13)
        assert r.phi == pytest.approx(1.0, rel=1e-14)
        assert r.p_x_red == r.p_y_red == r.p_z_red
        assert r.p_x_red == pytest.approx(r.e_red / 3.0, rel=1e-14)


# ------------------------------------------------------------ low-t oracle

def _two_shell(t):
    """Two lowest cube shells: 3 modes at pi*sqrt(2), one g=2 at pi*sqrt(3)."""
    x1 = math.pi * math.sqrt(2.0) / t
    x2 = math.pi * math.sqrt(3.0) / t
    occ1 = math.exp(-x1) / (1.0 - math.exp(-x1))
    occ2 = math.exp(-x2) / (1.0 - math.exp(-x2))
    return {
        "E": 3.0 * x1 * occ1 + 2.0 * x2 * occ2,
        "N": 3.0 * occ1 + 2.0 * occ2,
        "F": 3.0 * math.log1p(-math.exp(-x1)) + 2.0 * math.log1p(-math.exp(-x2)),
    }


def test_low_temperature_two_shell_oracle():
    oracle = _two_shell(0.1)
    r = evaluate(state(0.1))
    assert r.e_red == pytest.approx(oracle["E"], rel=1e-6)
    assert r.n_photons == pytest.approx(oracle["N"], rel=1e-6)
    # lowest shell alone already dominates F
    assert r.f_red == pytest.approx(-3.0 * math.exp(-math.pi * math.sqrt(2.0) / 0.1),
                                    rel=1e-3)
    assert r.e_red == pytest.approx(
        3.0 * (math.pi * math.sqrt(2.0) / 0.1)
        * math.exp(-math.pi * math.sqrt(2.0) / 0.1), rel=1e-3)


# ------------------------------------------------------- brute-force oracle

def test_adaptive_matches_brute_force_at_t1(brute_force):
    oracle = brute_force(1.0, 1.0, 1.0, 200.0)
    r = evaluate(state(1.0))
    assert r.e_red == pytest.approx(oracle["E"], rel=1e-6)
    assert r.n_photons == pytest.approx(oracle["N"], rel=1e-6)
    assert r.f_red == pytest.approx(oracle["F"], rel=1e-6)
    assert r.c_red == pytest.approx(oracle["C"], rel=1e-6)


def test_cuboid_matches_brute_force(brute_force):
    # anisotropic shape, all quantities including the face pressures
    alpha, beta, t = 3.0, 0.5, 0.8
    geom = CuboidGeometry.from_shape(alpha, beta, 1.0)
    oracle = brute_force(alpha, beta, t, 120.0)
    r = evaluate(ThermoState(geom, t, AdaptiveCutoff(tol=1e-8)))
    assert r.e_red == pytest.approx(oracle["E"], rel=1e-7)
    assert r.n_photons == pytest.approx(oracle["N"], rel=1e-7)
    # pressures carry an isotropic tail third; compare after removing it
    tail_third = (r.e_red - _discrete_energy(r, geom, t)) / 3.0
    assert r.p_x_red == pytest.approx(oracle["px"] + tail_third, rel=1e-6)
    assert r.p_y_red == pytest.approx(oracle["py"] + tail_third, rel=1e-6)
    assert r.p_z_red == pytest.approx(oracle["pz"] + tail_third, rel=1e-6)


def _discrete_energy(report, geom, t):
    """Discrete part of the reported energy (total minus analytic tail)."""
    from photonbox.bose import tail_integral

    return report.e_red - t**3 / math.pi**2 * tail_integral("energy",
                                                            report.omega_e / t)


# ----------------------------------------------------- identities by stencil

def test_trace_identity_random_states():
    rng = np.random.default_rng(3)
    for _ in range(8):
        alpha = float(rng.uniform(0.2, 5.0))
        beta = float(rng.uniform(0.2, 5.0))
        t = float(rng.uniform(0.1, 4.0))
        geom = CuboidGeometry.from_shape(alpha, beta, 1.0)
        r = evaluate(ThermoState(geom, t, AdaptiveCutoff(tol=1e-4)))
        assert r.pressure_sum == pytest.approx(r.e_red, rel=1e-12)


def test_equation_of_state_volume_derivative():
    # -dF/dV at fixed shape equals E/(3V) (reduced check: -t dF/dt / 3 path)
    t = 0.9
    omega = 40.0
    h = 1e-5
    f_plus = fixed_core(CUBE, t * (1 + h) ** (1 / 3), omega).f_red
    f_minus = fixed_core(CUBE, t * (1 - h) ** (1 / 3), omega).f_red
    e = fixed_core(CUBE, t, omega).e_red
    # F_abs = k_B T f(t), V d/dV = (t/3) d/dt at fixed T
    p_times_3v = -3.0 * (f_plus - f_minus) / (2.0 * h)
    assert p_times_3v == pytest.approx(e, rel=1e-6)


def test_thermodynamic_consistency_temperature_derivative():
    # E = -T^2 d(F/T)/dT at fixed volume and shape
    t = 1.7
    omega = 55.0
    h = 1e-5
    f_plus = fixed_core(CUBE, t * (1 + h), omega).f_red
    f_minus = fixed_core(CUBE, t * (1 - h), omega).f_red
    e = fixed_core(CUBE, t, omega).e_red
    assert -(f_plus - f_minus) / (2.0 * h) == pytest.approx(e, rel=1e-6)


def test_heat_capacity_is_energy_derivative():
    # C = d(t E_red)/dt at fixed geometry and cutoff
    t = 1.3
    omega = 50.0
    h = 1e-4
    e_plus = fixed_core(CUBE, t * (1 + h), omega).e_red * t * (1 + h)
    e_minus = fixed_core(CUBE, t * (1 - h), omega).e_red * t * (1 - h)
    c = fixed_core(CUBE, t, omega).c_red
    assert (e_plus - e_minus) / (2.0 * h * t) == pytest.approx(c, rel=1e-5)


def test_entropy_is_energy_minus_free_energy():
    r = evaluate(state(0.7))
    assert r.s_red == pytest.approx(r.e_red - r.f_red, rel=1e-15)


# ------------------------------------------------------------- similarity

def test_similarity_under_rescaling():
    from photonbox import CODATA, reduced_temperature

    geom1 = CuboidGeometry.from_shape(2.0, 0.7, 1.0)
    for lam in (2.0, 3.0):
        geom2 = CuboidGeometry.from_shape(2.0, 0.7, 1.0 / lam)
        temp = 1.3  # kelvin
        t1 = reduced_temperature(temp, geom1, CODATA)
        t2 = reduced_temperature(lam * temp, geom2, CODATA)
        r1 = evaluate(ThermoState(geom1, t1))
        r2 = evaluate(ThermoState(geom2, t2))
        for field in ("f_red", "e_red", "s_red", "n_photons", "c_red",
                      "p_x_red", "p_y_red", "p_z_red", "phi"):
            assert getattr(r1, field) == pytest.approx(getattr(r2, field),
                                                       rel=1e-12), (field, lam)


# ------------------------------------------------------------ cutoff logic

def test_cutoff_robustness_under_doubling():
    for t in (0.2, 1.0, 5.0):
        r = evaluate(state(t))
        doubled = evaluate(ThermoState(CUBE, t, FixedCutoff(2.0 * r.omega_e)))
        assert doubled.e_red == pytest.approx(r.e_red, rel=1e-6)
        assert doubled.s_red == pytest.approx(r.s_red, rel=1e-6)
        assert doubled.n_photons == pytest.approx(r.n_photons, rel=1e-6)


def test_auto_cutoff_scalar_quantity():
    value, omega = auto_cutoff(state(1.0), "energy")
    assert omega >= 4 * math.pi
    assert value == pytest.approx(evaluate(state(1.0)).e_red, rel=1e-6)


def test_auto_cutoff_requires_adaptive():
    with pytest.raises(ValueError):
        auto_cutoff(ThermoState(CUBE, 1.0, FixedCutoff(30.0)), "energy")


def test_budget_error():
    with pytest.raises(CutoffBudgetError):
        evaluate(ThermoState(CUBE, 40.0, AdaptiveCutoff(max_modes=1000)))


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("PHOTONBOX_MODE_BUDGET", "500")
    with pytest.raises(CutoffBudgetError):
        evaluate(state(20.0))


def test_state_validation():
    with pytest.raises(ValueError):
        ThermoState(CUBE, 0.0)
    with pytest.raises(ValueError):
        ThermoState(CUBE, -1.0)
    with pytest.raises(ValueError):
        AdaptiveCutoff(tol=0.5)
    with pytest.raises(ValueError):
        FixedCutoff(-1.0)


# ------------------------------------------------------------- scalar ops

def test_scalar_operations_agree_with_report():
    st = state(0.6)
    r = evaluate(st)
    assert free_energy(st) == pytest.approx(r.f_red, rel=1e-9)
    assert internal_energy(st) == pytest.approx(r.e_red, rel=1e-9)
    assert photon_number(st) == pytest.approx(r.n_photons, rel=1e-9)
    assert heat_capacity(st) == pytest.approx(r.c_red, rel=1e-9)
    assert face_pressures(st) == pytest.approx((r.p_x_red, r.p_y_red, r.p_z_red),
                                               rel=1e-9)
    assert phi(st) == pytest.approx(r.phi, rel=1e-9)


def test_free_energy_nonpositive_and_signs():
    for t in (0.05, 0.5, 3.0):
        r = evaluate(state(t))
        assert r.f_red <= 0.0
        assert r.e_red >= 0.0
        assert r.s_red >= 0.0
        assert r.n_photons >= 0.0
        assert r.c_red >= 0.0


# --------------------------------------------------------------------- phi

def test_phi_limits():
    assert phi(state(0.05)) < 1e-10
    p50 = phi(state(50.0, AdaptiveCutoff(tol=1e-6)))
    assert abs(p50 - 1.0) <= 0.01
    values = [phi(state(t)) for t in (2.0, 5.0, 15.0, 50.0)]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert all(v < 1.0 for v in values)


# ------------------------------------------------------------ face pressure

def test_cube_pressures_exactly_equal():
    r = evaluate(state(0.5))
    assert r.p_x_red == r.p_y_red == r.p_z_red


def test_two_equal_edges_pressures_equal():
    geom = CuboidGeometry(5.0, 1.0, 1.0)
    r = evaluate(ThermoState(geom, 0.8))
    assert r.p_y_red == r.p_z_red
    assert r.p_x_red != r.p_y_red


def test_unequal_edges_give_anisotropy(brute_force):
    geom = CuboidGeometry(0.1, 0.2, 0.3)
    t = 0.5
    r = evaluate(ThermoState(geom, t, AdaptiveCutoff(tol=1e-8)))
    # ordering and values fixed by the independent direct sum
    oracle = brute_force(geom.alpha, geom.beta, t, 90.0)
    order_oracle = np.argsort([oracle["px"], oracle["py"], oracle["pz"]])
    order_report = np.argsort([r.p_x_red, r.p_y_red, r.p_z_red])
    assert list(order_oracle) == list(order_report)
    assert len({r.p_x_red, r.p_y_red, r.p_z_red}) == 3


def test_anisotropy_fades_at_high_t():
    geom = CuboidGeometry(0.1, 0.2, 0.3)
    r = evaluate(ThermoState(geom, 20.0))
    ratios = np.array([r.p_x_red, r.p_y_red, r.p_z_red]) / (r.e_red / 3.0)
    assert np.all(np.abs(ratios - 1.0) < 5e-3)


# ------------------------------------------------------------ shape forces

def test_shape_forces_cube_symmetric():
    st = state(1.0)
    lam_a, lam_b = shape_forces(st)
    scale = abs(evaluate(st).f_red)
    assert abs(lam_a - lam_b) <= 1e-7 * scale + 1e-12


def test_shape_forces_pure_tail_zero():
    lam_a, lam_b = shape_forces(ThermoState(CUBE, 1.0, FixedCutoff(0.0)))
    assert lam_a == 0.0
    assert lam_b == 0.0


def test_shape_forces_step_halving_stable():
    geom = CuboidGeometry.from_shape(50.0, 1.0, 1.0)
    st = ThermoState(geom, 0.5)
    lam1 = shape_forces(st, rel_step=1e-4)
    lam2 = shape_forces(st, rel_step=5e-5)
    assert lam1[0] == pytest.approx(lam2[0], rel=1e-4)
    assert lam1[1] == pytest.approx(lam2[1], rel=1e-4)
