import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import expm_2x2
from spinab.berry import open_path_solid_angle
from spinab.errors import DegenerateField, NonUnitAxis, TooFewSteps
from spinab.fields import FULL_LOOP, LOWER, UPPER, effective_field
from spinab.model import CONSTANTS, RingConfig, derived, validate
from spinab.spin import (
    IDENTITY,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    branch_phases,
    ordered_product,
    propagate_adiabatic,
    propagate_exact,
    propagate_samples,
    su2_axis_angle,
    unitarity_defect,
    zeeman_closed_form,
)

unit_axes = st.tuples(*[st.floats(-1, 1)] * 3).filter(lambda v: np.linalg.norm(v) > 0.1).map(
    lambda v: np.asarray(v) / np.linalg.norm(v)
)


def test_axis_angle_special_cases():
    np.testing.assert_array_equal(su2_axis_angle((0, 0, 1), 0.0), IDENTITY)
    np.testing.assert_allclose(su2_axis_angle((0, 0, 1), math.pi), np.diag([-1j, 1j]), atol=1e-16)


@given(unit_axes)
def test_axis_angle_double_cover(axis):
    np.testing.assert_allclose(su2_axis_angle(axis, 2 * math.pi), -IDENTITY, atol=1e-15)
    np.testing.assert_allclose(su2_axis_angle(axis, 4 * math.pi), IDENTITY, atol=1e-15)


@given(unit_axes, st.floats(-20, 20))
def test_axis_angle_matches_matrix_exponential(axis, angle):
    h = 0.5 * angle * (axis[0] * SIGMA_X + axis[1] * SIGMA_Y + axis[2] * SIGMA_Z)
    u = su2_axis_angle(axis, angle)
    np.testing.assert_allclose(u, expm_2x2(h), atol=1e-12)
    assert unitarity_defect(u) <= 1e-15
    assert abs(abs(np.linalg.det(u)) - 1) <= 1e-15


def test_non_unit_axis():
    with pytest.raises(NonUnitAxis):
        su2_axis_angle((0, 0, 2), 1.0)


def test_ordered_product_order():
    rng = np.random.default_rng(1)
    mats = rng.normal(size=(7, 2, 2)) + 1j * rng.normal(size=(7, 2, 2))
    expected = IDENTITY
    for m in mats:
        expected = m @ expected
    np.testing.assert_allclose(ordered_product(mats), expected, rtol=1e-12)


def test_too_few_steps(ring):
    with pytest.raises(TooFewSteps):
        propagate_exact(LOWER, 0.1, ring, n_steps=8)


def test_zeeman_closed_form_examples(ring):
    np.testing.assert_array_equal(zeeman_closed_form(0.0, 1e-11, ring), IDENTITY)
    full_turn = 2 * math.pi * CONSTANTS.hbar / (ring.g_factor * CONSTANTS.mu_B * 0.5)
    np.testing.assert_allclose(zeeman_closed_form(0.5, full_turn, ring), -IDENTITY, atol=1e-14)
    # g mu_B b t / hbar = 0.44 * 9.2740100783e-24 * 0.5 * 1.5708e-11 / hbar
    u = zeeman_closed_form(0.5, 1.5708e-11, ring)
    angle = 2 * np.angle(u[1, 1])
    assert angle == pytest.approx(0.30390299201926346, rel=1e-12)


def test_exact_reduces_to_zeeman(ring):
    t = derived(ring, 0.3).traversal_time
    for path in (UPPER, LOWER):
        u = propagate_exact(path, 0.3, ring, n_steps=1024)
        assert np.abs(u - zeeman_closed_form(0.3, t, ring)).max() <= 1e-10


def test_exact_commutes_with_sigma_z_without_spin_orbit(ring):
    u = propagate_exact(LOWER, 0.7, ring)
    assert np.abs(u @ SIGMA_Z - SIGMA_Z @ u).max() <= 1e-10


def test_unitarity(so_ring):
    for path in (UPPER, LOWER):
        assert unitarity_defect(propagate_exact(path, 0.4, so_ring, n_steps=10_000)) <= 1e-12
    u = propagate_exact(UPPER, 0.4, so_ring) @ propagate_exact(LOWER, 0.4, so_ring).conj().T
    assert unitarity_defect(u) <= 1e-12


def test_vectorized_matches_scalar(so_ring):
    bs = np.array([0.0, 0.13, 0.9])
    stack = propagate_exact(LOWER, bs, so_ring, n_steps=256)
    for b, u in zip(bs, stack):
        np.testing.assert_allclose(u, propagate_exact(LOWER, b, so_ring, n_steps=256), atol=1e-15)


def test_second_order_convergence(so_ring):
    ref = propagate_exact(LOWER, 0.3, so_ring, n_steps=2**14)
    d1 = np.abs(propagate_exact(LOWER, 0.3, so_ring, n_steps=2**10) - ref).max()
    d2 = np.abs(propagate_exact(LOWER, 0.3, so_ring, n_steps=2**11) - ref).max()
    assert 3.5 < d1 / d2 < 4.5


def test_time_reversal(so_ring):
    n = 512
    thetas = LOWER.thetas(n)
    fields = effective_field(thetas, LOWER, 0.2, so_ring)
    dt = LOWER.traversal_time(so_ring) / n
    forward = propagate_samples(fields, dt, so_ring.g_factor)
    backward = propagate_samples(fields[::-1], -dt, so_ring.g_factor)
    np.testing.assert_allclose(backward, forward.conj().T, atol=1e-13)


def test_adiabatic_without_spin_orbit_is_zeeman(ring):
    res = propagate_adiabatic(LOWER, 0.4, ring)
    t = derived(ring, 0.4).traversal_time
    np.testing.assert_allclose(res.propagator, zeeman_closed_form(0.4, t, ring), atol=1e-13)
    assert res.geometric_phase_plus == 0.0 == res.geometric_phase_minus


def test_adiabatic_full_loop_cone():
    tilt = math.radians(60)
    cfg = validate(RingConfig(so_field=0.2 * math.tan(tilt)))
    res = propagate_adiabatic(FULL_LOOP, 0.2, cfg, n_points=8193)
    # half of 2 pi (1 - cos 60)
    assert abs(res.geometric_phase_plus) == pytest.approx(math.pi / 2, abs=1e-6)
    assert res.geometric_phase_plus == pytest.approx(-res.geometric_phase_minus, abs=1e-9)


@pytest.mark.parametrize("path", [UPPER, LOWER])
def test_adiabatic_phase_matches_solid_angle(path):
    cfg = validate(RingConfig(so_field=0.3))
    res = propagate_adiabatic(path, 0.25, cfg, n_points=4097)
    omega = open_path_solid_angle(path, 0.25, cfg, 4097)
    assert res.geometric_phase_plus == pytest.approx(-omega / 2, abs=1e-6)
    assert res.geometric_phase_minus == pytest.approx(omega / 2, abs=1e-6)
    assert unitarity_defect(res.propagator) <= 1e-12


def test_adiabatic_matches_exact_when_slow():
    b = 0.5
    cfg = validate(RingConfig(g_factor=500.0, so_field=b * math.tan(math.radians(60))))
    for path in (UPPER, LOWER):
        res = propagate_adiabatic(path, b, cfg)
        assert res.adiabaticity >= 200
        exact = branch_phases(propagate_exact(path, b, cfg, n_steps=2**14), res)
        adiab = branch_phases(res.propagator, res)
        assert np.all(np.abs(np.angle(np.exp(1j * (exact - adiab)))) <= 0.05)


def test_adiabatic_degenerate_field():
    cfg = validate(RingConfig(so_field=0.0))
    with pytest.raises(DegenerateField):
        propagate_adiabatic(LOWER, 0.0, cfg)


@settings(max_examples=25, deadline=None)
@given(b=st.floats(0.01, 2), so=st.floats(0.01, 2))
def test_adiabatic_branch_phases_opposite(b, so):
    res = propagate_adiabatic(UPPER, b, validate(RingConfig(so_field=so)), n_points=257)
    assert res.geometric_phase_plus == pytest.approx(-res.geometric_phase_minus, abs=1e-9)
