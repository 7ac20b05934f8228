import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from spinab.fields import LOWER, UPPER, ab_flux, ab_phase, effective_field
from spinab.model import CONSTANTS, RingConfig, validate


def test_canonical_arms():
    assert UPPER.theta_start == LOWER.theta_start == math.pi
    assert UPPER.angular_direction == -1 and LOWER.angular_direction == +1
    assert UPPER.extent == LOWER.extent == pytest.approx(math.pi)
    # upper passes pi/2, lower passes 3 pi/2
    assert UPPER.thetas(3, midpoint=False)[1] == pytest.approx(math.pi / 2)
    assert LOWER.thetas(3, midpoint=False)[1] == pytest.approx(3 * math.pi / 2)


def test_ab_flux(ring):
    assert ab_flux(0.0, ring) == 0.0
    assert ab_flux(1.0, ring) == pytest.approx(7.853981633974483e-13, rel=1e-15)
    # (h/e) / (pi r^2) = 5.2657e-3 T
    assert ab_flux(5.2662e-3, ring) == pytest.approx(CONSTANTS.h / CONSTANTS.e, rel=1e-4)


def test_ab_phase():
    phi0 = CONSTANTS.h / CONSTANTS.e
    assert ab_phase(0.0) == 0.0
    assert ab_phase(phi0) == pytest.approx(2 * math.pi, rel=1e-15)
    assert ab_phase(phi0 / 2) == pytest.approx(math.pi, rel=1e-15)
    assert ab_phase(-phi0) == pytest.approx(-2 * math.pi, rel=1e-15)


@given(st.floats(-1e3, 1e3), st.floats(-1e-12, 1e-12))
def test_ab_phase_linear(a, flux):
    assert ab_phase(a * flux) == pytest.approx(a * ab_phase(flux), rel=1e-12, abs=1e-300)


def test_no_spin_orbit_gives_applied_field(ring):
    thetas = np.linspace(0, 2 * np.pi, 7)
    field = effective_field(thetas, LOWER, 0.3, ring)
    np.testing.assert_array_equal(field, np.tile([0.0, 0.0, 0.3], (7, 1)))


def test_lower_arm_midpoint():
    cfg = validate(RingConfig(so_field=0.05))
    np.testing.assert_allclose(
        effective_field(math.pi / 2, LOWER, 0.1, cfg), [0.0, -0.05, 0.1], atol=1e-17
    )


def test_cross_product_form():
    """Field equals B z - (lambda/c^2) v x E built from explicit vectors."""
    cfg = validate(RingConfig(e_field=3e11))
    e_vec = np.array([0.0, 0.0, 3e11])
    for path in (UPPER, LOWER):
        for theta in np.linspace(0, 2 * np.pi, 9):
            v = path.angular_direction * cfg.fermi_velocity * np.array([-np.sin(theta), np.cos(theta), 0.0])
            expected = np.array([0, 0, 0.2]) - cfg.thomas_factor / CONSTANTS.c**2 * np.cross(v, e_vec)
            np.testing.assert_allclose(effective_field(theta, path, 0.2, cfg), expected, rtol=1e-12, atol=1e-18)


def test_entry_directions_differ_by_in_plane_sign():
    cfg = validate(RingConfig(so_field=0.07))
    up = effective_field(math.pi, UPPER, 0.1, cfg)
    lo = effective_field(math.pi, LOWER, 0.1, cfg)
    np.testing.assert_allclose(up[:2], -lo[:2], atol=0)
    assert up[2] == lo[2]


@given(
    theta=st.floats(-10, 10),
    b=st.floats(-2, 2),
    so=st.one_of(st.just(0.0), st.floats(1e-6, 2)),
)
def test_field_magnitude_and_radial(theta, b, so):
    cfg = validate(RingConfig(so_field=so))
    for path in (UPPER, LOWER):
        f = effective_field(theta, path, b, cfg)
        assert np.linalg.norm(f) == pytest.approx(math.hypot(b, so), rel=1e-12, abs=1e-15)
        tangent = np.array([-math.sin(theta), math.cos(theta), 0.0])
        assert abs(f @ tangent) <= 1e-12 * max(so, 1e-15)
