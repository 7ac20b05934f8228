"""Aharonov-Bohm flux/phase and the effective field seen by the moving spin."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import CONSTANTS, RingConfig


@dataclass(frozen=True)
class ArmPath:
    """Angular extent of one traversal of the ring.

    ``angular_direction`` is +1 for counterclockwise motion (increasing
    theta) and -1 for clockwise.
    """

    arm: str
    theta_start: float
    theta_end: float
    angular_direction: int

    @property
    def extent(self) -> float:
        return abs(self.theta_end - self.theta_start)

    def thetas(self, n: int, midpoint: bool = True) -> np.ndarray:
        """``n`` angles along the path; cell midpoints, or endpoints-inclusive."""
        if midpoint:
            frac = (np.arange(n) + 0.5) / n
        else:
            frac = np.linspace(0.0, 1.0, n)
        return self.theta_start + (self.theta_end - self.theta_start) * frac

    def traversal_time(self, config: RingConfig) -> float:
        return self.extent * config.radius / config.fermi_velocity

    def reversed(self) -> "ArmPath":
        return ArmPath(self.arm, self.theta_end, self.theta_start, -self.angular_direction)


# entry at theta = pi, exit at theta = 0 (== 2 pi)
UPPER = ArmPath("upper", math.pi, 0.0, -1)
LOWER = ArmPath("lower", math.pi, 2.0 * math.pi, +1)
# one full counterclockwise loop, used for cyclic Berry phase checks
FULL_LOOP = ArmPath("loop", math.pi, 3.0 * math.pi, +1)


def ab_flux(b, config: RingConfig):
    """Flux through the ring in weber for a uniform normal field ``b``."""
    return np.multiply(b, config.area)


def ab_phase(flux):
    """Aharonov-Bohm phase 2 pi e flux / h, in radians."""
    return np.multiply(flux, 2.0 * math.pi / CONSTANTS.flux_quantum)


def effective_field(theta, path: ArmPath, b: float, config: RingConfig) -> np.ndarray:
    """Effective field (T) at ring angle(s) ``theta`` along ``path``.

    With velocity ``v = d v_F t(theta)`` and ``E`` along z, the motional term
    ``-(lambda/c**2) v x E`` is radial, so the result is
    ``(0, 0, b) - d * so_field * r(theta)``. Vectorized over ``theta``;
    the last axis holds the components.
    """
    theta = np.asarray(theta, dtype=float)
    s = path.angular_direction * config.so_field
    out = np.empty(theta.shape + (3,))
    out[..., 0] = -s * np.cos(theta)
    out[..., 1] = -s * np.sin(theta)
    out[..., 2] = b
    return out
