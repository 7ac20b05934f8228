"""Two-arm interference of spinor waves and the resulting resistance trace."""

from __future__ import annotations

from typing import Optional

import numpy as np

from .fields import LOWER, UPPER, ab_flux, ab_phase
from .model import RingConfig, SweepConfig
from .spin import propagate_exact
from .trace import Trace

TRANSMISSION_FLOOR = 1e-6


def arm_propagators(b, config: RingConfig, b_ref: Optional[float] = None):
    """Exact propagators ``(U_upper, U_lower)`` at field(s) ``b``.

    In ``flux_only`` mode the spin evolution is frozen at ``b_ref`` (default
    ``b``) and broadcast over ``b``.
    """
    if config.mode == "flux_only":
        ref = np.ravel(b)[0] if b_ref is None else b_ref
        u_up = propagate_exact(UPPER, ref, config)
        u_lo = propagate_exact(LOWER, ref, config)
        if np.ndim(b) > 0:
            shape = (np.size(b), 2, 2)
            return np.broadcast_to(u_up, shape), np.broadcast_to(u_lo, shape)
        return u_up, u_lo
    return propagate_exact(UPPER, b, config), propagate_exact(LOWER, b, config)


def combine_arms(phase, u_upper, u_lower) -> np.ndarray:
    """``(exp(i phase/2) U_upper + exp(-i phase/2) U_lower) / 2``."""
    half = np.exp(0.5j * np.asarray(phase))[..., None, None]
    return 0.5 * (half * u_upper + half.conj() * u_lower)


def two_path_amplitude(b, config: RingConfig, b_ref: Optional[float] = None) -> np.ndarray:
    """Transmitted spin-space amplitude at applied field(s) ``b``."""
    u_up, u_lo = arm_propagators(b, config, b_ref)
    return combine_arms(ab_phase(ab_flux(b, config)), u_up, u_lo)


def transmission_unpolarized(amplitude: np.ndarray):
    """``tr(A^dagger A) / 2``: transmission averaged over both spin states."""
    a = np.asarray(amplitude)
    return 0.5 * np.sum(np.abs(a) ** 2, axis=(-2, -1))


def resistance(t, config: RingConfig):
    """Ohmic resistance ``R0 / T`` with ``T`` clamped below at 1e-6."""
    return config.resistance_scale / np.maximum(t, TRANSMISSION_FLOOR)


def trace_sweep(sweep: SweepConfig, config: RingConfig) -> Trace:
    """Transmission and resistance at each point of the uniform field grid."""
    b = sweep.grid()
    amp = two_path_amplitude(b, config, b_ref=sweep.b_ref)
    t = transmission_unpolarized(amp)
    return Trace(b, {"transmission": t, "resistance_ohm": resistance(t, config)})
