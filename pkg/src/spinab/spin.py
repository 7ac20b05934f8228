"""SU(2) spin propagation along a ring arm.

Spin Hamiltonian ``H = (g/2) mu_B B_eff . sigma``. The exact propagator is a
time-ordered product of exact rotations sampled at step midpoints; the
adiabatic one keeps each spin branch pinned to the instantaneous field
direction and parallel-transports it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateField, NonUnitAxis, TooFewSteps
from .fields import ArmPath, effective_field
from .model import CONSTANTS, RingConfig, derived

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)

MIN_FIELD = 1e-15  # tesla; below this the field direction is undefined
_CHUNK = 128


def su2_axis_angle(axis, angle, check: bool = True) -> np.ndarray:
    """``cos(angle/2) I - i sin(angle/2) axis.sigma``.

    Broadcasts over leading dimensions of ``axis`` (last axis of length 3)
    and ``angle``.
    """
    axis = np.asarray(axis, dtype=float)
    angle = np.asarray(angle, dtype=float)
    if check and np.any(np.abs(np.linalg.norm(axis, axis=-1) - 1.0) > 1e-9):
        raise NonUnitAxis("rotation axis must have unit norm")
    c = np.cos(0.5 * angle)
    s = np.sin(0.5 * angle)
    nx, ny, nz = axis[..., 0], axis[..., 1], axis[..., 2]
    shape = np.broadcast_shapes(c.shape, nx.shape)
    u = np.empty(shape + (2, 2), dtype=complex)
    u[..., 0, 0] = c - 1j * s * nz
    u[..., 0, 1] = -1j * s * nx - s * ny
    u[..., 1, 0] = -1j * s * nx + s * ny
    u[..., 1, 1] = c + 1j * s * nz
    return u


def ordered_product(steps: np.ndarray) -> np.ndarray:
    """Time-ordered product ``U[N-1] ... U[1] U[0]`` over axis ``-3``.

    Uses pairwise reduction; the grouping is fixed by N alone, so results are
    deterministic.
    """
    u = steps
    while u.shape[-3] > 1:
        n = u.shape[-3]
        paired = u[..., 1 : n - n % 2 : 2, :, :] @ u[..., 0 : n - n % 2 : 2, :, :]
        if n % 2:
            paired = np.concatenate([paired, u[..., n - 1 :, :, :]], axis=-3)
        u = paired
    return u[..., 0, :, :]


def propagate_samples(fields: np.ndarray, dt: float, g_factor: float) -> np.ndarray:
    """Ordered product of exact rotations for sampled fields ``(..., N, 3)``."""
    mag = np.linalg.norm(fields, axis=-1)
    safe = np.where(mag > 0, mag, 1.0)
    axis = fields / safe[..., None]
    axis[mag == 0] = (0.0, 0.0, 1.0)
    angle = g_factor * CONSTANTS.mu_B * mag * dt / CONSTANTS.hbar
    return ordered_product(su2_axis_angle(axis, angle, check=False))


def propagate_exact(
    path: ArmPath, b, config: RingConfig, n_steps: Optional[int] = None
) -> np.ndarray:
    """Exact spin propagator along ``path`` at applied field(s) ``b``.

    ``b`` may be a scalar (returns a 2x2 matrix) or a 1-D array (returns an
    ``(len(b), 2, 2)`` stack).
    """
    n_steps = config.spin_steps if n_steps is None else n_steps
    if n_steps < 16:
        raise TooFewSteps(f"n_steps must be >= 16, got {n_steps}")
    dt = path.traversal_time(config) / n_steps
    thetas = path.thetas(n_steps)
    b_arr = np.atleast_1d(np.asarray(b, dtype=float))
    base = effective_field(thetas, path, 0.0, config)
    out = np.empty((b_arr.size, 2, 2), dtype=complex)
    for start in range(0, b_arr.size, _CHUNK):
        chunk = b_arr[start : start + _CHUNK]
        fields = np.broadcast_to(base, (chunk.size,) + base.shape).copy()
        fields[..., 2] = chunk[:, None]
        out[start : start + chunk.size] = propagate_samples(fields, dt, config.g_factor)
    return out[0] if np.ndim(b) == 0 else out


def zeeman_closed_form(b: float, duration: float, config: RingConfig) -> np.ndarray:
    """Rotation about z for a constant field ``b`` applied for ``duration``."""
    angle = config.g_factor * CONSTANTS.mu_B * b * duration / CONSTANTS.hbar
    return su2_axis_angle((0.0, 0.0, 1.0), angle)


def unitarity_defect(u: np.ndarray) -> float:
    u = np.asarray(u)
    gram = np.swapaxes(u.conj(), -1, -2) @ u
    return float(np.max(np.abs(gram - IDENTITY)))


def eigenstate(direction: np.ndarray, branch: int) -> np.ndarray:
    """Normalized eigenvector of ``direction . sigma`` with eigenvalue ``branch``.

    Takes the larger column of the projector ``(I + branch n.sigma)/2`` so the
    chart adapts to the direction (no fixed singular pole).
    """
    nx, ny, nz = direction
    proj = 0.5 * (IDENTITY + branch * (nx * SIGMA_X + ny * SIGMA_Y + nz * SIGMA_Z))
    col = proj[:, int(np.argmax(np.linalg.norm(proj, axis=0)))]
    return col / np.linalg.norm(col)


def parallel_transport(directions: np.ndarray, branch: int) -> np.ndarray:
    """Branch eigenstates along a direction sequence in the parallel-transport gauge.

    Each state is the projection of its predecessor onto the new eigenspace,
    so consecutive overlaps are real and positive.
    """
    states = np.empty((len(directions), 2), dtype=complex)
    psi = eigenstate(directions[0], branch)
    states[0] = psi
    for k in range(1, len(directions)):
        nx, ny, nz = directions[k]
        a = 1.0 + branch * nz
        off = branch * (nx - 1j * ny)
        # projector (I + branch n.sigma)/2 applied to psi
        up = 0.5 * (a * psi[0] + off * psi[1])
        down = 0.5 * (off.conjugate() * psi[0] + (2.0 - a) * psi[1])
        norm = math.sqrt(abs(up) ** 2 + abs(down) ** 2)
        psi = np.array([up / norm, down / norm])
        states[k] = psi
    return states


@dataclass(frozen=True)
class AdiabaticResult:
    propagator: np.ndarray
    dynamical_phase_plus: float
    dynamical_phase_minus: float
    geometric_phase_plus: float
    geometric_phase_minus: float
    initial_states: np.ndarray  # rows: + branch, - branch
    final_states: np.ndarray
    adiabaticity: float


def propagate_adiabatic(
    path: ArmPath, b: float, config: RingConfig, n_points: Optional[int] = None
) -> AdiabaticResult:
    """Adiabatic spin propagator along ``path``.

    The field curve is sampled at ``n_points`` endpoint-inclusive angles
    (default ``spin_steps + 1``). Each branch picks up a dynamical phase
    ``-+(1/2) * integral(omega dt)`` and the open-path (Pancharatnam) phase of
    its parallel-transported eigenstate.
    """
    n_points = config.spin_steps + 1 if n_points is None else n_points
    if n_points < 2:
        raise TooFewSteps("need at least 2 field samples")
    thetas = path.thetas(n_points, midpoint=False)
    field = effective_field(thetas, path, b, config)
    mag = np.linalg.norm(field, axis=-1)
    if np.any(mag < MIN_FIELD):
        raise DegenerateField(f"|B_eff| < {MIN_FIELD} T on arm {path.arm!r}")
    directions = field / mag[:, None]

    omega = config.g_factor * CONSTANTS.mu_B * mag / CONSTANTS.hbar
    dt = path.traversal_time(config) / (n_points - 1)
    precession = float(np.sum(0.5 * (omega[1:] + omega[:-1])) * dt)

    propagator = np.zeros((2, 2), dtype=complex)
    phases = {}
    initial, final = [], []
    for branch in (+1, -1):
        states = parallel_transport(directions, branch)
        dyn = -branch * 0.5 * precession
        geo = float(np.angle(np.vdot(states[0], states[-1])))
        propagator += np.exp(1j * dyn) * np.outer(states[-1], states[0].conj())
        phases[branch] = (dyn, geo)
        initial.append(states[0])
        final.append(states[-1])

    return AdiabaticResult(
        propagator=propagator,
        dynamical_phase_plus=phases[1][0],
        dynamical_phase_minus=phases[-1][0],
        geometric_phase_plus=phases[1][1],
        geometric_phase_minus=phases[-1][1],
        initial_states=np.array(initial),
        final_states=np.array(final),
        adiabaticity=derived(config, b).adiabaticity,
    )


def branch_phases(u: np.ndarray, result: AdiabaticResult) -> np.ndarray:
    """Phases ``arg <final_pm| u |initial_pm>`` for the + and - branches."""
    return np.array(
        [np.angle(np.vdot(f, u @ i)) for i, f in zip(result.initial_states, result.final_states)]
    )
