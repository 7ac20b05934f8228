"""Spherical curves of field directions, solid angles and Berry phases."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AntipodalEndpoints, DegenerateCentroid, DegenerateField
from .fields import ArmPath, effective_field
from .model import RingConfig

ANTIPODAL_MARGIN = 1e-6


@dataclass(frozen=True)
class SphericalCurve:
    points: np.ndarray
    closed: bool = False
    closure_arc_length: float = 0.0

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3 or len(pts) < 2:
            raise ValueError("points must be an (N >= 2, 3) array")
        if np.any(np.abs(np.linalg.norm(pts, axis=1) - 1.0) > 1e-9):
            raise ValueError("curve points must be unit vectors")
        gaps = _angles(pts[:-1], pts[1:])
        if np.any(gaps >= math.pi - ANTIPODAL_MARGIN):
            raise AntipodalEndpoints("consecutive curve points are antipodal")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def reversed(self) -> "SphericalCurve":
        return SphericalCurve(self.points[::-1].copy(), self.closed, self.closure_arc_length)


@dataclass(frozen=True)
class SolidAngleResult:
    omega: float
    closure_arc_length: float


def _angles(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Great-circle angle between unit vectors, stable at small and large angles."""
    cross = np.linalg.norm(np.cross(a, b), axis=-1)
    dot = np.sum(a * b, axis=-1)
    return np.arctan2(cross, dot)


def latitude_curve(tilt: float, azimuth_span: float, n_points: int, closed: bool = False):
    """Points at polar angle ``tilt`` with azimuth running from 0 over ``azimuth_span``.

    For a closed curve the endpoint is omitted (it coincides with the start).
    """
    az = np.linspace(0.0, azimuth_span, n_points, endpoint=not closed)
    st, ct = math.sin(tilt), math.cos(tilt)
    pts = np.column_stack([st * np.cos(az), st * np.sin(az), np.full_like(az, ct)])
    return SphericalCurve(pts, closed=closed)


def field_curve(path: ArmPath, b: float, config: RingConfig, n_points: int) -> SphericalCurve:
    """Directions of the effective field sampled uniformly in theta along ``path``."""
    if n_points < 2:
        raise ValueError("n_points must be >= 2")
    field = effective_field(path.thetas(n_points, midpoint=False), path, b, config)
    mag = np.linalg.norm(field, axis=-1)
    if np.any(mag < 1e-15):
        raise DegenerateField("effective field vanishes on the path")
    return SphericalCurve(field / mag[:, None])


def geodesic_close(curve: SphericalCurve) -> SphericalCurve:
    """Close an open curve with the minor great-circle arc from its last point to its first.

    The arc is sampled at the curve's mean angular spacing; the starting point
    itself is not repeated.
    """
    if curve.closed:
        return curve
    pts = curve.points
    first, last = pts[0], pts[-1]
    gap = float(_angles(last, first))
    if gap >= math.pi - ANTIPODAL_MARGIN:
        raise AntipodalEndpoints(
            "curve endpoints are antipodal; the closing geodesic is not unique"
        )
    if gap < 1e-12:
        return SphericalCurve(pts, closed=True, closure_arc_length=0.0)
    spacing = float(np.mean(_angles(pts[:-1], pts[1:])))
    n_seg = max(1, int(round(gap / spacing))) if spacing > 0 else 1
    t = np.arange(1, n_seg) / n_seg
    # slerp from last toward first
    s = math.sin(gap)
    arc = (np.sin((1 - t) * gap)[:, None] * last + np.sin(t * gap)[:, None] * first) / s
    arc /= np.linalg.norm(arc, axis=1)[:, None]
    return SphericalCurve(np.vstack([pts, arc]), closed=True, closure_arc_length=gap)


def solid_angle(curve: SphericalCurve) -> SolidAngleResult:
    """Signed spherical area enclosed by a closed curve (steradian).

    Sums the signed excess of geodesic triangles fanned from the normalized
    mean point. Counterclockwise as seen from outside the sphere is positive.
    The result is reduced to the principal range (-2 pi, 2 pi].
    """
    if not curve.closed:
        raise ValueError("solid_angle requires a closed curve; use geodesic_close")
    pts = curve.points
    if len(pts) < 3:
        raise ValueError("a closed curve needs at least 3 points")
    apex = pts.mean(axis=0)
    norm = np.linalg.norm(apex)
    if norm < 1e-9:
        raise DegenerateCentroid("curve centroid is at the origin; fan apex undefined")
    apex = apex / norm
    a = pts
    b = np.roll(pts, -1, axis=0)
    num = np.einsum("j,ij->i", apex, np.cross(a, b))
    den = 1.0 + a @ apex + b @ apex + np.sum(a * b, axis=1)
    omega = float(np.sum(2.0 * np.arctan2(num, den)))
    return SolidAngleResult(principal_value(omega), curve.closure_arc_length)


def principal_value(omega: float) -> float:
    """Reduce a solid angle modulo 4 pi into (-2 pi, 2 pi]."""
    four_pi = 4.0 * math.pi
    reduced = omega - four_pi * math.floor((omega + 2.0 * math.pi) / four_pi)
    if reduced <= -2.0 * math.pi:
        reduced += four_pi
    return reduced


def berry_phase(omega, branch: int):
    """Geometric phase of spin branch ``branch`` (+1 along the field, -1 against)."""
    return -branch * np.multiply(omega, 0.5)


def berry_average(omega):
    """Unpolarized average of the two branch phase factors, ``cos(omega/2)``."""
    return np.cos(np.multiply(omega, 0.5))


def open_path_solid_angle(path: ArmPath, b: float, config: RingConfig, n_points: int) -> float:
    """Solid angle of the field curve along ``path`` after geodesic closure."""
    return solid_angle(geodesic_close(field_curve(path, b, config, n_points))).omega
