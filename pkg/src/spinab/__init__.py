# flake8: noqa
"""Spin-dependent Aharonov-Bohm oscillations in a two-arm mesoscopic ring."""

from importlib import resources

from .berry import (
    SolidAngleResult,
    SphericalCurve,
    berry_average,
    berry_phase,
    field_curve,
    geodesic_close,
    latitude_curve,
    solid_angle,
)
from .fields import FULL_LOOP, LOWER, UPPER, ArmPath, ab_flux, ab_phase, effective_field
from .interference import (
    resistance,
    trace_sweep,
    transmission_unpolarized,
    two_path_amplitude,
)
from .model import CONSTANTS, RingConfig, SweepConfig, derived, load_config, validate
from .spectrum import Spectrum, detrend, find_peaks, flux_ratio, power_spectrum, trace_spectrum
from .spin import (
    AdiabaticResult,
    propagate_adiabatic,
    propagate_exact,
    su2_axis_angle,
    zeeman_closed_form,
)
from .trace import Trace

__version__ = "0.1.0"


def shipped_config(name: str = "default"):
    """Path to a bundled config file: ``default`` or ``side_peaks``."""
    return resources.files("spinab.configs") / f"{name}.cfg"
