"""Physical constants, ring/sweep configuration and derived quantities.

All quantities are SI. The spin-orbit term enters through an in-plane field
magnitude ``so_field`` (tesla), either given directly or resolved from an
effective electric field via ``thomas_factor * fermi_velocity * e_field / c**2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import BothOrNeitherSpinOrbitKnobs, ConfigError, NonPositiveParameter


@dataclass(frozen=True)
class PhysicalConstants:
    h: float = 6.62607015e-34
    e: float = 1.602176634e-19
    mu_B: float = 9.2740100783e-24
    c: float = 299792458.0

    @property
    def hbar(self) -> float:
        return self.h / (2.0 * math.pi)

    @property
    def flux_quantum(self) -> float:
        """h/e in weber."""
        return self.h / self.e


CONSTANTS = PhysicalConstants()

MODES = ("physical", "flux_only")


@dataclass(frozen=True)
class RingConfig:
    """Ring geometry and carrier parameters.

    Exactly one of ``so_field`` (T) and ``e_field`` (V/m) must be given.
    After :func:`validate` the spin-orbit field is resolved into ``so_field``
    and ``e_field`` is cleared.
    """

    radius: float = 0.5e-6
    fermi_velocity: float = 1e5
    g_factor: float = 0.44
    thomas_factor: float = 0.5
    so_field: Optional[float] = None
    e_field: Optional[float] = None
    resistance_scale: float = 100.0
    mode: str = "physical"
    spin_steps: int = 4096

    @property
    def area(self) -> float:
        return math.pi * self.radius**2


@dataclass(frozen=True)
class SweepConfig:
    b_min: float = 0.0
    b_max: float = 0.3
    n_samples: int = 4096

    def grid(self) -> np.ndarray:
        return np.linspace(self.b_min, self.b_max, self.n_samples)

    @property
    def b_ref(self) -> float:
        return 0.5 * (self.b_min + self.b_max)


@dataclass(frozen=True)
class DerivedQuantities:
    area: float
    traversal_time: float
    larmor_rate: float
    orbit_rate: float
    adiabaticity: float


def unit_vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


def validate(config: RingConfig) -> RingConfig:
    """Check invariants and resolve the spin-orbit field into tesla."""
    for name in ("radius", "fermi_velocity", "resistance_scale", "thomas_factor"):
        value = getattr(config, name)
        if not (math.isfinite(value) and value > 0):
            raise NonPositiveParameter(f"{name} must be positive, got {value!r}")
    if config.spin_steps < 16:
        raise ConfigError(f"spin_steps must be >= 16, got {config.spin_steps}")
    if config.mode not in MODES:
        raise ConfigError(f"mode must be one of {MODES}, got {config.mode!r}")
    if (config.so_field is None) == (config.e_field is None):
        raise BothOrNeitherSpinOrbitKnobs(
            "specify exactly one of so_field (T) and e_field (V/m)"
        )
    if config.so_field is not None:
        so_field = float(config.so_field)
    else:
        so_field = (
            config.thomas_factor * config.fermi_velocity * config.e_field / CONSTANTS.c**2
        )
    if not math.isfinite(so_field):
        raise ConfigError("so_field is not finite")
    return replace(config, so_field=so_field, e_field=None)


def validate_sweep(sweep: SweepConfig) -> SweepConfig:
    if not (math.isfinite(sweep.b_min) and math.isfinite(sweep.b_max)):
        raise ConfigError("sweep bounds must be finite")
    if not sweep.b_max > sweep.b_min:
        raise ConfigError(f"b_max ({sweep.b_max}) must exceed b_min ({sweep.b_min})")
    if sweep.n_samples < 16:
        raise ConfigError(f"n_samples must be >= 16, got {sweep.n_samples}")
    return sweep


def field_magnitude(b: float, config: RingConfig) -> float:
    return math.hypot(b, config.so_field)


def derived(config: RingConfig, b: float) -> DerivedQuantities:
    c = CONSTANTS
    larmor = abs(config.g_factor) * c.mu_B * field_magnitude(b, config) / c.hbar
    orbit = config.fermi_velocity / config.radius
    return DerivedQuantities(
        area=config.area,
        traversal_time=math.pi * config.radius / config.fermi_velocity,
        larmor_rate=larmor,
        orbit_rate=orbit,
        adiabaticity=larmor / orbit,
    )


# --- config files -----------------------------------------------------------

_RING_KEYS = {
    "radius_m": ("radius", float),
    "fermi_velocity_m_s": ("fermi_velocity", float),
    "g_factor": ("g_factor", float),
    "thomas_factor": ("thomas_factor", float),
    "so_field_tesla": ("so_field", float),
    "e_field_v_m": ("e_field", float),
    "resistance_scale_ohm": ("resistance_scale", float),
    "mode": ("mode", str),
    "spin_steps": ("spin_steps", int),
}
_SWEEP_KEYS = {
    "b_min_tesla": ("b_min", float),
    "b_max_tesla": ("b_max", float),
    "n_samples": ("n_samples", int),
}
CONFIG_KEYS = tuple(_RING_KEYS) + tuple(_SWEEP_KEYS)


def parse_config_text(text: str, overrides: Optional[dict] = None):
    """Parse ``key = value`` text into unvalidated ``(RingConfig, SweepConfig)``.

    ``overrides`` maps file keys to raw string values and wins over the text.
    """
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        raw[key] = value
    if overrides:
        for key, value in overrides.items():
            if key not in CONFIG_KEYS:
                raise ConfigError(f"unknown key {key!r}")
            raw[key] = str(value)
            # a spin-orbit override replaces whichever knob the file used
            if key == "so_field_tesla":
                raw.pop("e_field_v_m", None)
            elif key == "e_field_v_m":
                raw.pop("so_field_tesla", None)

    ring_kw, sweep_kw = {}, {}
    for key, value in raw.items():
        target, kw = (_RING_KEYS[key], ring_kw) if key in _RING_KEYS else (_SWEEP_KEYS[key], sweep_kw)
        attr, kind = target
        try:
            kw[attr] = kind(value)
        except ValueError:
            raise ConfigError(f"{key}: cannot parse {value!r} as {kind.__name__}") from None
    return RingConfig(**ring_kw), SweepConfig(**sweep_kw)


def load_config(path, overrides: Optional[dict] = None):
    """Read, parse and validate a config file."""
    text = Path(path).read_text()
    ring, sweep = parse_config_text(text, overrides)
    return validate(ring), validate_sweep(sweep)


def serialize_config(ring: RingConfig, sweep: Optional[SweepConfig] = None) -> str:
    lines = []
    for key, (attr, _) in _RING_KEYS.items():
        value = getattr(ring, attr)
        if value is not None:
            lines.append(f"{key} = {value!r}" if not isinstance(value, str) else f"{key} = {value}")
    if sweep is not None:
        for key, (attr, _) in _SWEEP_KEYS.items():
            lines.append(f"{key} = {getattr(sweep, attr)!r}")
    return "\n".join(lines) + "\n"
