"""Background subtraction, power spectra and peak classification for traces."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.signal import get_window

from .errors import DegenerateFit, OrderTooHigh
from .model import CONSTANTS, RingConfig
from .trace import check_uniform

MAX_DETREND_ORDER = 6
WINDOWS = ("rect", "hann")


@dataclass(frozen=True)
class Spectrum:
    freq: np.ndarray  # 1/tesla
    power: np.ndarray
    window_name: str = "rect"
    detrend_order: Optional[int] = None

    @property
    def resolution(self) -> float:
        return float(self.freq[1] - self.freq[0])


@dataclass(frozen=True)
class Peak:
    kind: str  # main, side_low, side_high, other
    freq: float
    power: float
    flux_ratio: float = math.nan


@dataclass
class PeakReport:
    peaks: list = field(default_factory=list)

    def __len__(self):
        return len(self.peaks)

    def __iter__(self):
        return iter(self.peaks)

    def of_kind(self, kind: str) -> list:
        return [p for p in self.peaks if p.kind == kind]

    @property
    def main(self) -> Optional[Peak]:
        found = self.of_kind("main")
        return found[0] if found else None


def detrend(b, values, order: int = 3) -> np.ndarray:
    """Subtract the least-squares polynomial of degree ``order`` in ``b``."""
    b = np.asarray(b, dtype=float)
    y = np.asarray(values, dtype=float)
    if order > MAX_DETREND_ORDER or order < 0:
        raise OrderTooHigh(f"detrend order must be in 0..{MAX_DETREND_ORDER}, got {order}")
    if y.size <= order + 1:
        raise DegenerateFit(f"need more than {order + 1} samples for order {order}")
    # map onto [-1, 1] to keep the Vandermonde matrix well conditioned
    lo, hi = b.min(), b.max()
    if hi == lo:
        raise DegenerateFit("all samples share one abscissa")
    x = (2.0 * b - (lo + hi)) / (hi - lo)
    vander = np.polynomial.legendre.legvander(x, order)
    coef, _, rank, _ = np.linalg.lstsq(vander, y, rcond=None)
    if rank < order + 1:
        raise DegenerateFit("singular least-squares system")
    return y - vander @ coef


def window(name: str, n: int) -> np.ndarray:
    if name == "rect":
        return np.ones(n)
    if name == "hann":
        return get_window("hann", n, fftbins=True)
    raise ValueError(f"unknown window {name!r}; choose from {WINDOWS}")


def power_spectrum(
    values,
    step: float,
    window_name: str = "hann",
    pad_to_pow2: bool = False,
    detrend_order: Optional[int] = None,
) -> Spectrum:
    """One-sided periodogram ``|X_k|**2`` at frequencies ``k / (n * step)``.

    ``pad_to_pow2`` zero-pads to the next power of two; it only interpolates
    the displayed spectrum and adds no resolution.
    """
    y = np.asarray(values, dtype=float)
    if y.size < 16:
        raise ValueError("need at least 16 samples")
    if not step > 0:
        raise ValueError("sample step must be positive")
    yw = y * window(window_name, y.size)
    n = y.size
    if pad_to_pow2:
        n = 1 << (n - 1).bit_length()
    coeffs = np.fft.rfft(yw, n=n)
    power = coeffs.real**2 + coeffs.imag**2
    freq = np.fft.rfftfreq(n, d=step)
    return Spectrum(freq, power, window_name, detrend_order)


def trace_spectrum(b, values, detrend_order: int = 3, window_name: str = "hann", pad_to_pow2=False):
    """Detrend a trace column and return its power spectrum."""
    step = check_uniform(b)
    return power_spectrum(
        detrend(b, values, detrend_order), step, window_name, pad_to_pow2, detrend_order
    )


def flux_ratio(freq, config: RingConfig):
    """Frequency in units of the h/e fundamental ``area * e / h``."""
    return np.divide(freq, config.area / CONSTANTS.flux_quantum)


def _refine(logp: np.ndarray, k: int) -> float:
    """Fractional bin offset from a parabola through three log-power samples."""
    if k <= 0 or k >= logp.size - 1:
        return 0.0
    a, b, c = logp[k - 1], logp[k], logp[k + 1]
    denom = a - 2.0 * b + c
    if denom >= 0 or not np.isfinite(denom):
        return 0.0
    return float(np.clip(0.5 * (a - c) / denom, -0.5, 0.5))


def find_peaks(
    spectrum: Spectrum,
    min_prominence: float = 0.05,
    guard_band: int = 2,
    config: Optional[RingConfig] = None,
) -> PeakReport:
    """Locate and classify spectral peaks.

    A bin qualifies when it is strictly larger than every bin within
    ``guard_band`` on either side and reaches ``min_prominence`` of the largest
    non-DC power. The strongest is ``main``; the nearest qualifying peaks below
    and above it are ``side_low`` and ``side_high``.
    """
    if not 0 < min_prominence <= 1:
        raise ValueError("min_prominence must be in (0, 1]")
    power = np.asarray(spectrum.power, dtype=float)
    if power.size < 2:
        return PeakReport()
    top = power[1:].max()
    if not top > 0:
        return PeakReport()

    n = power.size
    candidates = []
    for k in range(1, n):
        if power[k] < min_prominence * top:
            continue
        lo, hi = max(0, k - guard_band), min(n, k + guard_band + 1)
        neighbours = np.concatenate([power[lo:k], power[k + 1 : hi]])
        if neighbours.size and np.all(power[k] > neighbours):
            candidates.append(k)
    if not candidates:
        return PeakReport()

    logp = np.log(np.maximum(power, top * 1e-300))
    df = spectrum.resolution
    main_k = max(candidates, key=lambda k: power[k])
    below = [k for k in candidates if k < main_k]
    above = [k for k in candidates if k > main_k]
    kinds = {main_k: "main"}
    if below:
        kinds[below[-1]] = "side_low"
    if above:
        kinds[above[0]] = "side_high"

    peaks = []
    for k in candidates:
        f = (k + _refine(logp, k)) * df
        ratio = float(flux_ratio(f, config)) if config is not None else math.nan
        peaks.append(Peak(kinds.get(k, "other"), f, float(power[k]), ratio))
    return PeakReport(peaks)
