"""End-to-end sweep -> spectrum -> peaks, and the two reference recipes."""

from __future__ import annotations

from dataclasses import dataclass

from .model import RingConfig, SweepConfig, load_config
from .spectrum import PeakReport, Spectrum, find_peaks, trace_spectrum
from .interference import trace_sweep
from .trace import Trace


@dataclass
class PipelineResult:
    ring: RingConfig
    sweep: SweepConfig
    trace: Trace
    spectrum: Spectrum
    peaks: PeakReport


def run_pipeline(
    ring: RingConfig,
    sweep: SweepConfig,
    column: str = "resistance_ohm",
    detrend_order: int = 3,
    window_name: str = "hann",
    min_prominence: float = 0.05,
    guard_band: int = 2,
) -> PipelineResult:
    trace = trace_sweep(sweep, ring)
    spec = trace_spectrum(trace.b, trace[column], detrend_order, window_name)
    return PipelineResult(ring, sweep, trace, spec, find_peaks(spec, min_prominence, guard_band, ring))


# The flux_only trace reaches T = 0, where R = R0/T saturates into a spike
# train; the fundamental is therefore read from the transmission column.
MAIN_PEAK_RECIPE = dict(column="transmission", detrend_order=1, window_name="rect")
SIDE_PEAK_RECIPE = dict(column="resistance_ohm", detrend_order=3, window_name="hann")


def main_peak_recipe() -> PipelineResult:
    from . import shipped_config

    ring, sweep = load_config(shipped_config("default"))
    return run_pipeline(ring, sweep, **MAIN_PEAK_RECIPE)


def side_peak_recipe() -> PipelineResult:
    from . import shipped_config

    ring, sweep = load_config(shipped_config("side_peaks"))
    return run_pipeline(ring, sweep, **SIDE_PEAK_RECIPE)


def check_main_peak(result: PipelineResult, tol: float = 0.0176) -> tuple[bool, str]:
    main = result.peaks.main
    if main is None:
        return False, "no main peak"
    ok = abs(main.flux_ratio - 1.0) <= tol
    return ok, f"main peak flux_ratio={main.flux_ratio:.5f} (tol {tol})"


def check_side_peaks(result: PipelineResult, ratio_tol: float = 0.02, sym_bins: float = 2.0):
    rep = result.peaks
    mains = rep.of_kind("main")
    lows, highs = rep.of_kind("side_low"), rep.of_kind("side_high")
    if len(mains) != 1 or len(lows) != 1 or len(highs) != 1:
        return False, f"kinds: {[p.kind for p in rep]}"
    main, low, high = mains[0], lows[0], highs[0]
    df = result.spectrum.resolution
    asym = abs((high.freq - main.freq) - (main.freq - low.freq))
    ok = (
        abs(main.flux_ratio - 1.0) <= ratio_tol
        and low.power < main.power
        and high.power < main.power
        and asym <= sym_bins * df
    )
    msg = (
        f"main ratio={main.flux_ratio:.4f}, sides at -{main.freq - low.freq:.2f}/"
        f"+{high.freq - main.freq:.2f} 1/T (asym {asym / df:.2f} bins), "
        f"side/main power {low.power / main.power:.3f}/{high.power / main.power:.3f}"
    )
    return ok, msg
