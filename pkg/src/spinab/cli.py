"""Command-line driver: ``spinab {trace,spectrum,peaks,berry,demo}``.

Exit codes: 0 ok, 2 usage/config, 3 I/O, 4 data contract, 5 geometric
degeneracy.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import shipped_config
from .berry import berry_average, berry_phase, geodesic_close, latitude_curve, solid_angle
from .errors import NonUniformGrid, SpinABError
from .interference import trace_sweep
from .model import CONFIG_KEYS, CONSTANTS, derived, load_config
from .pipeline import check_main_peak, check_side_peaks, main_peak_recipe, side_peak_recipe
from .spectrum import WINDOWS, Spectrum, find_peaks, trace_spectrum
from .trace import read_csv, read_trace, write_csv, write_trace

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_DATA, EXIT_GEOMETRY = 0, 2, 3, 4, 5


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _flag(key: str) -> str:
    return "--" + key.replace("_", "-")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace", help="sweep B and write a transmission/resistance CSV")
    p.add_argument("--config", help="key = value config file (default: shipped default)")
    p.add_argument("--out", required=True)
    for key in CONFIG_KEYS:
        p.add_argument(_flag(key), dest=f"cfg_{key}", metavar="VALUE", help=f"override {key}")

    p = sub.add_parser("spectrum", help="detrend a trace column and write its power spectrum")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--column", default="resistance_ohm")
    p.add_argument("--detrend-order", type=int, default=3)
    p.add_argument("--window", choices=WINDOWS, default="hann")
    p.add_argument("--pad-pow2", action="store_true", help="cosmetic zero-padding")
    p.add_argument("--out", required=True)

    p = sub.add_parser("peaks", help="find and classify peaks in a spectrum CSV")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--min-prominence", type=float, default=0.05)
    p.add_argument("--guard-band", type=int, default=2)
    p.add_argument("--config", help="ring config used for flux ratios (default: shipped default)")
    p.add_argument("--out", required=True)

    p = sub.add_parser("berry", help="solid angle and Berry phases of a tilted field loop")
    p.add_argument("--tilt-deg", type=float, required=True)
    p.add_argument("--arc", choices=("semicircle", "full"), default="full")
    p.add_argument("--points", type=int, default=10000)

    sub.add_parser("demo", help="run the main-peak and side-peak recipes, print PASS/FAIL")
    return parser


def _load(path, overrides=None):
    path = Path(path) if path else Path(str(shipped_config("default")))
    if not path.is_file():
        raise CommandError(EXIT_USAGE, f"config file not found: {path}")
    try:
        return load_config(path, overrides)
    except SpinABError as exc:
        raise CommandError(EXIT_USAGE, f"{path}: {exc}") from None


def run_trace(args) -> int:
    overrides = {
        key: getattr(args, f"cfg_{key}")
        for key in CONFIG_KEYS
        if getattr(args, f"cfg_{key}") is not None
    }
    ring, sweep = _load(args.config, overrides)
    trace = trace_sweep(sweep, ring)
    try:
        write_trace(trace, args.out)
    except OSError as exc:
        raise CommandError(EXIT_IO, f"cannot write {args.out}: {exc}") from None
    d = derived(ring, abs(sweep.b_max))
    period = CONSTANTS.flux_quantum / d.area
    print(f"area            = {d.area:.6e} m^2")
    print(f"AB period dB    = {period:.6e} T  (h/e fundamental {1 / period:.4f} 1/T)")
    print(f"adiabaticity    = {d.adiabaticity:.6g} at B = {sweep.b_max} T")
    print(f"wrote {len(trace)} samples to {args.out}")
    return EXIT_OK


def run_spectrum(args) -> int:
    try:
        trace = read_trace(args.in_path)
    except OSError as exc:
        raise CommandError(EXIT_IO, f"cannot read {args.in_path}: {exc}") from None
    except (ValueError, StopIteration) as exc:
        raise CommandError(EXIT_DATA, f"{args.in_path}: {exc}") from None
    if args.column not in trace.columns:
        raise CommandError(
            EXIT_USAGE,
            f"column {args.column!r} not in {args.in_path}; available: {', '.join(trace.columns)}",
        )
    try:
        spec = trace_spectrum(
            trace.b, trace[args.column], args.detrend_order, args.window, args.pad_pow2
        )
    except NonUniformGrid as exc:
        raise CommandError(EXIT_DATA, str(exc)) from None
    except SpinABError as exc:
        raise CommandError(EXIT_USAGE, str(exc)) from None
    try:
        write_csv(args.out, ["freq_per_tesla", "power"], zip(spec.freq, spec.power))
    except OSError as exc:
        raise CommandError(EXIT_IO, f"cannot write {args.out}: {exc}") from None
    print(f"wrote {spec.freq.size} bins ({spec.resolution:.6g} 1/T each) to {args.out}")
    return EXIT_OK


def run_peaks(args) -> int:
    if not 0 < args.min_prominence <= 1:
        raise CommandError(EXIT_USAGE, "--min-prominence must be in (0, 1]")
    if args.guard_band < 1:
        raise CommandError(EXIT_USAGE, "--guard-band must be >= 1")
    ring, _ = _load(args.config)
    try:
        data = read_csv(args.in_path)
    except OSError as exc:
        raise CommandError(EXIT_IO, f"cannot read {args.in_path}: {exc}") from None
    if "freq_per_tesla" not in data or "power" not in data:
        raise CommandError(EXIT_DATA, f"{args.in_path}: expected freq_per_tesla,power columns")
    spec = Spectrum(np.asarray(data["freq_per_tesla"]), np.asarray(data["power"]))
    report = find_peaks(spec, args.min_prominence, args.guard_band, ring)
    rows = [(p.kind, p.freq, p.power, p.flux_ratio) for p in report]
    try:
        write_csv(args.out, ["kind", "freq_per_tesla", "power", "flux_ratio"], rows)
    except OSError as exc:
        raise CommandError(EXIT_IO, f"cannot write {args.out}: {exc}") from None
    for p in report:
        print(f"{p.kind:<9s} f = {p.freq:10.4f} 1/T   flux_ratio = {p.flux_ratio:.5f}")
    if not len(report):
        print("no peaks")
    return EXIT_OK


def run_berry(args) -> int:
    if args.points < 3:
        raise CommandError(EXIT_USAGE, "--points must be >= 3")
    tilt = math.radians(args.tilt_deg)
    try:
        if args.arc == "full":
            curve = latitude_curve(tilt, 2 * math.pi, args.points, closed=True)
        else:
            curve = geodesic_close(latitude_curve(tilt, math.pi, args.points))
        omega = solid_angle(curve).omega
    except SpinABError as exc:
        raise CommandError(EXIT_GEOMETRY, str(exc)) from None
    print(f"solid_angle      = {omega!r} sr")
    print(f"berry_phase_plus = {float(berry_phase(omega, +1))!r} rad")
    print(f"berry_phase_minus= {float(berry_phase(omega, -1))!r} rad")
    print(f"unpolarized_avg  = {float(berry_average(omega))!r}")
    return EXIT_OK


def run_demo(args) -> int:
    ok_main, msg_main = check_main_peak(main_peak_recipe())
    print(f"{'PASS' if ok_main else 'FAIL'} h/e fundamental: {msg_main}")
    ok_side, msg_side = check_side_peaks(side_peak_recipe())
    print(f"{'PASS' if ok_side else 'FAIL'} spin side peaks: {msg_side}")
    return EXIT_OK if ok_main and ok_side else 1


COMMANDS = {
    "trace": run_trace,
    "spectrum": run_spectrum,
    "peaks": run_peaks,
    "berry": run_berry,
    "demo": run_demo,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CommandError as exc:
        print(f"spinab {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    raise SystemExit(main())
