"""Command line interface.

Subcommands:
  analyze   full report (CCT both ways, R1..R8, Ra, chromaticities) from an
            SPD CSV or a raw frame file, plus audit CSV and plot data
  design    spectrometer geometry and collimator aperture for a grating,
            sensor and wavelength band, plus position/slope sweep CSV
  simulate  render an SPD into a raw frame file using the virtual sensor
  capture   invert a raw frame file into an SPD CSV

Exit codes: 0 success; 1 parse error; 2 degenerate SPD; 3 CCT out of range;
4 no first-order maximum; 5 saturation. Diagnostics go to stderr, reports to
stdout.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from .cct import CctMethod
from .ciedata import bundled_datasets
from .errors import (CctRangeError, DegenerateSpdError, DiffractionError,
                     LumispecError, ParseError, SaturationError)
from .optics import (Arrangement, GratingSpec, OpticalDesign, SensorSpec,
                     collimator_aperture, design_inclined, design_parallel,
                     linearity_metric, position, position_slope)
from .pipeline import run_pipeline
from .sensor import (DEFAULT_EXPOSURE_SCALE, DEFAULT_RESPONSIVITY,
                     frame_to_spd, read_calibration, read_frame,
                     simulate_frame, write_frame)
from .spectral import (SpectralPowerDistribution, normalize_peak,
                       read_spd_csv, write_spd_csv)

_EXIT_CODES = (
    (ParseError, 1),
    (DegenerateSpdError, 2),
    (CctRangeError, 3),
    (DiffractionError, 4),
    (SaturationError, 5),
)

_CCT_FLAGS = {"poly": CctMethod.POLYNOMIAL, "exp": CctMethod.EXPONENTIAL}


def _write_sweep_csv(path: Path, wavelengths, columns: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("wavelength_nm," + ",".join(columns) + "\n")
        for i, wl in enumerate(wavelengths):
            row = ",".join(repr(float(values[i])) for values in columns.values())
            handle.write(f"{wl:g},{row}\n")


def _spd_svg(spds: dict[str, SpectralPowerDistribution], path: Path) -> None:
    """Minimal static SVG of one or more peak-normalized spectra."""
    width, height, pad = 640, 320, 40
    colors = ("#1f77b4", "#d62728", "#2ca02c")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" '
        f'y2="{height - pad}" stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
        f'<text x="{width // 2}" y="{height - 8}" font-size="12" '
        f'text-anchor="middle">wavelength (nm)</text>',
    ]
    all_wl = np.concatenate([s.wavelengths() for s in spds.values()])
    lo, hi = float(all_wl.min()), float(all_wl.max())
    peak = max(float(s.values.max()) for s in spds.values()) or 1.0
    for i, (color, (label, spd)) in enumerate(zip(colors, spds.items())):
        xs = pad + (spd.wavelengths() - lo) / (hi - lo) * (width - 2 * pad)
        ys = height - pad - (spd.values / peak) * (height - 2 * pad)
        points = " ".join(f"{x:.1f},{y:.1f}" for x, y in zip(xs, ys))
        parts.append(f'<polyline fill="none" stroke="{color}" points="{points}"/>')
        parts.append(f'<text x="{width - pad}" y="{pad + 16 * (i + 1)}" '
                     f'font-size="12" text-anchor="end" fill="{color}">{label}</text>')
    parts.append("</svg>")
    path.write_text("\n".join(parts) + "\n", encoding="utf-8")


def _load_source(args) -> tuple:
    """Returns (source, calibration) for analyze; source is an SPD or a frame."""
    if args.kind == "frame":
        if not args.calib:
            raise ParseError("frame input requires --calib")
        calibration = read_calibration(args.calib)
        return read_frame(args.input), calibration
    spd = read_spd_csv(args.input)
    if spd.is_zero():
        raise DegenerateSpdError("degenerate SPD: input carries no power")
    return spd, None


def _cmd_analyze(args) -> int:
    source, calibration = _load_source(args)
    datasets = bundled_datasets()
    report, trace = run_pipeline(
        source, datasets, calibration,
        cct_method=_CCT_FLAGS[args.cct_method],
        cct_override=args.cct_override)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    text = report.to_text()
    (out_dir / "report.txt").write_text(text, encoding="utf-8")
    report.write_audit_csv(out_dir / "audit.csv")

    if args.kind == "frame":
        spd = SpectralPowerDistribution(
            datasets.cmf.grid, np.asarray(trace.step(2).values["spd_canonical"]))
    else:
        spd = source
    ref_spd = SpectralPowerDistribution(
        datasets.cmf.grid, np.asarray(trace.step(4).values["values"]))
    plot = {"test": normalize_peak(spd), "reference": ref_spd}
    _write_sweep_csv(out_dir / "spd.csv", datasets.cmf.grid.wavelengths(), {
        "test_power": plot["test"].values,
        "reference_power": plot["reference"].values,
    })
    _spd_svg(plot, out_dir / "spd.svg")
    if args.trace:
        trace.write(out_dir / "trace.json")

    sys.stdout.write(text)
    return 0


def _cmd_design(args) -> int:
    grating = GratingSpec.from_lines_per_mm(args.lines_per_mm)
    sensor = SensorSpec(args.sensor_mm, args.pixels)
    band = (args.lambda_low, args.lambda_high)
    parallel = design_parallel(grating, sensor, *band)
    inclined = design_inclined(grating, sensor, *band)
    chosen: OpticalDesign = {
        "parallel": parallel, "inclined": inclined}[args.arrangement]
    aperture = collimator_aperture(args.resolution, sensor, *band,
                                   theta_mid=inclined.theta_mid)

    lines = [
        f"arrangement = {chosen.arrangement.value}",
        f"grating_pitch_um = {grating.pitch_um:.4f}",
        f"sensor_length_mm = {sensor.length_mm:g}",
        f"band_nm = {band[0]:g}..{band[1]:g}",
        f"theta_low_deg = {math.degrees(chosen.theta_low):.2f}",
        f"theta_high_deg = {math.degrees(chosen.theta_high):.2f}",
    ]
    if chosen.arrangement is Arrangement.PARALLEL:
        lines += [f"d1_mm = {chosen.d1_mm:.2f}", f"h1_mm = {chosen.h1_mm:.2f}"]
    else:
        lines += [f"theta_mid_deg = {math.degrees(chosen.theta_mid):.2f}",
                  f"d2_mm = {chosen.d2_mm:.2f}"]
    lines += [
        f"aperture_mm = {aperture:.4f}",
        f"linearity_parallel = {linearity_metric(parallel, *band):.6f}",
        f"linearity_inclined = {linearity_metric(inclined, *band):.6f}",
    ]
    report = "\n".join(lines) + "\n"

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "design.txt").write_text(report, encoding="utf-8")
    sweep = np.linspace(band[0], band[1], args.sweep_points)
    _write_sweep_csv(out_dir / "sweep.csv", sweep, {
        "position_mm_parallel": [position(w, parallel) for w in sweep],
        "slope_mm_per_nm_parallel": [position_slope(w, parallel) for w in sweep],
        "position_mm_inclined": [position(w, inclined) for w in sweep],
        "slope_mm_per_nm_inclined": [position_slope(w, inclined) for w in sweep],
    })
    sys.stdout.write(report)
    return 0


def _cmd_simulate(args) -> int:
    spd = read_spd_csv(args.input)
    calibration = read_calibration(args.calib)
    frame = simulate_frame(spd, calibration, DEFAULT_RESPONSIVITY,
                           exposure_scale=args.exposure,
                           noise_sigma=args.noise, seed=args.seed)
    write_frame(frame, args.out)
    print(f"wrote frame: {args.out}", file=sys.stderr)
    return 0


def _cmd_capture(args) -> int:
    frame = read_frame(args.input)
    calibration = read_calibration(args.calib)
    spd = frame_to_spd(frame, calibration, DEFAULT_RESPONSIVITY)
    if spd.is_zero():
        print("warning: frame is all dark, writing an all-zero SPD",
              file=sys.stderr)
    write_spd_csv(spd, args.out)
    print(f"wrote SPD: {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lumispec",
        description="Lighting-quality metrology: CCT/CRI analysis, "
                    "spectrometer design, virtual sensor capture.")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="CCT/CRI report from an SPD or frame.")
    analyze.add_argument("--input", required=True, help="SPD CSV or frame file")
    analyze.add_argument("--kind", choices=("spd", "frame"), default="spd")
    analyze.add_argument("--calib", help="calibration file (required for frames)")
    analyze.add_argument("--cct-method", choices=tuple(_CCT_FLAGS), default="exp",
                         dest="cct_method")
    analyze.add_argument("--cct-override", type=float, default=None,
                         dest="cct_override",
                         help="pin the reference CCT instead of the estimate")
    analyze.add_argument("--out", default="out", help="report directory")
    analyze.add_argument("--trace", action="store_true",
                         help="also write the per-step trace JSON")
    analyze.set_defaults(func=_cmd_analyze)

    design = sub.add_parser("design", help="Spectrometer geometry calculator.")
    design.add_argument("--lines-per-mm", type=float, required=True)
    design.add_argument("--sensor-mm", type=float, required=True)
    design.add_argument("--pixels", type=int, default=1500)
    design.add_argument("--lambda-low", type=float, default=380.0)
    design.add_argument("--lambda-high", type=float, default=720.0)
    design.add_argument("--resolution", type=float, default=2.5,
                        help="target wavelength resolution (nm)")
    design.add_argument("--arrangement", choices=("parallel", "inclined"),
                        default="inclined")
    design.add_argument("--sweep-points", type=int, default=100)
    design.add_argument("--out", default="out")
    design.set_defaults(func=_cmd_design)

    simulate = sub.add_parser("simulate", help="Render an SPD into a raw frame.")
    simulate.add_argument("--input", required=True, help="SPD CSV")
    simulate.add_argument("--calib", required=True)
    simulate.add_argument("--exposure", type=float, default=DEFAULT_EXPOSURE_SCALE)
    simulate.add_argument("--noise", type=float, default=0.0)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--out", required=True, help="frame file to write")
    simulate.set_defaults(func=_cmd_simulate)

    capture = sub.add_parser("capture", help="Invert a raw frame into an SPD CSV.")
    capture.add_argument("--input", required=True, help="frame file")
    capture.add_argument("--calib", required=True)
    capture.add_argument("--out", required=True, help="SPD CSV to write")
    capture.set_defaults(func=_cmd_capture)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LumispecError as exc:
        for cls, code in _EXIT_CODES:
            if isinstance(exc, cls):
                print(f"error: {exc}", file=sys.stderr)
                return code
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
