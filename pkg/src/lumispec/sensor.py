"""Linear-CCD frame handling: dark calibration, responsivity compensation,
wavelength mapping, and a seeded forward simulator.

The sensor output is inverted (larger light intensity means a smaller ADC
count), so dark calibration subtracts each effective count from the mean of
the dark-shielded pixels. The simulator runs the same model forward so the
whole analysis chain can be exercised without hardware: frame -> SPD -> frame
is lossless, SPD -> frame -> SPD is limited by the 12-bit quantization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DegenerateSpdError, ParseError, SaturationError
from .spectral import (CANONICAL_GRID, PathOrFile, SpectralPowerDistribution,
                       WavelengthGrid, _open_for_read, _open_for_write, resample)

DARK_PIXELS = 13
EFFECTIVE_PIXELS = 1500
BIT_DEPTH = 12
ADC_MAX = 4095

#: Simulator conventions (not hardware measurements): idle output level in
#: counts; default peak signal amplitude.
SIMULATOR_BASELINE = 3800.0
DEFAULT_EXPOSURE_SCALE = 3000.0

#: Documentation constants for the physical capture (not simulated): a
#: ~250 ms integration interval resolves sources from roughly 200 lux.
CAPTURE_INTEGRATION_S = 0.25
CAPTURE_MIN_LUX = 200.0

FRAME_HEADER = (f"lumispec-frame v1 bitdepth={BIT_DEPTH} "
                f"dark={DARK_PIXELS} effective={EFFECTIVE_PIXELS}")


@dataclass(frozen=True, eq=False)
class RawSensorFrame:
    """One linear-CCD readout: 13 dark-shielded counts plus 1500 effective counts."""

    dark: np.ndarray
    effective: np.ndarray
    bit_depth: int = BIT_DEPTH

    def __post_init__(self):
        for name, expected in (("dark", DARK_PIXELS), ("effective", EFFECTIVE_PIXELS)):
            raw = np.asarray(getattr(self, name))
            if raw.shape != (expected,):
                raise ValueError(f"{name} must hold exactly {expected} counts")
            values = np.array(raw, dtype=np.int64)
            if np.any(values != raw):
                raise ValueError(f"{name} counts must be integers")
            if np.any(values < 0) or np.any(values > ADC_MAX):
                raise ValueError(f"{name} counts must lie in [0, {ADC_MAX}]")
            values.flags.writeable = False
            object.__setattr__(self, name, values)
        if self.bit_depth != BIT_DEPTH:
            raise ValueError(f"bit depth must be {BIT_DEPTH}")


@dataclass(frozen=True)
class WavelengthCalibration:
    """Two-point wavelength calibration: pixel 1 and pixel 1500 anchors in nm."""

    lambda_first_nm: float
    lambda_last_nm: float

    def __post_init__(self):
        if not (self.lambda_first_nm < self.lambda_last_nm):
            raise ValueError("lambda_first_nm must be below lambda_last_nm")


#: Factory calibration of the prototype: first pixel 391 nm, last 723 nm.
DEFAULT_CALIBRATION = WavelengthCalibration(391.0, 723.0)


@dataclass(frozen=True, eq=False)
class ResponsivityModel:
    """Wavelength-dependent photodiode sensitivity, a degree-5 polynomial
    in the wavelength expressed in metres."""

    coefficients: np.ndarray  # descending powers, 6 entries
    valid_band_nm: tuple[float, float]

    def __post_init__(self):
        coeffs = np.array(self.coefficients, dtype=np.float64)
        if coeffs.shape != (6,):
            raise ValueError("expected 6 polynomial coefficients")
        coeffs.flags.writeable = False
        object.__setattr__(self, "coefficients", coeffs)
        low, high = self.valid_band_nm
        if not (low < high):
            raise ValueError("valid band must be increasing")
        sweep = np.linspace(low, high, 2048) * 1e-9
        if np.any(kernels.polyval(coeffs, sweep) <= 0.0):
            raise ValueError("responsivity must stay positive over the valid band")


DEFAULT_RESPONSIVITY = ResponsivityModel(
    coefficients=np.array([-1.783e32, 4.289e26, -3.919e20,
                           1.575e14, -2.170e7, 0.2012]),
    valid_band_nm=(391.0, 723.0))


def pixel_grid(calib: WavelengthCalibration) -> WavelengthGrid:
    """Uniform wavelength grid spanned by the 1500 effective pixels."""
    span = calib.lambda_last_nm - calib.lambda_first_nm
    return WavelengthGrid(calib.lambda_first_nm,
                          span / (EFFECTIVE_PIXELS - 1), EFFECTIVE_PIXELS)


def pixel_to_wavelength(index: float, calib: WavelengthCalibration) -> float:
    """Wavelength of a (possibly fractional) 1-based pixel index."""
    if not (1.0 <= index <= EFFECTIVE_PIXELS):
        raise ValueError(f"pixel index {index} outside 1..{EFFECTIVE_PIXELS}")
    span = calib.lambda_last_nm - calib.lambda_first_nm
    return calib.lambda_first_nm + (index - 1.0) * span / (EFFECTIVE_PIXELS - 1)


def responsivity(wavelength_nm: float, model: ResponsivityModel) -> float:
    """Sensitivity at one wavelength; raises outside the fitted band."""
    low, high = model.valid_band_nm
    if not (low <= wavelength_nm <= high):
        raise ValueError(
            f"responsivity extrapolation: {wavelength_nm:g} nm outside "
            f"[{low:g}, {high:g}] nm")
    return float(kernels.polyval(model.coefficients,
                                 np.array([wavelength_nm * 1e-9]))[0])


def _responsivity_curve(wavelengths_nm: np.ndarray,
                        model: ResponsivityModel) -> np.ndarray:
    low, high = model.valid_band_nm
    if wavelengths_nm[0] < low or wavelengths_nm[-1] > high:
        raise ValueError(
            f"calibration span [{wavelengths_nm[0]:g}, {wavelengths_nm[-1]:g}] nm "
            f"exceeds the responsivity band [{low:g}, {high:g}] nm")
    return kernels.polyval(model.coefficients, wavelengths_nm * 1e-9)


def dark_calibrate(frame: RawSensorFrame) -> np.ndarray:
    """Per-pixel light intensity: max(0, mean(dark) - effective).

    The subtraction order resolves the inverted sensor output; the result is
    nonnegative by construction.
    """
    baseline = float(np.mean(frame.dark))
    return kernels.dark_subtract(frame.effective.astype(np.float64), baseline)


def frame_to_spd(frame: RawSensorFrame,
                 calib: WavelengthCalibration,
                 model: ResponsivityModel = DEFAULT_RESPONSIVITY
                 ) -> SpectralPowerDistribution:
    """Invert a frame into an SPD on the canonical grid.

    Dark-calibrates, divides out the responsivity, and resamples; canonical
    wavelengths outside the calibrated band are zero.
    """
    grid = pixel_grid(calib)
    wavelengths = grid.wavelengths()
    intensity = dark_calibrate(frame)
    values = intensity / _responsivity_curve(wavelengths, model)
    return resample(SpectralPowerDistribution(grid, values), CANONICAL_GRID)


def simulate_frame(spd: SpectralPowerDistribution,
                   calib: WavelengthCalibration,
                   model: ResponsivityModel = DEFAULT_RESPONSIVITY,
                   exposure_scale: float = DEFAULT_EXPOSURE_SCALE,
                   noise_sigma: float = 0.0,
                   seed: int = 0) -> RawSensorFrame:
    """Generate the frame a sensor would produce for an SPD.

    The SPD is normalized to peak 1 over the calibrated band (SPDs are
    relative), so ``exposure_scale`` is the peak signal amplitude in counts.
    Per pixel: count = round(baseline - S(lambda) R(lambda) exposure + noise),
    clamped to the ADC range. Deterministic for a fixed seed; raises
    SaturationError when the noiseless signal would cross zero counts.
    """
    if not (exposure_scale > 0.0):
        raise ValueError(f"exposure_scale must be positive, got {exposure_scale}")
    if noise_sigma < 0.0:
        raise ValueError(f"noise_sigma must be nonnegative, got {noise_sigma}")
    grid = pixel_grid(calib)
    wavelengths = grid.wavelengths()
    sampled = kernels.interp_linear_zero(
        spd.wavelengths(), spd.values, wavelengths)
    peak = float(sampled.max())
    if peak <= 0.0:
        raise DegenerateSpdError("degenerate SPD: no power on the sensor band")
    signal = (sampled / peak) * _responsivity_curve(wavelengths, model) * exposure_scale
    if float(signal.max()) > SIMULATOR_BASELINE:
        raise SaturationError(
            f"saturation: peak signal {signal.max():.0f} counts exceeds the "
            f"{SIMULATOR_BASELINE:.0f}-count baseline")
    rng = np.random.default_rng(seed)
    dark_noise = rng.normal(0.0, noise_sigma, DARK_PIXELS)
    effective_noise = rng.normal(0.0, noise_sigma, EFFECTIVE_PIXELS)
    dark = np.clip(np.rint(SIMULATOR_BASELINE + dark_noise), 0, ADC_MAX)
    effective = np.clip(np.rint(SIMULATOR_BASELINE - signal + effective_noise),
                        0, ADC_MAX)
    return RawSensorFrame(dark.astype(np.int64), effective.astype(np.int64))


def read_frame(source: PathOrFile) -> RawSensorFrame:
    """Parse the v1 frame format: magic header, 13 dark lines, 1500 effective lines."""
    handle, owned = _open_for_read(source)
    try:
        lines = [line.strip() for line in handle.read().splitlines()]
    finally:
        if owned:
            handle.close()
    lines = [line for line in lines if line]
    if not lines:
        raise ParseError("empty frame file")
    if lines[0] != FRAME_HEADER:
        raise ParseError(f"bad frame header {lines[0]!r}")
    expected = 1 + DARK_PIXELS + EFFECTIVE_PIXELS
    if len(lines) != expected:
        raise ParseError(
            f"frame must hold {expected - 1} count lines, got {len(lines) - 1}")
    try:
        counts = [int(line) for line in lines[1:]]
    except ValueError:
        raise ParseError("frame counts must be integers") from None
    try:
        return RawSensorFrame(np.array(counts[:DARK_PIXELS]),
                              np.array(counts[DARK_PIXELS:]))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_frame(frame: RawSensorFrame, target: PathOrFile) -> None:
    with _open_for_write(target) as handle:
        handle.write(FRAME_HEADER + "\n")
        for value in frame.dark:
            handle.write(f"{int(value)}\n")
        for value in frame.effective:
            handle.write(f"{int(value)}\n")


def read_calibration(source: PathOrFile) -> WavelengthCalibration:
    """Parse the key-value calibration format (lambda_first_nm, lambda_last_nm)."""
    handle, owned = _open_for_read(source)
    try:
        text = handle.read()
    finally:
        if owned:
            handle.close()
    entries = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"calibration line {line_no}: expected key = value")
        key, _, value = line.partition("=")
        try:
            entries[key.strip()] = float(value.strip())
        except ValueError:
            raise ParseError(
                f"calibration line {line_no}: non-numeric value") from None
    missing = {"lambda_first_nm", "lambda_last_nm"} - entries.keys()
    if missing:
        raise ParseError(f"calibration missing keys: {sorted(missing)}")
    if not math.isfinite(entries["lambda_first_nm"]) \
            or not math.isfinite(entries["lambda_last_nm"]):
        raise ParseError("calibration anchors must be finite")
    try:
        return WavelengthCalibration(entries["lambda_first_nm"],
                                     entries["lambda_last_nm"])
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_calibration(calib: WavelengthCalibration, target: PathOrFile) -> None:
    with _open_for_write(target) as handle:
        handle.write(f"lambda_first_nm = {calib.lambda_first_nm:g}\n")
        handle.write(f"lambda_last_nm = {calib.lambda_last_nm:g}\n")
