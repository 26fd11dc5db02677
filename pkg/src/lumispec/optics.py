"""Lens-free grating spectrometer geometry.

Two layouts are supported. In the first the linear sensor sits parallel to
the grating at distance D1, offset by h1 so the band's lowest wavelength
lands on pixel 0. In the second the sensor is tilted perpendicular to the
mean diffraction angle; it forms the base of an isosceles triangle at
distance D2 and maps wavelength to position far more linearly, which is why
it is the preferred build. Angles are stored in radians; the CLI prints
degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DiffractionError


@dataclass(frozen=True)
class GratingSpec:
    """Diffraction grating: slit pitch in micrometres, diffraction order."""

    pitch_um: float
    order: int = 1

    def __post_init__(self):
        if not (self.pitch_um > 0.0):
            raise ValueError(f"pitch must be positive, got {self.pitch_um}")
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")

    @classmethod
    def from_lines_per_mm(cls, lines_per_mm: float, order: int = 1) -> "GratingSpec":
        if not (lines_per_mm > 0.0):
            raise ValueError(f"lines/mm must be positive, got {lines_per_mm}")
        return cls(pitch_um=1000.0 / lines_per_mm, order=order)


@dataclass(frozen=True)
class SensorSpec:
    """Linear sensor: useful length in millimetres and photosensor count."""

    length_mm: float
    pixel_count: int

    def __post_init__(self):
        if not (self.length_mm > 0.0):
            raise ValueError(f"sensor length must be positive, got {self.length_mm}")
        if self.pixel_count < 2:
            raise ValueError(f"need at least 2 pixels, got {self.pixel_count}")


class Arrangement(Enum):
    PARALLEL = "parallel"
    INCLINED = "inclined"


def diffraction_angle(wavelength_nm: float, grating: GratingSpec) -> float:
    """First constructive-interference angle: sin(theta) = m * lambda / d."""
    ratio = grating.order * wavelength_nm / (grating.pitch_um * 1000.0)
    if ratio >= 1.0:
        raise DiffractionError(
            f"no first-order maximum: order {grating.order} x {wavelength_nm:g} nm "
            f"exceeds the {grating.pitch_um:g} um pitch")
    return math.asin(ratio)


@dataclass(frozen=True)
class OpticalDesign:
    """Derived geometry for one spectrometer layout.

    Parallel layout fills d1/h1; inclined layout fills theta_mid/d2. The
    grating, sensor and wavelength band are retained so position and slope
    sweeps are self-contained.
    """

    arrangement: Arrangement
    grating: GratingSpec
    sensor: SensorSpec
    lambda_low_nm: float
    lambda_high_nm: float
    theta_low: float
    theta_high: float
    theta_mid: float | None = None
    d1_mm: float | None = None
    h1_mm: float | None = None
    d2_mm: float | None = None

    def __post_init__(self):
        if not (0.0 < self.theta_low < self.theta_high < math.pi / 2.0):
            raise ValueError("angles must satisfy 0 < theta_low < theta_high < pi/2")

    def band(self) -> tuple[float, float]:
        return (self.lambda_low_nm, self.lambda_high_nm)


def _design_angles(grating: GratingSpec, lambda_low_nm: float,
                   lambda_high_nm: float) -> tuple[float, float]:
    if grating.order != 1:
        raise ValueError("designs are computed for first-order diffraction only")
    if not (0.0 < lambda_low_nm < lambda_high_nm):
        raise ValueError(
            f"need 0 < lambda_low < lambda_high, got "
            f"({lambda_low_nm:g}, {lambda_high_nm:g}) nm")
    return (diffraction_angle(lambda_low_nm, grating),
            diffraction_angle(lambda_high_nm, grating))


def design_parallel(grating: GratingSpec, sensor: SensorSpec,
                    lambda_low_nm: float, lambda_high_nm: float) -> OpticalDesign:
    """Sensor parallel to the grating: D1 = S / (tan(thH) - tan(thL)), h1 = D1 tan(thL)."""
    theta_low, theta_high = _design_angles(grating, lambda_low_nm, lambda_high_nm)
    d1 = sensor.length_mm / (math.tan(theta_high) - math.tan(theta_low))
    h1 = d1 * math.tan(theta_low)
    return OpticalDesign(
        arrangement=Arrangement.PARALLEL, grating=grating, sensor=sensor,
        lambda_low_nm=lambda_low_nm, lambda_high_nm=lambda_high_nm,
        theta_low=theta_low, theta_high=theta_high, d1_mm=d1, h1_mm=h1)


def design_inclined(grating: GratingSpec, sensor: SensorSpec,
                    lambda_low_nm: float, lambda_high_nm: float) -> OpticalDesign:
    """Sensor perpendicular to the mean angle: D2 = S / (2 tan(thH - th2))."""
    theta_low, theta_high = _design_angles(grating, lambda_low_nm, lambda_high_nm)
    theta_mid = (theta_low + theta_high) / 2.0
    d2 = sensor.length_mm / (2.0 * math.tan(theta_high - theta_mid))
    return OpticalDesign(
        arrangement=Arrangement.INCLINED, grating=grating, sensor=sensor,
        lambda_low_nm=lambda_low_nm, lambda_high_nm=lambda_high_nm,
        theta_low=theta_low, theta_high=theta_high, theta_mid=theta_mid, d2_mm=d2)


def _check_band(wavelength_nm: float, design: OpticalDesign) -> None:
    if not (design.lambda_low_nm <= wavelength_nm <= design.lambda_high_nm):
        raise ValueError(
            f"{wavelength_nm:g} nm outside the design band "
            f"[{design.lambda_low_nm:g}, {design.lambda_high_nm:g}] nm")


def position_parallel(wavelength_nm: float, design: OpticalDesign) -> float:
    """Sensor position (mm) of a wavelength; 0 at the band start, S at the end."""
    if design.arrangement is not Arrangement.PARALLEL:
        raise ValueError("design is not the parallel arrangement")
    _check_band(wavelength_nm, design)
    theta = diffraction_angle(wavelength_nm, design.grating)
    return design.d1_mm * math.tan(theta) - design.h1_mm


def position_inclined(wavelength_nm: float, design: OpticalDesign) -> float:
    """Sensor position (mm) on the tilted sensor; S/2 at the mean angle."""
    if design.arrangement is not Arrangement.INCLINED:
        raise ValueError("design is not the inclined arrangement")
    _check_band(wavelength_nm, design)
    theta = diffraction_angle(wavelength_nm, design.grating)
    half = design.sensor.length_mm / 2.0
    return half - design.d2_mm * math.tan(design.theta_mid - theta)


def position(wavelength_nm: float, design: OpticalDesign) -> float:
    if design.arrangement is Arrangement.PARALLEL:
        return position_parallel(wavelength_nm, design)
    return position_inclined(wavelength_nm, design)


def position_slope(wavelength_nm: float, design: OpticalDesign) -> float:
    """Closed-form derivative of sensor position vs wavelength (mm per nm)."""
    _check_band(wavelength_nm, design)
    d_nm = design.grating.pitch_um * 1000.0
    ratio = wavelength_nm / d_nm
    root = math.sqrt(1.0 - ratio * ratio)
    if design.arrangement is Arrangement.PARALLEL:
        return (d_nm * design.d1_mm) / ((d_nm * d_nm - wavelength_nm * wavelength_nm) * root)
    sec = 1.0 / math.cos(design.theta_mid - math.asin(ratio))
    return design.d2_mm * sec * sec / (d_nm * root)


def collimator_aperture(delta_nm: float, sensor: SensorSpec,
                        lambda_low_nm: float, lambda_high_nm: float,
                        theta_mid: float) -> float:
    """Collimator slot width (mm) achieving a target wavelength resolution.

    a = delta * S / ((lambda_high - lambda_low) * sin(pi - theta_mid)).
    Linear in the resolution target, inverse in the band span.
    """
    if not (delta_nm > 0.0):
        raise ValueError(f"resolution target must be positive, got {delta_nm}")
    if not (lambda_low_nm < lambda_high_nm):
        raise ValueError("degenerate wavelength range")
    span = lambda_high_nm - lambda_low_nm
    return delta_nm * sensor.length_mm / (span * math.sin(math.pi - theta_mid))


def linearity_metric(design: OpticalDesign, lambda_low_nm: float,
                     lambda_high_nm: float, samples: int = 101) -> float:
    """max(slope)/min(slope) over a uniform wavelength sweep; 1.0 is perfectly linear."""
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    step = (lambda_high_nm - lambda_low_nm) / (samples - 1)
    slopes = [position_slope(lambda_low_nm + i * step, design)
              for i in range(samples)]
    return max(slopes) / min(slopes)
