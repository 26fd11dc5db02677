"""Transforms from spectra to color coordinates.

The chain is tristimulus (X, Y, Z) -> 1931 chromaticity (x, y) -> 1960
uniform-space chromaticity (u, v) -> 1964 color coordinates (W*, U*, V*).
Chromaticities are scale-free: multiplying an SPD by any positive factor
leaves them unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .ciedata import ColorMatchingFunctions
from .errors import DegenerateSpdError
from .spectral import SpectralPowerDistribution, resample

_XY_SUM_SLACK = 1e-9


@dataclass(frozen=True)
class Tristimulus:
    X: float
    Y: float
    Z: float

    def __post_init__(self):
        for v in (self.X, self.Y, self.Z):
            if not np.isfinite(v):
                raise ValueError("tristimulus values must be finite")


@dataclass(frozen=True)
class ChromaticityXY:
    x: float
    y: float

    def __post_init__(self):
        if not (np.isfinite(self.x) and np.isfinite(self.y)):
            raise ValueError("chromaticity must be finite")
        if self.x < 0.0 or self.y <= 0.0 or self.x + self.y > 1.0 + _XY_SUM_SLACK:
            raise ValueError(f"invalid chromaticity ({self.x}, {self.y})")

    @property
    def z(self) -> float:
        return 1.0 - self.x - self.y


@dataclass(frozen=True)
class ChromaticityUV:
    u: float
    v: float

    def __post_init__(self):
        if not (np.isfinite(self.u) and np.isfinite(self.v)):
            raise ValueError("chromaticity must be finite")
        if self.v <= 0.0:
            raise ValueError(f"uniform-space v must be positive, got {self.v}")


@dataclass(frozen=True)
class Cie1964Coords:
    """Lightness index W* plus chromatic coordinates U*, V*."""

    Wstar: float
    Ustar: float
    Vstar: float

    def __post_init__(self):
        for v in (self.Wstar, self.Ustar, self.Vstar):
            if not np.isfinite(v):
                raise ValueError("1964 coordinates must be finite")


def luminance_normalization(spd: SpectralPowerDistribution,
                            cmf: ColorMatchingFunctions) -> float:
    """The constant k = 100 / integral(S * ybar) that scales a stimulus to Y=100.

    Computed once per illuminant and reused for everything rendered under it,
    so sample luminances stay relative to the illuminant's Y = 100.
    """
    aligned = resample(spd, cmf.grid)
    y_integral = kernels.weighted_sum(aligned.values, cmf.ybar, cmf.grid.step)
    if y_integral <= 0.0:
        raise DegenerateSpdError("degenerate SPD: no power under the luminance curve")
    return 100.0 / y_integral


def tristimulus(spd: SpectralPowerDistribution,
                cmf: ColorMatchingFunctions) -> Tristimulus:
    """Integrate an SPD against the color matching functions, scaled to Y = 100."""
    aligned = resample(spd, cmf.grid)
    k = luminance_normalization(spd, cmf)
    step = cmf.grid.step
    x = kernels.weighted_sum(aligned.values, cmf.xbar, step) * k
    z = kernels.weighted_sum(aligned.values, cmf.zbar, step) * k
    return Tristimulus(x, 100.0, z)


def tristimulus_reflected(spd: SpectralPowerDistribution,
                          reflectance: np.ndarray,
                          cmf: ColorMatchingFunctions,
                          k: float) -> Tristimulus:
    """Tristimulus of light reflected off a sample, using the illuminant's k.

    ``reflectance`` must be sampled on the CMF grid (the bundled test color
    samples already are). With the shared k, a perfect reflector reproduces
    the bare illuminant and any real sample lands at Y <= 100.
    """
    aligned = resample(spd, cmf.grid)
    stimulus = aligned.values * np.asarray(reflectance, dtype=np.float64)
    step = cmf.grid.step
    x = kernels.weighted_sum(stimulus, cmf.xbar, step) * k
    y = kernels.weighted_sum(stimulus, cmf.ybar, step) * k
    z = kernels.weighted_sum(stimulus, cmf.zbar, step) * k
    return Tristimulus(x, y, z)


def chromaticity_xy(t: Tristimulus) -> ChromaticityXY:
    """Project tristimulus onto the 1931 chromaticity plane."""
    total = t.X + t.Y + t.Z
    if total <= 0.0:
        raise DegenerateSpdError("degenerate stimulus: X + Y + Z is not positive")
    return ChromaticityXY(t.X / total, t.Y / total)


def uv_from_xy(c: ChromaticityXY) -> ChromaticityUV:
    """Map 1931 chromaticity into the 1960 uniform color space.

    The denominator 12y - 2x + 3 is strictly positive on the valid
    chromaticity triangle.
    """
    den = 12.0 * c.y - 2.0 * c.x + 3.0
    return ChromaticityUV(4.0 * c.x / den, 6.0 * c.y / den)


def cie1964_coords(y_value: float,
                   uv_test: ChromaticityUV,
                   uv_ref: ChromaticityUV) -> Cie1964Coords:
    """1964 color coordinates of a stimulus relative to a reference chromaticity.

    W* = 25 Y^(1/3) - 17, U* = 13 W* (u - u_ref), V* = 13 W* (v - v_ref).
    U* and V* vanish exactly when the two chromaticities coincide.
    """
    if not (y_value > 0.0):
        raise ValueError(f"Y must be positive, got {y_value}")
    wstar = 25.0 * y_value ** (1.0 / 3.0) - 17.0
    ustar = 13.0 * wstar * (uv_test.u - uv_ref.u)
    vstar = 13.0 * wstar * (uv_test.v - uv_ref.v)
    return Cie1964Coords(wstar, ustar, vstar)
