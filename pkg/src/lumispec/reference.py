"""Reference illuminant synthesis.

Below 5000 K the reference is a blackbody radiator; at or above 5000 K it is
the empirical daylight model composed from the S0/S1/S2 component curves.
All generated SPDs are peak-normalized (colorimetry is scale-invariant, so
this only affects plots).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .ciedata import DaylightComponents
from .colorimetry import ChromaticityXY
from .errors import CctRangeError
from .spectral import (CANONICAL_GRID, SpectralPowerDistribution,
                       WavelengthGrid, normalize_peak, resample)

log = logging.getLogger(__name__)

# Blackbody radiation constants (wavelength in metres).
PLANCK_C1 = 3.7418e-16
PLANCK_C2 = 1.4388e-2

#: Breakpoint between the blackbody branch and the daylight branch.
DAYLIGHT_THRESHOLD_K = 5000.0
DAYLIGHT_RANGE_K = (4000.0, 25000.0)
REFERENCE_RANGE_K = (1000.0, 25000.0)


class ReferenceBranch(Enum):
    PLANCKIAN = "planckian"
    DAYLIGHT = "daylight"


@dataclass(frozen=True)
class ReferenceSpec:
    """Which reference family was used, and at what color temperature."""

    cct: float
    branch: ReferenceBranch

    def __post_init__(self):
        if not (self.cct > 0.0 and np.isfinite(self.cct)):
            raise ValueError(f"CCT must be positive and finite, got {self.cct}")
        planckian = self.cct < DAYLIGHT_THRESHOLD_K
        if planckian != (self.branch is ReferenceBranch.PLANCKIAN):
            raise ValueError(
                f"branch {self.branch.value} inconsistent with CCT {self.cct:g} K")


def planck_spd(t_kelvin: float,
               grid: WavelengthGrid = CANONICAL_GRID) -> SpectralPowerDistribution:
    """Peak-normalized blackbody SPD at temperature ``t_kelvin``."""
    if not (t_kelvin > 0.0):
        raise ValueError(f"temperature must be positive, got {t_kelvin}")
    wl_m = grid.wavelengths() * 1e-9
    values = kernels.planck_law(wl_m, t_kelvin, PLANCK_C1, PLANCK_C2)
    return normalize_peak(SpectralPowerDistribution(grid, values))


def daylight_chromaticity(t_kelvin: float) -> ChromaticityXY:
    """Chromaticity of the daylight model at a given color temperature.

    Two cubic fits in 1/T cover 4000-7000 K and 7000-25000 K; the second
    coordinate follows the fixed quadratic in x.
    """
    low, high = DAYLIGHT_RANGE_K
    if not (low <= t_kelvin <= high):
        raise CctRangeError(
            f"daylight model defined for [{low:.0f}, {high:.0f}] K, "
            f"got {t_kelvin:g} K")
    ik = 1000.0 / t_kelvin
    if t_kelvin <= 7000.0:
        x = 0.244063 + 0.09911 * ik + 2.9678 * ik**2 - 4.6070 * ik**3
    else:
        x = 0.237040 + 0.24748 * ik + 1.9018 * ik**2 - 2.0064 * ik**3
    y = -3.0 * x**2 + 2.87 * x - 0.275
    return ChromaticityXY(x, y)


def daylight_mixing(c: ChromaticityXY) -> tuple[float, float]:
    """Component weights M1, M2 for a daylight chromaticity."""
    den = 0.0241 + 0.2562 * c.x - 0.7341 * c.y
    m1 = (-1.3515 - 1.7703 * c.x + 5.9114 * c.y) / den
    m2 = (0.0300 - 31.4424 * c.x + 30.0717 * c.y) / den
    return m1, m2


def daylight_spd(t_kelvin: float,
                 grid: WavelengthGrid,
                 comps: DaylightComponents) -> SpectralPowerDistribution:
    """Peak-normalized daylight SPD at ``t_kelvin`` (4000-25000 K)."""
    chroma = daylight_chromaticity(t_kelvin)
    m1, m2 = daylight_mixing(chroma)
    values = comps.s0 + m1 * comps.s1 + m2 * comps.s2
    negatives = values < 0.0
    if np.any(negatives):
        log.warning("daylight composite at %g K clipped %d negative values",
                    t_kelvin, int(negatives.sum()))
        values = np.where(negatives, 0.0, values)
    composite = SpectralPowerDistribution(comps.grid, values)
    return normalize_peak(resample(composite, grid))


def reference_for(t_kelvin: float,
                  grid: WavelengthGrid,
                  comps: DaylightComponents
                  ) -> tuple[SpectralPowerDistribution, ReferenceSpec]:
    """Reference SPD for a color temperature: blackbody below 5000 K,
    daylight at or above."""
    low, high = REFERENCE_RANGE_K
    if not (low < t_kelvin <= high):
        raise CctRangeError(
            f"reference illuminant defined for ({low:.0f}, {high:.0f}] K, "
            f"got {t_kelvin:g} K")
    if t_kelvin < DAYLIGHT_THRESHOLD_K:
        return (planck_spd(t_kelvin, grid),
                ReferenceSpec(t_kelvin, ReferenceBranch.PLANCKIAN))
    return (daylight_spd(t_kelvin, grid, comps),
            ReferenceSpec(t_kelvin, ReferenceBranch.DAYLIGHT))
