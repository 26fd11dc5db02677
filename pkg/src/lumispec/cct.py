"""Closed-form correlated color temperature estimators.

Both estimators map a 1931 chromaticity to kelvin through the inverse slope
n = (x - x_e) / (y - y_e) of the line toward a fixed epicenter, then apply a
fitted one-dimensional model in n. The polynomial form degrades at very high
color temperatures; the exponential form is the default for analysis and is
stated valid between 3000 and 50000 K.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

from .colorimetry import ChromaticityXY
from .errors import CctRangeError

log = logging.getLogger(__name__)


class CctMethod(Enum):
    POLYNOMIAL = "polynomial"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class CctEstimate:
    kelvin: float
    method: CctMethod

    def __post_init__(self):
        if not (math.isfinite(self.kelvin) and self.kelvin > 0.0):
            raise ValueError(f"CCT must be positive and finite, got {self.kelvin}")

    @property
    def within_stated_validity(self) -> bool:
        """True when an exponential estimate sits inside its fitted
        3000-50000 K interval (always True for the polynomial method,
        which has no stated interval beyond the hard guard)."""
        if self.method is CctMethod.EXPONENTIAL:
            return EXP_VALIDITY_K[0] <= self.kelvin <= EXP_VALIDITY_K[1]
        return True


# Polynomial estimator
MCCAMY_EPICENTER = (0.3320, 0.1858)

# Estimates outside this band are garbage from either model and raise.
MODEL_GUARD_K = (1000.0, 50000.0)

# Exponential estimator
EXP_EPICENTER = (0.3366, 0.1735)
EXP_VALIDITY_K = (3000.0, 50000.0)
_EXP_A0 = -949.8631
_EXP_A1 = 6253.80338
_EXP_T1 = 0.92159
_EXP_A2 = 28.70599
_EXP_T2 = 0.20039
_EXP_A3 = 0.00004
_EXP_T3 = 0.07125


def _epicenter_slope(c: ChromaticityXY, epicenter: tuple[float, float]) -> float:
    x_e, y_e = epicenter
    if c.y == y_e:
        raise CctRangeError(
            f"epicenter singularity: chromaticity y equals {y_e}")
    return (c.x - x_e) / (c.y - y_e)


def cct_mccamy(c: ChromaticityXY) -> CctEstimate:
    """Cubic-polynomial CCT estimate.

    Raises CctRangeError at the epicenter singularity or when the result
    falls outside the plausible 1000-50000 K model range.
    """
    n = _epicenter_slope(c, MCCAMY_EPICENTER)
    kelvin = ((-449.0 * n + 3525.0) * n - 6823.3) * n + 5520.33
    low, high = MODEL_GUARD_K
    if not (low <= kelvin <= high):
        raise CctRangeError(
            f"polynomial estimate {kelvin:.0f} K out of model range "
            f"[{low:.0f}, {high:.0f}] K")
    return CctEstimate(kelvin, CctMethod.POLYNOMIAL)


def cct_exponential(c: ChromaticityXY) -> CctEstimate:
    """Sum-of-exponentials CCT estimate (analysis default).

    Raises CctRangeError at the epicenter singularity or when the result
    falls outside the 1000-50000 K guard band. Estimates that stay inside
    the guard but leave the fitted 3000-50000 K interval (incandescent-range
    sources sit just below it) are returned with a logged flag; check
    CctEstimate.within_stated_validity.
    """
    n = _epicenter_slope(c, EXP_EPICENTER)
    try:
        kelvin = (_EXP_A0
                  + _EXP_A1 * math.exp(-n / _EXP_T1)
                  + _EXP_A2 * math.exp(-n / _EXP_T2)
                  + _EXP_A3 * math.exp(-n / _EXP_T3))
    except OverflowError:
        kelvin = math.inf
    low, high = MODEL_GUARD_K
    if not (low <= kelvin <= high):
        raise CctRangeError(
            f"exponential estimate {kelvin:.0f} K outside usable range "
            f"[{low:.0f}, {high:.0f}] K")
    estimate = CctEstimate(kelvin, CctMethod.EXPONENTIAL)
    if not estimate.within_stated_validity:
        log.warning("exponential estimate %.0f K outside stated validity "
                    "[%.0f, %.0f] K", kelvin, *EXP_VALIDITY_K)
    return estimate


def estimate(c: ChromaticityXY, method: CctMethod) -> CctEstimate:
    if method is CctMethod.POLYNOMIAL:
        return cct_mccamy(c)
    return cct_exponential(c)
