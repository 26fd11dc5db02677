"""Numpy implementations of the numeric kernels.

This is the fallback backend used when the compiled extension
(lumispec._kernels_cy) is unavailable. Both backends implement the same
five functions with identical contracts; lumispec.kernels selects one at
import time.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def interp_linear_zero(x_src: np.ndarray, y_src: np.ndarray, x_dst: np.ndarray) -> np.ndarray:
    """Piecewise-linear interpolation; points outside the source support map to 0.

    x_src must be strictly increasing. Exact on source points (no smoothing).
    """
    return np.interp(x_dst, x_src, y_src, left=0.0, right=0.0)


def weighted_sum(a: np.ndarray, b: np.ndarray, scale: float) -> float:
    """sum(a[i] * b[i]) * scale, the rectangular-rule product integral."""
    return float(np.dot(a, b) * scale)


def planck_law(wl_m: np.ndarray, t_kelvin: float, c1: float, c2: float) -> np.ndarray:
    """Blackbody spectral emission c1 / (wl^5 * (exp(c2 / (wl t)) - 1))."""
    wl = np.asarray(wl_m, dtype=np.float64)
    with np.errstate(over="ignore"):
        return c1 / (wl**5 * (np.exp(c2 / (wl * t_kelvin)) - 1.0))


def polyval(coeffs_desc: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Evaluate a polynomial (coefficients in descending order) by Horner's rule."""
    return np.polyval(np.asarray(coeffs_desc, dtype=np.float64),
                      np.asarray(x, dtype=np.float64))


def dark_subtract(effective: np.ndarray, baseline: float) -> np.ndarray:
    """max(0, baseline - effective[i]); the sensor output is inverted."""
    return np.maximum(baseline - np.asarray(effective, dtype=np.float64), 0.0)
