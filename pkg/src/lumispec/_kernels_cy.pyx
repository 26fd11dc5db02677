# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the numeric kernels.

Same contracts as lumispec._kernels_np; typed C loops avoid the per-call
overhead that dominates numpy on the short arrays (81..1500 samples) this
package processes in bulk.
"""

from libc.math cimport exp

import numpy as np

BACKEND = "compiled"


def interp_linear_zero(object x_src, object y_src, object x_dst):
    """Piecewise-linear interpolation; points outside the source support map to 0.

    x_src must be strictly increasing. Exact on source points (no smoothing).
    """
    cdef const double[::1] xs = np.ascontiguousarray(x_src, dtype=np.float64)
    cdef const double[::1] ys = np.ascontiguousarray(y_src, dtype=np.float64)
    cdef const double[::1] xd = np.ascontiguousarray(x_dst, dtype=np.float64)
    cdef Py_ssize_t ns = xs.shape[0]
    cdef Py_ssize_t nd = xd.shape[0]
    out_arr = np.empty(nd, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, lo, hi, mid
    cdef double x, x0, x1
    cdef bint dst_sorted = True
    for i in range(1, nd):
        if xd[i] < xd[i - 1]:
            dst_sorted = False
            break
    lo = 0
    for i in range(nd):
        x = xd[i]
        if x < xs[0] or x > xs[ns - 1]:
            out[i] = 0.0
            continue
        if dst_sorted:
            # monotone merge walk: the bracket never moves backwards
            while lo + 2 < ns and xs[lo + 1] <= x:
                lo += 1
        else:
            lo = 0
            hi = ns - 1
            while hi - lo > 1:
                mid = (lo + hi) >> 1
                if xs[mid] <= x:
                    lo = mid
                else:
                    hi = mid
        if x == xs[lo]:
            out[i] = ys[lo]
            continue
        x0 = xs[lo]
        x1 = xs[lo + 1]
        if x == x1:
            out[i] = ys[lo + 1]
        else:
            out[i] = (ys[lo + 1] - ys[lo]) / (x1 - x0) * (x - x0) + ys[lo]
    return out_arr


def weighted_sum(object a, object b, double scale):
    """sum(a[i] * b[i]) * scale, the rectangular-rule product integral."""
    cdef const double[::1] av = np.ascontiguousarray(a, dtype=np.float64)
    cdef const double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t n = av.shape[0]
    cdef Py_ssize_t i
    cdef double acc = 0.0
    for i in range(n):
        acc += av[i] * bv[i]
    return acc * scale


def planck_law(object wl_m, double t_kelvin, double c1, double c2):
    """Blackbody spectral emission c1 / (wl^5 * (exp(c2 / (wl t)) - 1))."""
    cdef const double[::1] wl = np.ascontiguousarray(wl_m, dtype=np.float64)
    cdef Py_ssize_t n = wl.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef double w
    for i in range(n):
        w = wl[i]
        out[i] = c1 / (w * w * w * w * w * (exp(c2 / (w * t_kelvin)) - 1.0))
    return out_arr


def polyval(object coeffs_desc, object x):
    """Evaluate a polynomial (coefficients in descending order) by Horner's rule."""
    cdef const double[::1] c = np.ascontiguousarray(coeffs_desc, dtype=np.float64)
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef Py_ssize_t nc = c.shape[0]
    cdef Py_ssize_t n = xv.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double acc
    for i in range(n):
        acc = c[0] if nc > 0 else 0.0
        for j in range(1, nc):
            acc = acc * xv[i] + c[j]
        out[i] = acc
    return out_arr


def dark_subtract(object effective, double baseline):
    """max(0, baseline - effective[i]); the sensor output is inverted."""
    cdef const double[::1] e = np.ascontiguousarray(effective, dtype=np.float64)
    cdef Py_ssize_t n = e.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef double v
    for i in range(n):
        v = baseline - e[i]
        out[i] = v if v > 0.0 else 0.0
    return out_arr
