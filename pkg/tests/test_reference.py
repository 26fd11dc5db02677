import math

import numpy as np
import pytest

from lumispec.cct import cct_exponential
from lumispec.colorimetry import chromaticity_xy, tristimulus
from lumispec.errors import CctRangeError
from lumispec.reference import (PLANCK_C1, PLANCK_C2, ReferenceBranch,
                                ReferenceSpec, daylight_chromaticity,
                                daylight_mixing, daylight_spd, planck_spd,
                                reference_for)
from lumispec.spectral import CANONICAL_GRID, normalize_peak


def blackbody_point(wavelength_nm: float, t: float) -> float:
    # Independent two-point oracle: plain math evaluation of the law.
    wl = wavelength_nm * 1e-9
    return PLANCK_C1 / (wl ** 5 * (math.exp(PLANCK_C2 / (wl * t)) - 1.0))


class TestPlanck:
    def test_3000k_increasing_over_visible(self):
        # The emission peak sits beyond 780 nm, so the visible tail rises.
        spd = planck_spd(3000.0, CANONICAL_GRID)
        assert np.all(np.diff(spd.values) > 0.0)
        assert spd.values[-1] == 1.0

    def test_two_point_ratio_oracle(self):
        spd = planck_spd(3000.0, CANONICAL_GRID)
        wl = spd.wavelengths()
        i700 = int(np.nonzero(wl == 700.0)[0][0])
        i400 = int(np.nonzero(wl == 400.0)[0][0])
        ratio = spd.values[i700] / spd.values[i400]
        oracle = blackbody_point(700.0, 3000.0) / blackbody_point(400.0, 3000.0)
        assert ratio == pytest.approx(oracle, rel=1e-9)

    def test_peak_normalized_idempotent(self):
        spd = planck_spd(5600.0, CANONICAL_GRID)
        again = normalize_peak(spd)
        assert np.array_equal(spd.values, again.values)

    def test_nonpositive_temperature(self):
        with pytest.raises(ValueError):
            planck_spd(0.0, CANONICAL_GRID)

    def test_hotter_shifts_blue(self):
        wl = CANONICAL_GRID.wavelengths()
        i420 = int(np.nonzero(wl == 420.0)[0][0])
        i680 = int(np.nonzero(wl == 680.0)[0][0])
        ratios = []
        for t in (2700.0, 4000.0, 6500.0, 9000.0):
            s = planck_spd(t, CANONICAL_GRID)
            ratios.append(s.values[i420] / s.values[i680])
        assert np.all(np.diff(ratios) > 0.0)


class TestDaylight:
    def test_self_consistent_chromaticity(self, datasets):
        # The synthesized spectrum must reproduce the locus chromaticity it
        # was built from.
        spd = daylight_spd(6504.0, CANONICAL_GRID, datasets.daylight)
        xy = chromaticity_xy(tristimulus(spd, datasets.cmf))
        target = daylight_chromaticity(6504.0)
        assert xy.x == pytest.approx(target.x, abs=0.002)
        assert xy.y == pytest.approx(target.y, abs=0.002)

    def test_branch_continuity_at_7000(self):
        low = daylight_chromaticity(7000.0)
        ik = 1000.0 / 7000.0
        high_x = 0.237040 + 0.24748 * ik + 1.9018 * ik**2 - 2.0064 * ik**3
        assert low.x == pytest.approx(high_x, abs=0.002)

    def test_out_of_range(self, datasets):
        with pytest.raises(CctRangeError):
            daylight_spd(3000.0, CANONICAL_GRID, datasets.daylight)
        with pytest.raises(CctRangeError):
            daylight_chromaticity(25500.0)

    def test_mixing_weights_reproduce_model(self):
        # Anchor: the mixing denominators/numerators at the 6504 K point.
        c = daylight_chromaticity(6504.0)
        m1, m2 = daylight_mixing(c)
        assert m1 == pytest.approx(-0.2945, abs=0.002)
        assert m2 == pytest.approx(-0.6892, abs=0.002)

    def test_round_trip_cct(self, datasets):
        for t in (5000.0, 6504.0, 10000.0):
            spd = daylight_spd(t, CANONICAL_GRID, datasets.daylight)
            est = cct_exponential(chromaticity_xy(tristimulus(spd, datasets.cmf)))
            assert abs(est.kelvin - t) / t < 0.005

    def test_values_nonnegative(self, datasets):
        for t in (4000.0, 5000.0, 10000.0, 25000.0):
            spd = daylight_spd(t, CANONICAL_GRID, datasets.daylight)
            assert np.all(spd.values >= 0.0)
            assert spd.values.max() == 1.0


class TestReferenceFor:
    def test_threshold(self, datasets):
        _, spec = reference_for(4999.0, CANONICAL_GRID, datasets.daylight)
        assert spec.branch is ReferenceBranch.PLANCKIAN
        _, spec = reference_for(5000.0, CANONICAL_GRID, datasets.daylight)
        assert spec.branch is ReferenceBranch.DAYLIGHT

    def test_out_of_range(self, datasets):
        with pytest.raises(CctRangeError):
            reference_for(26000.0, CANONICAL_GRID, datasets.daylight)
        with pytest.raises(CctRangeError):
            reference_for(1000.0, CANONICAL_GRID, datasets.daylight)

    def test_spec_invariant(self):
        with pytest.raises(ValueError):
            ReferenceSpec(3000.0, ReferenceBranch.DAYLIGHT)
        with pytest.raises(ValueError):
            ReferenceSpec(6500.0, ReferenceBranch.PLANCKIAN)

    def test_matches_direct_synthesis(self, datasets):
        spd, _ = reference_for(3000.0, CANONICAL_GRID, datasets.daylight)
        direct = planck_spd(3000.0, CANONICAL_GRID)
        assert np.array_equal(spd.values, direct.values)
