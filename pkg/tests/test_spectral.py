import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lumispec.errors import DegenerateSpdError, ParseError
from lumispec.spectral import (CANONICAL_GRID, SpectralPowerDistribution,
                               WavelengthGrid, integrate_product,
                               normalize_peak, read_spd_csv, resample,
                               write_spd_csv)

from conftest import flat_spd, make_spd


class TestWavelengthGrid:
    def test_canonical_grid(self):
        assert CANONICAL_GRID.start == 380.0
        assert CANONICAL_GRID.stop == 780.0
        assert CANONICAL_GRID.count == 81
        wl = CANONICAL_GRID.wavelengths()
        assert wl[0] == 380.0 and wl[-1] == 780.0
        assert np.all(np.diff(wl) == 5.0)

    @pytest.mark.parametrize("start,step,count", [
        (380.0, 0.0, 10), (380.0, -1.0, 10), (380.0, 5.0, 1),
    ])
    def test_invalid_grids(self, start, step, count):
        with pytest.raises(ValueError):
            WavelengthGrid(start, step, count)


class TestSpdValidation:
    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            SpectralPowerDistribution(CANONICAL_GRID, np.ones(80))

    def test_negative_rejected(self):
        values = np.ones(81)
        values[3] = -0.1
        with pytest.raises(ValueError, match="nonnegative"):
            SpectralPowerDistribution(CANONICAL_GRID, values)

    def test_nan_rejected(self):
        values = np.ones(81)
        values[3] = np.nan
        with pytest.raises(ValueError, match="finite"):
            SpectralPowerDistribution(CANONICAL_GRID, values)

    def test_values_immutable(self):
        spd = flat_spd()
        with pytest.raises(ValueError):
            spd.values[0] = 2.0


class TestResample:
    def test_identity_on_own_grid(self):
        spd = make_spd(np.linspace(0.1, 1.0, 81))
        assert resample(spd, CANONICAL_GRID) is spd

    def test_linear_midpoint(self):
        # samples {500: 0, 510: 10} -> 505 gives 5
        source = SpectralPowerDistribution(
            WavelengthGrid(500.0, 10.0, 2), np.array([0.0, 10.0]))
        out = resample(source, WavelengthGrid(505.0, 5.0, 2))
        assert out.values[0] == pytest.approx(5.0, abs=1e-12)
        assert out.values[1] == 10.0

    def test_outside_support_is_zero(self):
        # sensor-band source queried at 380 nm must read 0 (hand rule:
        # 380 < 391, outside the support, maps to zero not extrapolation)
        grid = WavelengthGrid(391.0, 2.0, 167)  # 391..723
        source = SpectralPowerDistribution(grid, np.ones(167))
        out = resample(source, CANONICAL_GRID)
        wl = CANONICAL_GRID.wavelengths()
        assert np.all(out.values[wl < 391.0] == 0.0)
        assert np.all(out.values[wl > 723.0] == 0.0)
        assert np.all(out.values[(wl >= 391.0) & (wl <= 723.0)] == 1.0)

    def test_exact_on_source_points(self):
        rng = np.random.default_rng(3)
        values = rng.uniform(0.0, 2.0, 81)
        spd = make_spd(values)
        fine = resample(spd, WavelengthGrid(380.0, 2.5, 161))
        assert np.array_equal(fine.values[::2], values)


class TestIntegrateProduct:
    def test_constant_integrand(self):
        # S = w = 1 over [400, 500] at 1 nm: the documented inclusive
        # rectangular rule gives exactly 101 samples x 1 nm, i.e. ~100.
        grid = WavelengthGrid(400.0, 1.0, 101)
        one = SpectralPowerDistribution(grid, np.ones(101))
        value = integrate_product(one, one)
        assert value == pytest.approx(101.0, abs=1e-9)
        assert value == pytest.approx(100.0, rel=0.015)

    def test_zero_weight(self):
        grid = WavelengthGrid(400.0, 1.0, 101)
        one = SpectralPowerDistribution(grid, np.ones(101))
        zero = SpectralPowerDistribution(grid, np.zeros(101))
        assert integrate_product(one, zero) == 0.0

    def test_matches_fine_quadrature(self, cmf):
        # Refine the step to 0.1 nm as an independent oracle; the 5 nm
        # rectangular rule must land within 0.5%.
        ybar = SpectralPowerDistribution(cmf.grid, cmf.ybar)
        coarse = integrate_product(ybar, flat_spd())
        fine_wl = np.arange(380.0, 780.0 + 1e-9, 0.1)
        fine = float(np.interp(fine_wl, cmf.grid.wavelengths(), cmf.ybar).sum() * 0.1)
        assert coarse == pytest.approx(fine, rel=0.005)

    @given(scale=st.floats(0.0, 1e3))
    @settings(max_examples=30, deadline=None)
    def test_linear_in_first_argument(self, scale):
        rng = np.random.default_rng(11)
        a = make_spd(rng.uniform(0.0, 1.0, 81))
        w = make_spd(rng.uniform(0.0, 1.0, 81))
        scaled = make_spd(a.values * scale)
        assert integrate_product(scaled, w) == pytest.approx(
            scale * integrate_product(a, w), rel=1e-9, abs=1e-9)

    def test_symmetric_on_common_grid(self):
        rng = np.random.default_rng(12)
        a = make_spd(rng.uniform(0.0, 1.0, 81))
        b = make_spd(rng.uniform(0.0, 1.0, 81))
        assert integrate_product(a, b) == pytest.approx(
            integrate_product(b, a), rel=1e-12)


class TestNormalizePeak:
    def test_scales_by_max(self):
        grid = WavelengthGrid(500.0, 10.0, 3)
        spd = SpectralPowerDistribution(grid, np.array([2.0, 4.0, 8.0]))
        out = normalize_peak(spd)
        assert np.array_equal(out.values, [0.25, 0.5, 1.0])

    def test_idempotent(self):
        rng = np.random.default_rng(4)
        spd = make_spd(rng.uniform(0.0, 3.0, 81))
        once = normalize_peak(spd)
        twice = normalize_peak(once)
        assert np.array_equal(once.values, twice.values)

    def test_all_zero_errors(self):
        with pytest.raises(DegenerateSpdError, match="degenerate"):
            normalize_peak(flat_spd(0.0))


class TestSpdCsv:
    def test_round_trip(self, tmp_path):
        spd = normalize_peak(make_spd(np.linspace(0.5, 2.0, 81)))
        path = tmp_path / "spd.csv"
        write_spd_csv(spd, path)
        back = read_spd_csv(path)
        assert np.allclose(back.values, spd.values, rtol=1e-12, atol=0.0)

    def test_resamples_to_canonical(self):
        text = "wavelength_nm,power\n391,1.0\n723,1.0\n"
        spd = read_spd_csv(io.StringIO(text))
        assert spd.grid == CANONICAL_GRID
        wl = spd.wavelengths()
        assert np.all(spd.values[(wl >= 395) & (wl <= 720)] == 1.0)
        assert spd.values[0] == 0.0

    def test_empty_file(self):
        with pytest.raises(ParseError, match="empty"):
            read_spd_csv(io.StringIO(""))

    def test_negative_power_row_reported(self):
        text = "wavelength_nm,power\n400,1.0\n410,-0.5\n420,1.0\n"
        with pytest.raises(ParseError, match="row 3"):
            read_spd_csv(io.StringIO(text))

    def test_non_monotone_wavelengths(self):
        text = "wavelength_nm,power\n400,1.0\n400,1.0\n420,1.0\n"
        with pytest.raises(ParseError, match="strictly increasing"):
            read_spd_csv(io.StringIO(text))

    def test_non_numeric_field(self):
        text = "wavelength_nm,power\n400,1.0\n410,abc\n"
        with pytest.raises(ParseError, match="row 3"):
            read_spd_csv(io.StringIO(text))

    def test_bad_header(self):
        with pytest.raises(ParseError, match="header"):
            read_spd_csv(io.StringIO("nm,value\n400,1\n500,1\n"))


def test_quadrature_step_sensitivity(datasets):
    # The 5 nm analysis grid is a choice; check the induced chromaticity
    # shift against a 1 nm grid stays small for a smooth source.
    from lumispec.colorimetry import chromaticity_xy, tristimulus
    from lumispec.reference import planck_spd

    coarse = planck_spd(3000.0, CANONICAL_GRID)
    fine_grid = WavelengthGrid(380.0, 1.0, 401)
    fine = planck_spd(3000.0, fine_grid)
    cmf = datasets.cmf
    xy_coarse = chromaticity_xy(tristimulus(coarse, cmf))

    fine_cmf_x = np.interp(fine_grid.wavelengths(), cmf.grid.wavelengths(), cmf.xbar)
    fine_cmf_y = np.interp(fine_grid.wavelengths(), cmf.grid.wavelengths(), cmf.ybar)
    fine_cmf_z = np.interp(fine_grid.wavelengths(), cmf.grid.wavelengths(), cmf.zbar)
    sums = np.array([float(np.dot(fine.values, c)) for c in
                     (fine_cmf_x, fine_cmf_y, fine_cmf_z)])
    xy_fine = sums[:2] / sums.sum()
    assert abs(xy_coarse.x - xy_fine[0]) < 5e-4
    assert abs(xy_coarse.y - xy_fine[1]) < 5e-4
