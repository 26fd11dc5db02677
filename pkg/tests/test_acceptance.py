"""Acceptance suite.

Each test covers one release criterion at its stated tolerance and prints
one PASS/FAIL line (run with `pytest tests/test_acceptance.py -v -s` to see
them). The pure-math vectors reuse measured chromaticity pairs; everything
else is property-based against independent oracles.
"""

import subprocess
import sys
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

from lumispec.cct import cct_exponential, cct_mccamy
from lumispec.colorimetry import (ChromaticityXY, chromaticity_xy,
                                  tristimulus, uv_from_xy)
from lumispec.cri import adapt_sample, adaptation_cd, general_cri
from lumispec.optics import (GratingSpec, SensorSpec, collimator_aperture,
                             design_inclined, design_parallel,
                             linearity_metric, position, position_slope)
from lumispec.pipeline import run_pipeline
from lumispec.reference import (daylight_chromaticity, daylight_spd,
                                planck_spd, reference_for)
from lumispec.sensor import DEFAULT_CALIBRATION, simulate_frame
from lumispec.spectral import CANONICAL_GRID

from conftest import make_spd, three_spike_spd

DEMO_SPD = Path(__file__).parent.parent / "src/lumispec/data/demo_d6504_spd.csv"


@contextmanager
def criterion(number: int, name: str):
    try:
        yield
    except Exception:
        print(f"ACCEPTANCE {number:02d} {name}: FAIL")
        raise
    print(f"ACCEPTANCE {number:02d} {name}: PASS")


def test_criterion_01_ucs_transform_vectors():
    vectors = [
        ((0.393, 0.375), (0.234, 0.335)),
        ((0.384, 0.357), (0.236, 0.329)),
        ((0.342, 0.347), (0.211, 0.321)),
    ]
    with criterion(1, "ucs transform vectors"):
        for (x, y), (u, v) in vectors:
            uv = uv_from_xy(ChromaticityXY(x, y))
            assert abs(uv.u - u) <= 5e-4
            assert abs(uv.v - v) <= 5e-4


def test_criterion_02_daylight_self_consistency(datasets):
    with criterion(2, "daylight self-consistency at 6504 K"):
        spd = daylight_spd(6504.0, CANONICAL_GRID, datasets.daylight)
        xy = chromaticity_xy(tristimulus(spd, datasets.cmf))
        target = daylight_chromaticity(6504.0)
        assert abs(xy.x - target.x) <= 0.002
        assert abs(xy.y - target.y) <= 0.002
        estimate = cct_exponential(xy).kelvin
        assert abs(estimate - 6504.0) <= 35.0


def test_criterion_03_cri_self_reference(datasets):
    with criterion(3, "self-reference scores 100 on both branches"):
        for t in (2700.0, 3500.0, 4500.0, 5000.0, 6504.0, 8000.0):
            spd, _ = reference_for(t, CANONICAL_GRID, datasets.daylight)
            report = general_cri(spd, datasets.cmf, datasets.tcs,
                                 datasets.daylight, cct_override=t)
            assert abs(report.ra - 100.0) <= 1e-6
            for ri in report.special_indices:
                assert abs(ri - 100.0) <= 1e-6


def test_criterion_04_geometry_reproduction():
    with criterion(4, "inclined geometry and aperture"):
        grating = GratingSpec.from_lines_per_mm(600.0)
        sensor = SensorSpec(8.25, 1500)
        design = design_inclined(grating, sensor, 380.0, 720.0)
        assert abs(design.d2_mm - 37.9) <= 0.15
        aperture = collimator_aperture(2.5, sensor, 380.0, 720.0,
                                       theta_mid=design.theta_mid)
        assert abs(aperture - 0.18) <= 0.01


def test_criterion_05_linearity_ordering_and_slopes():
    with criterion(5, "inclined arrangement is more linear"):
        grating = GratingSpec.from_lines_per_mm(600.0)
        sensor = SensorSpec(8.25, 1500)
        parallel = design_parallel(grating, sensor, 380.0, 720.0)
        inclined = design_inclined(grating, sensor, 380.0, 720.0)
        assert (linearity_metric(inclined, 380.0, 720.0)
                < linearity_metric(parallel, 380.0, 720.0))
        h = 0.01
        for design in (parallel, inclined):
            for wl in np.linspace(380.0 + h, 720.0 - h, 20):
                fd = (position(wl + h, design)
                      - position(wl - h, design)) / (2.0 * h)
                analytic = position_slope(wl, design)
                assert abs(analytic - fd) / abs(analytic) <= 1e-6


def test_criterion_06_round_trip_fidelity(datasets):
    sources = {
        "planck_3000": planck_spd(3000.0, CANONICAL_GRID),
        "daylight_6504": daylight_spd(6504.0, CANONICAL_GRID,
                                      datasets.daylight),
        "three_spike": three_spike_spd(datasets, 6500.0),
    }
    with criterion(6, "sensor round trip fidelity"):
        for name, spd in sources.items():
            direct, _ = run_pipeline(spd, datasets)
            frame = simulate_frame(spd, DEFAULT_CALIBRATION)
            recovered, _ = run_pipeline(frame, datasets, DEFAULT_CALIBRATION)
            cct_rel = (abs(recovered.cct_exponential - direct.cct_exponential)
                       / direct.cct_exponential)
            assert cct_rel <= 0.01, name
            assert abs(recovered.ra - direct.ra) <= 0.5, name

            ra_values = []
            for seed in range(20):
                noisy = simulate_frame(spd, DEFAULT_CALIBRATION,
                                       noise_sigma=2.0, seed=seed)
                report, _ = run_pipeline(noisy, datasets, DEFAULT_CALIBRATION)
                ra_values.append(report.ra)
            assert max(ra_values) - min(ra_values) <= 1.5, name


def test_criterion_07_adaptation_fixed_point():
    with criterion(7, "chromatic adaptation fixed point"):
        rng = np.random.default_rng(101)
        checked = 0
        while checked < 1000:
            x = rng.uniform(0.05, 0.65)
            y = rng.uniform(0.05, 0.70)
            if x + y > 0.98:
                continue
            uv = uv_from_xy(ChromaticityXY(x, y))
            cd = adaptation_cd(uv_from_xy(ChromaticityXY(
                rng.uniform(0.2, 0.45), rng.uniform(0.25, 0.45))))
            adapted = adapt_sample(uv, cd, cd)
            assert abs(adapted.u - uv.u) <= 1e-12
            assert abs(adapted.v - uv.v) <= 1e-12
            checked += 1


def test_criterion_08_scale_invariance(datasets):
    with criterion(8, "report is scale invariant"):
        rng = np.random.default_rng(202)
        for _ in range(100):
            values = rng.uniform(0.2, 1.0, CANONICAL_GRID.count)
            # power-of-two scales multiply losslessly, so the whole report
            # must come out bit-identical
            scale = 2.0 ** int(rng.integers(-20, 21))
            base = general_cri(make_spd(values), datasets.cmf, datasets.tcs,
                               datasets.daylight)
            scaled = general_cri(make_spd(values * scale), datasets.cmf,
                                 datasets.tcs, datasets.daylight)
            assert scaled == base
        # arbitrary positive scales cancel to float precision
        for _ in range(10):
            values = rng.uniform(0.2, 1.0, CANONICAL_GRID.count)
            scale = float(rng.uniform(1e-3, 1e3))
            base = general_cri(make_spd(values), datasets.cmf, datasets.tcs,
                               datasets.daylight)
            scaled = general_cri(make_spd(values * scale), datasets.cmf,
                                 datasets.tcs, datasets.daylight)
            assert scaled.ra == pytest.approx(base.ra, rel=1e-9)


def test_criterion_09_estimator_agreement(datasets):
    with criterion(9, "estimators agree near the radiator locus"):
        for t in (3000.0, 4000.0, 5000.0, 6500.0, 9000.0):
            xy = chromaticity_xy(tristimulus(planck_spd(t, CANONICAL_GRID),
                                             datasets.cmf))
            poly = cct_mccamy(xy).kelvin
            expo = cct_exponential(xy).kelvin
            assert abs(poly - expo) / expo <= 0.05
        d65 = daylight_spd(6504.0, CANONICAL_GRID, datasets.daylight)
        xy = chromaticity_xy(tristimulus(d65, datasets.cmf))
        assert abs(cct_mccamy(xy).kelvin - 6505.0) <= 30.0


def test_criterion_10_cli_end_to_end(tmp_path):
    def cli(*args):
        return subprocess.run([sys.executable, "-m", "lumispec", *args],
                              capture_output=True, text=True)

    with criterion(10, "cli analyze and documented exit codes"):
        run = cli("analyze", "--input", str(DEMO_SPD),
                  "--out", str(tmp_path / "run"))
        assert run.returncode == 0
        values = dict(line.split(" = ")
                      for line in run.stdout.strip().splitlines())
        assert float(values["ra"]) >= 99.5

        empty = tmp_path / "empty.csv"
        empty.write_text("")
        assert cli("analyze", "--input", str(empty)).returncode == 1

        zeros = tmp_path / "zeros.csv"
        zeros.write_text("wavelength_nm,power\n400,0\n700,0\n")
        assert cli("analyze", "--input", str(zeros)).returncode == 2

        # a deep-red source pushes the estimator out of its usable range
        wl = CANONICAL_GRID.wavelengths()
        red = make_spd(np.exp(-0.5 * ((wl - 700.0) / 8.0) ** 2))
        red_path = tmp_path / "red.csv"
        from lumispec.spectral import write_spd_csv
        write_spd_csv(red, red_path)
        assert cli("analyze", "--input", str(red_path)).returncode == 3

        assert cli("design", "--lines-per-mm", "2000", "--sensor-mm", "8.25",
                   "--out", str(tmp_path / "d")).returncode == 4

        calib = tmp_path / "calib.txt"
        calib.write_text("lambda_first_nm = 391\nlambda_last_nm = 723\n")
        assert cli("simulate", "--input", str(DEMO_SPD), "--calib", str(calib),
                   "--exposure", "9000",
                   "--out", str(tmp_path / "f.frame")).returncode == 5
