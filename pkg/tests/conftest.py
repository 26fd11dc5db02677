import logging

import numpy as np
import pytest

from lumispec.ciedata import bundled_datasets
from lumispec.reference import daylight_chromaticity
from lumispec.spectral import CANONICAL_GRID, SpectralPowerDistribution

# The exponential CCT estimator logs when incandescent-range sources fall
# below its stated validity; keep test output quiet.
logging.getLogger("lumispec.cct").setLevel(logging.ERROR)


@pytest.fixture(scope="session")
def datasets():
    return bundled_datasets()


@pytest.fixture(scope="session")
def cmf(datasets):
    return datasets.cmf


@pytest.fixture()
def wavelengths():
    return CANONICAL_GRID.wavelengths()


def make_spd(values) -> SpectralPowerDistribution:
    return SpectralPowerDistribution(CANONICAL_GRID, np.asarray(values, dtype=float))


def flat_spd(level: float = 1.0) -> SpectralPowerDistribution:
    return make_spd(np.full(CANONICAL_GRID.count, level))


def three_spike_spd(datasets, target_cct: float = 6500.0,
                    sigma: float = 10.0) -> SpectralPowerDistribution:
    """Narrow-band metamer: three Gaussians at 450/545/610 nm with heights
    solved so the chromaticity lands on the daylight locus at target_cct."""
    wl = CANONICAL_GRID.wavelengths()
    target = daylight_chromaticity(target_cct)
    goal = np.array([target.x, target.y, 1.0 - target.x - target.y])

    def gaussian(center):
        return np.exp(-0.5 * ((wl - center) / sigma) ** 2)

    spikes = [gaussian(c) for c in (450.0, 545.0, 610.0)]
    columns = []
    for spike in spikes:
        columns.append([float(np.dot(spike, curve) * CANONICAL_GRID.step)
                        for curve in (datasets.cmf.xbar, datasets.cmf.ybar,
                                      datasets.cmf.zbar)])
    heights = np.linalg.solve(np.array(columns).T, goal)
    assert np.all(heights > 0.0)
    return make_spd(heights[0] * spikes[0] + heights[1] * spikes[1]
                    + heights[2] * spikes[2])
