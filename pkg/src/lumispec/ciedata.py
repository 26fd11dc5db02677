"""Bundled CIE reference tables and their loaders.

Three datasets ship with the package as CSV assets (see ``data/manifest.json``
for provenance): the 1931 2-degree observer color matching functions, the
daylight-model components S0/S1/S2, and the eight standard test color sample
reflectances. Loaders also accept user-supplied files with the same schema,
and resample everything onto the canonical grid so downstream code never
handles mixed grids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import kernels
from .errors import ParseError
from .spectral import CANONICAL_GRID, PathOrFile, WavelengthGrid, _read_numeric_csv

_COVERAGE = (380.0, 780.0)
_YBAR_PEAK_NM = 555.0
_YBAR_PEAK_TOLERANCE_NM = 10.0
TCS_COUNT = 8


def _readonly(values: np.ndarray) -> np.ndarray:
    out = np.array(values, dtype=np.float64)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class ColorMatchingFunctions:
    """2-degree standard observer sensitivity curves on a common grid."""

    grid: WavelengthGrid
    xbar: np.ndarray
    ybar: np.ndarray
    zbar: np.ndarray

    def __post_init__(self):
        for name in ("xbar", "ybar", "zbar"):
            curve = _readonly(getattr(self, name))
            if curve.shape != (self.grid.count,):
                raise ValueError(f"{name} length does not match the grid")
            if not np.all(np.isfinite(curve)):
                raise ValueError(f"{name} contains non-finite values")
            if np.any(curve < 0.0):
                raise ValueError(f"{name} contains negative values")
            object.__setattr__(self, name, curve)
        if not self.grid.covers(*_COVERAGE):
            raise ValueError("insufficient coverage: grid must span 380-780 nm")
        peaks = np.nonzero(self.ybar == self.ybar.max())[0]
        if peaks.size != 1:
            raise ValueError("ybar must have a single global maximum")
        peak_nm = self.grid.wavelengths()[peaks[0]]
        if abs(peak_nm - _YBAR_PEAK_NM) > _YBAR_PEAK_TOLERANCE_NM:
            raise ValueError(
                f"ybar peaks at {peak_nm:g} nm, expected near {_YBAR_PEAK_NM:g} nm")


@dataclass(frozen=True, eq=False)
class DaylightComponents:
    """Daylight-model component curves; s1 and s2 may go negative."""

    grid: WavelengthGrid
    s0: np.ndarray
    s1: np.ndarray
    s2: np.ndarray

    def __post_init__(self):
        for name in ("s0", "s1", "s2"):
            curve = _readonly(getattr(self, name))
            if curve.shape != (self.grid.count,):
                raise ValueError(f"{name} length does not match the grid")
            if not np.all(np.isfinite(curve)):
                raise ValueError(f"{name} contains non-finite values")
            object.__setattr__(self, name, curve)


@dataclass(frozen=True, eq=False)
class TestColorSamples:
    """Spectral reflectances of the eight standard test color samples."""

    grid: WavelengthGrid
    reflectances: np.ndarray  # shape (8, grid.count), values in [0, 1]

    def __post_init__(self):
        table = _readonly(self.reflectances)
        if table.shape != (TCS_COUNT, self.grid.count):
            raise ValueError(
                f"expected {TCS_COUNT} samples x {self.grid.count} values, "
                f"got {table.shape}")
        if not np.all(np.isfinite(table)):
            raise ValueError("reflectances contain non-finite values")
        if np.any(table < 0.0) or np.any(table > 1.0):
            raise ValueError("reflectances must lie in [0, 1]")
        object.__setattr__(self, "reflectances", table)

    def sample(self, index: int) -> np.ndarray:
        """Reflectance curve of sample ``index`` (1-based, like R1..R8)."""
        return self.reflectances[index - 1]


def _require_coverage(wavelengths: np.ndarray) -> None:
    if wavelengths[0] > _COVERAGE[0] or wavelengths[-1] < _COVERAGE[1]:
        raise ParseError(
            f"insufficient coverage: table spans {wavelengths[0]:g}-"
            f"{wavelengths[-1]:g} nm, need {_COVERAGE[0]:g}-{_COVERAGE[1]:g} nm")


def _to_canonical(wavelengths: np.ndarray, column: np.ndarray) -> np.ndarray:
    return kernels.interp_linear_zero(
        wavelengths, column, CANONICAL_GRID.wavelengths())


def load_cmf(source: PathOrFile) -> ColorMatchingFunctions:
    """Load color matching functions from `wavelength_nm,xbar,ybar,zbar` CSV."""
    wavelengths, columns, _ = _read_numeric_csv(
        source, ("wavelength_nm", "xbar", "ybar", "zbar"))
    for name, column in zip(("xbar", "ybar", "zbar"), columns):
        bad = np.nonzero(column < 0.0)[0]
        if bad.size:
            raise ParseError(f"row {bad[0] + 2}: negative {name} value")
    _require_coverage(wavelengths)
    xbar, ybar, zbar = (_to_canonical(wavelengths, c) for c in columns)
    return ColorMatchingFunctions(CANONICAL_GRID, xbar, ybar, zbar)


def load_daylight_components(source: PathOrFile) -> DaylightComponents:
    """Load daylight components from `wavelength_nm,s0,s1,s2` CSV."""
    wavelengths, columns, _ = _read_numeric_csv(
        source, ("wavelength_nm", "s0", "s1", "s2"))
    _require_coverage(wavelengths)
    s0, s1, s2 = (_to_canonical(wavelengths, c) for c in columns)
    return DaylightComponents(CANONICAL_GRID, s0, s1, s2)


def load_tcs(source: PathOrFile) -> TestColorSamples:
    """Load the eight test color sample reflectances.

    The CSV needs a wavelength column plus exactly eight reflectance columns,
    every value in [0, 1].
    """
    try:
        wavelengths, columns, _ = _read_numeric_csv(
            source, None, n_value_columns=TCS_COUNT)
    except ParseError as exc:
        if "value columns" in str(exc):
            raise ParseError(f"expected {TCS_COUNT} samples: {exc}") from None
        raise
    for i, column in enumerate(columns, start=1):
        bad = np.nonzero((column < 0.0) | (column > 1.0))[0]
        if bad.size:
            raise ParseError(
                f"row {bad[0] + 2}: sample {i} reflectance "
                f"{column[bad[0]]} outside [0, 1]")
    _require_coverage(wavelengths)
    table = np.stack([_to_canonical(wavelengths, c) for c in columns])
    return TestColorSamples(CANONICAL_GRID, table)


@dataclass(frozen=True)
class Datasets:
    """The three reference tables every analysis needs, loaded together."""

    cmf: ColorMatchingFunctions
    daylight: DaylightComponents
    tcs: TestColorSamples


def load_manifest() -> dict:
    """Parsed ``data/manifest.json``: dataset name -> file and provenance."""
    with resources.files("lumispec.data").joinpath("manifest.json").open(
            "r", encoding="utf-8") as handle:
        return json.load(handle)


def _bundled(name: str):
    manifest = load_manifest()
    return resources.files("lumispec.data").joinpath(manifest[name]["file"])


def bundled_cmf() -> ColorMatchingFunctions:
    with _bundled("cmf_2deg").open("r", encoding="utf-8") as handle:
        return load_cmf(handle)


def bundled_daylight_components() -> DaylightComponents:
    with _bundled("daylight_components").open("r", encoding="utf-8") as handle:
        return load_daylight_components(handle)


def bundled_tcs() -> TestColorSamples:
    with _bundled("tcs").open("r", encoding="utf-8") as handle:
        return load_tcs(handle)


def bundled_datasets() -> Datasets:
    return Datasets(cmf=bundled_cmf(),
                    daylight=bundled_daylight_components(),
                    tcs=bundled_tcs())
