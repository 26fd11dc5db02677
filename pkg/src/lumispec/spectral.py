"""Wavelength grids, spectral power distributions and spectral integration.

Everything downstream (colorimetry, reference illuminants, the sensor
pipeline) runs on the canonical analysis grid, 380-780 nm in 5 nm steps,
which matches the granularity of the bundled reference tables.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from typing import IO, Iterable, Union

import numpy as np

from . import kernels
from .errors import DegenerateSpdError, ParseError

PathOrFile = Union[str, os.PathLike, IO[str]]


@dataclass(frozen=True)
class WavelengthGrid:
    """Uniform, strictly increasing wavelength sampling in nanometres."""

    start: float
    step: float
    count: int

    def __post_init__(self):
        if not (float(self.step) > 0.0):
            raise ValueError(f"grid step must be positive, got {self.step}")
        if int(self.count) < 2:
            raise ValueError(f"grid needs at least two samples, got {self.count}")

    @property
    def stop(self) -> float:
        """Last wavelength of the grid."""
        return self.start + self.step * (self.count - 1)

    def wavelengths(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.count, dtype=np.float64)

    def covers(self, low: float, high: float) -> bool:
        return self.start <= low and self.stop >= high


#: Canonical analysis grid: 380-780 nm, 5 nm step, 81 samples.
CANONICAL_GRID = WavelengthGrid(380.0, 5.0, 81)


@dataclass(frozen=True, eq=False)
class SpectralPowerDistribution:
    """Relative emitted power per wavelength on a uniform grid.

    Values are unitless and nonnegative; the absolute scale carries no
    meaning anywhere in the package.
    """

    grid: WavelengthGrid
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1 or values.shape[0] != self.grid.count:
            raise ValueError(
                f"expected {self.grid.count} values for the grid, got {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("SPD values must be finite")
        if np.any(values < 0.0):
            raise ValueError("SPD values must be nonnegative")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    def wavelengths(self) -> np.ndarray:
        return self.grid.wavelengths()

    def is_zero(self) -> bool:
        return not np.any(self.values > 0.0)


def resample(spd: SpectralPowerDistribution, target: WavelengthGrid) -> SpectralPowerDistribution:
    """Linearly interpolate an SPD onto another grid.

    Wavelengths outside the source support map to zero (no extrapolation);
    source grid points are reproduced exactly.
    """
    if target == spd.grid:
        return spd
    values = kernels.interp_linear_zero(
        spd.wavelengths(), spd.values, target.wavelengths())
    return SpectralPowerDistribution(target, values)


def integrate_product(spd: SpectralPowerDistribution,
                      weight: SpectralPowerDistribution) -> float:
    """Rectangular-rule integral of spd(lambda) * weight(lambda) d(lambda).

    The weight is resampled onto the SPD grid first, so the two inputs may
    live on different grids.
    """
    w = resample(weight, spd.grid)
    return kernels.weighted_sum(spd.values, w.values, spd.grid.step)


def normalize_peak(spd: SpectralPowerDistribution) -> SpectralPowerDistribution:
    """Scale an SPD so its maximum value is exactly 1."""
    peak = float(spd.values.max())
    if peak <= 0.0:
        raise DegenerateSpdError("degenerate SPD: all values are zero")
    if peak == 1.0:
        return spd
    return SpectralPowerDistribution(spd.grid, spd.values / peak)


SPD_CSV_HEADER = ("wavelength_nm", "power")


def read_spd_csv(source: PathOrFile) -> SpectralPowerDistribution:
    """Load an SPD from CSV (`wavelength_nm,power`), resampled to the canonical grid.

    Wavelengths must be strictly increasing; powers must be nonnegative and
    finite. Parse failures report the offending row.
    """
    wavelengths, columns, _ = _read_numeric_csv(source, SPD_CSV_HEADER)
    power = columns[0]
    bad = np.nonzero(power < 0.0)[0]
    if bad.size:
        raise ParseError(f"row {bad[0] + 2}: negative power {power[bad[0]]}")
    raw = kernels.interp_linear_zero(
        wavelengths, power, CANONICAL_GRID.wavelengths())
    return SpectralPowerDistribution(CANONICAL_GRID, raw)


def write_spd_csv(spd: SpectralPowerDistribution, target: PathOrFile) -> None:
    """Write an SPD in the `wavelength_nm,power` CSV format."""
    with _open_for_write(target) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SPD_CSV_HEADER)
        for wl, value in zip(spd.wavelengths(), spd.values):
            writer.writerow([f"{wl:g}", repr(float(value))])


def _open_for_read(source: PathOrFile):
    if hasattr(source, "read"):
        return io.StringIO(source.read()), False
    return open(source, "r", encoding="utf-8", newline=""), True


def _open_for_write(target: PathOrFile):
    if hasattr(target, "write"):
        # Caller owns the handle; wrap so the with-block does not close it.
        class _NoClose:
            def __init__(self, inner):
                self._inner = inner

            def __enter__(self):
                return self._inner

            def __exit__(self, *exc):
                return False

        return _NoClose(target)
    return open(target, "w", encoding="utf-8", newline="")


def _read_numeric_csv(source: PathOrFile,
                      expected_header: Iterable[str] | None,
                      n_value_columns: int | None = None):
    """Shared CSV table reader: wavelength column plus numeric value columns.

    Returns (wavelengths, [column arrays]). Raises ParseError with a row
    number on malformed content; enforces strictly increasing wavelengths.
    """
    handle, owned = _open_for_read(source)
    try:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("empty file: missing header") from None
        header = [cell.strip() for cell in header]
        if expected_header is not None:
            expected = list(expected_header)
            if header != expected:
                raise ParseError(
                    f"bad header {header!r}, expected {expected!r}")
            width = len(expected)
        else:
            if len(header) < 2 or header[0] != "wavelength_nm":
                raise ParseError(
                    f"bad header {header!r}: first column must be wavelength_nm")
            width = len(header)
        if n_value_columns is not None and width - 1 != n_value_columns:
            raise ParseError(
                f"expected {n_value_columns} value columns, got {width - 1}")

        rows = []
        for line_no, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != width:
                raise ParseError(
                    f"row {line_no}: expected {width} fields, got {len(row)}")
            try:
                rows.append([float(cell) for cell in row])
            except ValueError:
                raise ParseError(f"row {line_no}: non-numeric field") from None
        if len(rows) < 2:
            raise ParseError("need at least two data rows")

        table = np.asarray(rows, dtype=np.float64)
        if not np.all(np.isfinite(table)):
            raise ParseError("non-finite value in table")
        wavelengths = table[:, 0]
        if np.any(np.diff(wavelengths) <= 0.0):
            bad = int(np.nonzero(np.diff(wavelengths) <= 0.0)[0][0])
            raise ParseError(
                f"row {bad + 3}: wavelengths must be strictly increasing")
        return wavelengths, [table[:, i] for i in range(1, width)], header
    finally:
        if owned:
            handle.close()
