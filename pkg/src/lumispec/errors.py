"""Exception hierarchy shared across the package.

The CLI maps these onto stable exit codes (see lumispec.cli).
"""


class LumispecError(Exception):
    """Base class for all package errors."""


class ParseError(LumispecError):
    """Malformed input file (SPD CSV, dataset table, frame, calibration)."""


class DegenerateSpdError(LumispecError):
    """SPD carries no usable power (all zero, or zero under the luminance curve)."""


class CctRangeError(LumispecError):
    """Chromaticity outside the validity range of a CCT model, or a
    reference illuminant requested outside its defined temperature range."""


class DiffractionError(LumispecError):
    """Requested geometry has no first-order diffraction maximum."""


class SaturationError(LumispecError):
    """Simulated exposure drives the sensor signal past the ADC floor."""
