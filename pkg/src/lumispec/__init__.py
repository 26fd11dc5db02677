"""lumispec: lighting-quality metrology.

Computes correlated color temperature and the color rendering index from
spectral power distributions, designs lens-free diffraction-grating
spectrometer geometries, and simulates/inverts a linear-CCD capture pipeline
for hardware-free end-to-end testing.
"""

from .cct import CctEstimate, CctMethod, cct_exponential, cct_mccamy
from .ciedata import (ColorMatchingFunctions, Datasets, DaylightComponents,
                      TestColorSamples, bundled_datasets, load_cmf,
                      load_daylight_components, load_tcs)
from .colorimetry import (ChromaticityUV, ChromaticityXY, Cie1964Coords,
                          Tristimulus, chromaticity_xy, cie1964_coords,
                          tristimulus, tristimulus_reflected, uv_from_xy)
from .cri import (AdaptationCoefficients, CriReport, SampleAudit,
                  adapt_sample, adaptation_cd, color_difference, general_cri,
                  general_cri_from_datasets, special_index)
from .errors import (CctRangeError, DegenerateSpdError, DiffractionError,
                     LumispecError, ParseError, SaturationError)
from .kernels import active_backend
from .optics import (Arrangement, GratingSpec, OpticalDesign, SensorSpec,
                     collimator_aperture, design_inclined, design_parallel,
                     diffraction_angle, linearity_metric, position_inclined,
                     position_parallel, position_slope)
from .pipeline import PipelineTrace, TraceStep, run_pipeline
from .reference import (ReferenceBranch, ReferenceSpec, daylight_chromaticity,
                        daylight_spd, planck_spd, reference_for)
from .sensor import (DEFAULT_CALIBRATION, DEFAULT_RESPONSIVITY,
                     RawSensorFrame, ResponsivityModel, WavelengthCalibration,
                     dark_calibrate, frame_to_spd, pixel_to_wavelength,
                     read_calibration, read_frame, responsivity,
                     simulate_frame, write_calibration, write_frame)
from .spectral import (CANONICAL_GRID, SpectralPowerDistribution,
                       WavelengthGrid, integrate_product, normalize_peak,
                       read_spd_csv, resample, write_spd_csv)

__version__ = "0.1.0"
