"""Color rendering index computation.

The full procedure: estimate the test source's color temperature, synthesize
the matching reference illuminant, render the eight standard test color
samples under both sources, chromatically adapt the test renders into the
reference state, measure the per-sample color differences in the 1964 space,
and average the resulting special indices into the general index Ra.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import IO, Union

from .cct import CctEstimate, CctMethod, cct_exponential, cct_mccamy
from .ciedata import (ColorMatchingFunctions, Datasets, DaylightComponents,
                      TestColorSamples)
from .colorimetry import (ChromaticityUV, ChromaticityXY, Cie1964Coords,
                          Tristimulus, chromaticity_xy, cie1964_coords,
                          luminance_normalization, tristimulus,
                          tristimulus_reflected, uv_from_xy)
from .errors import CctRangeError, LumispecError
from .reference import ReferenceSpec, reference_for
from .spectral import SpectralPowerDistribution, resample

SAMPLE_COUNT = 8

# Von Kries style adaptation in the 1960 uniform space.
_AD_U_NUM = (10.872, 0.404, -4.0)
_AD_DEN = (16.518, 1.481, -1.0)
_AD_V_NUM = 5.520


@dataclass(frozen=True)
class AdaptationCoefficients:
    """The two adaptation quantities derived from a 1960 chromaticity."""

    c: float
    d: float

    def __post_init__(self):
        if not (math.isfinite(self.c) and math.isfinite(self.d)):
            raise ValueError("adaptation coefficients must be finite")


def adaptation_cd(uv: ChromaticityUV) -> AdaptationCoefficients:
    """c = (4 - u - 10v) / v and d = (1.708v + 0.404 - 1.481u) / v."""
    if uv.v <= 0.0:
        raise ValueError(f"adaptation needs v > 0, got {uv.v}")
    c = (4.0 - uv.u - 10.0 * uv.v) / uv.v
    d = (1.708 * uv.v + 0.404 - 1.481 * uv.u) / uv.v
    return AdaptationCoefficients(c, d)


def adapt_sample(uv_sample: ChromaticityUV,
                 cd_test: AdaptationCoefficients,
                 cd_ref: AdaptationCoefficients) -> ChromaticityUV:
    """Map a sample chromaticity seen under the test source into the
    reference-adapted state.

    The sample's own coefficients are rescaled by the reference/test
    coefficient ratios. When the two states coincide the transform reduces
    to the identity (the denominator simplifies to 5.52 / v).
    """
    sample = adaptation_cd(uv_sample)
    c_term = (cd_ref.c / cd_test.c) * sample.c
    d_term = (cd_ref.d / cd_test.d) * sample.d
    den = _AD_DEN[0] + _AD_DEN[1] * c_term + _AD_DEN[2] * d_term
    if den == 0.0:
        raise LumispecError("adaptation singularity: zero denominator")
    u = (_AD_U_NUM[0] + _AD_U_NUM[1] * c_term + _AD_U_NUM[2] * d_term) / den
    v = _AD_V_NUM / den
    return ChromaticityUV(u, v)


def color_difference(ref_coords: Cie1964Coords,
                     test_coords: Cie1964Coords) -> float:
    """Euclidean distance between two 1964 color coordinates."""
    return math.sqrt((ref_coords.Ustar - test_coords.Ustar) ** 2
                     + (ref_coords.Vstar - test_coords.Vstar) ** 2
                     + (ref_coords.Wstar - test_coords.Wstar) ** 2)


def special_index(delta_e: float) -> float:
    """R_i = 100 - 4.6 * deltaE. Not clamped; strongly distorted samples go negative."""
    return 100.0 - 4.6 * delta_e


@dataclass(frozen=True)
class SampleAudit:
    """Per-sample intermediate values kept for audit and regression pinning."""

    index: int
    y_test: float
    y_ref: float
    uv_test: ChromaticityUV
    uv_adapted: ChromaticityUV
    uv_ref: ChromaticityUV
    coords_test: Cie1964Coords
    coords_ref: Cie1964Coords
    delta_e: float
    ri: float


@dataclass(frozen=True)
class CriReport:
    """Result of a full color rendering analysis.

    ``ra`` is exactly the arithmetic mean of the eight special indices;
    individual indices may be negative and are flagged, not clamped.
    """

    cct_polynomial: float
    cct_exponential: float
    reference: ReferenceSpec
    test_xy: ChromaticityXY
    test_uv: ChromaticityUV
    reference_uv: ChromaticityUV
    special_indices: tuple[float, ...]
    ra: float
    samples: tuple[SampleAudit, ...]

    def __post_init__(self):
        if len(self.special_indices) != SAMPLE_COUNT:
            raise ValueError(f"expected {SAMPLE_COUNT} special indices")
        if self.ra != sum(self.special_indices) / float(SAMPLE_COUNT):
            raise ValueError("ra must equal the mean of the special indices")
        if self.ra > 100.0 + 1e-9:
            raise ValueError(f"ra cannot exceed 100, got {self.ra}")

    @property
    def negative_indices(self) -> tuple[int, ...]:
        """1-based positions of special indices below zero."""
        return tuple(i + 1 for i, r in enumerate(self.special_indices) if r < 0.0)

    def to_text(self) -> str:
        """Flat key-value report: CCT (0 decimals), indices (2), chromaticities (3)."""
        def cct(value: float) -> str:
            return "n/a" if math.isnan(value) else f"{value:.0f}"

        lines = [
            f"cct_polynomial_k = {cct(self.cct_polynomial)}",
            f"cct_exponential_k = {cct(self.cct_exponential)}",
            f"reference_branch = {self.reference.branch.value}",
            f"reference_cct_k = {self.reference.cct:.0f}",
            f"chromaticity_x = {self.test_xy.x:.3f}",
            f"chromaticity_y = {self.test_xy.y:.3f}",
            f"chromaticity_u = {self.test_uv.u:.3f}",
            f"chromaticity_v = {self.test_uv.v:.3f}",
        ]
        lines += [f"r{i} = {r:.2f}"
                  for i, r in enumerate(self.special_indices, start=1)]
        lines.append(f"ra = {self.ra:.2f}")
        negatives = self.negative_indices
        lines.append("negative_indices = "
                     + (",".join(f"r{i}" for i in negatives) if negatives else "none"))
        return "\n".join(lines) + "\n"

    def write_audit_csv(self, target: Union[str, IO[str]]) -> None:
        """Machine-readable audit: one row per sample plus a summary row."""
        columns = [
            "record", "delta_e", "ri", "y_test", "y_ref",
            "u_test", "v_test", "u_adapted", "v_adapted",
            "u_ref_sample", "v_ref_sample",
            "wstar_test", "ustar_test", "vstar_test",
            "wstar_ref", "ustar_ref", "vstar_ref",
            "cct_polynomial_k", "cct_exponential_k",
            "reference_branch", "reference_cct_k", "ra",
            "x_illuminant", "y_illuminant", "u_illuminant", "v_illuminant",
            "u_reference", "v_reference",
        ]
        rows = []
        for s in self.samples:
            rows.append({
                "record": f"sample_{s.index}",
                "delta_e": repr(s.delta_e),
                "ri": repr(s.ri),
                "y_test": repr(s.y_test),
                "y_ref": repr(s.y_ref),
                "u_test": repr(s.uv_test.u),
                "v_test": repr(s.uv_test.v),
                "u_adapted": repr(s.uv_adapted.u),
                "v_adapted": repr(s.uv_adapted.v),
                "u_ref_sample": repr(s.uv_ref.u),
                "v_ref_sample": repr(s.uv_ref.v),
                "wstar_test": repr(s.coords_test.Wstar),
                "ustar_test": repr(s.coords_test.Ustar),
                "vstar_test": repr(s.coords_test.Vstar),
                "wstar_ref": repr(s.coords_ref.Wstar),
                "ustar_ref": repr(s.coords_ref.Ustar),
                "vstar_ref": repr(s.coords_ref.Vstar),
            })
        rows.append({
            "record": "summary",
            "cct_polynomial_k": repr(self.cct_polynomial),
            "cct_exponential_k": repr(self.cct_exponential),
            "reference_branch": self.reference.branch.value,
            "reference_cct_k": repr(self.reference.cct),
            "ra": repr(self.ra),
            "x_illuminant": repr(self.test_xy.x),
            "y_illuminant": repr(self.test_xy.y),
            "u_illuminant": repr(self.test_uv.u),
            "v_illuminant": repr(self.test_uv.v),
            "u_reference": repr(self.reference_uv.u),
            "v_reference": repr(self.reference_uv.v),
        })

        def dump(handle: IO[str]) -> None:
            writer = csv.DictWriter(handle, fieldnames=columns,
                                    restval="", lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)

        if hasattr(target, "write"):
            dump(target)
        else:
            with open(target, "w", encoding="utf-8", newline="") as handle:
                dump(handle)


@dataclass(frozen=True)
class CriEvaluation:
    """CriReport plus every intermediate the trace and tests need."""

    report: CriReport
    test_spd: SpectralPowerDistribution
    reference_spd: SpectralPowerDistribution
    k_test: float
    k_ref: float
    tri_test: Tristimulus
    tri_ref: Tristimulus
    samples_tri_test: tuple[Tristimulus, ...]
    samples_tri_ref: tuple[Tristimulus, ...]
    cd_test: AdaptationCoefficients
    cd_ref: AdaptationCoefficients


def _best_effort(estimator, xy: ChromaticityXY) -> float:
    try:
        return estimator(xy).kelvin
    except CctRangeError:
        return math.nan


def evaluate_cri(spd: SpectralPowerDistribution,
                 cmf: ColorMatchingFunctions,
                 tcs: TestColorSamples,
                 comps: DaylightComponents,
                 *,
                 cct_method: CctMethod = CctMethod.EXPONENTIAL,
                 cct_override: float | None = None) -> CriEvaluation:
    """Run the color rendering analysis and keep all intermediates.

    The reference is regenerated at the CCT estimated by ``cct_method``
    unless ``cct_override`` pins it explicitly. The estimator that is not
    selected is still reported, as NaN when its model range is exceeded.
    """
    if tcs.grid != cmf.grid:
        raise ValueError("test color samples and CMF must share a grid")

    test = resample(spd, cmf.grid)
    k_test = luminance_normalization(test, cmf)
    tri_test = tristimulus(test, cmf)
    xy_test = chromaticity_xy(tri_test)
    uv_test = uv_from_xy(xy_test)

    if cct_override is not None:
        # Reference pinned by the caller: both estimates are informational.
        cct_poly = _best_effort(cct_mccamy, xy_test)
        cct_exp = _best_effort(cct_exponential, xy_test)
        t_reference = float(cct_override)
    elif cct_method is CctMethod.POLYNOMIAL:
        selected: CctEstimate = cct_mccamy(xy_test)
        cct_poly = selected.kelvin
        cct_exp = _best_effort(cct_exponential, xy_test)
        t_reference = selected.kelvin
    else:
        selected = cct_exponential(xy_test)
        cct_exp = selected.kelvin
        cct_poly = _best_effort(cct_mccamy, xy_test)
        t_reference = selected.kelvin
    try:
        ref_spd, ref_spec = reference_for(t_reference, cmf.grid, comps)
    except CctRangeError as exc:
        raise CctRangeError(f"reference synthesis failed: {exc}") from exc

    k_ref = luminance_normalization(ref_spd, cmf)
    tri_ref = tristimulus(ref_spd, cmf)
    uv_ref = uv_from_xy(chromaticity_xy(tri_ref))
    cd_test = adaptation_cd(uv_test)
    cd_ref = adaptation_cd(uv_ref)

    audits = []
    tri_t_all = []
    tri_r_all = []
    for i in range(1, SAMPLE_COUNT + 1):
        rho = tcs.sample(i)
        tri_t = tristimulus_reflected(test, rho, cmf, k_test)
        tri_r = tristimulus_reflected(ref_spd, rho, cmf, k_ref)
        uv_t = uv_from_xy(chromaticity_xy(tri_t))
        uv_r = uv_from_xy(chromaticity_xy(tri_r))
        uv_adapted = adapt_sample(uv_t, cd_test, cd_ref)
        coords_t = cie1964_coords(tri_t.Y, uv_adapted, uv_ref)
        coords_r = cie1964_coords(tri_r.Y, uv_r, uv_ref)
        delta = color_difference(coords_r, coords_t)
        audits.append(SampleAudit(
            index=i, y_test=tri_t.Y, y_ref=tri_r.Y,
            uv_test=uv_t, uv_adapted=uv_adapted, uv_ref=uv_r,
            coords_test=coords_t, coords_ref=coords_r,
            delta_e=delta, ri=special_index(delta)))
        tri_t_all.append(tri_t)
        tri_r_all.append(tri_r)

    indices = tuple(a.ri for a in audits)
    report = CriReport(
        cct_polynomial=cct_poly,
        cct_exponential=cct_exp,
        reference=ref_spec,
        test_xy=xy_test,
        test_uv=uv_test,
        reference_uv=uv_ref,
        special_indices=indices,
        ra=sum(indices) / float(SAMPLE_COUNT),
        samples=tuple(audits))
    return CriEvaluation(
        report=report, test_spd=test, reference_spd=ref_spd,
        k_test=k_test, k_ref=k_ref, tri_test=tri_test, tri_ref=tri_ref,
        samples_tri_test=tuple(tri_t_all), samples_tri_ref=tuple(tri_r_all),
        cd_test=cd_test, cd_ref=cd_ref)


def general_cri(spd: SpectralPowerDistribution,
                cmf: ColorMatchingFunctions,
                tcs: TestColorSamples,
                comps: DaylightComponents,
                *,
                cct_method: CctMethod = CctMethod.EXPONENTIAL,
                cct_override: float | None = None) -> CriReport:
    """Color rendering report for a test SPD. See evaluate_cri for knobs."""
    return evaluate_cri(spd, cmf, tcs, comps,
                        cct_method=cct_method, cct_override=cct_override).report


def general_cri_from_datasets(spd: SpectralPowerDistribution,
                              datasets: Datasets,
                              **kwargs) -> CriReport:
    return general_cri(spd, datasets.cmf, datasets.tcs, datasets.daylight, **kwargs)
