"""Single authoritative implementation of the end-to-end analysis.

Frames run through dark calibration and responsivity inversion first
(steps 1-2); SPDs skip straight to color temperature estimation (step 3).
Every stage records its intermediates in a PipelineTrace so regressions are
diffable and reports are auditable. The numbers come from the same
evaluation the library API returns, so run_pipeline and general_cri can
never drift apart.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Union

import numpy as np

from .cct import CctMethod
from .ciedata import Datasets
from .cri import CriReport, evaluate_cri
from .errors import ParseError
from .sensor import (DEFAULT_RESPONSIVITY, RawSensorFrame, ResponsivityModel,
                     WavelengthCalibration, dark_calibrate, frame_to_spd)
from .spectral import SpectralPowerDistribution

PipelineSource = Union[SpectralPowerDistribution, RawSensorFrame]


@dataclass(frozen=True)
class TraceStep:
    index: int
    name: str
    values: dict


@dataclass(frozen=True)
class PipelineTrace:
    """Ordered per-step record of the analysis intermediates."""

    steps: tuple[TraceStep, ...] = field(default_factory=tuple)

    def __post_init__(self):
        indices = [step.index for step in self.steps]
        if indices != sorted(indices):
            raise ValueError("trace steps must be ordered by index")

    def step(self, index: int) -> TraceStep:
        for s in self.steps:
            if s.index == index:
                return s
        raise KeyError(f"no step {index} in trace")

    def to_json(self) -> str:
        payload = [{"index": s.index, "name": s.name, "values": s.values}
                   for s in self.steps]
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "PipelineTrace":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad trace JSON: {exc}") from None
        return cls(tuple(TraceStep(item["index"], item["name"], item["values"])
                         for item in payload))

    def write(self, target: Union[str, IO[str]]) -> None:
        if hasattr(target, "write"):
            target.write(self.to_json())
        else:
            with open(target, "w", encoding="utf-8") as handle:
                handle.write(self.to_json())


def _floats(values) -> list:
    return [float(v) for v in np.asarray(values, dtype=np.float64)]


def run_pipeline(source: PipelineSource,
                 datasets: Datasets,
                 calibration: WavelengthCalibration | None = None,
                 responsivity_model: ResponsivityModel = DEFAULT_RESPONSIVITY,
                 *,
                 cct_method: CctMethod = CctMethod.EXPONENTIAL,
                 cct_override: float | None = None
                 ) -> tuple[CriReport, PipelineTrace]:
    """Analyze an SPD or a raw frame; returns the report plus the full trace."""
    steps: list[TraceStep] = []

    if isinstance(source, RawSensorFrame):
        if calibration is None:
            raise ValueError("frame input requires a wavelength calibration")
        baseline = float(np.mean(source.dark))
        intensity = dark_calibrate(source)
        steps.append(TraceStep(1, "dark_calibration", {
            "dark_baseline": baseline,
            "max_intensity": float(intensity.max()),
        }))
        spd = frame_to_spd(source, calibration, responsivity_model)
        steps.append(TraceStep(2, "responsivity_compensation", {
            "responsivity_band_nm": list(responsivity_model.valid_band_nm),
            "spd_canonical": _floats(spd.values),
        }))
    else:
        spd = source

    evaluation = evaluate_cri(
        spd, datasets.cmf, datasets.tcs, datasets.daylight,
        cct_method=cct_method, cct_override=cct_override)
    report = evaluation.report

    steps.append(TraceStep(3, "cct_estimation", {
        "cct_polynomial_k": report.cct_polynomial,
        "cct_exponential_k": report.cct_exponential,
        "method": cct_method.value,
        "cct_for_reference_k": report.reference.cct,
        "override": cct_override is not None,
    }))
    steps.append(TraceStep(4, "reference_spd", {
        "branch": report.reference.branch.value,
        "cct_k": report.reference.cct,
        "values": _floats(evaluation.reference_spd.values),
    }))
    steps.append(TraceStep(5, "tristimulus", {
        "test": [evaluation.tri_test.X, evaluation.tri_test.Y, evaluation.tri_test.Z],
        "reference": [evaluation.tri_ref.X, evaluation.tri_ref.Y, evaluation.tri_ref.Z],
        "samples_test": [[t.X, t.Y, t.Z] for t in evaluation.samples_tri_test],
        "samples_reference": [[t.X, t.Y, t.Z] for t in evaluation.samples_tri_ref],
    }))
    steps.append(TraceStep(6, "chromaticity", {
        "test_xy": [report.test_xy.x, report.test_xy.y],
        "test_uv": [report.test_uv.u, report.test_uv.v],
        "reference_uv": [report.reference_uv.u, report.reference_uv.v],
        "samples_test_uv": [[s.uv_test.u, s.uv_test.v] for s in report.samples],
        "samples_reference_uv": [[s.uv_ref.u, s.uv_ref.v] for s in report.samples],
    }))
    steps.append(TraceStep(7, "chromatic_adaptation", {
        "c_test": evaluation.cd_test.c, "d_test": evaluation.cd_test.d,
        "c_reference": evaluation.cd_ref.c, "d_reference": evaluation.cd_ref.d,
        "samples_adapted_uv": [[s.uv_adapted.u, s.uv_adapted.v]
                               for s in report.samples],
    }))
    steps.append(TraceStep(8, "cie1964_transform", {
        "samples_test": [[s.coords_test.Wstar, s.coords_test.Ustar, s.coords_test.Vstar]
                         for s in report.samples],
        "samples_reference": [[s.coords_ref.Wstar, s.coords_ref.Ustar, s.coords_ref.Vstar]
                              for s in report.samples],
    }))
    steps.append(TraceStep(9, "color_difference", {
        "delta_e": [s.delta_e for s in report.samples],
        "special_indices": list(report.special_indices),
    }))
    steps.append(TraceStep(10, "general_index", {"ra": report.ra}))

    return report, PipelineTrace(tuple(steps))
