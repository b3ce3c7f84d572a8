"""Sampling a curve/field pair and classifying the helix structure.

A curve is classified against a scalar field f by sampling the parameter
interval: eikonal when the gradient norm is constant along the curve, a
helix when additionally <grad f, V1> is a nonzero constant, and a slant
helix when <grad f, Vn> is. A vanishing Hessian along the curve marks the
gradient as parallel (a constant vector), which is the hypothesis under
which the axis and constancy identities of the verification module apply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dsl import CurveSpec
from .errors import EmptyInput, EvalError, FrameError
from .frenet import FrenetData, frenet_apparatus
from .harmonic import HarmonicData, harmonic_data
from .jets import default_jet_order, eval_curve_jet, eval_field_jet


@dataclass
class SampleRow:
    """Field data at one curve sample."""

    s: float
    grad: np.ndarray
    grad_norm: float
    ip_tangent: float  # <grad f, V1>
    ip_last: float  # <grad f, Vn>
    hessian_norm: float  # Frobenius norm of the field Hessian


@dataclass
class Sample:
    """Everything computed at one grid point."""

    row: SampleRow
    frenet: FrenetData
    harmonic: HarmonicData


@dataclass
class Classification:
    eikonal: bool
    helix: bool
    slant: bool
    parallel_gradient: bool
    spreads: dict[str, float]
    theta: float | None  # angle between grad f and V1, from mean values
    grad_norm: float  # mean over the grid
    ip_tangent: float
    ip_last: float
    tol_const: float


def constancy(values, tol: float) -> tuple[bool, float]:
    """Spread-based constancy test with a relative-absolute hybrid threshold.

    Returns (is_const, max - min); constant means the spread is at most
    tol * (1 + |mean|), so the test is scale-free for large values.
    """
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise EmptyInput("constancy of an empty list")
    spread = float(arr.max() - arr.min())
    mean = float(arr.mean())
    return spread <= tol * (1.0 + abs(mean)), spread


def sample_along_curve(spec: CurveSpec) -> list[Sample]:
    """Evaluate jets, frame, harmonic curvatures, and field at each grid point.

    The grid is ``spec.samples`` equally spaced parameter values including
    both endpoints. Frame degeneracies propagate with the offending s
    attached.
    """
    order = default_jet_order(spec.dimension)
    grid = np.linspace(spec.s_range[0], spec.s_range[1], spec.samples)
    samples: list[Sample] = []
    for s in grid:
        s = float(s)
        try:
            jets = eval_curve_jet(spec, s, order)
            fr = frenet_apparatus(jets, spec.tol_frame, s=s)
            h = harmonic_data(fr)
            point = np.array([j.value for j in jets])
            fj = eval_field_jet(spec, point)
        except FrameError:
            raise  # already carries the offending s
        except EvalError as exc:
            raise type(exc)(f"{exc} (while sampling at s = {s!r})") from exc
        frame = fr.frame_values()
        samples.append(
            Sample(
                row=SampleRow(
                    s=s,
                    grad=fj.gradient,
                    grad_norm=float(np.linalg.norm(fj.gradient)),
                    ip_tangent=float(fj.gradient @ frame[0]),
                    ip_last=float(fj.gradient @ frame[-1]),
                    hessian_norm=float(np.linalg.norm(fj.hessian)),
                ),
                frenet=fr,
                harmonic=h,
            )
        )
    return samples


def classify_rows(samples: list[Sample], tol_const: float) -> Classification:
    """Classification from precomputed samples."""
    grad_norms = [s.row.grad_norm for s in samples]
    ip_tangents = [s.row.ip_tangent for s in samples]
    ip_lasts = [s.row.ip_last for s in samples]

    eikonal, spread_norm = constancy(grad_norms, tol_const)
    tangent_const, spread_tangent = constancy(ip_tangents, tol_const)
    last_const, spread_last = constancy(ip_lasts, tol_const)

    mean_norm = float(np.mean(grad_norms))
    mean_tangent = float(np.mean(ip_tangents))
    mean_last = float(np.mean(ip_lasts))

    helix = eikonal and tangent_const and abs(mean_tangent) > tol_const
    slant = eikonal and last_const and abs(mean_last) > tol_const
    parallel = max(s.row.hessian_norm for s in samples) <= tol_const

    if mean_norm > 0.0:
        theta: float | None = math.acos(max(-1.0, min(1.0, mean_tangent / mean_norm)))
    else:
        theta = None

    return Classification(
        eikonal=eikonal,
        helix=helix,
        slant=slant,
        parallel_gradient=parallel,
        spreads={
            "grad_norm": spread_norm,
            "ip_tangent": spread_tangent,
            "ip_last": spread_last,
        },
        theta=theta,
        grad_norm=mean_norm,
        ip_tangent=mean_tangent,
        ip_last=mean_last,
        tol_const=tol_const,
    )


def classify(spec: CurveSpec) -> Classification:
    """Sample the spec's curve and classify it against its field."""
    return classify_rows(sample_along_curve(spec), spec.tol_const)
