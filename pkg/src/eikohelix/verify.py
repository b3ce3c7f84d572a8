"""Numerical verification of the helix and slant-helix characterizations.

For a parallel (constant) gradient, a helix satisfies a ladder of pointwise
identities: each <V_{i+2}, grad f> equals H_i <V1, grad f>, the gradient
reconstructs from the frame as |grad f| cos(theta) (V1 + H1 V3 + ... +
H_{n-2} Vn), the sum of squared harmonic curvatures is a nonzero constant
with cos^2(theta) (1 + sum H_i^2) = 1, and the last harmonic curvature
obeys the closing derivative identity. The slant family mirrors all of
this with the reversed-index ladder whose axis expansion is
(H*_{n-2} V1 + ... + H*_1 V_{n-2} + Vn) <grad f, Vn>.

Residuals are maxima over the sample grid: the identities are pointwise,
and a mean could hide a localized failure. When the hypotheses (helix or
slant flag, parallel gradient) fail, residuals are still computed where
possible so a near-helix can be measured, but they carry hypotheses_met =
False and the report layer suppresses pass/fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classify import Classification, Sample
from .harmonic import lemma_residuals

# Below this angle the gradient is numerically aligned with the tangent and
# the tangent-family constancy statement degenerates (all H_i would need to
# vanish); verification flags the case instead of guessing.
THETA_DEGENERATE = 1e-6


@dataclass
class HelixResiduals:
    """Grid maxima of the tangent-family identities."""

    hypotheses_met: bool
    reason: str  # empty when hypotheses_met
    sys_helix: float  # ladder system <V_{i+2}, grad f> = H_i <V1, grad f>
    axis_helix: float  # gradient reconstruction from the frame
    sumsq_helix_spread: float
    tan_identity: float  # cos^2(theta) (1 + sum H_i^2) = 1
    hn2_min: float  # min |H_{n-2}|; the characterization needs it nonzero
    cor31: float  # max residual of the closing derivative identity
    theta_degenerate: bool


@dataclass
class SlantResiduals:
    """Grid maxima of the normal-family identities."""

    hypotheses_met: bool
    reason: str
    sys_slant: float
    axis_slant: float
    sumsq_slant_spread: float
    hn2star_min: float
    cor41: float


def _hypothesis_reason(flag: bool, name: str, classification: Classification) -> str:
    reasons = []
    if not flag:
        reasons.append(name)
    if not classification.parallel_gradient:
        reasons.append("gradient not parallel (Hessian nonzero along curve)")
    return "; ".join(reasons)


def verify_helix_theorems(
    samples: list[Sample], classification: Classification
) -> HelixResiduals:
    """Residuals of the tangent-family identities over the grid."""
    theta = classification.theta
    cos_theta = math.cos(theta) if theta is not None else 1.0
    theta_degenerate = theta is not None and abs(theta) < THETA_DEGENERATE

    sys_max = 0.0
    axis_max = 0.0
    tan_max = 0.0
    hn2_min = math.inf
    cor_max = 0.0
    sumsq = []
    for sample in samples:
        frame = sample.frenet.frame_values()
        grad = sample.row.grad
        ip1 = sample.row.ip_tangent
        H = sample.harmonic.H_values()
        n = sample.frenet.dimension

        for i in range(1, n - 1):  # ladder entries i = 1 .. n-2
            sys_max = max(sys_max, abs(grad @ frame[i + 1] - H[i - 1] * ip1))

        axis = frame[0].copy()
        for i in range(1, n - 1):
            axis += H[i - 1] * frame[i + 1]
        axis *= sample.row.grad_norm * cos_theta
        axis_max = max(axis_max, float(np.linalg.norm(grad - axis)))

        sumsq.append(sample.harmonic.sumsq_H)
        tan_max = max(tan_max, abs(cos_theta**2 * (1.0 + sample.harmonic.sumsq_H) - 1.0))
        hn2_min = min(hn2_min, abs(H[-1]))
        r_tangent, _ = lemma_residuals(sample.harmonic, sample.frenet)
        cor_max = max(cor_max, r_tangent)

    met = classification.helix and classification.parallel_gradient and not theta_degenerate
    reason = _hypothesis_reason(classification.helix, "not a helix (tangent angle varies or is zero)", classification)
    if theta_degenerate:
        reason = (reason + "; " if reason else "") + "axis aligned with tangent (theta ~ 0)"
    return HelixResiduals(
        hypotheses_met=met,
        reason="" if met else reason,
        sys_helix=sys_max,
        axis_helix=axis_max,
        sumsq_helix_spread=float(max(sumsq) - min(sumsq)),
        tan_identity=tan_max,
        hn2_min=hn2_min,
        cor31=cor_max,
        theta_degenerate=theta_degenerate,
    )


def verify_slant_theorems(
    samples: list[Sample], classification: Classification
) -> SlantResiduals:
    """Residuals of the normal-family identities over the grid."""
    sys_max = 0.0
    axis_max = 0.0
    hn2star_min = math.inf
    cor_max = 0.0
    sumsq = []
    for sample in samples:
        frame = sample.frenet.frame_values()
        grad = sample.row.grad
        ipn = sample.row.ip_last
        Hstar = sample.harmonic.Hstar_values()  # H*_1 .. H*_{n-2}
        n = sample.frenet.dimension

        for i in range(1, n - 1):  # <V_{n-(i+1)}, grad f> = H*_i <Vn, grad f>
            sys_max = max(sys_max, abs(grad @ frame[n - i - 2] - Hstar[i - 1] * ipn))

        axis = frame[-1].copy()
        for i in range(1, n - 1):  # coefficient of V_j is H*_{n-1-j}
            axis += Hstar[n - 2 - i] * frame[i - 1]
        axis *= ipn
        axis_max = max(axis_max, float(np.linalg.norm(grad - axis)))

        sumsq.append(sample.harmonic.sumsq_Hstar)
        hn2star_min = min(hn2star_min, abs(Hstar[-1]))
        _, r_normal = lemma_residuals(sample.harmonic, sample.frenet)
        cor_max = max(cor_max, r_normal)

    met = classification.slant and classification.parallel_gradient
    reason = _hypothesis_reason(
        classification.slant, "not a slant helix (last-vector angle varies or is zero)", classification
    )
    return SlantResiduals(
        hypotheses_met=met,
        reason="" if met else reason,
        sys_slant=sys_max,
        axis_slant=axis_max,
        sumsq_slant_spread=float(max(sumsq) - min(sumsq)),
        hn2star_min=hn2star_min,
        cor41=cor_max,
    )


def orthogonality_checks(samples: list[Sample]) -> tuple[float, float]:
    """Grid maxima of |<grad f, V2>| and |<grad f, V_{n-1}>|.

    A parallel-gradient helix keeps the gradient orthogonal to V2; a
    parallel-gradient slant helix keeps it orthogonal to V_{n-1}. Both
    maxima are reported unconditionally as diagnostics.
    """
    max_v2 = 0.0
    max_vn1 = 0.0
    for sample in samples:
        frame = sample.frenet.frame_values()
        grad = sample.row.grad
        max_v2 = max(max_v2, abs(float(grad @ frame[1])))
        max_vn1 = max(max_vn1, abs(float(grad @ frame[-2])))
    return max_v2, max_vn1


@dataclass
class TheoremResiduals:
    """Combined residual record used by the report layer."""

    helix: HelixResiduals
    slant: SlantResiduals
    orth_v2: float
    orth_vn1: float


def verify_all(samples: list[Sample], classification: Classification) -> TheoremResiduals:
    helix = verify_helix_theorems(samples, classification)
    slant = verify_slant_theorems(samples, classification)
    orth_v2, orth_vn1 = orthogonality_checks(samples)
    return TheoremResiduals(helix=helix, slant=slant, orth_v2=orth_v2, orth_vn1=orth_vn1)
