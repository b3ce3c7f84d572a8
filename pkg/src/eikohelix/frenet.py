"""Frenet frame and curvatures of an n-dimensional curve, carried as jets.

The frame V1..Vn comes from modified Gram-Schmidt (with one
reorthogonalization pass) applied to the derivative vectors
alpha', alpha'', ..., alpha^(n), all in jet arithmetic. Curvatures are
k_i = <V_i', V_{i+1}> / speed, which makes every k_i strictly positive for
a nondegenerate curve and keeps curvature derivatives exact.

Curves need not be unit speed: every parameter derivative that feeds a
frame-relative rate is divided by the speed jet.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCurve, DegenerateCurvature, NotRegular
from .jets import Jet, jet_sqrt


@dataclass
class FrenetData:
    """Frame, curvatures, and speed of a curve at one parameter value.

    frame[i][c] is the jet of component c of V_{i+1}; curvatures[i] is the
    jet of k_{i+1}.
    """

    s: float
    speed: Jet
    frame: list[list[Jet]]
    curvatures: list[Jet]

    @property
    def dimension(self) -> int:
        return len(self.frame)

    def frame_values(self) -> np.ndarray:
        """(n, n) array; row i is the value of V_{i+1}."""
        return np.array([[c.value for c in row] for row in self.frame])

    def frame_d1(self) -> np.ndarray:
        """(n, n) array of first parameter derivatives of the frame rows."""
        return np.array([[c.d1 for c in row] for row in self.frame])

    def curvature_values(self) -> np.ndarray:
        return np.array([k.value for k in self.curvatures])


def _dot(u: list[Jet], v: list[Jet]) -> Jet:
    acc = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc + a * b
    return acc


def directional_derivative(g: Jet, speed: Jet) -> Jet:
    """Rate of change of g along the unit tangent: g'(s) / speed(s).

    Returns a jet one order lower than g.
    """
    return g.derivative() / speed


def frenet_apparatus(
    curve_jets: list[Jet], tol_frame: float, s: float | None = None
) -> FrenetData:
    """Build the Frenet frame and curvatures from component jets.

    ``curve_jets`` holds the n component jets of the curve at one parameter
    value, with order at least n+1. Raises NotRegular when the speed falls
    below ``tol_frame`` and DegenerateCurve(i) when the i-th derivative is
    linearly dependent on its predecessors.
    """
    n = len(curve_jets)
    if n < 2:
        raise ValueError("curve must have dimension >= 2")
    order = min(j.order for j in curve_jets)
    if order < n + 1:
        raise ValueError(f"need jet order >= {n + 1} for dimension {n}, got {order}")

    # derivative vectors alpha', ..., alpha^(n)
    derivatives: list[list[Jet]] = []
    current = list(curve_jets)
    for _ in range(n):
        current = [c.derivative() for c in current]
        derivatives.append(current)

    speed_sq = _dot(derivatives[0], derivatives[0])
    if speed_sq.value <= tol_frame * tol_frame:
        raise NotRegular(f"curve speed {np.sqrt(max(speed_sq.value, 0.0))!r} below threshold", s)
    speed = jet_sqrt(speed_sq)

    frame: list[list[Jet]] = []
    scale = 1.0  # running magnitude of the derivative vectors
    for i, deriv in enumerate(derivatives, start=1):
        vec = list(deriv)
        for basis in frame:
            proj = _dot(vec, basis)
            vec = [c - proj * b for c, b in zip(vec, basis)]
        for basis in frame:  # one reorthogonalization pass
            proj = _dot(vec, basis)
            vec = [c - proj * b for c, b in zip(vec, basis)]
        norm_sq = _dot(vec, vec)
        scale = max(scale, float(np.sqrt(sum(c.value**2 for c in deriv))))
        if norm_sq.value <= (tol_frame * scale) ** 2:
            raise DegenerateCurve(i, s)
        norm = jet_sqrt(norm_sq)
        frame.append([c / norm for c in vec])

    curvatures: list[Jet] = []
    for i in range(n - 1):
        v_rate = [c.derivative() for c in frame[i]]
        k = _dot(v_rate, frame[i + 1]) / speed
        if k.value <= tol_frame:
            raise DegenerateCurvature(f"curvature k{i + 1} = {k.value!r} below threshold", s)
        curvatures.append(k)

    return FrenetData(s=s if s is not None else 0.0, speed=speed, frame=frame, curvatures=curvatures)
