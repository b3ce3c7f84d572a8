"""Harmonic curvature families of a Frenet curve.

Two scalar families generalize the 3-dimensional ratio of curvature to
torsion. The tangent family starts at H1 = k1/k2 and recurses

    H_i = (V1[H_{i-1}] + k_i * H_{i-2}) / k_{i+1},    H_0 := 0,

characterizing curves whose unit tangent keeps a constant angle with a
fixed axis. The normal family runs the indices from the other end,

    H*_0 = 0,  H*_1 = k_{n-1}/k_{n-2},
    H*_i = (k_{n-i} * H*_{i-2} - V1[H*_{i-1}]) / k_{n-(i+1)},

characterizing curves whose last frame vector does. V1[g] is the rate of g
along the unit tangent (g' / speed), evaluated on jets so the derivative
identities below use exact derivatives rather than grid differencing.

For n = 3 the tangent family is {H1} and the normal family is {H*_1}; the
index-(n-3) entries appearing in the derivative identities resolve to the
zero conventions above.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCurvature, InsufficientOrder
from .frenet import FrenetData, directional_derivative
from .jets import Jet, jet_constant


@dataclass
class HarmonicData:
    """Both harmonic-curvature families at one parameter value.

    H holds H1..H_{n-2}; Hstar holds H*_0 (identically zero) followed by
    H*_1..H*_{n-2}. sumsq_* are the value-level sums of squares over each
    family (H*_0 excluded).
    """

    s: float
    H: list[Jet]
    Hstar: list[Jet]
    sumsq_H: float
    sumsq_Hstar: float

    def H_values(self) -> np.ndarray:
        return np.array([h.value for h in self.H])

    def Hstar_values(self) -> np.ndarray:
        """Values of H*_1..H*_{n-2} (the zero entry H*_0 is dropped)."""
        return np.array([h.value for h in self.Hstar[1:]])


def _check_curvatures(fr: FrenetData) -> None:
    if fr.dimension < 3:
        raise ValueError("harmonic curvatures need dimension >= 3")
    for i, k in enumerate(fr.curvatures, start=1):
        if not k.value > 0.0:
            raise DegenerateCurvature(f"curvature k{i} = {k.value!r} not positive", fr.s)


def harmonic_tangent(fr: FrenetData) -> list[Jet]:
    """Tangent-family harmonic curvatures H1..H_{n-2} as jets."""
    _check_curvatures(fr)
    n = fr.dimension
    k = fr.curvatures
    H: list[Jet] = [k[0] / k[1]]
    prev2 = jet_constant(0.0, H[0].order)  # H_0 := 0
    for i in range(2, n - 1):
        if H[-1].order < 1:
            raise InsufficientOrder(f"jet order exhausted computing H{i}")
        rate = directional_derivative(H[-1], fr.speed)
        H_i = (rate + k[i - 1] * prev2) / k[i]
        prev2 = H[-1]
        H.append(H_i)
    if H[-1].order < 1:
        raise InsufficientOrder("last tangent-family entry lost its derivative")
    return H


def harmonic_normal(fr: FrenetData) -> list[Jet]:
    """Normal-family harmonic curvatures H*_0..H*_{n-2} as jets."""
    _check_curvatures(fr)
    n = fr.dimension
    k = fr.curvatures
    first = k[n - 2] / k[n - 3]
    Hstar: list[Jet] = [jet_constant(0.0, first.order), first]
    for i in range(2, n - 1):
        if Hstar[-1].order < 1:
            raise InsufficientOrder(f"jet order exhausted computing H*{i}")
        rate = directional_derivative(Hstar[-1], fr.speed)
        H_i = (k[n - i - 1] * Hstar[-2] - rate) / k[n - i - 2]
        Hstar.append(H_i)
    if Hstar[-1].order < 1:
        raise InsufficientOrder("last normal-family entry lost its derivative")
    return Hstar


def harmonic_data(fr: FrenetData) -> HarmonicData:
    """Evaluate both families and their sums of squares at fr's sample."""
    H = harmonic_tangent(fr)
    Hstar = harmonic_normal(fr)
    return HarmonicData(
        s=fr.s,
        H=H,
        Hstar=Hstar,
        sumsq_H=float(sum(h.value**2 for h in H)),
        sumsq_Hstar=float(sum(h.value**2 for h in Hstar[1:])),
    )


def lemma_residuals(h: HarmonicData, fr: FrenetData) -> tuple[float, float]:
    """Residuals of the derivative identities closing each family.

    The tangent family satisfies V1[H_{n-2}] = -k_{n-1} * H_{n-3} exactly
    when the curve is a helix; the normal family satisfies
    V1[H*_{n-2}] = k1 * H*_{n-3} exactly when it is a slant helix. Returns
    the absolute residuals (r_tangent, r_normal) at the value level.
    """
    n = fr.dimension
    k = fr.curvatures
    H_last_rate = directional_derivative(h.H[-1], fr.speed).value
    H_prev = h.H[n - 4].value if n >= 4 else 0.0  # H_{n-3}; zero for n = 3
    r_tangent = abs(H_last_rate + k[n - 2].value * H_prev)

    Hstar_last_rate = directional_derivative(h.Hstar[-1], fr.speed).value
    Hstar_prev = h.Hstar[n - 3].value  # H*_{n-3}; Hstar[0] = 0 covers n = 3
    r_normal = abs(Hstar_last_rate - k[0].value * Hstar_prev)
    return r_tangent, r_normal
