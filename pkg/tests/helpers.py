"""Shared oracles and fuzz-case generators for the test suite.

Everything here is deliberately independent of the jet pipeline it checks:
derivatives come from Richardson-extrapolated central differences or dense
polynomial fits, frames from plain numpy Gram-Schmidt on those derivatives,
and the synthetic n=4 systems from direct ODE integration of the frame
equations with prescribed curvature functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from eikohelix.classify import Sample, SampleRow
from eikohelix.dsl import Binary, Constant, Coord, CurveSpec, Expr, Param, Unary
from eikohelix.frenet import FrenetData
from eikohelix.harmonic import harmonic_data
from eikohelix.jets import Jet, jet_constant, jet_cos, jet_param, jet_sin


# ------------------------------------------------- plain float evaluation


def eval_float(expr: Expr, s: float | None = None, point=None) -> float:
    """Evaluate an expression with plain math-library floats.

    Independent of the package's jet/dual evaluators; used as the value
    oracle under the finite-difference derivative checks.
    """
    if isinstance(expr, Constant):
        return expr.value
    if isinstance(expr, Param):
        return float(s)
    if isinstance(expr, Coord):
        return float(point[expr.index - 1])
    if isinstance(expr, Unary):
        v = eval_float(expr.child, s, point)
        if expr.op == "neg":
            return -v
        return getattr(math, "log" if expr.op == "ln" else expr.op)(v)
    if isinstance(expr, Binary):
        a = eval_float(expr.left, s, point)
        b = eval_float(expr.right, s, point)
        if expr.op == "+":
            return a + b
        if expr.op == "-":
            return a - b
        if expr.op == "*":
            return a * b
        if expr.op == "/":
            return a / b
        return a**b
    raise TypeError(f"not an Expr: {expr!r}")


# ------------------------------------------------------ finite differences


_EPS = float(np.finfo(float).eps)


def _richardson_tower(d, h: float, roundoff) -> tuple[float, float]:
    """Two Richardson steps over an O(h^2) central difference.

    Returns (value, error_estimate). The estimate combines the gap between
    the last extrapolation levels (truncation) with a roundoff bound at the
    smallest step; both are oracle-side quantities.
    """
    a1, a2, a3 = d(h), d(h / 2.0), d(h / 4.0)
    r1 = (4.0 * a2 - a1) / 3.0
    r2 = (4.0 * a3 - a2) / 3.0
    rr = (16.0 * r2 - r1) / 15.0
    return rr, abs(rr - r2) + roundoff(h / 4.0)


def _adaptive(make_d, f, x: float, steps) -> tuple[float, float]:
    best = None
    for h in steps:
        d, roundoff = make_d(f, x)
        value, err = _richardson_tower(d, h, roundoff)
        if best is None or err < best[1]:
            best = (value, err)
    return best


def _magnitude_tracker(f):
    seen = [1.0]

    def tracked(x):
        y = f(x)
        seen[0] = max(seen[0], abs(y))
        return y

    return tracked, seen


def richardson_d1(f, x: float) -> tuple[float, float]:
    def make_d(f, x):
        tracked, seen = _magnitude_tracker(f)

        def d(s):
            return (tracked(x + s) - tracked(x - s)) / (2.0 * s)

        return d, lambda s: 2.0 * _EPS * seen[0] / (2.0 * s)

    return _adaptive(make_d, f, x, (1e-2, 1e-3))


def richardson_d2(f, x: float) -> tuple[float, float]:
    def make_d(f, x):
        tracked, seen = _magnitude_tracker(f)
        f0 = tracked(x)

        def d(s):
            return (tracked(x + s) - 2.0 * f0 + tracked(x - s)) / s**2

        return d, lambda s: 4.0 * _EPS * seen[0] / s**2

    return _adaptive(make_d, f, x, (3e-2, 4e-3))


def richardson_d3(f, x: float) -> tuple[float, float]:
    def make_d(f, x):
        tracked, seen = _magnitude_tracker(f)

        def d(s):
            return (
                tracked(x + 2 * s) - 2 * tracked(x + s) + 2 * tracked(x - s) - tracked(x - 2 * s)
            ) / (2.0 * s**3)

        return d, lambda s: 3.0 * _EPS * seen[0] / s**3

    return _adaptive(make_d, f, x, (6e-2, 1.2e-2, 2.5e-3))


RICHARDSON = {1: richardson_d1, 2: richardson_d2, 3: richardson_d3}


def fit_derivatives(f, s: float, max_order: int, half: int = 8, h: float = 2.5e-2) -> np.ndarray:
    """Derivatives 0..max_order of a vector function by a local Chebyshev fit.

    The stencil is mapped to [-1, 1] before fitting, which keeps the
    high-degree fit well conditioned.
    """
    from numpy.polynomial import chebyshev as C

    width = half * h
    t = np.arange(-half, half + 1) / half
    ys = np.array([np.asarray(f(s + width * ti), dtype=float) for ti in t])
    out = np.empty((ys.shape[1], max_order + 1))
    for c in range(ys.shape[1]):
        series = C.chebfit(t, ys[:, c], 2 * half)
        for j in range(max_order + 1):
            out[c, j] = C.chebval(0.0, C.chebder(series, j)) / width**j
    return out


# ---------------------------------------------------- brute-force Frenet


def gram_schmidt(vectors: np.ndarray) -> np.ndarray:
    """Orthonormalize rows with one reorthogonalization pass."""
    basis = []
    for v in vectors:
        e = v.astype(float).copy()
        for u in basis:
            e -= (e @ u) * u
        for u in basis:
            e -= (e @ u) * u
        basis.append(e / np.linalg.norm(e))
    return np.array(basis)


def fd_frenet(curve_fn, s: float, n: int):
    """Finite-difference Frenet oracle: (frame, curvatures, speed).

    Derivatives come from the local fit; the frame from plain Gram-Schmidt;
    curvatures from the Gram-Schmidt norm ratios k_i = |E_{i+1}|/(|E_i| v),
    which need no differencing of the frame itself.
    """
    derivs = fit_derivatives(curve_fn, s, n)
    speed = float(np.linalg.norm(derivs[:, 1]))
    basis: list[np.ndarray] = []
    norms: list[float] = []
    for i in range(1, n + 1):
        e = derivs[:, i].astype(float).copy()
        for u in basis:
            e -= (e @ u) * u
        for u in basis:
            e -= (e @ u) * u
        norms.append(float(np.linalg.norm(e)))
        basis.append(e / norms[-1])
    frame = np.array(basis)
    curvatures = np.array([norms[i + 1] / (norms[i] * speed) for i in range(n - 1)])
    return frame, curvatures, speed


def classical_kappa_tau(d1: np.ndarray, d2: np.ndarray, d3: np.ndarray) -> tuple[float, float]:
    """3-dimensional curvature and torsion from the cross/det formulas."""
    cross = np.cross(d1, d2)
    cross_norm = np.linalg.norm(cross)
    kappa = cross_norm / np.linalg.norm(d1) ** 3
    tau = float(np.linalg.det(np.array([d1, d2, d3]))) / cross_norm**2
    return float(kappa), tau


# ------------------------------------------------- random expression trees


def lin(coeff: float, expr: Expr) -> Expr:
    return Binary("*", Constant(float(coeff)), expr)


def add_all(terms: list[Expr]) -> Expr:
    acc = terms[0]
    for t in terms[1:]:
        acc = Binary("+", acc, t)
    return acc


def random_expr(rng: np.random.Generator, depth: int, leaf: Expr) -> Expr:
    """A random safe expression over the given leaf symbol.

    sqrt/ln arguments and divisors are built as (expr^2 + c) with c > 0, so
    any real argument stays inside the domain.
    """
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.6:
            return leaf
        return Constant(float(rng.uniform(0.3, 2.5)))

    def positive(sub: Expr) -> Expr:
        return Binary("+", Binary("*", sub, sub), Constant(float(rng.uniform(0.5, 1.5))))

    kind = rng.integers(0, 8)
    child = random_expr(rng, depth - 1, leaf)
    if kind == 0:
        return Unary("sin", child)
    if kind == 1:
        return Unary("cos", child)
    if kind == 2:
        return Unary("exp", lin(rng.uniform(-0.4, 0.4), child))
    if kind == 3:
        return Unary("sqrt", positive(child))
    if kind == 4:
        return Unary("ln", positive(child))
    if kind == 5:
        return Binary("^", positive(child), Constant(float(rng.choice([2.0, 3.0, 0.5, 1.5]))))
    other = random_expr(rng, depth - 1, leaf)
    if kind == 6:
        return Binary(rng.choice(["+", "-", "*"]), child, other)
    return Binary("/", child, positive(other))


# ---------------------------------------------------------- fuzz families


def rotation(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-ish random rotation from QR of a Gaussian matrix."""
    q, r = np.linalg.qr(rng.normal(size=(n, n)))
    q *= np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def linear_field(coeffs: np.ndarray, dimension: int) -> Expr:
    return add_all([lin(coeffs[i], Coord(i + 1)) for i in range(dimension)])


@dataclass
class FuzzCase:
    spec: CurveSpec
    axis: np.ndarray  # unit axis of the expected helix structure
    expected_H1: float | None  # tangent-family ratio when constant


def wcurve_helix_r3(rng: np.random.Generator, samples: int = 33) -> FuzzCase:
    """Random unit-speed circular helix in R^3, randomly rotated, with a
    linear field along its axis."""
    kappa = float(rng.uniform(0.2, 2.0))
    tau = float(rng.uniform(0.2, 2.0))
    p = math.hypot(kappa, tau)
    a = kappa / p**2
    c = tau / p
    rot = rotation(rng, 3)
    base = [
        lin(a, Unary("cos", lin(p, Param()))),
        lin(a, Unary("sin", lin(p, Param()))),
        lin(c, Param()),
    ]
    components = tuple(
        add_all([lin(rot[i, j], base[j]) for j in range(3)]) for i in range(3)
    )
    scale = float(rng.uniform(0.5, 3.0))
    axis = rot @ np.array([0.0, 0.0, 1.0])
    spec = CurveSpec(
        dimension=3,
        components=components,
        field=linear_field(scale * axis, 3),
        s_range=(0.0, float(rng.uniform(4.0, 9.0))),
        samples=samples,
    )
    return FuzzCase(spec=spec, axis=axis, expected_H1=kappa / tau)


def lift_helix_r4(rng: np.random.Generator, samples: int = 33) -> FuzzCase:
    """Random proper-4 unit-speed helix: the tangent traces a spherical
    curve at constant latitude around the axis, randomly rotated."""
    a = float(rng.uniform(0.6, 1.3))
    b = float(rng.uniform(2.4, 3.6))
    phi = float(rng.uniform(0.35, 1.15))
    sp, cp = math.sin(phi), math.cos(phi)
    ab, ba = a + b, b - a
    base = [
        lin(
            sp,
            Binary(
                "+",
                Binary("/", Unary("sin", lin(ab, Param())), Constant(2 * ab)),
                Binary("/", Unary("sin", lin(ba, Param())), Constant(2 * ba)),
            ),
        ),
        lin(
            -sp,
            Binary(
                "+",
                Binary("/", Unary("cos", lin(ab, Param())), Constant(2 * ab)),
                Binary("/", Unary("cos", lin(ba, Param())), Constant(2 * ba)),
            ),
        ),
        lin(-sp / a, Unary("cos", lin(a, Param()))),
        lin(cp, Param()),
    ]
    rot = rotation(rng, 4)
    components = tuple(
        add_all([lin(rot[i, j], base[j]) for j in range(4)]) for i in range(4)
    )
    scale = float(rng.uniform(0.5, 3.0))
    axis = rot @ np.array([0.0, 0.0, 0.0, 1.0])
    spec = CurveSpec(
        dimension=4,
        components=components,
        field=linear_field(scale * axis, 4),
        s_range=(0.2, 1.1),
        samples=samples,
    )
    return FuzzCase(spec=spec, axis=axis, expected_H1=None)


def nonhelix_r3(rng: np.random.Generator, samples: int = 33) -> CurveSpec:
    """Perturbed helix that is decisively not a helix for any linear field."""
    a = float(rng.uniform(0.8, 1.5))
    eps = float(rng.uniform(0.15, 0.4))
    components = (
        lin(a, Unary("cos", Param())),
        lin(a, Unary("sin", Param())),
        Binary("+", Param(), lin(eps, Binary("^", Param(), Constant(2.0)))),
    )
    return CurveSpec(
        dimension=3,
        components=components,
        field=Coord(3),
        s_range=(0.2, 2.6),
        samples=samples,
    )


# --------------------------------------------- synthetic n = 4 frame data


def _jet_closure_frame(V: np.ndarray, omega: np.ndarray) -> list[list[Jet]]:
    """Order-1 frame jets: values from V, first derivatives from omega @ V."""
    rates = omega @ V
    return [
        [Jet([V[i, c], rates[i, c]]) for c in range(V.shape[1])]
        for i in range(V.shape[0])
    ]


def _omega(k: np.ndarray) -> np.ndarray:
    n = len(k) + 1
    m = np.zeros((n, n))
    for i, ki in enumerate(k):
        m[i, i + 1] = ki
        m[i + 1, i] = -ki
    return m


@dataclass
class SyntheticSystem:
    samples: list[Sample]
    axis: np.ndarray
    expected_sumsq: float


def _integrate_frame(curvature_values, grid: np.ndarray, n: int) -> list[np.ndarray]:
    """Frame solutions of V' = Omega(s) V at each grid point (unit speed)."""
    from scipy.integrate import solve_ivp

    def rhs(s, y):
        V = y.reshape(n, n)
        return (_omega(curvature_values(s)) @ V).ravel()

    y0 = np.eye(n).ravel()
    sol = solve_ivp(
        rhs,
        (grid[0], grid[-1]),
        y0,
        t_eval=grid,
        method="DOP853",
        rtol=1e-12,
        atol=1e-14,
    )
    assert sol.success
    return [sol.y[:, j].reshape(n, n) for j in range(len(grid))]


def _build_samples(grid, frames, curvature_jets, curvature_values, axis, order=4):
    samples = []
    n = frames[0].shape[0]
    for s, V in zip(grid, frames):
        s = float(s)
        sj = jet_param(s, order)
        k_jets = curvature_jets(sj)
        fr = FrenetData(
            s=s,
            speed=jet_constant(1.0, order),
            frame=_jet_closure_frame(V, _omega(curvature_values(s))),
            curvatures=k_jets,
        )
        h = harmonic_data(fr)
        samples.append(
            Sample(
                row=SampleRow(
                    s=s,
                    grad=axis,
                    grad_norm=float(np.linalg.norm(axis)),
                    ip_tangent=float(axis @ V[0]),
                    ip_last=float(axis @ V[-1]),
                    hessian_norm=0.0,
                ),
                frenet=fr,
                harmonic=h,
            )
        )
    return samples


def synthetic_helix_r4(rng: np.random.Generator, count: int = 25) -> SyntheticSystem:
    """n=4 helix-structured frame system with random curvature functions.

    The tangent-family pair (H1, H2) is forced onto the circle of radius T
    by choosing k1 = k2 * T * sin(Psi) with Psi' = k3; the axis is then read
    off the frame coefficients at the left endpoint.
    """
    T = float(rng.uniform(0.4, 1.6))
    c2 = float(rng.uniform(0.8, 2.0))
    w2 = float(rng.uniform(0.3, 1.0))
    c3 = float(rng.uniform(0.6, 1.4))
    w3 = float(rng.uniform(0.3, 1.0))
    psi0 = 0.35
    length = min(0.8 / (c3 * 1.3), 1.2)  # keep Psi inside [0.35, 1.2]

    def psi(sj):
        # integral of k3 = c3 (1 + 0.3 sin(w3 s)) from 0, shifted to psi0
        return c3 * (sj - (0.3 / w3) * jet_cos(sj * w3)) + (psi0 + c3 * 0.3 / w3)

    def k_jets(sj):
        k2 = c2 * (1.0 + 0.25 * jet_sin(sj * w2))
        k3 = c3 * (1.0 + 0.3 * jet_sin(sj * w3))
        k1 = k2 * (T * jet_sin(psi(sj)))
        return [k1, k2, k3]

    def k_values(s):
        return np.array([k.value for k in k_jets(jet_param(float(s), 1))])

    grid = np.linspace(0.0, length, count)
    frames = _integrate_frame(k_values, grid, 4)

    lam = 1.0 / math.sqrt(1.0 + T * T)
    sj0 = jet_param(0.0, 1)
    H1_0 = T * math.sin(psi(sj0).value)
    H2_0 = T * math.cos(psi(sj0).value)
    V0 = frames[0]
    axis = lam * (V0[0] + H1_0 * V0[2] + H2_0 * V0[3])

    samples = _build_samples(grid, frames, k_jets, k_values, axis)
    return SyntheticSystem(samples=samples, axis=axis, expected_sumsq=T * T)


def synthetic_slant_r4(rng: np.random.Generator, count: int = 25) -> SyntheticSystem:
    """n=4 slant-structured frame system with random curvature functions.

    The normal-family pair (H*_1, H*_2) is forced onto the circle of radius
    rho/m by choosing k3 = k2 * (rho/m) cos(Phi) with Phi' = k1.
    """
    m = float(rng.uniform(0.45, 0.8))
    rho = math.sqrt(1.0 - m * m)
    c1 = float(rng.uniform(0.6, 1.4))
    w1 = float(rng.uniform(0.3, 1.0))
    c2 = float(rng.uniform(0.8, 2.0))
    w2 = float(rng.uniform(0.3, 1.0))
    phi0 = 0.3
    length = min(0.9 / (c1 * 1.3), 1.2)  # keep Phi inside [0.3, 1.2]

    def phi(sj):
        return c1 * (sj - (0.3 / w1) * jet_cos(sj * w1)) + (phi0 + c1 * 0.3 / w1)

    def k_jets(sj):
        k1 = c1 * (1.0 + 0.3 * jet_sin(sj * w1))
        k2 = c2 * (1.0 + 0.25 * jet_sin(sj * w2))
        k3 = k2 * ((rho / m) * jet_cos(phi(sj)))
        return [k1, k2, k3]

    def k_values(s):
        return np.array([k.value for k in k_jets(jet_param(float(s), 1))])

    grid = np.linspace(0.0, length, count)
    frames = _integrate_frame(k_values, grid, 4)

    sj0 = jet_param(0.0, 1)
    mu1_0 = rho * math.sin(phi(sj0).value)
    mu2_0 = rho * math.cos(phi(sj0).value)
    V0 = frames[0]
    axis = mu1_0 * V0[0] + mu2_0 * V0[1] + m * V0[3]

    samples = _build_samples(grid, frames, k_jets, k_values, axis)
    return SyntheticSystem(samples=samples, axis=axis, expected_sumsq=(rho / m) ** 2)
