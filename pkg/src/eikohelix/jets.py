"""Truncated Taylor-series (jet) arithmetic and field derivatives.

A :class:`Jet` of order K stores normalized Taylor coefficients
``coeffs[j] = g^(j)(s0) / j!`` of a scalar function of the curve parameter.
All operations propagate exactly truncated series, so derivatives of any
derived quantity (speed, curvatures, harmonic curvatures) come out exact to
the carried order rather than finite-differenced. Combining jets of
different orders truncates to the smaller order.

:class:`FieldJet` carries value, gradient, and Hessian of a scalar field at
a point, propagated through expressions as second-order multivariate duals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dsl import Binary, Constant, Coord, CurveSpec, Expr, Param, Unary, constant_value
from .errors import (
    EvalDomainError,
    EvalOverflow,
    InsufficientOrder,
    JetDivisionByZero,
)

_TINY = 1e-300  # division guard on the value coefficient


def default_jet_order(dimension: int) -> int:
    """Jet order carried through curve evaluation for an n-dimensional curve.

    The frame construction consumes n derivative levels, the harmonic
    recurrence one more per level above the first, and the derivative
    identities one final level; n + max(0, n-3) + 1 covers all of it.
    """
    return dimension + max(0, dimension - 3) + 1


class Jet:
    """Normalized truncated Taylor expansion of a scalar in one variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = np.asarray(coeffs, dtype=float)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def value(self) -> float:
        return float(self.coeffs[0])

    @property
    def d1(self) -> float:
        """First derivative (equals the order-1 normalized coefficient)."""
        if self.order < 1:
            raise InsufficientOrder("jet carries no first-derivative coefficient")
        return float(self.coeffs[1])

    def derivative(self) -> Jet:
        """Jet of the derivative, one order lower."""
        if self.order < 1:
            raise InsufficientOrder("cannot differentiate an order-0 jet")
        j = np.arange(1, self.order + 1)
        return Jet(self.coeffs[1:] * j)

    def truncate(self, order: int) -> Jet:
        if order > self.order:
            raise InsufficientOrder(f"jet order {self.order} < requested {order}")
        if order == self.order:
            return self
        return Jet(self.coeffs[: order + 1])

    def __repr__(self) -> str:
        return f"Jet({self.coeffs.tolist()})"

    # arithmetic ------------------------------------------------------

    def __add__(self, other) -> Jet:
        a, b = _align(self, _lift(other, self.order))
        return Jet(a + b)

    __radd__ = __add__

    def __sub__(self, other) -> Jet:
        a, b = _align(self, _lift(other, self.order))
        return Jet(a - b)

    def __rsub__(self, other) -> Jet:
        a, b = _align(self, _lift(other, self.order))
        return Jet(b - a)

    def __mul__(self, other) -> Jet:
        a, b = _align(self, _lift(other, self.order))
        return Jet(np.convolve(a, b)[: len(a)])

    __rmul__ = __mul__

    def __truediv__(self, other) -> Jet:
        return jet_div(self, _lift(other, self.order))

    def __rtruediv__(self, other) -> Jet:
        return jet_div(_lift(other, self.order), self)

    def __neg__(self) -> Jet:
        return Jet(-self.coeffs)


def jet_constant(value: float, order: int) -> Jet:
    coeffs = np.zeros(order + 1)
    coeffs[0] = value
    return Jet(coeffs)


def jet_param(s: float, order: int) -> Jet:
    """The jet of the identity function at expansion point s."""
    coeffs = np.zeros(order + 1)
    coeffs[0] = s
    if order >= 1:
        coeffs[1] = 1.0
    return Jet(coeffs)


def _lift(x, order: int) -> Jet:
    if isinstance(x, Jet):
        return x
    return jet_constant(float(x), order)


def _align(a: Jet, b: Jet) -> tuple[np.ndarray, np.ndarray]:
    k = min(a.order, b.order)
    return a.coeffs[: k + 1], b.coeffs[: k + 1]


def jet_div(num: Jet, den: Jet) -> Jet:
    a, b = _align(num, den)
    if abs(b[0]) < _TINY:
        raise JetDivisionByZero(f"jet division by value {b[0]!r}")
    q = np.empty_like(a)
    q[0] = a[0] / b[0]
    for k in range(1, len(a)):
        q[k] = (a[k] - np.dot(b[1 : k + 1], q[k - 1 :: -1])) / b[0]
    return Jet(q)


def jet_sin(u: Jet) -> Jet:
    return _sin_cos(u)[0]


def jet_cos(u: Jet) -> Jet:
    return _sin_cos(u)[1]


def _sin_cos(u: Jet) -> tuple[Jet, Jet]:
    x = u.coeffs
    k_max = u.order
    s = np.empty(k_max + 1)
    c = np.empty(k_max + 1)
    s[0] = math.sin(x[0])
    c[0] = math.cos(x[0])
    j = np.arange(1, k_max + 1)
    weighted = j * x[1 : k_max + 1]  # j * u_j
    for k in range(1, k_max + 1):
        s[k] = np.dot(weighted[:k], c[k - 1 :: -1]) / k
        c[k] = -np.dot(weighted[:k], s[k - 1 :: -1]) / k
    return Jet(s), Jet(c)


def jet_exp(u: Jet) -> Jet:
    x = u.coeffs
    k_max = u.order
    e = np.empty(k_max + 1)
    try:
        e[0] = math.exp(x[0])
    except OverflowError:
        raise EvalOverflow(f"exp overflow at {x[0]!r}") from None
    j = np.arange(1, k_max + 1)
    weighted = j * x[1 : k_max + 1]
    for k in range(1, k_max + 1):
        e[k] = np.dot(weighted[:k], e[k - 1 :: -1]) / k
    return Jet(e)


def jet_ln(u: Jet) -> Jet:
    x = u.coeffs
    if x[0] <= 0.0:
        raise EvalDomainError(f"ln of non-positive jet value {x[0]!r}")
    k_max = u.order
    w = np.empty(k_max + 1)
    w[0] = math.log(x[0])
    for k in range(1, k_max + 1):
        j = np.arange(1, k)
        acc = np.dot(j * w[1:k], x[k - 1 : 0 : -1]) if k > 1 else 0.0
        w[k] = (k * x[k] - acc) / (k * x[0])
    return Jet(w)


def jet_sqrt(u: Jet) -> Jet:
    x = u.coeffs
    if x[0] <= 0.0:
        raise EvalDomainError(f"sqrt of non-positive jet value {x[0]!r}")
    k_max = u.order
    r = np.empty(k_max + 1)
    r[0] = math.sqrt(x[0])
    for k in range(1, k_max + 1):
        acc = np.dot(r[1:k], r[k - 1 : 0 : -1]) if k > 1 else 0.0
        r[k] = (x[k] - acc) / (2.0 * r[0])
    return Jet(r)


def jet_pow(u: Jet, exponent: float) -> Jet:
    """u raised to a constant real power.

    Integer exponents are exact for any base via repeated multiplication;
    fractional exponents require a positive value coefficient.
    """
    if exponent == 0:
        return jet_constant(1.0, u.order)
    if float(exponent).is_integer() and abs(exponent) <= 64:
        p = int(exponent)
        if p < 0:
            return jet_div(jet_constant(1.0, u.order), jet_pow(u, -p))
        result = jet_constant(1.0, u.order)
        base = u
        while p:
            if p & 1:
                result = result * base
            base = base * base
            p >>= 1
        return result
    if u.value <= 0.0:
        raise EvalDomainError(
            f"fractional power of non-positive jet value {u.value!r}"
        )
    return jet_exp(jet_ln(u) * float(exponent))


_JET_UNARY = {
    "neg": lambda u: -u,
    "sin": jet_sin,
    "cos": jet_cos,
    "exp": jet_exp,
    "sqrt": jet_sqrt,
    "ln": jet_ln,
}


def eval_expr_jet(expr: Expr, s: float, order: int) -> Jet:
    """Evaluate a curve-component expression to a jet at expansion point s."""
    param = jet_param(s, order)

    def walk(node: Expr) -> Jet:
        if isinstance(node, Constant):
            return jet_constant(node.value, order)
        if isinstance(node, Param):
            return param
        if isinstance(node, Coord):
            raise EvalDomainError("coordinate symbol in a curve component")
        if isinstance(node, Unary):
            return _JET_UNARY[node.op](walk(node.child))
        if isinstance(node, Binary):
            if node.op == "^":
                return jet_pow(walk(node.left), constant_value(node.right))
            a = walk(node.left)
            b = walk(node.right)
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            return a / b
        raise TypeError(f"not an Expr: {node!r}")

    result = walk(expr)
    if not np.all(np.isfinite(result.coeffs)):
        raise EvalOverflow(f"non-finite jet coefficients at s = {s!r}")
    return result


def eval_curve_jet(spec: CurveSpec, s: float, order: int | None = None) -> list[Jet]:
    """Jets of all curve components of ``spec`` at parameter value s."""
    if order is None:
        order = default_jet_order(spec.dimension)
    if order < 1:
        raise InsufficientOrder("curve jets need order >= 1")
    return [eval_expr_jet(component, s, order) for component in spec.components]


# ------------------------------------------------------------ field duals


@dataclass(frozen=True)
class FieldJet:
    """Value, gradient, and symmetric Hessian of a scalar field at a point."""

    value: float
    gradient: np.ndarray
    hessian: np.ndarray


class _Dual2:
    """Second-order multivariate dual number: (value, gradient, hessian)."""

    __slots__ = ("v", "g", "h")

    def __init__(self, v: float, g: np.ndarray, h: np.ndarray):
        self.v = v
        self.g = g
        self.h = h

    @staticmethod
    def constant(value: float, n: int) -> _Dual2:
        return _Dual2(float(value), np.zeros(n), np.zeros((n, n)))

    @staticmethod
    def coordinate(value: float, index: int, n: int) -> _Dual2:
        g = np.zeros(n)
        g[index] = 1.0
        return _Dual2(float(value), g, np.zeros((n, n)))

    def __add__(self, o: _Dual2) -> _Dual2:
        return _Dual2(self.v + o.v, self.g + o.g, self.h + o.h)

    def __sub__(self, o: _Dual2) -> _Dual2:
        return _Dual2(self.v - o.v, self.g - o.g, self.h - o.h)

    def __neg__(self) -> _Dual2:
        return _Dual2(-self.v, -self.g, -self.h)

    def __mul__(self, o: _Dual2) -> _Dual2:
        cross = np.outer(self.g, o.g)
        return _Dual2(
            self.v * o.v,
            self.v * o.g + o.v * self.g,
            self.v * o.h + o.v * self.h + cross + cross.T,
        )

    def chain(self, f0: float, f1: float, f2: float) -> _Dual2:
        """Apply a scalar function given f(v), f'(v), f''(v)."""
        return _Dual2(f0, f1 * self.g, f1 * self.h + f2 * np.outer(self.g, self.g))


def _dual_pow(u: _Dual2, p: float) -> _Dual2:
    if p == 0:
        return _Dual2.constant(1.0, len(u.g))
    if float(p).is_integer():
        p_int = int(p)
        if u.v == 0.0 and p_int < 0:
            raise EvalDomainError("negative power of zero")

        def mono(c: float, e: int) -> float:
            # zero coefficient wins before u.v**e can blow up at u.v == 0
            return c * u.v**e if c != 0.0 else 0.0

        return u.chain(u.v**p_int, mono(p, p_int - 1), mono(p * (p - 1), p_int - 2))
    if u.v <= 0.0:
        raise EvalDomainError(f"fractional power of non-positive value {u.v!r}")
    v = u.v**p
    return u.chain(v, p * v / u.v, p * (p - 1) * v / (u.v * u.v))


def _dual_unary(op: str, u: _Dual2) -> _Dual2:
    if op == "neg":
        return -u
    if op == "sin":
        sv, cv = math.sin(u.v), math.cos(u.v)
        return u.chain(sv, cv, -sv)
    if op == "cos":
        sv, cv = math.sin(u.v), math.cos(u.v)
        return u.chain(cv, -sv, -cv)
    if op == "exp":
        try:
            ev = math.exp(u.v)
        except OverflowError:
            raise EvalOverflow(f"exp overflow at {u.v!r}") from None
        return u.chain(ev, ev, ev)
    if op == "sqrt":
        if u.v <= 0.0:
            raise EvalDomainError(f"sqrt of non-positive value {u.v!r}")
        r = math.sqrt(u.v)
        return u.chain(r, 0.5 / r, -0.25 / (r * u.v))
    if op == "ln":
        if u.v <= 0.0:
            raise EvalDomainError(f"ln of non-positive value {u.v!r}")
        return u.chain(math.log(u.v), 1.0 / u.v, -1.0 / (u.v * u.v))
    raise ValueError(f"unknown unary op {op!r}")


def eval_field_jet(spec: CurveSpec, point) -> FieldJet:
    """Exact value, gradient, and Hessian of the spec's field at ``point``."""
    point = np.asarray(point, dtype=float)
    n = spec.dimension
    if point.shape != (n,):
        raise ValueError(f"point must have shape ({n},), got {point.shape}")

    def walk(node: Expr) -> _Dual2:
        if isinstance(node, Constant):
            return _Dual2.constant(node.value, n)
        if isinstance(node, Coord):
            return _Dual2.coordinate(point[node.index - 1], node.index - 1, n)
        if isinstance(node, Param):
            raise EvalDomainError("parameter symbol in a field expression")
        if isinstance(node, Unary):
            return _dual_unary(node.op, walk(node.child))
        if isinstance(node, Binary):
            if node.op == "^":
                return _dual_pow(walk(node.left), constant_value(node.right))
            a = walk(node.left)
            b = walk(node.right)
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            if abs(b.v) < _TINY:
                raise JetDivisionByZero(f"field division by value {b.v!r}")
            return a * b.chain(1.0 / b.v, -1.0 / (b.v * b.v), 2.0 / (b.v**3))
        raise TypeError(f"not an Expr: {node!r}")

    with np.errstate(all="ignore"):
        result = walk(spec.field)
    if not (
        math.isfinite(result.v)
        and np.all(np.isfinite(result.g))
        and np.all(np.isfinite(result.h))
    ):
        raise EvalOverflow(f"non-finite field derivatives at point {point.tolist()!r}")
    return FieldJet(value=result.v, gradient=result.g, hessian=result.h)
