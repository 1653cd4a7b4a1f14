"""Truncated Taylor jets of scalars and planar vectors.

A jet holds the value and time derivatives of a function at one point,
stored as plain derivatives (not factorial-normalized coefficients), so
entries read exactly like the handwritten symbols: d[0] = f, d[1] = f',
d[2] = f''.  Products use the Leibniz rule, composition goes through a
truncated-power-series bridge, and a finite-difference oracle provides
an independent cross-check for every derivative this module produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InsufficientOrder, OrderMismatch, PureTranslation
from .vec import Vec2

K_MAX = 12

# Pascal's triangle up to K_MAX, _BINOM[n, i] = C(n, i)
_BINOM = np.zeros((K_MAX + 1, K_MAX + 1))
for _n in range(K_MAX + 1):
    for _i in range(_n + 1):
        _BINOM[_n, _i] = math.comb(_n, _i)

_FACT = np.array([float(math.factorial(n)) for n in range(K_MAX + 2)])


def _as_jet_array(values, width=None) -> np.ndarray:
    a = np.asarray(values, dtype=float)
    shape = (a.shape[0],) if width is None else (a.shape[0], width)
    if a.shape != shape:
        raise ValueError(f"expected shape {shape}, got {a.shape}")
    if a.shape[0] < 1 or a.shape[0] > K_MAX + 1:
        raise InsufficientOrder(f"jet order must be in 0..{K_MAX}")
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite jet entry")
    return a


@dataclass(frozen=True)
class ScalarJet:
    """Value and derivatives of a scalar function at one instant."""

    d: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "d", _as_jet_array(self.d))

    @property
    def order(self) -> int:
        return len(self.d) - 1

    @property
    def value(self) -> float:
        return float(self.d[0])

    @staticmethod
    def constant(value: float, order: int) -> ScalarJet:
        d = np.zeros(order + 1)
        d[0] = value
        return ScalarJet(d)

    @staticmethod
    def variable(value: float, order: int) -> ScalarJet:
        """Jet of the identity function t -> t, evaluated at ``value``."""
        d = np.zeros(order + 1)
        d[0] = value
        if order >= 1:
            d[1] = 1.0
        return ScalarJet(d)

    def truncate(self, order: int) -> ScalarJet:
        if order > self.order:
            raise InsufficientOrder(f"cannot extend order {self.order} to {order}")
        return ScalarJet(self.d[: order + 1].copy())

    def shift(self) -> ScalarJet:
        """Jet of the derivative: drop d[0], reindex; order decreases by 1."""
        if self.order == 0:
            raise InsufficientOrder("cannot differentiate an order-0 jet")
        return ScalarJet(self.d[1:].copy())

    def __add__(self, other: ScalarJet) -> ScalarJet:
        _check_orders(self, other)
        return ScalarJet(self.d + other.d)

    def __sub__(self, other: ScalarJet) -> ScalarJet:
        _check_orders(self, other)
        return ScalarJet(self.d - other.d)

    def __neg__(self) -> ScalarJet:
        return ScalarJet(-self.d)

    def __mul__(self, other):
        if isinstance(other, ScalarJet):
            return jet_mul(self, other)
        return ScalarJet(self.d * float(other))

    __rmul__ = __mul__


def _check_orders(a, b):
    if a.order != b.order:
        raise OrderMismatch(f"jet orders differ: {a.order} vs {b.order}")


def jet_add(a: ScalarJet, b: ScalarJet) -> ScalarJet:
    return a + b


def jet_mul(a: ScalarJet, b: ScalarJet) -> ScalarJet:
    """Leibniz product: out[k] = sum_i C(k,i) a[i] b[k-i]."""
    _check_orders(a, b)
    n = a.order
    out = np.empty(n + 1)
    for k in range(n + 1):
        out[k] = np.dot(_BINOM[k, : k + 1] * a.d[: k + 1], b.d[k::-1])
    return ScalarJet(out)


def jet_sin_cos(theta: ScalarJet) -> tuple[ScalarJet, ScalarJet]:
    """Jets of sin(theta(t)) and cos(theta(t)).

    Uses the coupled recurrence (sin o theta)' = theta' * (cos o theta),
    (cos o theta)' = -theta' * (sin o theta), applied through the order.
    """
    n = theta.order
    s = np.empty(n + 1)
    c = np.empty(n + 1)
    s[0] = math.sin(theta.d[0])
    c[0] = math.cos(theta.d[0])
    for m in range(n):
        w = _BINOM[m, : m + 1] * theta.d[1 : m + 2]
        s[m + 1] = np.dot(w, c[m::-1])
        c[m + 1] = -np.dot(w, s[m::-1])
    return ScalarJet(s), ScalarJet(c)


@dataclass(frozen=True)
class PlanarJet:
    """Value and derivatives of a planar vector function at one instant."""

    d: np.ndarray  # shape (order+1, 2)

    def __post_init__(self):
        a = np.asarray(self.d, dtype=float)
        if a.ndim != 2 or a.shape[1] != 2:
            raise ValueError(f"expected shape (order+1, 2), got {a.shape}")
        object.__setattr__(self, "d", _as_jet_array(a, width=2))

    @property
    def order(self) -> int:
        return len(self.d) - 1

    def entry(self, i: int) -> Vec2:
        return Vec2(float(self.d[i, 0]), float(self.d[i, 1]))

    @property
    def entries(self) -> tuple[Vec2, ...]:
        return tuple(self.entry(i) for i in range(len(self.d)))

    @staticmethod
    def from_vecs(vecs) -> PlanarJet:
        return PlanarJet(np.array([[v.x, v.y] for v in vecs]))

    @staticmethod
    def from_components(x: ScalarJet, y: ScalarJet) -> PlanarJet:
        _check_orders(x, y)
        return PlanarJet(np.column_stack([x.d, y.d]))

    @property
    def x(self) -> ScalarJet:
        return ScalarJet(self.d[:, 0].copy())

    @property
    def y(self) -> ScalarJet:
        return ScalarJet(self.d[:, 1].copy())

    def truncate(self, order: int) -> PlanarJet:
        if order > self.order:
            raise InsufficientOrder(f"cannot extend order {self.order} to {order}")
        return PlanarJet(self.d[: order + 1].copy())

    def shift(self) -> PlanarJet:
        if self.order == 0:
            raise InsufficientOrder("cannot differentiate an order-0 jet")
        return PlanarJet(self.d[1:].copy())

    def __add__(self, other: PlanarJet) -> PlanarJet:
        _check_orders(self, other)
        return PlanarJet(self.d + other.d)

    def __sub__(self, other: PlanarJet) -> PlanarJet:
        _check_orders(self, other)
        return PlanarJet(self.d - other.d)

    def __neg__(self) -> PlanarJet:
        return PlanarJet(-self.d)

    def scale(self, s: float) -> PlanarJet:
        return PlanarJet(self.d * float(s))

    def mul_jet(self, s: ScalarJet) -> PlanarJet:
        """Leibniz product with a scalar jet, entrywise on components."""
        return PlanarJet.from_components(jet_mul(s, self.x), jet_mul(s, self.y))


def vec_jet_map(a: PlanarJet, k: int = 1) -> PlanarJet:
    """Apply the quarter-turn operator k times to every jet entry.

    The operator is constant, so mapping commutes with differentiation.
    """
    if k < 0:
        raise ValueError("vec_jet_map requires k >= 0")
    r = k % 4
    x, y = a.d[:, 0], a.d[:, 1]
    if r == 0:
        return PlanarJet(a.d.copy())
    if r == 1:
        return PlanarJet(np.column_stack([-y, x]))
    if r == 2:
        return PlanarJet(-a.d)
    return PlanarJet(np.column_stack([y, -x]))


# --- truncated power series bridge (for reparametrization) ---------------


def _series_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = len(a)
    out = np.zeros(n)
    for i in range(n):
        if a[i] != 0.0:
            out[i:] += a[i] * b[: n - i]
    return out


def _series_compose(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Truncated composition f(g(x)); requires g[0] == 0."""
    if g[0] != 0.0:
        raise ValueError("inner series must have zero constant term")
    n = len(f)
    out = np.zeros(n)
    out[0] = f[n - 1]
    for i in range(n - 2, -1, -1):
        out = _series_mul(out, g)
        out[0] += f[i]
    return out


def _series_revert(c: np.ndarray) -> np.ndarray:
    """Compositional inverse g with c(g(x)) = x; needs c[0] = 0, c[1] != 0."""
    n = len(c)
    x = np.zeros(n)
    if n > 1:
        x[1] = 1.0
    tail = c.copy()
    tail[0] = 0.0
    if n > 1:
        tail[1] = 0.0
    g = x / c[1]
    for _ in range(max(n - 2, 0)):
        g = (x - _series_compose(tail, g)) / c[1]
    return g


def _theta_inverse_series(theta: ScalarJet, order: int) -> np.ndarray:
    c = theta.d[: order + 1] / _FACT[: order + 1]
    c = c.copy()
    c[0] = 0.0
    if order < 1 or c[1] == 0.0:
        raise PureTranslation("reparametrization needs nonzero angular velocity")
    return _series_revert(c)


def _compose_derivs(f_derivs: np.ndarray, g: np.ndarray) -> np.ndarray:
    coeffs = f_derivs / _FACT[: len(f_derivs)]
    inner = coeffs.copy()
    inner[0] = 0.0
    out = _series_compose(inner, g)
    out[0] += coeffs[0]
    return out * _FACT[: len(out)]


def reparametrize_scalar(f: ScalarJet, theta: ScalarJet) -> ScalarJet:
    """Convert derivatives in t to derivatives in theta, given theta's t-jet.

    Valid while theta is strictly monotone at the instant (theta' != 0);
    composes f with the series inverse of theta - theta0.
    """
    order = min(f.order, theta.order)
    g = _theta_inverse_series(theta, order)
    return ScalarJet(_compose_derivs(f.d[: order + 1], g))


def reparametrize_planar(f: PlanarJet, theta: ScalarJet) -> PlanarJet:
    order = min(f.order, theta.order)
    g = _theta_inverse_series(theta, order)
    return PlanarJet(
        np.column_stack(
            [
                _compose_derivs(f.d[: order + 1, 0], g),
                _compose_derivs(f.d[: order + 1, 1], g),
            ]
        )
    )


# --- finite-difference oracle ---------------------------------------------


def _fd_stencil(k: int, m: int) -> tuple[np.ndarray, np.ndarray, int]:
    """Central-difference weights on nodes -m..m for the k-th derivative.

    Returns (nodes, weights, p) where p is the leading error order.
    """
    nodes = np.arange(-m, m + 1, dtype=float)
    a = np.vander(nodes, increasing=True).T
    b = np.zeros(2 * m + 1)
    b[k] = math.factorial(k)
    w = np.linalg.solve(a, b)
    p = 2
    for n in range(1, 8):
        moment = np.dot(w, nodes ** (k + n)) / math.factorial(k + n)
        if abs(moment) > 1e-8:
            p = n
            break
    return nodes, w, p


def finite_difference_oracle(f, t0: float, k: int) -> Vec2:
    """Estimate the k-th derivative of f: R -> Vec2 at t0, 1 <= k <= 8.

    Central differences with two levels of Richardson extrapolation over
    step doubling.  Accuracy for well-scaled smooth f: about 1e-6 relative
    up to k = 5, about 1e-4 for k = 6..8.  Degrades gracefully, never
    raises on accuracy.
    """
    if not 1 <= k <= 8:
        raise ValueError("finite_difference_oracle supports 1 <= k <= 8")
    nodes, w, p = _fd_stencil(k, k // 2 + 2)
    h0 = np.finfo(float).eps ** (1.0 / (k + 6)) * max(1.0, abs(t0))

    def estimate(h: float) -> np.ndarray:
        acc = np.zeros(2)
        for s, wj in zip(nodes, w):
            v = f(t0 + s * h)
            acc += wj * np.array([v.x, v.y])
        return acc / h**k

    d1, d2, d4 = estimate(h0), estimate(2 * h0), estimate(4 * h0)
    r1 = (2**p * d1 - d2) / (2**p - 1)
    r2 = (2**p * d2 - d4) / (2**p - 1)
    q = p + 2
    out = (2**q * r1 - r2) / (2**q - 1)
    return Vec2(float(out[0]), float(out[1]))
