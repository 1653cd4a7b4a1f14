"""Planar vector algebra built on the skew-orthogonal (tilde) operator.

All of 2D kinematics here runs on four primitives: the scalar product,
the skew-scalar product (perp-dot, an oriented area), the tilde operator
rotating a vector +90 degrees counter-clockwise, and rotation composed
from them.  No matrices, no coordinates beyond the two components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Vec2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite vector component: ({self.x}, {self.y})")

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __mul__(self, s: float) -> Vec2:
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> Vec2:
        return Vec2(self.x / s, self.y / s)

    def norm_sq(self) -> float:
        return self.x * self.x + self.y * self.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


ZERO = Vec2(0.0, 0.0)


def tilde(a: Vec2) -> Vec2:
    # +90 degrees counter-clockwise
    return Vec2(-a.y, a.x)


def dot(a: Vec2, b: Vec2) -> float:
    return a.x * b.x + a.y * b.y


def perp_dot(a: Vec2, b: Vec2) -> float:
    # dot(tilde(a), b): the oriented area spanned from a to b
    return a.x * b.y - a.y * b.x


def rotate(a: Vec2, theta: float) -> Vec2:
    c, s = math.cos(theta), math.sin(theta)
    return Vec2(c * a.x - s * a.y, s * a.x + c * a.y)


def normalize(a: Vec2) -> Vec2:
    n = a.norm()
    if n == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return Vec2(a.x / n, a.y / n)


def j_pow(k: int, a: Vec2) -> Vec2:
    """Apply tilde k times: the cycle a, tilde(a), -a, -tilde(a)."""
    if k < 0:
        raise ValueError("j_pow requires k >= 0")
    r = k % 4
    if r == 0:
        return a
    if r == 1:
        return tilde(a)
    if r == 2:
        return -a
    return -tilde(a)


@dataclass(frozen=True, slots=True)
class JPower:
    """A power of the quarter-turn operator, reduced mod 4."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("JPower requires k >= 0")
        object.__setattr__(self, "k", self.k % 4)

    def apply(self, a: Vec2) -> Vec2:
        return j_pow(self.k, a)

    def __mul__(self, other: JPower) -> JPower:
        return JPower(self.k + other.k)
