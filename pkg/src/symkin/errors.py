"""Typed errors for kinematic degeneracies and input problems.

Every degeneracy carries a stable machine-readable ``reason`` code; the
CLI surfaces these codes instead of aborting whole reports.
"""


class KinematicDegeneracy(Exception):
    """A requested quantity does not exist for the given motion state."""

    reason = "degenerate"


class ZeroVelocity(KinematicDegeneracy):
    reason = "zero-velocity"


class InfiniteCurvature(KinematicDegeneracy):
    reason = "infinite-curvature"


class PureTranslation(KinematicDegeneracy):
    reason = "pure-translation"


class DegenerateAngularState(KinematicDegeneracy):
    reason = "degenerate-angular-state"


class DegenerateIntersection(KinematicDegeneracy):
    reason = "degenerate-intersection"


class CoincidentCircles(KinematicDegeneracy):
    reason = "coincident-circles"


class CoincidentDirection(KinematicDegeneracy):
    reason = "coincident-direction"


class OnInflectionCircle(KinematicDegeneracy):
    reason = "on-inflection-circle"


class ParallelRays(KinematicDegeneracy):
    reason = "parallel-rays"


class CollinearInput(KinematicDegeneracy):
    reason = "collinear-input"


class DegenerateHelper(KinematicDegeneracy):
    reason = "degenerate-helper"


class StraightPolode(KinematicDegeneracy):
    reason = "straight-polode"


class UndefinedTangent(KinematicDegeneracy):
    reason = "stationary-pole"


class OrderMismatch(ValueError):
    """Jet operands must share an order."""


class InsufficientOrder(ValueError):
    """A jet does not carry enough derivatives for the requested order."""


class MotionSyntaxError(ValueError):
    """Malformed motion document; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class MotionValidationError(ValueError):
    """Well-formed motion document with an invalid field value."""

    def __init__(self, field: str, why: str):
        super().__init__(f"{field}: {why}")
        self.field = field
        self.why = why
