"""Library-wide tolerance conventions.

Algebraic identities are checked against TAU_ALG scaled by the magnitudes
involved; degeneracy guards (vanishing denominators, poles at infinity)
use TAU_DEG scaled the same way.  Both scale as max(1, magnitudes) so
tolerances stay meaningful for very small and very large operands.
"""

TAU_ALG = 1e-9
TAU_DEG = 1e-12


def scaled(rel: float, *magnitudes: float) -> float:
    """Return rel * max(1, |magnitudes...|)."""
    m = 1.0
    for v in magnitudes:
        a = abs(v)
        if a > m:
            m = a
    return rel * m
