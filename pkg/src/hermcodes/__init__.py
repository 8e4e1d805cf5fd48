"""Two-point evaluation codes on Hermitian curves over GF(q^2).

Builds the codes C(A, B) from the divisor G = A*Pinf + B*P0, computes the
order (shift) bound on the dual minimum distance, evaluates both closed-form
distance families, and certifies them with brute-force oracles and explicit
minimum-weight witness supports at small q.
"""

from hermcodes.field import GF, make_field
from hermcodes.curve import Curve, RationalPoint, TwoPointDivisor, make_curve

__all__ = [
    "GF",
    "make_field",
    "Curve",
    "RationalPoint",
    "TwoPointDivisor",
    "make_curve",
]
