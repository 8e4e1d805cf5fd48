"""Monomial bases of the spaces L(A*Pinf + B*P0) and their dimensions.

The space is spanned by the monomials x^i y^j with 0 <= i <= q and j any
integer such that both valuation conditions hold:

    q*i + (q+1)*j <= A      (pole order at Pinf at most A)
    i + (q+1)*j   >= -B     (pole order at P0 at most B)

Within one basis the Pinf pole orders q*i + (q+1)*j are pairwise distinct
(the pole order determines i mod q+1 and hence (i, j)), which certifies
linear independence; completeness is validated by the Riemann-Roch
dimension checks in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from hermcodes.curve import Curve, RationalPoint, TwoPointDivisor


class Monomial(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class RRBasis:
    divisor: TwoPointDivisor
    monomials: tuple

    def __len__(self) -> int:
        return len(self.monomials)

    def records(self, curve: Curve) -> list:
        """JSON-ready rows (i, j, pole order at Pinf, pole order at P0)."""
        return [
            {
                "i": m.i,
                "j": m.j,
                "poleOrderPinf": -curve.valuation_pinf(m.i, m.j),
                "poleOrderP0": -curve.valuation_p0(m.i, m.j),
            }
            for m in self.monomials
        ]


def monomial_basis(curve: Curve, A: int, B: int) -> RRBasis:
    """Basis of L(A*Pinf + B*P0), sorted by strictly increasing Pinf pole order."""
    q = curve.q
    monos = []
    for i in range(q + 1):
        # j bounds from  q*i + (q+1)*j <= A  and  i + (q+1)*j >= -B
        j_hi = (A - q * i) // (q + 1)
        j_lo = -((B + i) // (q + 1))
        for j in range(j_lo, j_hi + 1):
            monos.append(Monomial(i, j))
    monos.sort(key=lambda m: -curve.valuation_pinf(m.i, m.j))
    return RRBasis(TwoPointDivisor(A, B), tuple(monos))


def rr_dim(curve: Curve, A: int, B: int) -> int:
    return len(monomial_basis(curve, A, B).monomials)


def evaluate_monomial(curve: Curve, m: Monomial, point: RationalPoint) -> int:
    """x^i * y^j at an affine point with y != 0 (i.e. a point of D)."""
    if point.is_infinity or point.y == 0:
        raise ValueError(f"cannot evaluate monomials at {point}")
    gf = curve.gf
    return gf.mul(gf.power(point.x, m.i), gf.power(point.y, m.j))


def evaluate_monomial_over_d(curve: Curve, m: Monomial) -> np.ndarray:
    """Row vector of x^i y^j over all points of D, in canonical order."""
    gf = curve.gf
    xpow = np.zeros(gf.order, dtype=np.uint8)
    ypow = np.zeros(gf.order, dtype=np.uint8)
    for a in gf.elements():
        xpow[a] = gf.power(a, m.i)
    for a in gf.nonzero_elements():
        ypow[a] = gf.power(a, m.j)
    return gf.mul_table[xpow[curve.d_x], ypow[curve.d_y]]
