"""The Hermitian curve y^q + y = x^(q+1) over GF(q^2).

Provides the rational point enumeration (q^3 + 1 points), the distinguished
points P0 = (0, 0) and Pinf, the evaluation set D of the n = q^3 - 1 points
avoiding P0 and Pinf, monomial valuations at the two distinguished points,
and the arithmetic test for linear equivalence of A*Pinf + B*P0 to a single
point multiple.

An affine point satisfies trace(y) = norm(x); since the trace is surjective
onto GF(q), every x-value carries exactly q affine points.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from hermcodes.field import GF, make_field


class TwoPointDivisor(NamedTuple):
    """The divisor G = A*Pinf + B*P0."""

    A: int
    B: int

    @property
    def degree(self) -> int:
        return self.A + self.B


@dataclass(frozen=True)
class RationalPoint:
    """A rational point: affine (x, y) as field-element indices, or Pinf."""

    x: Optional[int]
    y: Optional[int]

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self) -> str:
        if self.is_infinity:
            return "Pinf"
        return f"({self.x},{self.y})"


PINF = RationalPoint(None, None)


class Curve:
    """Immutable context for one Hermitian curve; all operations are pure.

    `points` lists all q^3 + 1 rational points with Pinf first and affine
    points in lexicographic (x, y) index order.  `D` is the same ordering
    restricted to the n = q^3 - 1 points with P0 and Pinf removed.
    """

    def __init__(self, gf: GF):
        self.gf = gf
        self.q = gf.q
        self.genus = gf.q * (gf.q - 1) // 2
        self.n = gf.q**3 - 1

        affine = []
        for x in gf.elements():
            nx = gf.norm_to_subfield(x)
            for y in gf.elements():
                if gf.trace_to_subfield(y) == nx:
                    affine.append(RationalPoint(x, y))
        self.points: tuple = (PINF,) + tuple(affine)
        self.p0 = RationalPoint(0, 0)
        self.D: tuple = tuple(p for p in affine if not (p.x == 0 and p.y == 0))
        self._d_index = {p: i for i, p in enumerate(self.D)}
        # column-aligned coordinate arrays for fast evaluation over D
        self.d_x = np.array([p.x for p in self.D], dtype=np.uint8)
        self.d_y = np.array([p.y for p in self.D], dtype=np.uint8)
        self.d_x.setflags(write=False)
        self.d_y.setflags(write=False)

    # ------------------------------------------------------------------
    def contains(self, x: int, y: int) -> bool:
        gf = self.gf
        return gf.trace_to_subfield(y) == gf.norm_to_subfield(x)

    def d_index(self, point: RationalPoint) -> int:
        return self._d_index[point]

    @property
    def full_space_degree(self) -> int:
        """Divisor degree past which C(A, B) is guaranteed the full space."""
        return self.n + 2 * self.genus - 1

    # ------------------------------------------------------------------
    # valuations of the monomial x^i y^j at the two distinguished points
    # ------------------------------------------------------------------
    def valuation_pinf(self, i: int, j: int) -> int:
        if not 0 <= i <= self.q:
            raise ValueError(f"monomial x-exponent must be in [0, q], got {i}")
        return -(self.q * i + (self.q + 1) * j)

    def valuation_p0(self, i: int, j: int) -> int:
        if not 0 <= i <= self.q:
            raise ValueError(f"monomial x-exponent must be in [0, q], got {i}")
        return i + (self.q + 1) * j

    # ------------------------------------------------------------------
    def equiv_to_point_multiple(self, A: int, B: int) -> dict:
        """Whether A*Pinf + B*P0 is equivalent to s*Pinf or to t*P0.

        The class of P0 - Pinf has order q + 1 (the divisor of y is
        (q+1)*(P0 - Pinf)), so the test is divisibility by q + 1.
        """
        return {
            "equiv_sPinf": B % (self.q + 1) == 0,
            "equiv_tP0": A % (self.q + 1) == 0,
        }

    def point_records(self) -> list:
        """CSV-ready rows (index, x-index, y-index); Pinf encoded as -1."""
        rows = []
        for idx, p in enumerate(self.points):
            if p.is_infinity:
                rows.append((idx, -1, -1))
            else:
                rows.append((idx, p.x, p.y))
        return rows

    def __repr__(self) -> str:
        return f"Curve(q={self.q}, genus={self.genus}, n={self.n})"


@functools.lru_cache(maxsize=None)
def make_curve(q: int) -> Curve:
    return Curve(make_field(q))
