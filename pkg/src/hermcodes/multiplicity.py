"""Step multiplicities of the two-point divisor lattice, three ways.

m_pinf(A, B) lower-bounds the weight of any word orthogonal to C(A, B) but
not to C(A+1, B); m_p0 does the same for the P0 step.  The closed forms are
stated in shifted coordinates a = A - (2g-2), b = B with the "minus"
decompositions

    a = a0*(q+1) - a1,   b = b0*(q+1) - b1,   0 <= a1, b1 <= q,

which are unique.  Three independent computations are provided: the
piecewise closed form, its rewritten d*-relative form (an algebraic
identity), a direct lattice-point count of the defining solution regions,
and, for q <= 4, a definition-level oracle that searches monomial pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from hermcodes.curve import Curve
from hermcodes.rrspace import monomial_basis

Point = str  # "pinf" | "p0"


def _check_point(point: str) -> None:
    if point not in ("pinf", "p0"):
        raise ValueError(f"point must be 'pinf' or 'p0', got {point!r}")


def decompose_minus(q: int, v: int) -> tuple[int, int]:
    """Unique (v0, v1) with v = v0*(q+1) - v1 and 0 <= v1 <= q."""
    v1 = (-v) % (q + 1)
    return (v + v1) // (q + 1), v1


def decompose_plus(q: int, v: int) -> tuple[int, int]:
    """Unique (v0, v1) with v = v0*(q+1) + v1 and 0 <= v1 <= q."""
    v1 = v % (q + 1)
    return (v - v1) // (q + 1), v1


@dataclass(frozen=True)
class ShiftedParams:
    """Shifted coordinates (a, b) of G = (2g-2+a)*Pinf + b*P0 and their
    minus decompositions."""

    q: int
    a: int
    b: int
    a0: int
    a1: int
    b0: int
    b1: int

    @classmethod
    def from_shift(cls, q: int, a: int, b: int) -> "ShiftedParams":
        a0, a1 = decompose_minus(q, a)
        b0, b1 = decompose_minus(q, b)
        return cls(q, a, b, a0, a1, b0, b1)

    @property
    def dstar(self) -> int:
        return self.a + self.b

    @property
    def s(self) -> int:
        return self.a0 + self.b0


def mult_pinf_closed(q: int, a: int, b: int) -> int:
    """Closed form for the Pinf-step multiplicity at shifted (a, b)."""
    sp = ShiftedParams.from_shift(q, a, b)
    s, a1, b1 = sp.s, sp.a1, sp.b1
    if a1 < s:
        return (s - a1) * (q + 1) - b1 + a1 * q
    if a1 <= s + q - 1:
        return a1 * (q + s - a1) - min(a1, b1)
    return 0


def mult_p0_closed(q: int, a: int, b: int) -> int:
    """Closed form for the P0-step multiplicity; roles of a1 and b1 swap."""
    sp = ShiftedParams.from_shift(q, a, b)
    s, a1, b1 = sp.s, sp.a1, sp.b1
    if b1 < s:
        return (s - b1) * (q + 1) - a1 + b1 * q
    if b1 <= s + q - 1:
        return b1 * (q + s - b1) - min(a1, b1)
    return 0


def mult_pinf_rewritten(q: int, a: int, b: int) -> int:
    """d*-relative form of the Pinf multiplicity (algebraically identical)."""
    sp = ShiftedParams.from_shift(q, a, b)
    s, a1, b1 = sp.s, sp.a1, sp.b1
    if a1 < s:
        return sp.dstar
    if a1 <= s + q - 1:
        return sp.dstar + (a1 - s) * (q + 1 - a1) + max(0, b1 - a1)
    return 0


def mult_p0_rewritten(q: int, a: int, b: int) -> int:
    """d*-relative form of the P0 multiplicity.

    The second correction term is (b1 - a0 - b0)*(q + 1 - b1), mirroring the
    Pinf form; grid equality with the closed form pins this reading down.
    """
    sp = ShiftedParams.from_shift(q, a, b)
    s, a1, b1 = sp.s, sp.a1, sp.b1
    if b1 < s:
        return sp.dstar
    if b1 <= s + q - 1:
        return sp.dstar + (b1 - s) * (q + 1 - b1) + max(0, a1 - b1)
    return 0


def mult_rewritten(q: int, a: int, b: int, point: Point) -> int:
    _check_point(point)
    if point == "pinf":
        return mult_pinf_rewritten(q, a, b)
    return mult_p0_rewritten(q, a, b)


def mult_closed(q: int, a: int, b: int, point: Point) -> int:
    _check_point(point)
    if point == "pinf":
        return mult_pinf_closed(q, a, b)
    return mult_p0_closed(q, a, b)


def mult_lattice_count(q: int, a: int, b: int, point: Point) -> int:
    """Count the exponent pairs (i1, j1) of the defining solution regions.

    For the Pinf step the admissible leading exponents of f form the union

        { i1 <= a1 - 1,  0 <= j1 <= q - 1 + s - a1 }  (s = a0 + b0)
        { 0 <= i1 <= q,  0 <= j1 <= s - a1 - 1 }

    minus the row constraint (j1 = 0 requires i1 >= b1), which encodes the
    P0 pole cap on f.  The P0 step is the same count with a1 and b1
    swapped.  Degenerate parameter ranges make the regions empty, which is
    exactly how the vanishing branches arise.
    """
    _check_point(point)
    sp = ShiftedParams.from_shift(q, a, b)
    if point == "pinf":
        a1, b1 = sp.a1, sp.b1
    else:
        a1, b1 = sp.b1, sp.a1
    s = sp.s
    hi_outer = q - 1 + s - a1
    hi_inner = s - a1 - 1
    count = 0
    for j1 in range(0, max(hi_outer, hi_inner) + 1):
        for i1 in range(0, q + 1):
            in_region = (i1 <= a1 - 1 and j1 <= hi_outer) or j1 <= hi_inner
            if in_region and not (j1 == 0 and i1 < b1):
                count += 1
    return count


def mult_definition_count(curve: Curve, A: int, B: int, point: Point) -> int:
    """Definition-level oracle at raw coordinates (A, B), for q <= 4.

    Counts the pole orders i realized by monomial pairs (f, g) with
    f*g having pole order exactly A+1 at Pinf (resp. B+1 at P0), f in the
    one-step-larger space, and g drawn from L((A+1+B)*Pinf) (resp.
    L((A+B+1)*P0)); valuations of products are additive.
    """
    _check_point(point)
    q = curve.q
    if q > 4:
        raise ValueError("definition-level oracle is limited to q <= 4")
    qq = q + 1
    seen = set()
    if point == "pinf":
        fs = monomial_basis(curve, A + 1, B).monomials
        gs = monomial_basis(curve, A + 1 + B, 0).monomials
        for f in fs:
            pole = q * f.i + qq * f.j  # pole order of f at Pinf
            if not (-B <= pole <= A + 1) or pole in seen:
                continue
            for g in gs:
                ti, tj = f.i + g.i, f.j + g.j
                if q * ti + qq * tj == A + 1 and ti + qq * tj >= -B:
                    seen.add(pole)
                    break
    else:
        fs = monomial_basis(curve, A, B + 1).monomials
        gs = monomial_basis(curve, 0, A + B + 1).monomials
        for f in fs:
            pole = -(f.i + qq * f.j)  # pole order of f at P0
            if not (-A <= pole <= B + 1) or pole in seen:
                continue
            for g in gs:
                ti, tj = f.i + g.i, f.j + g.j
                if ti + qq * tj == -(B + 1) and q * ti + qq * tj <= A:
                    seen.add(pole)
                    break
    return len(seen)
