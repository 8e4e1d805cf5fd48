"""Closed-form minimum distances for the two-point codes, both families.

`dual_distance(q, A, B)` gives d(C(A, B)^perp).  The parameter plane splits
into a high-degree regime (deg G > deg K + q, or the middle band
deg K <= deg G <= deg K + q when G is equivalent to neither s*Pinf nor
t*P0) and a low-degree regime (the complement below the band's top).  The
high regime uses shifted coordinates a = A - (2g-2), b = B with minus
decompositions and evaluates

    d = d* + max{0, a1-s, b1-s, a1+b1-2s},     s = a0 + b0,

except the corner a1 = b1 = q, s < q, where d = d* + q - s.  The low regime
uses plus decompositions of the raw (A, B) and yields a0 + b0 + 2.  The two
sign conventions are never mixed.

`primal_distance(q, m, n)` gives d(C(m, n)) for 0 <= n <= q via the
piecewise-by-congruence formula family; inputs outside every stated range
return None, and overlapping ranges are asserted to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from hermcodes.multiplicity import ShiftedParams, decompose_plus

REGIME_HIGH = "high_degree"
REGIME_LOW = "low_degree"
REGIME_OUT = "out_of_scope"

#: high-regime case labels
CASES = ("1", "2", "2p", "3", "3p", "4", "maxform")


@dataclass(frozen=True)
class RegimeTag:
    regime: str
    case: Optional[str] = None


@dataclass(frozen=True)
class DualDistance:
    d: Optional[int]
    tag: RegimeTag
    shifted: Optional[ShiftedParams] = None


def genus(q: int) -> int:
    return q * (q - 1) // 2


def classify_regime(q: int, A: int, B: int) -> str:
    """Regime of G = A*Pinf + B*P0 as a function of degree and equivalence."""
    deg = A + B
    g = genus(q)
    if deg >= (q**3 - 1) + 2 * g - 1:
        return REGIME_OUT  # code is certainly the full space; no dual distance
    deg_k = 2 * g - 2
    if deg > deg_k + q:
        return REGIME_HIGH
    if deg < deg_k:
        return REGIME_LOW
    equivalent = (B % (q + 1) == 0) or (A % (q + 1) == 0)
    return REGIME_LOW if equivalent else REGIME_HIGH


def classify_case(q: int, A: int, B: int) -> RegimeTag:
    """Regime plus, in the high regime, the block case label.

    The printed cases tile the (a1, b1) square except the boundary strips
    where exactly one of a1, b1 equals q while both exceed s; those get the
    synthetic label "maxform" (the max-form value still applies there).
    When a1 = b1 both case 3 and 3' match with equal values; 3 is returned.
    """
    regime = classify_regime(q, A, B)
    if regime != REGIME_HIGH:
        return RegimeTag(regime)
    sp = ShiftedParams.from_shift(q, A - (2 * genus(q) - 2), B)
    s, a1, b1 = sp.s, sp.a1, sp.b1
    if a1 <= s and b1 <= s:
        case = "1"
    elif b1 <= s < a1:
        case = "2"
    elif a1 <= s < b1:
        case = "2p"
    elif a1 == q and b1 == q:
        case = "4"
    elif a1 == q or b1 == q:
        case = "maxform"
    elif a1 <= b1:
        case = "3"
    else:
        case = "3p"
    return RegimeTag(REGIME_HIGH, case)


def dual_distance(q: int, A: int, B: int) -> DualDistance:
    """Closed-form d(C(A, B)^perp) with its regime tag."""
    tag = classify_case(q, A, B)
    if tag.regime == REGIME_OUT:
        return DualDistance(None, tag)
    if tag.regime == REGIME_LOW:
        a0, _ = decompose_plus(q, A)
        b0, _ = decompose_plus(q, B)
        return DualDistance(a0 + b0 + 2, tag)
    sp = ShiftedParams.from_shift(q, A - (2 * genus(q) - 2), B)
    s, a1, b1 = sp.s, sp.a1, sp.b1
    if tag.case == "4":
        d = sp.dstar + q - s
    else:
        d = sp.dstar + max(0, a1 - s, b1 - s, a1 + b1 - 2 * s)
    return DualDistance(d, tag, sp)


def printed_case_value(q: int, A: int, B: int) -> Optional[int]:
    """Value of the printed high-regime case formula, if one applies.

    Used to cross-check that the max-form agrees with every printed case on
    its own block; returns None on the maxform boundary strips.
    """
    tag = classify_case(q, A, B)
    if tag.regime != REGIME_HIGH or tag.case == "maxform":
        return None
    sp = ShiftedParams.from_shift(q, A - (2 * genus(q) - 2), B)
    s, a1, b1 = sp.s, sp.a1, sp.b1
    if tag.case == "1":
        return sp.dstar
    if tag.case == "2":
        return sp.dstar + a1 - s
    if tag.case == "2p":
        return sp.dstar + b1 - s
    if tag.case in ("3", "3p"):
        return sp.dstar + a1 + b1 - 2 * s
    return sp.dstar + q - s  # case 4


# ----------------------------------------------------------------------
# the primal-code formula family, d(C(m, n)) for 0 <= n <= q
# ----------------------------------------------------------------------
def _split_base_q(q: int, m: int) -> tuple[int, int]:
    """m = a*q + b with 0 <= b < q (works for negative m)."""
    b = m % q
    return (m - b) // q, b


def _in_wide_index_set(q: int, m: int) -> bool:
    """Membership in the admissible index set for the n = q family."""
    a, b = _split_base_q(q, m)
    if b <= a:
        return True
    if b == q - 1 and 0 <= a <= q - 2:
        return True
    return m == -1


def _in_excluded_index_set(q: int, m: int) -> bool:
    a, b = _split_base_q(q, m)
    if b + q * q <= a:
        return True
    return b == q - 1 and a >= q * q - 2


def primal_distance_cases(q: int, m: int, n: int) -> list:
    """All matching (label, value) pairs of the piecewise formulas."""
    if not 0 <= n <= q:
        raise ValueError(f"n must be in [0, q], got {n}")
    a, b = _split_base_q(q, m)
    rho = q * q - a
    out = []
    if n == 0:
        if not (b <= a <= min(b + q * q - 1, q * q + q - 3)):
            return out
        if b <= a <= b + q * q - q - 1:
            out.append(("n0-i", q**3 - 1 - m))
        if 1 <= rho <= q and 0 <= b <= q - rho:
            out.append(("n0-ii", rho * q - 1))
        if q * q - 1 <= a <= min(b + q * q - 1, q * q + q - 3):
            out.append(("n0-iii", q * q + q - a - 2))
        return out
    if n == q:
        if not (_in_wide_index_set(q, m) and not _in_excluded_index_set(q, m)):
            return out
        if (0 <= b <= q - 2 and b <= a <= b + q * q - q - 1) or (
            b == q - 1 and -1 <= a <= q * q - 3
        ):
            out.append(("nq-A", q**3 - q - m - 1))
        if b + q * q - q <= a <= q * q - 2:
            out.append(("nq-B", (q * q - a - 1) * q))
        if 0 <= b <= q - 2 and q * q - 1 <= a <= b + q * q - 1:
            out.append(("nq-C", q * q + q - a - 2))
        return out
    # 1 <= n <= q - 1; m must be a nonnegative integer here
    if m < 0:
        return out
    if b <= a <= q - (n + 1):
        out.append(("mid-I", q**3 - 1 - m))
    if (0 <= b <= q - 2 and q * q - 1 <= a <= b + q * q - 1) or (
        b == q - 1 and q * q - 1 <= a <= q * q + q - (n + 3)
    ):
        out.append(("mid-II", q * q + q - a - 2))
    if (
        (b == 0 and q - n <= a <= q * q - (n + 1))
        or (
            1 <= b <= q - 2
            and max(b, q - n) <= a <= min(b + q * q - (q + 1), q * q - (n + 2))
        )
        or (b == q - 1 and q - (n + 1) <= a <= q * q - (n + 2))
    ):
        out.append(("mid-III", q**3 - 1 - (m + n)))
    if 1 <= b and n + 1 <= rho and rho + b <= q:
        out.append(("mid-IV", rho * q - (n + 1)))
    if rho <= n + 1 and q < rho + b:
        out.append(("mid-V", rho * (q - 1) - (b - 1)))
    if 2 <= rho <= n and rho + b <= q:
        if n <= q - 2 or (n == q - 1 and rho + b < q):
            out.append(("mid-VI-1", rho * (q - 1)))
        if n == q - 1 and rho + b == q:
            out.append(("mid-VI-2", (rho - 1) * q))
    return out


def primal_distance(q: int, m: int, n: int) -> Optional[int]:
    """d(C(m, n)) when some formula range applies, else None.

    Ranges that overlap at boundaries must agree; disagreement raises.
    """
    matches = primal_distance_cases(q, m, n)
    if not matches:
        return None
    values = {v for _, v in matches}
    if len(values) != 1:
        raise AssertionError(f"inconsistent formula overlap at {(q, m, n)}: {matches}")
    return values.pop()


# ----------------------------------------------------------------------
# table generation
# ----------------------------------------------------------------------
def distance_table(q: int, m_values, n_values, family: str = "dual") -> list:
    """Rows of the (m, n) distance grid; None cells render as blanks."""
    if family not in ("dual", "primal"):
        raise ValueError(f"unknown family {family!r}")
    rows = []
    for m in m_values:
        row = []
        for n in n_values:
            if family == "dual":
                row.append(dual_distance(q, m, n).d)
            else:
                row.append(primal_distance(q, m, n))
        rows.append(row)
    return rows
