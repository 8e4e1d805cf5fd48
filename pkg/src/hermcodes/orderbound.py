"""Order (shift) bound for d(C(A, B)^perp) by path maximization.

Starting from (A, B), divisor coefficients are raised one point at a time;
each edge carries the step multiplicity at its source cell, and a path ends
when the code reaches the full space.  The bound is the maximum over all
monotone paths of the minimum edge multiplicity along the path.

A zero multiplicity means the code does not grow across that edge (no word
can become non-orthogonal there), so zero edges are traversed freely instead
of annihilating the path minimum.  Terminal detection is exact-rank for
q <= 4 and the degree criterion A + B >= n + 2g - 1 for larger q; the degree
criterion is sufficient for fullness, so it can only lengthen paths and
weaken (never invalidate) the bound.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import NamedTuple

from hermcodes import agcode
from hermcodes.curve import Curve, make_curve
from hermcodes.multiplicity import (
    ShiftedParams,
    mult_p0_closed,
    mult_pinf_closed,
)

#: path value of a terminal (full-space) node; a distinct non-integer
UNBOUNDED = math.inf


class FullSpaceError(ValueError):
    """The queried code is already the full space."""


class PathStep(NamedTuple):
    A: int
    B: int
    edge: str  # "pinf" | "p0"
    mult: int


@dataclass(frozen=True)
class BoundResult:
    bound: int
    path: tuple


class OrderBoundTable:
    """Memoized path-maximization over one curve's divisor lattice.

    The memo admits concurrent readers; recomputation writes identical
    values, so racing writers are benign.
    """

    def __init__(self, curve: Curve, terminal: str = "auto"):
        if terminal == "auto":
            terminal = "exact" if curve.q <= 4 else "degree"
        if terminal not in ("exact", "degree"):
            raise ValueError(f"unknown terminal mode {terminal!r}")
        self.curve = curve
        self.terminal_mode = terminal
        self._shift = 2 * curve.genus - 2
        self._values: dict = {}
        self._choices: dict = {}
        self._terminal: dict = {}

    # ------------------------------------------------------------------
    def is_terminal(self, A: int, B: int) -> bool:
        key = (A, B)
        hit = self._terminal.get(key)
        if hit is None:
            hit = agcode.is_full_space(self.curve, A, B, method=self.terminal_mode)
            self._terminal[key] = hit
        return hit

    def edge_mults(self, A: int, B: int) -> tuple[int, int]:
        a = A - self._shift
        return mult_pinf_closed(self.curve.q, a, B), mult_p0_closed(self.curve.q, a, B)

    # ------------------------------------------------------------------
    def value(self, A: int, B: int):
        """Bound value of cell (A, B); UNBOUNDED on terminal cells."""
        memo = self._values
        if (A, B) in memo:
            return memo[(A, B)]
        stack = [(A, B)]
        while stack:
            cell = stack[-1]
            if cell in memo:
                stack.pop()
                continue
            ca, cb = cell
            if self.is_terminal(ca, cb):
                memo[cell] = UNBOUNDED
                stack.pop()
                continue
            succ_p = (ca + 1, cb)
            succ_0 = (ca, cb + 1)
            missing = [s for s in (succ_p, succ_0) if s not in memo]
            if missing:
                stack.extend(missing)
                continue
            m_p, m_0 = self.edge_mults(ca, cb)
            cand_p = memo[succ_p] if m_p == 0 else min(m_p, memo[succ_p])
            cand_0 = memo[succ_0] if m_0 == 0 else min(m_0, memo[succ_0])
            memo[cell] = max(cand_p, cand_0)
            self._choices[cell] = "pinf" if cand_p >= cand_0 else "p0"
            stack.pop()
        return memo[(A, B)]

    def bound(self, A: int, B: int) -> BoundResult:
        if self.is_terminal(A, B):
            raise FullSpaceError(f"C{(A, B)} is already the full space")
        value = self.value(A, B)
        if value is UNBOUNDED:  # cannot happen: some edge grows before full
            raise AssertionError("unbounded path value on a non-terminal cell")
        path = []
        ca, cb = A, B
        while not self.is_terminal(ca, cb):
            choice = self._choices[(ca, cb)]
            m_p, m_0 = self.edge_mults(ca, cb)
            if choice == "pinf":
                path.append(PathStep(ca, cb, "pinf", m_p))
                ca += 1
            else:
                path.append(PathStep(ca, cb, "p0", m_0))
                cb += 1
        return BoundResult(int(value), tuple(path))


@functools.lru_cache(maxsize=None)
def get_bound_table(q: int, terminal: str = "auto") -> OrderBoundTable:
    return OrderBoundTable(make_curve(q), terminal)


def order_bound(curve: Curve, A: int, B: int, terminal: str = "auto") -> BoundResult:
    """Order-bound value and one witnessing optimal path for C(A, B)^perp."""
    return get_bound_table(curve.q, terminal).bound(A, B)


# ----------------------------------------------------------------------
# closed-form minima of the two designed path segments
# ----------------------------------------------------------------------
def segment_min_pinf(q: int, a: int, b: int) -> int:
    """Min multiplicity over the Pinf run from a1 down to a0 + b0.

    The run covers shifted cells (a, b), (a+1, b), ..., (a + a1 - s, b),
    where s = a0 + b0 <= a1.  When b1 <= s or a1 = q the minimum is
    d* + a1 - s (identically s*q - b1); when s <= a1 <= b1 < q it is
    d* + a1 + b1 - 2s (identically s*(q-1)).  Hypotheses are enforced and
    the sweep is asserted against the matching closed form.
    """
    sp = ShiftedParams.from_shift(q, a, b)
    s, a1, b1 = sp.s, sp.a1, sp.b1
    if not (0 <= s <= a1):
        raise ValueError(f"segment needs 0 <= a0+b0 <= a1; got a1={a1}, s={s}")
    if b1 <= s or a1 == q:
        expected = sp.dstar + a1 - s
    elif a1 <= b1 < q:
        expected = sp.dstar + a1 + b1 - 2 * s
    else:
        raise ValueError(f"segment hypotheses fail for a1={a1}, b1={b1}, s={s}")
    swept = min(mult_pinf_closed(q, a + t, b) for t in range(a1 - s + 1))
    if swept != expected:
        raise AssertionError(f"segment sweep {swept} != closed form {expected}")
    return swept


def segment_min_p0(q: int, a: int, b: int) -> int:
    """P0-direction mirror of segment_min_pinf (roles of a1, b1 swapped)."""
    sp = ShiftedParams.from_shift(q, a, b)
    s, a1, b1 = sp.s, sp.a1, sp.b1
    if not (0 <= s <= b1):
        raise ValueError(f"segment needs 0 <= a0+b0 <= b1; got b1={b1}, s={s}")
    if a1 <= s or b1 == q:
        expected = sp.dstar + b1 - s
    elif b1 <= a1 < q:
        expected = sp.dstar + a1 + b1 - 2 * s
    else:
        raise ValueError(f"segment hypotheses fail for a1={a1}, b1={b1}, s={s}")
    swept = min(mult_p0_closed(q, a, b + t) for t in range(b1 - s + 1))
    if swept != expected:
        raise AssertionError(f"segment sweep {swept} != closed form {expected}")
    return swept
