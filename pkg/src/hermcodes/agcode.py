"""Evaluation codes C(A, B) on D with exact linear algebra over GF(q^2).

Generator matrices are dense uint8 arrays of field-element indices; rank and
kernel computations use table-driven Gaussian elimination, so everything is
exact.  Duality is the standard Euclidean inner product on GF(q^2)^n: the
dual code is literally the kernel of the generator matrix.

The minimum-distance oracle enumerates the full message space with an
odometer whose suffix sums are cached, so each visited codeword costs one
scaled-row addition; above the configured message budget it refuses rather
than approximate.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from hermcodes.curve import Curve, TwoPointDivisor, make_curve
from hermcodes.field import GF
from hermcodes.rrspace import monomial_basis, evaluate_monomial_over_d

try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False

#: default message-space budget: q^(2k) <= 2**26 message vectors
ORACLE_BUDGET_LOG2 = 26


class OracleInfeasibleError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the budget."""


@dataclass(frozen=True, eq=False)
class CodeMatrix:
    rows: np.ndarray  # (k', n) uint8, row r = basis monomial r over D
    divisor: TwoPointDivisor
    curve: Curve = field(repr=False)

    @property
    def n(self) -> int:
        return self.rows.shape[1]


@dataclass(frozen=True, eq=False)
class DualBasis:
    rows: np.ndarray  # (n - rank, n) uint8

    def __len__(self) -> int:
        return self.rows.shape[0]


def build_code(curve: Curve, A: int, B: int) -> CodeMatrix:
    """Generator matrix of C(A, B): monomial basis rows evaluated over D."""
    basis = monomial_basis(curve, A, B)
    if basis.monomials:
        rows = np.vstack([evaluate_monomial_over_d(curve, m) for m in basis.monomials])
    else:
        rows = np.zeros((0, curve.n), dtype=np.uint8)
    rows.setflags(write=False)
    return CodeMatrix(rows, TwoPointDivisor(A, B), curve)


@functools.lru_cache(maxsize=None)
def cached_code(q: int, A: int, B: int) -> CodeMatrix:
    return build_code(make_curve(q), A, B)


# ----------------------------------------------------------------------
# exact elimination over GF(q^2)
# ----------------------------------------------------------------------
def gf_rref(gf: GF, mat: np.ndarray) -> tuple[np.ndarray, list]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = np.array(mat, dtype=np.uint8, copy=True)
    if m.ndim != 2:
        raise ValueError("matrix expected")
    nrows, ncols = m.shape
    add, mul, neg, inv = gf.add_table, gf.mul_table, gf.neg_table, gf.inv_table
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = mul[inv[m[r, c]], m[r]]
        rest = np.nonzero(m[:, c])[0]
        for i2 in rest:
            if i2 != r:
                m[i2] = add[m[i2], mul[neg[m[i2, c]], m[r]]]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def matrix_rank(gf: GF, mat: np.ndarray) -> int:
    return len(gf_rref(gf, mat)[1])


def kernel_basis(gf: GF, mat: np.ndarray) -> np.ndarray:
    """Basis of {v : mat @ v = 0} as rows, (ncols - rank) x ncols."""
    mat = np.asarray(mat, dtype=np.uint8)
    ncols = mat.shape[1]
    reduced, pivots = gf_rref(gf, mat)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    out = np.zeros((len(free), ncols), dtype=np.uint8)
    for row, f in enumerate(free):
        out[row, f] = 1
        for prow, pcol in enumerate(pivots):
            out[row, pcol] = gf.neg_table[reduced[prow, f]]
    return out


def gf_dot(gf: GF, u: np.ndarray, v: np.ndarray) -> int:
    acc = 0
    for x in gf.mul_table[u, v]:
        acc = int(gf.add_table[acc, x])
    return acc


def gf_row_combination(gf: GF, coefs, rows: np.ndarray) -> np.ndarray:
    """Sum of coefs[i] * rows[i] over GF(q^2)."""
    acc = np.zeros(rows.shape[1], dtype=np.uint8)
    for c, row in zip(coefs, rows):
        if c:
            acc = gf.add_table[acc, gf.mul_table[c, row]]
    return acc


# ----------------------------------------------------------------------
# code-level operations
# ----------------------------------------------------------------------
def code_rank(M: CodeMatrix) -> int:
    return matrix_rank(M.curve.gf, M.rows)


@functools.lru_cache(maxsize=None)
def cached_rank(q: int, A: int, B: int) -> int:
    return code_rank(cached_code(q, A, B))


def dual_basis(M: CodeMatrix) -> DualBasis:
    """Rows spanning the Euclidean dual: the kernel of the generator rows."""
    rows = kernel_basis(M.curve.gf, M.rows)
    rows.setflags(write=False)
    return DualBasis(rows)


def is_full_space(curve: Curve, A: int, B: int, method: str = "auto") -> bool:
    """C(A, B) == GF(q^2)^n, by degree shortcut and (optionally) exact rank.

    method "degree" uses only the sufficient criterion
    A + B >= n + 2g - 1; "exact" computes the rank below that threshold;
    "auto" picks exact for q <= 4 and degree otherwise.
    """
    if A + B >= curve.full_space_degree:
        return True
    if method == "auto":
        method = "exact" if curve.q <= 4 else "degree"
    if method == "degree":
        return False
    if method != "exact":
        raise ValueError(f"unknown method {method!r}")
    return cached_rank(curve.q, A, B) == curve.n


def dual_word_on_support(M: CodeMatrix, support) -> np.ndarray | None:
    """A nonzero dual word supported inside `support`, if one exists.

    Exists iff the column submatrix on `support` has rank < |support|.
    """
    support = sorted(set(int(s) for s in support))
    if not support:
        raise ValueError("support must be nonempty")
    sub = M.rows[:, support]
    ker = kernel_basis(M.curve.gf, sub)
    if ker.shape[0] == 0:
        return None
    word = np.zeros(M.n, dtype=np.uint8)
    word[support] = ker[0]
    return word


# ----------------------------------------------------------------------
# exhaustive minimum distance
# ----------------------------------------------------------------------
def default_k_max(q: int) -> int:
    return int(ORACLE_BUDGET_LOG2 / math.log2(q * q))


def _weight_scan_impl(scaled, add):
    k = scaled.shape[0]
    nsym = scaled.shape[1]
    n = scaled.shape[2]
    digits = np.zeros(k, dtype=np.int64)
    suffix = np.zeros((k + 1, n), dtype=np.uint8)
    best = n + 1
    while True:
        t = 0
        while t < k and digits[t] == nsym - 1:
            digits[t] = 0
            t += 1
        if t == k:
            break
        digits[t] += 1
        w = 0
        for c in range(n):
            v = add[scaled[t, digits[t], c], suffix[t + 1, c]]
            suffix[t, c] = v
            if v != 0:
                w += 1
        for i in range(t):
            for c in range(n):
                suffix[i, c] = suffix[t, c]
        if 0 < w < best:
            best = w
    return best


if _HAVE_NUMBA:
    _weight_scan = numba.njit(cache=True, nogil=True)(_weight_scan_impl)
else:  # pragma: no cover
    _weight_scan = _weight_scan_impl


def min_distance_exhaustive(gf: GF, rows, k_max: int | None = None) -> int:
    """Minimum Hamming weight over all nonzero GF(q^2)-combinations of rows.

    Refuses (OracleInfeasibleError) when the message space q^(2k) exceeds
    the budget implied by k_max; never approximates.
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=np.uint8))
    k, n = rows.shape
    if k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    limit = default_k_max(gf.q) if k_max is None else k_max
    if k > limit:
        raise OracleInfeasibleError(
            f"{k} rows exceed the enumeration limit k_max={limit} "
            f"({gf.order}^{k} message vectors)"
        )
    scaled = np.ascontiguousarray(gf.mul_table[:, rows].transpose(1, 0, 2))
    best = int(_weight_scan(scaled, np.ascontiguousarray(gf.add_table)))
    if best > n:
        raise ValueError("all row combinations are zero; rows span nothing")
    return best


def dual_min_distance(curve: Curve, A: int, B: int, k_max: int | None = None) -> int:
    """Exhaustive d(C(A, B)^perp)."""
    M = cached_code(curve.q, A, B)
    dual = dual_basis(M)
    if len(dual) == 0:
        raise ValueError(f"C{(A, B)} is the full space; its dual is zero")
    return min_distance_exhaustive(curve.gf, dual.rows, k_max=k_max)


def primal_min_distance(curve: Curve, A: int, B: int, k_max: int | None = None) -> int:
    """Exhaustive d(C(A, B)), enumerating over an independent row basis."""
    M = cached_code(curve.q, A, B)
    reduced, pivots = gf_rref(curve.gf, M.rows)
    if len(pivots) == 0:
        raise ValueError(f"C{(A, B)} is the zero code")
    return min_distance_exhaustive(curve.gf, reduced, k_max=k_max)
