"""Exact arithmetic in GF(q^2) and its subfield GF(q), for prime powers q.

Elements are plain integers in [0, q^2): the little-endian radix-p encoding
of a length-2e coefficient vector over GF(p), where q = p^e.  That integer
is also the canonical serialization used in CSV/JSON output.  The defining
modulus is the first irreducible monic polynomial of degree 2e over GF(p)
in deterministic search order (non-leading coefficients read as a base-p
integer), so the same q always yields the same field.

Arithmetic is table driven: add/mul/neg/inv tables are built once at
construction from polynomial-basis arithmetic.  The polynomial basis is the
semantic contract; the tables are only an accelerator.  Contexts are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import functools

import numpy as np


def _factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"q must be a prime power >= 2, got {q}")
    p = None
    for cand in range(2, q + 1):
        if q % cand == 0:
            p = cand
            break
    e = 0
    n = q
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise ValueError(f"q must be a prime power, got {q}")
    return p, e


def _poly_mulmod(a: tuple, b: tuple, modulus: tuple, p: int) -> tuple:
    """Multiply two coefficient tuples modulo `modulus` over GF(p)."""
    deg = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % p
    # reduce: x^deg = -modulus[:deg]
    for k in range(len(prod) - 1, deg - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i in range(deg):
                prod[k - deg + i] = (prod[k - deg + i] - c * modulus[i]) % p
    out = prod[:deg]
    out += [0] * (deg - len(out))
    return tuple(out)


def _poly_divides(d: tuple, f: tuple, p: int) -> bool:
    """True if monic polynomial d divides f over GF(p)."""
    rem = list(f)
    dd = len(d) - 1
    while len(rem) - 1 >= dd:
        lead = rem[-1]
        if lead:
            shift = len(rem) - 1 - dd
            for i, c in enumerate(d):
                rem[shift + i] = (rem[shift + i] - lead * c) % p
        rem.pop()
    return all(c == 0 for c in rem)


def _is_irreducible(f: tuple, p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg(f)/2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for idx in range(p**d):
            cand = _digits(idx, p, d) + (1,)
            if _poly_divides(cand, f, p):
                return False
    return True


def _digits(n: int, p: int, length: int) -> tuple:
    out = []
    for _ in range(length):
        out.append(n % p)
        n //= p
    return tuple(out)


def _find_modulus(p: int, deg: int) -> tuple:
    """First irreducible monic polynomial of degree `deg` over GF(p).

    Candidates are ordered by their non-leading coefficient vector read as a
    little-endian base-p integer, which makes the choice reproducible.
    """
    for idx in range(p**deg):
        cand = _digits(idx, p, deg) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {deg} over GF({p})")


class GF:
    """Arithmetic context for GF(q^2), with the subfield GF(q) built in.

    Elements are ints in [0, q^2).  All operations are pure; the context is
    immutable after construction.
    """

    def __init__(self, q: int):
        p, e = _factor_prime_power(q)
        self.q = q
        self.p = p
        self.e = e
        self.deg = 2 * e
        self.order = q * q
        self.modulus = _find_modulus(p, self.deg)

        n = self.order
        coeffs = [_digits(i, p, self.deg) for i in range(n)]
        self._coeffs = coeffs
        index = {c: i for i, c in enumerate(coeffs)}

        add = np.zeros((n, n), dtype=np.uint8)
        mul = np.zeros((n, n), dtype=np.uint8)
        neg = np.zeros(n, dtype=np.uint8)
        for a in range(n):
            ca = coeffs[a]
            neg[a] = index[tuple((-c) % p for c in ca)]
            for b in range(a, n):
                cb = coeffs[b]
                s = index[tuple((x + y) % p for x, y in zip(ca, cb))]
                add[a, b] = s
                add[b, a] = s
                m = index[_poly_mulmod(ca, cb, self.modulus, p)]
                mul[a, b] = m
                mul[b, a] = m
        inv = np.zeros(n, dtype=np.uint8)
        for a in range(1, n):
            for b in range(1, n):
                if mul[a, b] == 1:
                    inv[a] = b
                    break
        add.setflags(write=False)
        mul.setflags(write=False)
        neg.setflags(write=False)
        inv.setflags(write=False)
        self.add_table = add
        self.mul_table = mul
        self.neg_table = neg
        self.inv_table = inv
        self.generator = self._find_generator()

    # ------------------------------------------------------------------
    # element arithmetic
    # ------------------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, k: int) -> int:
        """a**k by square and multiply; negative k inverts first."""
        if k < 0:
            a = self.inv(a)
            k = -k
        result = 1
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def frobenius(self, a: int) -> int:
        """The q-power map a -> a^q; fixes exactly the subfield GF(q)."""
        return self.power(a, self.q)

    def trace_to_subfield(self, a: int) -> int:
        """a + a^q, an element of GF(q)."""
        return self.add(a, self.frobenius(a))

    def norm_to_subfield(self, a: int) -> int:
        """a^(q+1), an element of GF(q)."""
        return self.power(a, self.q + 1)

    def in_subfield(self, a: int) -> bool:
        return self.frobenius(a) == a

    # ------------------------------------------------------------------
    # enumeration / representation
    # ------------------------------------------------------------------
    def elements(self) -> range:
        return range(self.order)

    def nonzero_elements(self) -> range:
        return range(1, self.order)

    def subfield_elements(self) -> list[int]:
        return [a for a in self.elements() if self.in_subfield(a)]

    def coeffs(self, a: int) -> tuple:
        """Little-endian coefficient vector of `a` over GF(p)."""
        return self._coeffs[a]

    def from_coeffs(self, coeffs) -> int:
        val = 0
        for c in reversed(list(coeffs)):
            val = val * self.p + (c % self.p)
        return val

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 is not in the multiplicative group")
        k = 1
        x = a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def _find_generator(self) -> int:
        target = self.order - 1
        for a in range(2, self.order):
            if self.element_order(a) == target:
                return a
        raise AssertionError("multiplicative group of a finite field is cyclic")

    def __repr__(self) -> str:
        return f"GF(q={self.q}, p={self.p}, e={self.e}, modulus={self.modulus})"


@functools.lru_cache(maxsize=None)
def make_field(q: int) -> GF:
    """Deterministic GF(q^2) context for a prime power q (cached)."""
    return GF(q)
