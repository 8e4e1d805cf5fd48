"""Field arithmetic: axioms checked exhaustively for small q, randomized for q=8,9."""

import random

import pytest

from hermcodes.field import make_field, _is_irreducible


def test_make_field_orders():
    assert make_field(2).order == 4
    assert make_field(8).order == 64


def test_make_field_rejects_non_prime_power():
    with pytest.raises(ValueError):
        make_field(6)
    with pytest.raises(ValueError):
        make_field(1)
    with pytest.raises(ValueError):
        make_field(10)


def test_modulus_is_irreducible():
    for q in (2, 3, 4, 5, 7, 8, 9):
        gf = make_field(q)
        assert len(gf.modulus) == 2 * gf.e + 1
        assert gf.modulus[-1] == 1
        assert _is_irreducible(gf.modulus, gf.p)


def test_make_field_deterministic():
    a = make_field.__wrapped__(3)
    b = make_field.__wrapped__(3)
    assert a.modulus == b.modulus
    assert a.generator == b.generator
    assert (a.mul_table == b.mul_table).all()


def test_identities():
    gf = make_field(4)
    for a in gf.elements():
        assert gf.add(0, a) == a
        assert gf.mul(1, a) == a
        assert gf.mul(0, a) == 0
        assert gf.add(a, gf.neg(a)) == 0


def test_inverses_exhaustive_q4():
    gf = make_field(4)
    for a in gf.nonzero_elements():
        assert gf.mul(a, gf.inv(a)) == 1


def test_inv_zero_raises():
    gf = make_field(3)
    with pytest.raises(ZeroDivisionError):
        gf.inv(0)


def test_lagrange_q3():
    gf = make_field(3)
    for a in gf.nonzero_elements():
        assert gf.power(a, gf.order - 1) == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_field_axioms_exhaustive(q):
    gf = make_field(q)
    elems = list(gf.elements())
    for a in elems:
        for b in elems:
            assert gf.add(a, b) == gf.add(b, a)
            assert gf.mul(a, b) == gf.mul(b, a)
            for c in elems[:: max(1, q // 2)]:
                assert gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c))
                assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
                assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))


@pytest.mark.parametrize("q", [8, 9])
def test_field_axioms_randomized(q):
    gf = make_field(q)
    rng = random.Random(q)
    for _ in range(300):
        a, b, c = (rng.randrange(gf.order) for _ in range(3))
        assert gf.add(a, b) == gf.add(b, a)
        assert gf.mul(a, b) == gf.mul(b, a)
        assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))
        assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
        if a:
            assert gf.mul(a, gf.inv(a)) == 1


def test_enumerate_yields_distinct_canonical_elements():
    for q in (2, 3, 4, 5, 8, 9):
        gf = make_field(q)
        elems = list(gf.elements())
        assert len(elems) == q * q
        assert len({gf.coeffs(a) for a in elems}) == q * q
        for a in elems:
            assert gf.from_coeffs(gf.coeffs(a)) == a


def test_generator_order():
    for q in (2, 3, 4, 5, 8, 9):
        gf = make_field(q)
        assert gf.element_order(gf.generator) == gf.order - 1


def test_frobenius_zero_and_involution():
    gf = make_field(3)
    assert gf.frobenius(0) == 0
    for a in gf.elements():
        assert gf.frobenius(gf.frobenius(a)) == a
        assert gf.frobenius(a) == gf.power(a, gf.q)


def test_frobenius_fixed_points_q4():
    # exhaustive scan of all 16 elements: exactly q are fixed
    gf = make_field(4)
    fixed = [a for a in gf.elements() if gf.frobenius(a) == a]
    assert len(fixed) == 4
    assert fixed == gf.subfield_elements()


def test_subfield_membership_test():
    for q in (2, 3, 4, 5, 8, 9):
        gf = make_field(q)
        assert len(gf.subfield_elements()) == q


def test_trace_norm_land_in_subfield():
    gf = make_field(4)
    for a in gf.elements():
        assert gf.in_subfield(gf.trace_to_subfield(a))
        assert gf.in_subfield(gf.norm_to_subfield(a))
    assert gf.norm_to_subfield(0) == 0


def test_trace_fibers_q3():
    # exhaustive scan of all 9 elements: every subfield value hit q times
    gf = make_field(3)
    fibers = {t: 0 for t in gf.subfield_elements()}
    for y in gf.elements():
        fibers[gf.trace_to_subfield(y)] += 1
    assert all(count == 3 for count in fibers.values())


def test_trace_linearity():
    gf = make_field(5)
    for a in gf.elements():
        for b in gf.elements():
            assert gf.trace_to_subfield(gf.add(a, b)) == gf.add(
                gf.trace_to_subfield(a), gf.trace_to_subfield(b)
            )


def test_power_negative_exponent():
    gf = make_field(3)
    for a in gf.nonzero_elements():
        assert gf.mul(gf.power(a, -1), a) == 1
        assert gf.power(a, -2) == gf.inv(gf.mul(a, a))
