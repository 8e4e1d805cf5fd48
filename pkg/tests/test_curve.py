"""Curve enumeration, valuations, and the divisor-class divisibility test."""

import pytest

from hermcodes.curve import Curve, make_curve
from hermcodes.field import make_field


def brute_point_count(q):
    """Independent oracle: scan all (x, y) pairs against the curve equation."""
    gf = make_field(q)
    count = 1  # Pinf
    for x in gf.elements():
        for y in gf.elements():
            if gf.trace_to_subfield(y) == gf.norm_to_subfield(x):
                count += 1
    return count


@pytest.mark.parametrize("q,expected", [(2, 9), (4, 65), (8, 513)])
def test_point_counts(q, expected):
    curve = make_curve(q)
    assert len(curve.points) == expected
    assert brute_point_count(q) == expected


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_point_count_formula(q):
    curve = make_curve(q)
    assert len(curve.points) == q**3 + 1
    assert len(curve.D) == q**3 - 1
    assert curve.genus == q * (q - 1) // 2


def test_points_deterministic_order():
    a = make_curve(3)
    b = Curve(make_field(3))
    assert a.points == b.points
    assert a.points[0].is_infinity
    affine = a.points[1:]
    assert sorted(affine, key=lambda p: (p.x, p.y)) == list(affine)


def test_affine_points_on_curve():
    curve = make_curve(4)
    for p in curve.points[1:]:
        assert curve.contains(p.x, p.y)


def test_fiber_property():
    # trace surjectivity: every x has exactly q affine points above it
    for q in (2, 3, 4, 5):
        curve = make_curve(q)
        fibers = {}
        for p in curve.points[1:]:
            fibers[p.x] = fibers.get(p.x, 0) + 1
        assert all(c == q for c in fibers.values())
        assert len(fibers) == q * q


def test_d_excludes_the_two_base_points_and_y_is_nonzero():
    for q in (2, 3, 4):
        curve = make_curve(q)
        for p in curve.D:
            assert not p.is_infinity
            assert (p.x, p.y) != (0, 0)
            # y = 0 forces x = 0, i.e. P0, which is excluded
            assert p.y != 0


def test_valuations():
    curve = make_curve(2)
    q = 2
    # y has a pole of order q+1 at Pinf and a zero of order q+1 at P0
    assert curve.valuation_pinf(0, 1) == -(q + 1)
    assert curve.valuation_p0(0, 1) == q + 1
    assert curve.valuation_pinf(0, 0) == 0
    assert curve.valuation_p0(0, 0) == 0
    # x/y at q=2
    assert curve.valuation_pinf(1, -1) == 1
    assert curve.valuation_p0(1, -1) == -2


def test_valuation_x_range_checked():
    curve = make_curve(3)
    with pytest.raises(ValueError):
        curve.valuation_pinf(4, 0)
    with pytest.raises(ValueError):
        curve.valuation_p0(-1, 0)


def test_valuations_match_zero_pole_counts():
    # deg (x) = 0 and deg (y) = 0 when counting all zeros with multiplicity:
    # x has q affine zeros (the x=0 fiber counts P0 once with multiplicity 1,
    # the rest simple) against pole order q at Pinf; y vanishes only at P0.
    for q in (2, 3):
        curve = make_curve(q)
        x_zero_fiber = [p for p in curve.points[1:] if p.x == 0]
        assert len(x_zero_fiber) == q
        y_zeros = [p for p in curve.points[1:] if p.y == 0]
        assert y_zeros == [curve.p0]


def test_equiv_to_point_multiple():
    c8 = make_curve(8)
    assert c8.equiv_to_point_multiple(82, 3) == {
        "equiv_sPinf": False,
        "equiv_tP0": False,
    }
    assert c8.equiv_to_point_multiple(17, 0)["equiv_sPinf"] is True
    c2 = make_curve(2)
    assert c2.equiv_to_point_multiple(3, 3) == {
        "equiv_sPinf": True,
        "equiv_tP0": True,
    }


def test_dihedral_generators_map_curve_to_curve():
    # sigma(x,y) = (x/y, 1/y) and rho_a(x,y) = (ax, a^2 y) for a in GF(q)*
    for q in (2, 3, 4, 5):
        curve = make_curve(q)
        gf = curve.gf
        subfield_units = [a for a in gf.subfield_elements() if a != 0]
        for p in curve.points[1:]:
            if p.y != 0:
                ynv = gf.inv(p.y)
                assert curve.contains(gf.mul(p.x, ynv), ynv)
            for a in subfield_units:
                assert curve.contains(gf.mul(a, p.x), gf.mul(gf.mul(a, a), p.y))


def test_point_records():
    curve = make_curve(2)
    rows = curve.point_records()
    assert rows[0] == (0, -1, -1)
    assert len(rows) == 9
    assert all(len(r) == 3 for r in rows)
