"""Shear charts, flips and the flipped-coordinate brackets."""

from fractions import Fraction

import pytest

from painleve_cubics import Ring, parse_poly
from painleve_cubics.cubics import tags
from painleve_cubics.ring import as_expr
from painleve_cubics.shear import (PV_TO_PIII_EXPECTED, chart, chart_phi_residue,
                                   flip, flip_involution_check,
                                   pv_to_piii_bracket_table, pv_to_piii_change,
                                   shear_ring, verify_chart, verify_flip_braid)

ALL_TAGS = tags()


@pytest.mark.parametrize("tag", ALL_TAGS)
def test_chart_satisfies_cubic(tag):
    assert chart_phi_residue(tag).is_zero()


def test_chart_term_counts():
    # symbolic forms: parameters left uninterpreted
    ring = shear_ring().extend(["G1", "G2", "G3", "Ginf"])
    pvi_x1 = parse_poly(chart("PVI").x_sym[0], ring)
    assert pvi_x1.num_terms() == 5
    d8_x2 = parse_poly(chart("PIII_D8").x_sym[1], ring)
    assert d8_x2.num_terms() == 1
    assert d8_x2 == -ring.e({"s3": 1, "s1": -1, "p3": Fraction(1, 2), "p1": Fraction(-1, 2)})


def test_pi_chart_has_no_third_parameter():
    assert chart("PI").G["G3"].is_zero()


def test_pvi_chart_unit_point():
    unit = {n: 1 for n in shear_ring().names}
    for x in chart("PVI").x:
        assert x.evaluate(unit) == -7


def test_flip_images():
    ring = shear_ring()
    m = flip(1)
    # e^{s1} -> e^{-p1-s1}
    out = ring.e({"s1": 1}).substitute(m).as_poly()
    assert out == ring.e({"p1": -1, "s1": -1})
    # p1 <-> p2 under flip 3
    m3 = flip(3)
    assert ring.e({"p1": Fraction(1, 2)}).substitute(m3).as_poly() == \
        ring.e({"p2": Fraction(1, 2)})
    assert ring.e({"p2": Fraction(1, 2)}).substitute(m3).as_poly() == \
        ring.e({"p1": Fraction(1, 2)})


def test_flip_involution_on_s2():
    ring = shear_ring()
    m = flip(1)
    es2 = ring.e({"s2": 1})
    assert es2.substitute(m).substitute(m) == as_expr(es2)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_flip_involution_certificates(i):
    assert flip_involution_check(i).passed


@pytest.mark.parametrize("i,expected", [(1, "braid 1"), (2, "braid 2"), (3, "braid 3")])
def test_flip_braid_match(i, expected):
    cert = verify_flip_braid(i)
    assert cert.passed
    assert expected in cert.detail


def test_pv_to_piii_brackets():
    cert = pv_to_piii_change()
    assert cert.passed
    table = pv_to_piii_bracket_table()
    assert table["s2,p2"] == "2"
    assert table["k1,k2"] == "1"
    # the full computed table equals the quoted one (unlisted pairs zero)
    expect = {f"{u},{v}": str(c) for (u, v), c in PV_TO_PIII_EXPECTED.items()}
    assert table == expect


@pytest.mark.parametrize("tag", ALL_TAGS)
def test_chart_normalizations(tag):
    from painleve_cubics.shear import chart_normalization_check
    assert chart_normalization_check(tag).passed


def test_pv_normalization_hits_unit_parameter():
    from painleve_cubics.shear import chart, normalization_images
    ch = chart("PV")
    constrained = ch.G["Ginf"].substitute(normalization_images("PV"))
    assert constrained.is_poly() and constrained.as_poly().is_one()
