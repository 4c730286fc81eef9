"""Input grammar and the formatter round-trip."""

from __future__ import annotations

import pytest

from placeone.errors import ParseError
from placeone.parse import format_poly, parse_poly
from placeone.poly import Poly
from placeone.rationals import QQ

XY = ("x", "y")


def test_basic_bivariate():
    f = parse_poly("y^3 - x^2 - 3*y + 2", XY)
    assert f.degree == 3  # outer variable is y
    assert f.cs[3] == Poly((QQ(1),))
    assert f.cs[0] == Poly((QQ(2), QQ(0), QQ(-1)))


def test_whitespace_insensitive():
    a = parse_poly("y ^ 2-  x", XY)
    b = parse_poly("y^2-x", XY)
    assert a == b


def test_rational_literals_and_parentheses():
    f = parse_poly("1/2*(x + y)^2", XY)
    g = parse_poly("1/2*x^2 + x*y + 1/2*y^2", XY)
    assert f == g


def test_unary_minus():
    assert parse_poly("-x", XY) == parse_poly("0 - x", XY)
    assert parse_poly("-(y - x)", XY) == parse_poly("x - y", XY)


def test_univariate_t():
    f = parse_poly("t^3 - 3*t", ("t",))
    assert f == Poly((QQ(0), QQ(-3), QQ(0), QQ(1)))


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as ei:
        parse_poly("x +", XY)
    assert "position" in str(ei.value)
    with pytest.raises(ParseError):
        parse_poly("z + 1", XY)
    with pytest.raises(ParseError):
        parse_poly("2x", XY)
    with pytest.raises(ParseError):
        parse_poly("x^y", XY)


def test_format_round_trip():
    texts = (
        "y^3 - x^2 - 3*y + 2",
        "y^4 - x^2 - x",
        "x*y*(x + y)",
        "1/2*x^2 - 3",
        "y",
        "-x^3 + y^2",
    )
    for text in texts:
        f = parse_poly(text, XY)
        assert parse_poly(format_poly(f, XY), XY) == f


def test_format_zero_and_constants():
    assert format_poly(parse_poly("0", XY), XY) == "0"
    assert format_poly(parse_poly("-3/2", XY), XY) == "-3/2"


def test_format_omits_unit_coefficients():
    s = format_poly(parse_poly("1*x + 1*y^2", XY), XY)
    assert "1*" not in s
