"""Univariate polynomial layer: arithmetic, gcds, squarefree structure,
resultants against an independent determinant, and rational root finding."""

from __future__ import annotations

import random

import pytest

from placeone.errors import InternalCheckError
from placeone.oracle import resultant_sylvester
from placeone.poly import (
    Poly,
    ext_gcd_monic,
    gcd_monic,
    interpolate_qq,
    rational_roots,
    resultant,
    series_inverse,
    squarefree_part_monic,
    yun_squarefree,
)
from placeone.rationals import QQ


def p(*ints):
    return Poly([QQ(i) for i in ints])


X = Poly.var()


def test_constructor_strips_and_degree():
    assert p(1, 2, 0).degree == 1
    assert not p(0)
    assert p(0).degree == -1
    assert Poly.const(QQ(5)).degree == 0


def test_ring_axioms_spotcheck():
    a, b, c = p(1, 2), p(-3, 0, 1), p(4)
    assert a * (b + c) == a * b + a * c
    assert (a - a) == p()
    assert a * b == b * a


def test_divmod_and_exact_division():
    a = p(-1, 0, 1)
    q, r = divmod(a, p(-1, 1))
    assert q == p(1, 1) and not r
    assert a / p(-1, 1) == p(1, 1)
    with pytest.raises(InternalCheckError):
        p(1, 1) / p(0, 1)


def test_compose_and_evaluate():
    f = p(1, 0, 1)  # 1 + x^2
    assert f.evaluate(QQ(3)) == QQ(10)
    assert f.compose(p(0, 0, 1)) == p(1, 0, 0, 0, 1)


def test_valuation_and_trunc():
    f = p(0, 0, 3, 1)
    assert f.valuation() == 2
    assert f.trunc(3) == p(0, 0, 3)


def test_gcd_monic():
    a = p(-1, 0, 1)  # (x-1)(x+1)
    b = p(-1, 1) * p(2, 1)
    assert gcd_monic(a, b) == p(-1, 1)
    assert gcd_monic(a, p(1)) == p(1)


def test_ext_gcd_half_extended_identity():
    # u*a = g modulo b, g the monic gcd
    a, b = p(-1, 0, 1), p(-2, 0, 0, 1)
    g, u = ext_gcd_monic(a, b)
    assert (u * a - g) % b == p()
    assert g == gcd_monic(a, b)


def test_ext_gcd_gives_inverses():
    a, m = p(0, 1), p(-2, 0, 1)  # x modulo x^2 - 2
    g, u = ext_gcd_monic(a, m)
    assert g == p(1)
    assert (u * a) % m == p(1)
    assert u == p(0, QQ(1, 2))


def test_yun_squarefree_structure():
    # x^2 (x-1)^3 (x^2+1)
    f = p(0, 1) ** 2 * p(-1, 1) ** 3 * p(1, 0, 1)
    parts = {(fac.degree, m) for fac, m in yun_squarefree(f) if fac.degree > 0}
    assert parts == {(1, 2), (1, 3), (2, 1)}
    prod = Poly((QQ(1),))
    for fac, m in yun_squarefree(f):
        prod = prod * fac**m
    assert prod.monic() == f.monic()


def test_squarefree_part():
    f = p(-1, 1) ** 2 * p(1, 1)
    assert squarefree_part_monic(f) == p(-1, 1) * p(1, 1)


def test_resultant_agrees_with_sylvester_determinant():
    rng = random.Random(7)
    for _ in range(30):
        a = Poly([QQ(rng.randint(-6, 6)) for _ in range(rng.randint(2, 6))])
        b = Poly([QQ(rng.randint(-6, 6)) for _ in range(rng.randint(2, 6))])
        if a.degree < 1 or b.degree < 1:
            continue
        assert resultant(a, b) == resultant_sylvester(a, b)


def test_resultant_known_values():
    # res(x^2 - 2, x^2 - 3) = (2-3)(2-3) = 1
    assert resultant(p(-2, 0, 1), p(-3, 0, 1)) == QQ(1)
    assert resultant(p(-1, 1), p(-1, 0, 1)) == QQ(0)


def test_interpolate_qq():
    f = p(2, -1, 3)
    pts = [(QQ(i), f.evaluate(QQ(i))) for i in range(4)]
    assert interpolate_qq(pts) == f


def test_rational_roots_small():
    f = p(-1, 2) * p(3, 1) * p(1, 0, 1)  # squarefree, roots 1/2 and -3
    roots, cof = rational_roots(f)
    assert sorted(roots) == [QQ(-3), QQ(1, 2)]
    assert cof == p(1, 0, 1)
    prod = cof
    for r in roots:
        prod = prod * Poly((-r, QQ(1)))
    assert prod == f.monic()


def test_rational_roots_none():
    roots, cof = rational_roots(p(1, 0, 1))
    assert roots == [] and cof == p(1, 0, 1)
    roots, cof = rational_roots(p(2, 0, 0, 1))  # x^3 + 2
    assert roots == [] and cof.degree == 3


def test_rational_roots_zero_root():
    roots, cof = rational_roots(p(0, -1, 1))  # x(x - 1)
    assert sorted(roots) == [QQ(0), QQ(1)]
    assert cof == p(1)


def test_rational_roots_huge_coefficients_use_the_modular_path():
    """Ends past 2^32 skip trial division entirely; the answer must still
    be complete."""
    big1 = (1 << 40) + 1
    big2 = (1 << 41) + 3
    f = Poly([QQ(-big1), QQ(3)]) * Poly([QQ(big2), QQ(1)]) * p(7, 0, 1)
    assert abs(f.cs[0]) >= 1 << 32
    roots, cof = rational_roots(f)
    assert sorted(roots) == [QQ(-big2), QQ(big1, 3)]
    assert cof == p(7, 0, 1)


def test_rational_roots_huge_without_roots():
    f = Poly([QQ((1 << 45) + 7), QQ(0), QQ(0), QQ(1)])
    roots, cof = rational_roots(f)
    assert roots == []
    assert cof == f


def test_series_inverse():
    a = p(1, 3, -2, 5)
    inv = series_inverse(a, 6)
    assert (a * inv).trunc(6) == p(1)
