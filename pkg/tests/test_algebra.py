"""Bivariate layer: resultants, intersection numbers, normalization,
implicitization, localization at infinity."""

from __future__ import annotations

import random

import pytest

from placeone.algebra import (
    bi_is_reduced,
    bi_shear,
    bi_translate,
    curve_from_text,
    deg_x,
    deg_y,
    global_int,
    implicitize,
    localize_at_infinity,
    normalize,
    partial_x,
    partial_y,
    resultant_y,
    squarefree_decompose,
    total_degree,
)
from placeone.errors import InputError
from placeone.parse import format_poly, parse_poly
from placeone.poly import Poly
from placeone.rationals import QQ

XY = ("x", "y")
GOLDEN = "y^3 - x^2 - 3*y + 2"


def bi(text):
    return parse_poly(text, XY)


def uni(text, var="t"):
    return parse_poly(text, (var,))


# -- resultants -------------------------------------------------------------


def test_resultant_of_two_lines():
    r = resultant_y(bi("y - x"), bi("y + x"))
    assert r == uni("2*x", "x")


def test_resultant_cusp_partials():
    r = resultant_y(bi("y^3 - x^2"), bi("3*y^2"))
    assert r == uni("27*x^4", "x")


def test_resultant_of_member_pair_is_constant():
    # members of one pencil never meet: res is the cube of the shift
    f = bi(GOLDEN)
    r = resultant_y(f, bi(GOLDEN + " - 4"))
    assert r == Poly((QQ(-64),))


def test_resultant_multiplicative():
    rng = random.Random(3)
    for _ in range(10):
        def rand():
            rows = [Poly([QQ(rng.randint(-4, 4)) for _ in range(3)]) for _ in range(2)]
            rows.append(Poly((QQ(1),)))
            return Poly(rows)

        f, g, h = rand(), rand(), rand()
        assert resultant_y(f, g * h) == resultant_y(f, g) * resultant_y(f, h)


def test_degree_helpers():
    f = bi(GOLDEN)
    assert deg_y(f) == 3
    assert deg_x(f) == 2
    assert total_degree(f) == 3


# -- global intersection ----------------------------------------------------


def test_global_int_transverse_lines():
    assert global_int(bi("y"), bi("x")) == 1


def test_global_int_golden_pair_is_zero():
    assert global_int(bi(GOLDEN), bi(GOLDEN + " - 4")) == 0


def test_global_int_cusp_partials():
    assert global_int(bi("y^3 - x^2"), bi("3*y^2")) == 4


def test_global_int_rejects_common_component():
    with pytest.raises(InputError):
        global_int(bi("y - x"), bi("(y - x)*(y + 1)"))


# -- implicitization --------------------------------------------------------


def test_implicitize_golden_parametrization():
    nf = implicitize(uni("t^3 - 3*t"), uni("t^2 - 2"))
    assert nf.f == bi(GOLDEN)
    assert nf.n == 3
    assert nf.degree_condition_holds


def test_implicitize_graph():
    nf = implicitize(uni("t"), uni("t^2"))
    assert nf.f == bi("y - x^2")


def test_implicitize_cuspidal():
    nf = implicitize(uni("t^2"), uni("t^3"))
    assert nf.f == bi("y^2 - x^3")
    assert nf.n == 2


def test_implicitize_vanishes_on_the_parametrization():
    xt, yt = uni("t^3 - 3*t"), uni("t^2 - 2")
    nf = implicitize(xt, yt)
    acc = Poly(())
    for row in reversed(nf.f.cs):
        inner = row.compose(xt) if isinstance(row, Poly) else Poly((row,))
        acc = acc * yt + inner
    assert not acc


def test_implicitize_rejects_improper():
    with pytest.raises(InputError) as ei:
        implicitize(uni("t^2"), uni("t^4 + t^2"))
    assert "2 times" in str(ei.value)


# -- normalization ----------------------------------------------------------


def test_normalize_identity_case():
    nf = normalize(bi(GOLDEN))
    assert nf.f == bi(GOLDEN)
    assert nf.transform_steps == ()
    assert nf.degree_condition_holds


def test_normalize_sign():
    nf = normalize(bi("x^2 - y^3"))
    assert nf.f == bi("y^3 - x^2")
    assert nf.degree_condition_holds


def test_normalize_swaps_to_make_y_dominant():
    nf = normalize(bi("y^2 - x^3"))
    assert nf.f == bi("y^3 - x^2")
    assert ("swap",) in nf.transform_steps


def test_normalize_rejects_non_reduced():
    with pytest.raises(InputError) as ei:
        normalize(bi("(y - x^2)^2"))
    assert "reduced" in str(ei.value)


def test_normalize_shears_when_top_form_needs_it():
    # x*y has no pure y^n monomial; a shear must produce one
    nf = normalize(bi("x*y + 1"))
    assert nf.f.lc == Poly((QQ(1),))
    assert any(step[0] == "shear" for step in nf.transform_steps)


def test_curve_from_text():
    nf = curve_from_text(GOLDEN)
    assert nf.n == 3


def test_milnor_invariant_under_shear():
    f = bi(GOLDEN)
    mu0 = global_int(partial_x(f), partial_y(f))
    for c in (1, -1, 2):
        g = bi_shear(f, QQ(c))
        assert global_int(partial_x(g), partial_y(g)) == mu0


# -- localization at infinity ----------------------------------------------


def test_localize_cusp():
    F = localize_at_infinity(normalize(bi("y^3 - x^2")))
    assert F == parse_poly("y^3 - u", ("u", "y"))


def test_localize_golden():
    F = localize_at_infinity(normalize(bi(GOLDEN)))
    assert F == parse_poly("y^3 - 3*u^2*y + 2*u^3 - u", ("u", "y"))


def test_localize_quartic():
    F = localize_at_infinity(normalize(bi("y^4 - x^2 - x")))
    assert F == parse_poly("y^4 - u^2 - u^3", ("u", "y"))


def test_localize_restricts_to_y_power():
    for text in (GOLDEN, "y^3 - x^2", "y^5 - x^3 - 2*x^2*y - 3*y^2 + x"):
        nf = normalize(bi(text))
        F = localize_at_infinity(nf)
        col0 = [row.coeff(0) if row else QQ(0) for row in F.cs]
        assert col0 == [QQ(0)] * nf.n + [QQ(1)]


def test_localize_needs_the_degree_condition():
    nf = normalize(bi("y^4 - x^2 - x^4"))
    assert not nf.degree_condition_holds
    with pytest.raises(InputError):
        localize_at_infinity(nf)


# -- misc -------------------------------------------------------------------


def test_squarefree_decompose():
    x = uni("x", "x")
    f = x * x * (x - Poly((QQ(1),)))
    assert [(format_poly(q, ("x",)), m) for q, m in squarefree_decompose(f)] == [
        ("x - 1", 1),
        ("x", 2),
    ]
    lam = uni("l", "l")
    g = lam * lam - Poly((QQ(0), QQ(4)))  # l^2 - 4l
    parts = squarefree_decompose(g)
    assert len(parts) == 1 and parts[0][1] == 1
    from placeone.poly import rational_roots

    roots, _ = rational_roots(parts[0][0])
    assert sorted(roots) == [QQ(0), QQ(4)]


def test_bi_is_reduced():
    assert bi_is_reduced(bi(GOLDEN))
    assert not bi_is_reduced(bi("(y - x)^2"))
    assert bi_is_reduced(bi("x*y*(x + y)"))


def test_bi_translate():
    f = bi("y^2 - x")
    g = bi_translate(f, QQ(1), QQ(2))
    # g(x, y) = f(x + 1, y + 2) = (y+2)^2 - (x+1)
    assert g == bi("y^2 + 4*y - x + 3")
