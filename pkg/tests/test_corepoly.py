"""Kernel list arithmetic, run against every available backend.

The compiled twin must be bit-for-bit interchangeable with the pure
Python kernels, so every test here is parametrized over both.
"""

from __future__ import annotations

import random

import pytest

from placeone import corepoly
from placeone.rationals import QQ


@pytest.fixture(params=corepoly.available_backends())
def backend(request):
    prev = corepoly.active_backend()
    corepoly.set_backend(request.param)
    yield request.param
    corepoly.set_backend(prev)


def q(*ints):
    return [QQ(i) for i in ints]


def test_both_backends_are_built():
    # the package ships a compiled core; its absence is a packaging bug
    assert corepoly.available_backends() == ("py", "cy")


def test_strip_removes_trailing_zeros(backend):
    assert corepoly.strip([QQ(1), QQ(0), QQ(0)]) == [QQ(1)]
    assert corepoly.strip([QQ(0)]) == []
    assert corepoly.strip([]) == []


def test_add_sub_neg(backend):
    a, b = q(1, 2), q(3, -2)
    assert corepoly.add(a, b) == q(4)
    assert corepoly.sub(a, a) == []
    assert corepoly.neg(a) == q(-1, -2)


def test_mul_known_product(backend):
    # (1 + x)(1 - x) = 1 - x^2
    assert corepoly.mul(q(1, 1), q(1, -1)) == q(1, 0, -1)
    assert corepoly.mul(q(1, 1), []) == []


def test_mul_trunc_matches_full_product(backend):
    a, b = q(1, 2, 3), q(4, 5)
    full = corepoly.mul(a, b)
    assert corepoly.mul_trunc(a, b, 2) == full[:2]


def test_scale_and_div_scalar_roundtrip(backend):
    a = q(2, -6, 4)
    assert corepoly.div_scalar(corepoly.scale(a, QQ(3)), QQ(3)) == a


def test_eval_at_horner(backend):
    # 2 - x + x^2 at 3
    assert corepoly.eval_at(q(2, -1, 1), QQ(3)) == QQ(8)


def test_deriv(backend):
    assert corepoly.deriv(q(5, 1, 0, 2)) == q(1, 0, 6)
    assert corepoly.deriv(q(7)) == []


def test_divmod_lc_exact(backend):
    # (x^2 - 1) = (x - 1)(x + 1)
    quo, rem = corepoly.divmod_lc(q(-1, 0, 1), q(-1, 1))
    assert quo == q(1, 1)
    assert rem == []


def test_divmod_lc_with_remainder(backend):
    quo, rem = corepoly.divmod_lc(q(1, 0, 1), q(0, 1))
    assert quo == q(0, 1)
    assert rem == q(1)


def test_prem_is_a_multiple_of_the_true_remainder(backend):
    # prem(a, b) = lc(b)^k * (a mod b) for some k >= 0
    a, b = q(1, 3, 0, 1), q(2, 0, 3)
    r = corepoly.prem(a, b)
    _, true_rem = corepoly.divmod_lc(a, b)
    assert len(r) == len(true_rem)
    ratio = r[-1] / true_rem[-1]
    assert [c * ratio for c in true_rem] == r


def test_resultant_zero_iff_common_root(backend):
    # x - 1 shares a root with x^2 - 1 but not with x^2 + 1
    assert corepoly.resultant(q(-1, 1), q(-1, 0, 1)) == QQ(0)
    assert corepoly.resultant(q(-1, 1), q(1, 0, 1)) != QQ(0)


def test_resultant_of_two_linear(backend):
    # res(x - a, x - b) = +-(a - b); vanishes only at a = b
    assert corepoly.resultant(q(-2, 1), q(-2, 1)) == QQ(0)
    v = corepoly.resultant(q(-2, 1), q(-5, 1))
    assert v in (QQ(3), QQ(-3))


def test_resultant_multiplicative(backend):
    f = q(1, 0, 1)
    g, h = q(-2, 1), q(1, 1, 1)
    gh = corepoly.mul(g, h)
    assert corepoly.resultant(f, gh) == corepoly.resultant(f, g) * corepoly.resultant(f, h)


def test_backends_agree_on_random_inputs():
    rng = random.Random(11)
    cases = []
    for _ in range(25):
        a = [QQ(rng.randint(-9, 9)) for _ in range(rng.randint(1, 6))]
        b = [QQ(rng.randint(-9, 9)) for _ in range(rng.randint(1, 6))]
        cases.append((corepoly.strip(a), corepoly.strip(b)))
    results = {}
    prev = corepoly.active_backend()
    try:
        for name in corepoly.available_backends():
            corepoly.set_backend(name)
            out = []
            for a, b in cases:
                out.append(corepoly.mul(a, b))
                if b:
                    out.append(corepoly.divmod_lc(a, b))
                    out.append(corepoly.prem(a, b))
                out.append(corepoly.resultant(a, b) if (a and b) else None)
            results[name] = out
    finally:
        corepoly.set_backend(prev)
    if len(results) == 2:
        assert results["py"] == results["cy"]
