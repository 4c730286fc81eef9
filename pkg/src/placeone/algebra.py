"""Global bivariate operations: resultants, intersection numbers, curve
normalization, implicitization of polynomial parametrizations, and the
localization of a curve at its place at infinity.

Bivariate polynomials are recursive-dense: an outer Poly in y whose
coefficients are Polys in x over QQ (or over tower elements, for fiberwise
work).  A curve in normal form is monic in y; when every monomial other
than y^n has total degree below n, the projective closure meets the line at
infinity in the single point where only y^n survives, and the curve can be
localized there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InternalCheckError
from .parse import monomials, nested_const, parse_poly
from .poly import (
    Poly,
    gcd_monic,
    gcd_primitive_prs,
    resultant,
    yun_squarefree,
)
from .rationals import QQ

BiPoly = Poly  # outer y over inner x; an alias used for signature clarity


# ---------------------------------------------------------------------------
# small bivariate helpers


def bi_zero() -> BiPoly:
    return Poly(())


def bi_const(c) -> BiPoly:
    return nested_const(c, 2)


def deg_y(f: BiPoly) -> int:
    return f.degree


def deg_x(f: BiPoly) -> int:
    d = -1
    for c in f.cs:
        if c and c.degree > d:
            d = c.degree
    return d


def total_degree(f: BiPoly) -> int:
    d = -1
    for exps, _ in monomials(f, 2):
        if exps[0] + exps[1] > d:
            d = exps[0] + exps[1]
    return d


def top_form(f: BiPoly) -> list:
    """Coefficients c_i of the total-degree form, as [(i, j, c)] with
    i + j = total_degree(f)."""
    d = total_degree(f)
    return [(e[0], e[1], c) for e, c in monomials(f, 2) if e[0] + e[1] == d]


def partial_y(f: BiPoly) -> BiPoly:
    return f.derivative()


def partial_x(f: BiPoly) -> BiPoly:
    return f.map_coeffs(lambda c: c.derivative() if c else 0)


def eval_x(f: BiPoly, xv) -> Poly:
    """Substitute x = xv, returning a univariate Poly in y over scalars."""
    return f.map_coeffs(lambda c: c.evaluate(xv) if c else 0)


def bi_eval(f: BiPoly, xv, yv):
    acc = 0
    for c in reversed(f.cs):
        acc = acc * yv + (c.evaluate(xv) if c else 0)
    return acc


def bi_from_monomials(items) -> BiPoly:
    """Build from an iterable of ((i, j), coeff) with i the x-exponent."""
    rows: dict[int, dict[int, object]] = {}
    for (i, j), c in items:
        if not c:
            continue
        col = rows.setdefault(j, {})
        col[i] = col.get(i, 0) + c
    if not rows:
        return Poly(())
    out = []
    for j in range(max(rows) + 1):
        col = rows.get(j, {})
        if col:
            inner = [0] * (max(col) + 1)
            for i, c in col.items():
                inner[i] = c
            out.append(Poly(inner))
        else:
            out.append(Poly(()))
    return Poly(out)


def bi_swap(f: BiPoly) -> BiPoly:
    return bi_from_monomials(((j, i), c) for (i, j), c in monomials(f, 2))


def bi_shear(f: BiPoly, c) -> BiPoly:
    """Substitute x -> x + c*y."""
    x_new = Poly((Poly((0, 1)), Poly((c,))))  # x + c*y as a bivariate
    return bi_subst_x(f, x_new)


def bi_subst_x(f: BiPoly, replacement: BiPoly) -> BiPoly:
    """Substitute x -> replacement(x, y), leaving y fixed."""
    powers = [bi_const(1)]
    dx = deg_x(f)
    for _ in range(max(dx, 0)):
        powers.append(powers[-1] * replacement)
    acc = Poly(())
    for (i, j), coeff in monomials(f, 2):
        term = powers[i].scale(coeff)
        acc = acc + Poly([Poly(())] * j + list(term.cs)) if j else acc + term
    return acc


def bi_translate(f: BiPoly, a, b) -> BiPoly:
    """Substitute x -> x + a, y -> y + b; a, b are scalars (QQ or tower)."""
    g = f.map_coeffs(lambda c: c.compose(Poly((a, 1))) if c else 0)
    if b:
        # Horner in y with the coefficients kept one level down
        ylin = Poly((Poly((b,)), Poly((1,))))
        acc = Poly(())
        for row in reversed(g.cs):
            acc = acc * ylin
            if row:
                acc = acc + Poly((row,))
        g = acc
    return g


def lift_bi(f: BiPoly, embed) -> BiPoly:
    """Map QQ leaf coefficients through embed (e.g. into a tower)."""
    return f.map_coeffs(lambda c: c.map_coeffs(embed) if c else 0)


def as_inner(value) -> Poly:
    """Normalize a resultant output (int, QQ, or inner Poly) to a Poly."""
    if isinstance(value, Poly):
        return value
    return Poly((value,)) if value else Poly(())


# ---------------------------------------------------------------------------
# resultants and intersection numbers


def resultant_y(f: BiPoly, g: BiPoly) -> Poly:
    """Resultant with respect to y; the result lives in the inner ring."""
    if not f and not g:
        raise InputError("resultant of two zero polynomials")
    return as_inner(resultant(f, g))


def resultant_x(f: BiPoly, g: BiPoly) -> Poly:
    return resultant_y(bi_swap(f), bi_swap(g))


def _lc_y_is_constant(f: BiPoly) -> bool:
    return bool(f) and f.lc.degree == 0


def global_int(f: BiPoly, g: BiPoly) -> int:
    """Total affine intersection number dim_Q Q[x,y]/(f, g).

    Requires a finite intersection; raises InputError when the curves share
    a component.  Internally shears until one input is y-regular so the
    resultant degree counts every intersection point.
    """
    if not f or not g:
        raise InputError("intersection with the zero polynomial")
    if f.is_const() and f.cs[0].degree <= 0:
        return 0  # unit ideal
    if g.is_const() and g.cs[0].degree <= 0:
        return 0
    a, b = f, g
    if not (_lc_y_is_constant(a) or _lc_y_is_constant(b)):
        sa, sb = bi_swap(a), bi_swap(b)
        if _lc_y_is_constant(sa) or _lc_y_is_constant(sb):
            a, b = sa, sb
        else:
            for k in range(1, 65):
                c = QQ(-(k // 2)) if k % 2 == 0 else QQ((k + 1) // 2)
                sa, sb = bi_shear(a, c), bi_shear(b, c)
                if _lc_y_is_constant(sa) and _lc_y_is_constant(sb):
                    a, b = sa, sb
                    break
            else:
                raise InternalCheckError("no regularizing shear found")
    r = resultant_y(a, b)
    if not r:
        raise InputError("curves share a component: infinite intersection")
    return r.degree


def squarefree_decompose(p: Poly) -> list[tuple[Poly, int]]:
    """Yun decomposition of a univariate polynomial over QQ."""
    return yun_squarefree(p)


def bi_is_reduced(f: BiPoly) -> bool:
    # squarefree over QQ[x,y] iff gcd(f, f_x, f_y) is constant; a repeated
    # factor divides both partials, and only repeated factors divide both
    fx = partial_x(f)
    fy = partial_y(f)
    if not fx and not fy:
        return False  # constants are not reduced curves
    g = f
    for d in (fx, fy):
        if not d:
            continue
        g = gcd_primitive_prs(g, d)
        if total_degree(g) <= 0:
            return True
    return total_degree(g) <= 0


# ---------------------------------------------------------------------------
# curve normal form


@dataclass(frozen=True)
class CurveNormalForm:
    """A reduced curve made monic in y, with the coordinate moves recorded.

    transform_steps applies left to right to the input: ("swap",) exchanges
    x and y, ("shear", c) replaces x by x + c*y, ("scale", s) multiplies by
    the constant s.  degree_condition_holds means every monomial other than
    y^n has total degree below n (single place at infinity supported);
    slope_condition_holds is the stricter shape where every other monomial
    has x-exponent below its y-exponent.
    """

    f: BiPoly
    n: int
    degree_condition_holds: bool
    slope_condition_holds: bool
    transform_steps: tuple


def _condition_flags(f: BiPoly, n: int) -> tuple[bool, bool]:
    degree_ok = True
    slope_ok = True
    for (i, j), _ in monomials(f, 2):
        if (i, j) == (0, n):
            continue
        if i + j >= n:
            degree_ok = False
        if i >= j:
            slope_ok = False
    return degree_ok, slope_ok


def _monicize(f: BiPoly, steps: list) -> BiPoly:
    lc = f.lc
    if lc.degree != 0:
        raise InternalCheckError("monicize on a non-y-regular polynomial")
    c = lc.cs[0]
    if c != 1:
        steps.append(("scale", QQ(1) / c))
        f = f.map_coeffs(lambda p: p.scale(QQ(1) / c) if p else 0)
    return f


def normalize(f_raw: BiPoly) -> CurveNormalForm:
    """Bring a reduced curve to the monic-in-y normal form, preferring
    coordinates in which the total-degree form is a constant times y^n."""
    if not f_raw:
        raise InputError("the zero polynomial is not a curve")
    d = total_degree(f_raw)
    if d <= 0:
        raise InputError("a nonzero constant is not a curve")
    if not bi_is_reduced(f_raw):
        raise InputError("curve is not reduced (repeated component)")

    tf = top_form(f_raw)
    steps: list = []
    f = f_raw
    target = None
    if len(tf) == 1:
        i, j, c = tf[0]
        if i == 0:
            target = f
        elif j == 0:
            steps.append(("swap",))
            target = bi_swap(f)
    if target is None:
        # is the top form a pure power of a linear form involving both
        # variables?  Reading p(x) = tf(x, 1), that means p = C*(x + r)^d.
        p = _dense_from_pairs([(i, c) for i, j, c in tf])
        if p.degree == d:
            q = p.monic()
            g = gcd_monic(q, q.derivative())
            lin = q / g if g.degree else q
            if lin.degree == 1 and q == lin**d:
                r = lin.cs[0]
                if r:
                    # top form C*(x + r*y)^d; swap, shear by -1/r, swap
                    steps.append(("swap",))
                    f1 = bi_swap(f)
                    steps.append(("shear", -1 / r))
                    f2 = bi_shear(f1, -1 / r)
                    steps.append(("swap",))
                    target = bi_swap(f2)
    if target is None:
        # degree condition unreachable; settle for any y-regular form
        if _lc_y_is_constant(f):
            target = f
        elif _lc_y_is_constant(bi_swap(f)):
            steps.append(("swap",))
            target = bi_swap(f)
        else:
            for k in range(1, 65):
                c = QQ(-(k // 2)) if k % 2 == 0 else QQ((k + 1) // 2)
                cand = bi_shear(f, c)
                if cand.degree == d and _lc_y_is_constant(cand):
                    steps.append(("shear", c))
                    target = cand
                    break
            else:
                raise InternalCheckError("no regularizing shear found")

    target = _monicize(target, steps)
    n = target.degree
    degree_ok, slope_ok = _condition_flags(target, n)
    return CurveNormalForm(
        f=target,
        n=n,
        degree_condition_holds=degree_ok,
        slope_condition_holds=slope_ok,
        transform_steps=tuple(steps),
    )


def _dense_from_pairs(pairs) -> Poly:
    if not pairs:
        return Poly(())
    top = max(i for i, _ in pairs)
    out = [0] * (top + 1)
    for i, c in pairs:
        out[i] = out[i] + c
    return Poly(out)


def curve_from_text(text: str) -> CurveNormalForm:
    return normalize(parse_poly(text, ("x", "y")))


def apply_steps(f: BiPoly, steps) -> BiPoly:
    """Replay recorded transform steps on a bivariate polynomial."""
    for step in steps:
        if step[0] == "swap":
            f = bi_swap(f)
        elif step[0] == "shear":
            f = bi_shear(f, step[1])
        elif step[0] == "scale":
            f = f.map_coeffs(lambda p: p.scale(step[1]) if p else 0)
        else:
            raise InternalCheckError(f"unknown transform step {step!r}")
    return f


# ---------------------------------------------------------------------------
# implicitization


def implicitize(x_t: Poly, y_t: Poly) -> CurveNormalForm:
    """Implicit equation of the curve traced by t -> (x(t), y(t)).

    Requires a proper parametrization (generically injective); tracing the
    image curve several times is reported as an error with the multiplicity.
    The result is monic in y with deg_y equal to deg x(t); no swap or shear
    is applied, so the stated parametrization satisfies it literally.
    """
    if x_t.degree < 1:
        raise InputError("x(t) must be nonconstant")
    a = x_t.degree
    # resultant in t of (x - x(t), y - y(t)); coefficients live in QQ[x][y]
    tx = [bi_const(-c) if c else Poly(()) for c in x_t.cs]
    tx += [Poly(())] * (a + 1 - len(tx))
    tx[0] = tx[0] + Poly((Poly((0, 1)),))  # + x
    ty = [bi_const(-c) if c else Poly(()) for c in y_t.cs]
    if not ty:
        ty = [Poly(())]
    ty[0] = ty[0] + Poly((Poly(()), Poly((1,))))  # + y
    A = Poly(tx)
    B = Poly(ty)
    g = resultant(A, B)
    if not isinstance(g, Poly) or g.is_const():
        raise InternalCheckError("degenerate implicitization resultant")
    # g is bivariate (outer y); verify the parametrization satisfies it
    check = bi_eval(g, x_t, y_t)
    if check:
        raise InternalCheckError("implicit equation fails on the parametrization")
    gy = partial_y(g)
    if gy:
        com = gcd_primitive_prs(g, gy)
        if total_degree(com) > 0:
            mult = g.degree // (g.degree - com.degree)
            raise InputError(
                f"parametrization is not proper: it traces the curve {mult} times"
            )
    if g.degree != a:
        raise InternalCheckError("resultant degree does not match deg x(t)")
    steps: list = []
    g = _monicize(g, steps)
    degree_ok, slope_ok = _condition_flags(g, g.degree)
    return CurveNormalForm(
        f=g,
        n=g.degree,
        degree_condition_holds=degree_ok,
        slope_condition_holds=slope_ok,
        transform_steps=tuple(steps),
    )


# ---------------------------------------------------------------------------
# localization at the place at infinity


def localize_at_infinity(nf: CurveNormalForm) -> Poly:
    """F(y, u) = u^n f(1/u, y/u): the germ of the projective curve at its
    single point on the line at infinity, with u the localizing variable.

    Returned with u as the inner variable and y outer; F(y, 0) = y^n.
    """
    if not nf.degree_condition_holds:
        raise InputError("localization needs the total-degree form y^n")
    return localize_bi(nf.f, nf.n)


def localize_bi(f: BiPoly, n: int) -> Poly:
    """Monomial remap x^i y^j -> u^(n-i-j) y^j (coefficients pass through,
    so this also works over tower elements)."""
    items = []
    for (i, j), c in monomials(f, 2):
        u_exp = n - i - j
        if u_exp < 0:
            raise InputError("localization needs the total-degree form y^n")
        items.append(((u_exp, j), c))
    F = bi_from_monomials(items)
    # F(y, 0) must be y^n
    col0 = [c.coeff(0) if c else 0 for c in F.cs]
    ok = len(col0) == n + 1 and all(not col0[j] for j in range(n)) and not (col0[n] - 1)
    if not ok:
        raise InternalCheckError("localized form does not restrict to y^n")
    return F
