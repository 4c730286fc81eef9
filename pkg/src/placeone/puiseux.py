"""Branch analysis of a plane curve germ at the origin.

Expansions are computed in the rational style: for each Newton polygon
side q*j + m*i = l we pick Bezout multipliers with q*v - m*u = 1 and
substitute x = xi^v * x1^q, y = x1^m * (xi^u + y1), where xi runs over the
root classes of the side's characteristic polynomial.  The substitution
keeps all coefficients inside the field generated by xi, so the degree of
the tower extension built along a path equals the number of conjugate
branches the leaf stands for.  No roots of unity are ever adjoined.

A germ is given as an outer Poly in y whose coefficients are Polys in x;
leaves are rationals or tower elements of the ambient context.  The
parametrization of every branch keeps x as a monomial gamma * t^e, and the
y part is a truncated series refined on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .config import DEFAULT, EngineConfig
from .errors import CapExceeded, InputError, InternalCheckError
from .poly import Poly, series_inverse
from .corepoly import mul_trunc
from .rationals import QQ
from .tower import TowerContext, TowerElem, adjoin, map_roots

_BUDGET = 400


# ---------------------------------------------------------------------------
# semantic cleanup: make syntactic and semantic zero coincide


def _clean_inner(p: Poly) -> Poly:
    return Poly([c if c else 0 for c in p.cs])


def semantic_clean(H: Poly) -> Poly:
    """Strip coefficients that are semantically zero but syntactically not.

    Zero tests on tower elements may raise SplitRequest; letting that
    happen here, before any polygon geometry, keeps the rest of the germ
    machinery purely syntactic.
    """
    return Poly([_clean_inner(c) if isinstance(c, Poly) else c for c in H.cs])


def _inner_val(p: Poly):
    for i, c in enumerate(p.cs):
        if c:
            return i
    return None


# ---------------------------------------------------------------------------
# Newton polygon


def _lower_hull(pts):
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    h = []
    for p in pts:
        while len(h) >= 2 and cross(h[-2], h[-1], p) <= 0:
            h.pop()
        h.append(p)
    return h


def _sides(H: Poly):
    """Sides of the lower Newton polygon with negative slope.

    H must be cleaned.  Returns [(q, m, l, (iA, jA), (iB, jB)), ...] with
    gcd(q, m) = 1; points on the side satisfy q*j + m*i = l.
    """
    by_i = {}
    for j, row in enumerate(H.cs):
        if not isinstance(row, Poly) or not row:
            continue
        for i, c in enumerate(row.cs):
            if c and (i not in by_i or j < by_i[i]):
                by_i[i] = j
    pts = sorted((i, j) for i, j in by_i.items())
    hull = _lower_hull(pts)
    out = []
    for a, b in zip(hull, hull[1:]):
        iA, jA = a
        iB, jB = b
        if jA <= jB:
            continue
        g = gcd(iB - iA, jA - jB)
        q = (iB - iA) // g
        m = (jA - jB) // g
        out.append((q, m, q * jA + m * iA, a, b))
    return out


def _char_poly(H: Poly, side, ctx: TowerContext) -> Poly:
    q, m, l, (iA, jA), (iB, jB) = side
    n_terms = (iB - iA) // q
    cs = []
    for s in range(n_terms + 1):
        i = iA + q * s
        j = jA - m * s
        c = 0
        if j <= H.degree:
            row = H.cs[j]
            if isinstance(row, Poly) and i <= row.degree:
                c = row.cs[i]
        cs.append(c if isinstance(c, TowerElem) else ctx.from_qq(c))
    return Poly(cs)


# ---------------------------------------------------------------------------
# the side substitution


def _xi_pow(cache, xi, n):
    if n not in cache:
        if n >= 0:
            cache[n] = xi**n
        else:
            cache[n] = xi.inverse() ** (-n)
    return cache[n]


def _transform(H: Poly, xi: TowerElem, q, m, u, v, l) -> Poly:
    """Substitute x -> xi^v x1^m, y -> x1^q (xi^u + y1) and divide by x1^l.

    The side carries weights (m, q) for (x, y), so every monomial lands at
    x1 exponent m*i + q*j - l >= 0 with equality exactly on the side."""
    cache = {}
    deg_y = H.degree
    # binom[j] = (xi^u + y1)^j as a Poly in y1
    binom = [Poly((xi.ctx.one(),))]
    lin = Poly((_xi_pow(cache, xi, u), xi.ctx.one()))
    for _ in range(deg_y):
        binom.append(binom[-1] * lin)
    out_rows = {}
    for j, row in enumerate(H.cs):
        if not isinstance(row, Poly) or not row:
            continue
        for i, c in enumerate(row.cs):
            if not c:
                continue
            e = m * i + q * j - l
            if e < 0:
                raise InternalCheckError("monomial below the Newton side")
            if v * i:
                cc = c * _xi_pow(cache, xi, v * i)
            elif isinstance(c, TowerElem):
                cc = c
            else:
                cc = xi.ctx.from_qq(c)
            for t, b in enumerate(binom[j].cs):
                if not b:
                    continue
                row_out = out_rows.setdefault(t, {})
                row_out[e] = row_out.get(e, 0) + cc * b
    deg_out = max(out_rows) if out_rows else 0
    rows = []
    for t in range(deg_out + 1):
        d = out_rows.get(t, {})
        if d:
            top = max(d)
            rows.append(Poly([d.get(i, 0) for i in range(top + 1)]))
        else:
            rows.append(Poly(()))
    return Poly(rows)


# ---------------------------------------------------------------------------
# branches


@dataclass(frozen=True)
class _Step:
    q: int
    m: int
    u: int
    v: int
    xi: TowerElem


class BranchClass:
    """One conjugacy class of branches of a germ.

    rel_degree conjugate branches share this data; ramification is the
    order of t in x(t) = gamma * t^e.  kind is "series" (tail solved from a
    regular germ), "exact" (the expansion terminates), or "vertical" (the
    branch is the line x = 0).
    """

    def __init__(self, ctx, base_ctx, kind, steps, tail):
        self.ctx = ctx
        self.kind = kind
        self.steps = steps
        self.tail = tail
        self.rel_degree = ctx.degree // base_ctx.degree
        e = 1
        for st in steps:
            e *= st.m
        self.ramification = e if kind != "vertical" else 1
        self._params = {}

    def param(self, order: int):
        """(gamma, e, yser, prec): x = gamma t^e, y = yser + O(t^prec).

        prec is None when the parametrization is an exact polynomial.
        For the vertical kind the parametrization is x = 0, y = t.
        """
        if self.kind == "vertical":
            return (None, 0, Poly((self.ctx.zero(), self.ctx.one())), None)
        hit = self._params.get(order)
        if hit is not None:
            return hit
        one = self.ctx.one()
        if self.kind == "exact":
            gamma, e, yser, prec = one, 1, Poly(()), None
        else:
            yser = _series_root(self.ctx, self.tail, order)
            gamma, e, prec = one, 1, order
        for st in reversed(self.steps):
            xi = st.xi
            cache = {}
            # y = x1^q (xi^u + y1) with x1 = gamma t^e
            head = yser + _xi_pow(cache, xi, st.u)
            yser = head.scale(gamma**st.q).shift_up(e * st.q)
            if prec is not None:
                prec = prec + e * st.q
            # x = xi^v x1^m
            gamma = _xi_pow(cache, xi, st.v) * gamma**st.m
            e = e * st.m
        if prec is not None:
            yser = yser.trunc(prec)
        out = (gamma, e, yser, prec)
        self._params[order] = out
        return out

    def multiplicity(self, cfg: EngineConfig = DEFAULT) -> int:
        """min of the t-orders of x(t) and y(t); 1 means a smooth branch."""
        if self.kind == "vertical":
            return 1
        order = cfg.trunc_start
        while True:
            gamma, e, yser, prec = self.param(order)
            v = _ser_val(yser)
            if v is not None and (prec is None or v < prec):
                return min(e, v)
            if prec is None:
                return e
            order *= 2
            if order > cfg.trunc_cap:
                raise CapExceeded("series order cap hit while measuring a branch")

    def tangent_is_vertical(self, cfg: EngineConfig = DEFAULT) -> bool:
        """True when the branch tangent at the origin is the line x = 0."""
        if self.kind == "vertical":
            return True
        order = cfg.trunc_start
        while True:
            gamma, e, yser, prec = self.param(order)
            v = _ser_val(yser)
            if v is not None and (prec is None or v < prec):
                return v < e
            if prec is None:
                return False
            order *= 2
            if order > cfg.trunc_cap:
                raise CapExceeded("series order cap hit while measuring a branch")


def _ser_val(p: Poly):
    for i, c in enumerate(p.cs):
        if c:
            return i
    return None


def branches_at_origin(ctx: TowerContext, F: Poly, cfg: EngineConfig = DEFAULT):
    """All branch classes of the germ of F at (0, 0) over ctx.

    F must be reduced.  Raises InputError when F does not vanish at the
    origin.  Splits triggered by coefficient tests on levels of ctx itself
    propagate to the caller.
    """
    H = semantic_clean(F)
    out = []
    budget = [_BUDGET]
    # a vertical line component through the origin
    vals = [_inner_val(r) if isinstance(r, Poly) else (0 if r else None) for r in H.cs]
    live = [v for v in vals if v is not None]
    if not live:
        raise InputError("zero polynomial has no branches")
    xval = min(live)
    if xval > 1:
        raise InternalCheckError("repeated vertical component: input not reduced")
    if xval == 1:
        out.append(BranchClass(ctx, ctx, "vertical", (), None))
        H = Poly([Poly(r.cs[1:]) if isinstance(r, Poly) else r for r in H.cs])
    if not _origin_vanishes(H):
        if out:
            return out
        raise InputError("germ does not pass through the origin")
    out.extend(_expand(ctx, ctx, H, (), budget, cfg))
    return out


def _origin_vanishes(H: Poly) -> bool:
    if H.degree < 0 or not H.cs:
        return False
    row = H.cs[0]
    if not isinstance(row, Poly):
        return not row
    return not (row.cs[0] if row.cs else 0)


def _expand(base_ctx, ctx, H, steps, budget, cfg):
    budget[0] -= 1
    if budget[0] < 0:
        raise InternalCheckError("germ expansion did not terminate")
    H = semantic_clean(H)
    out = []
    # branch with a terminating expansion: y1 divides
    j0 = 0
    while j0 <= H.degree and not H.cs[j0]:
        j0 += 1
    if j0 > H.degree:
        raise InternalCheckError("germ vanished identically")
    if j0 > 1:
        raise InternalCheckError("repeated branch: input not reduced")
    if j0 == 1:
        out.append(BranchClass(ctx, base_ctx, "exact", steps, None))
        H = Poly(H.cs[1:])
        if H.degree == 0:
            row = H.cs[0]
            if not isinstance(row, Poly) or not row.cs or not row.cs[0]:
                raise InternalCheckError("leftover factor vanishes at the origin")
            return out
    # k = y-valuation of H(0, y)
    k = None
    for j, row in enumerate(H.cs):
        if isinstance(row, Poly) and row.cs and row.cs[0]:
            k = j
            break
    if k is None:
        raise InternalCheckError("x divides a transformed germ")
    if k == 0:
        return out
    if k == 1:
        out.append(BranchClass(ctx, base_ctx, "series", steps, H))
        return out
    for side in _sides(H):
        q, m, l, _, _ = side
        g, a, b = _ext_gcd_int(q, m)
        if g != 1:
            raise InternalCheckError("side parameters not coprime")
        v, u = a, -b
        phi = _char_poly(H, side, ctx)

        def fn(c2, xi, _side=side, _u=u, _v=v, _H=H):
            qq, mm, ll, _, _ = _side
            H2 = _transform(_H, xi, qq, mm, _u, _v, ll)
            st = _Step(qq, mm, _u, _v, xi)
            return _expand(base_ctx, c2, H2, steps + (st,), budget, cfg)

        for (_c2, _xi), sub in map_roots(ctx, phi, fn):
            out.extend(sub)
    return out


def _ext_gcd_int(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        qq, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - qq * x1
        y0, y1 = y1, y0 - qq * y1
    return a, x0, y0


# ---------------------------------------------------------------------------
# series solving and evaluation along branches


def _ser_mul(a: Poly, b: Poly, n: int) -> Poly:
    return Poly(mul_trunc(list(a.cs), list(b.cs), n))


def _eval_y_series(F: Poly, yser: Poly, n: int) -> Poly:
    acc = Poly(())
    for row in reversed(F.cs):
        acc = _ser_mul(acc, yser, n)
        if isinstance(row, Poly):
            acc = acc + row.trunc(n)
        elif row:
            acc = acc + row
    return acc


def _series_root(ctx, H, order: int) -> Poly:
    """The unique series y(x), y(0) = 0, with H(x, y(x)) = 0 mod x^order.

    Needs val_y H(0, y) = 1; Newton refinement doubles the precision."""
    hy = H.derivative()
    y = Poly(())
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        num = _eval_y_series(H, y, prec)
        den = _eval_y_series(hy, y, prec)
        y = (y - _ser_mul(num, series_inverse(den, prec), prec)).trunc(prec)
    return y


def eval_along(G: Poly, param, n: int) -> Poly:
    """G(x(t), y(t)) as a t-series mod t^n for a branch parametrization."""
    gamma, e, yser, prec = param
    if prec is not None:
        n = min(n, prec)
    acc = Poly(())
    gpow = {}
    for row in reversed(G.cs):
        acc = _ser_mul(acc, yser, n)
        if not isinstance(row, Poly):
            if row:
                acc = acc + row
            continue
        if gamma is None:
            # vertical branch: x = 0
            if row.cs and row.cs[0]:
                acc = acc + row.cs[0]
            continue
        cs = [0] * n
        for i, c in enumerate(row.cs):
            if not c:
                continue
            if e * i >= n:
                break
            if i not in gpow:
                gpow[i] = gamma**i
            cs[e * i] = cs[e * i] + (c * gpow[i] if i else c)
        acc = acc + Poly(cs)
    return acc


def branch_ord(G: Poly, br: BranchClass, cfg: EngineConfig = DEFAULT):
    """t-order of G along one branch of the class; None if G vanishes on it."""
    order = cfg.trunc_start
    while True:
        pm = br.param(order)
        prec = pm[3]
        n = order if prec is None else min(order, prec)
        ser = eval_along(G, pm, n)
        v = _ser_val(ser)
        if v is not None and v < n:
            return v
        if prec is None and br.kind in ("exact", "vertical"):
            if v is None:
                return None
            return v
        order *= 2
        if order > cfg.trunc_cap:
            raise CapExceeded("series order cap hit in an intersection computation")


def local_int_branches(ctx, F, G, cfg: EngineConfig = DEFAULT) -> int:
    """Intersection number of F and G at the origin, summed over the
    branches of F with conjugates counted by rel_degree."""
    total = 0
    for br in branches_at_origin(ctx, F, cfg):
        v = branch_ord(G, br, cfg)
        if v is None:
            raise InputError("curves share a branch through the point")
        total += br.rel_degree * v
    return total
