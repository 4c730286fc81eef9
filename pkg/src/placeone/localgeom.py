"""Local geometry of a plane curve: critical points, local intersection
numbers, Milnor numbers, branch counts, delta invariants, and the same data
at infinity.

Points live in tower contexts; every function here takes a PointClass and
computes invariants that are constant on the conjugacy class, to be
weighted by orbit_degree in global sums.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    bi_eval,
    bi_is_reduced,
    deg_y,
    localize_at_infinity,
    partial_x,
    partial_y,
    resultant_y,
    gcd_primitive_prs,
    total_degree,
)
from .config import DEFAULT, EngineConfig
from .errors import InputError, InternalCheckError
from .poly import Poly, content_monic, gcd_monic, prem, squarefree_part_monic
from .puiseux import branch_ord, branches_at_origin, semantic_clean
from .rationals import QQ
from .tower import PointClass, TowerContext, TowerElem, map_roots

_SHEAR_TRIES = 40


# ---------------------------------------------------------------------------
# coordinate changes over a tower


def shift_origin(f: Poly, ctx: TowerContext, xb, yb) -> Poly:
    """f(x + xb, y + yb) as a bivariate germ centered at the origin."""
    xs = Poly((xb, ctx.one()))
    rows = []
    for row in f.cs:
        if isinstance(row, Poly):
            rows.append(row.compose(xs))
        elif row:
            rows.append(Poly((row,)))
        else:
            rows.append(Poly(()))
    ylin = Poly((Poly((yb,)), Poly((ctx.one(),))))
    acc = Poly(())
    for row in reversed(rows):
        acc = acc * ylin
        if row:
            acc = acc + Poly((row,))
    return acc


def shear_x_by_y(F: Poly, c, ctx: TowerContext) -> Poly:
    """Substitute x -> x + c*y; the line x = 0 moves, the origin stays."""
    if not c:
        return F
    s = Poly((Poly((ctx.zero(), ctx.one())), Poly((c,))))
    pw = [Poly((Poly((ctx.one(),)),))]
    imax = 0
    for row in F.cs:
        if isinstance(row, Poly) and row.cs:
            imax = max(imax, row.degree)
    for _ in range(imax):
        pw.append(pw[-1] * s)
    total = Poly(())
    for j, row in enumerate(F.cs):
        if not isinstance(row, Poly) or not row:
            continue
        rj = Poly(())
        for i, cf in enumerate(row.cs):
            if cf:
                rj = rj + pw[i].scale(cf)
        total = total + rj.shift_up(j)
    return total


# ---------------------------------------------------------------------------
# critical points


def critical_x_poly(f: Poly) -> Poly | None:
    """Squarefree polynomial carrying the x-coordinates of f_x = f_y = 0,
    or None when the critical locus is empty."""
    fx = partial_x(f)
    fy = partial_y(f)
    if not fx:
        if deg_y(fy) <= 0:
            return None
        raise InputError("degenerate pencil: f depends only on y")
    if not fy:
        raise InputError("f is constant in y")
    g = gcd_primitive_prs(fx, fy)
    if total_degree(g) > 0:
        raise InputError("critical locus is not isolated")
    res = resultant_y(fx, fy)
    if isinstance(res, Poly) and not res:
        raise InternalCheckError("vanishing resultant after a coprimality check")
    if not isinstance(res, Poly) or res.degree == 0:
        return None
    return squarefree_part_monic(res)


def _gcd_cells(A: Poly, B: Poly, cell: Poly):
    """Parametric gcd of A(xb, y) and B(xb, y) as xb runs over the roots of
    a squarefree cell, with all branching done over the rationals.

    A pseudo-remainder sequence in y over QQ[x]: whenever a leading row or
    a remainder's content vanishes on only part of the cell, the cell is
    split with a rational gcd, so no extension arithmetic and no inversions
    happen here at all.  A's leading row must not vanish at any root of
    cell (the partial in y of a monic curve qualifies).  Returns a list of
    (subcell, G) covering the cell, where G specializes at every root of
    its subcell to a nonzero multiple of the gcd and G's leading row has no
    root in common with the subcell; G is None where the gcd is trivial.
    """
    out = []
    work = [(cell, A, B)]
    while work:
        cell, a, b = work.pop()
        rows = list(b.cs)
        split = None
        while rows:
            g = gcd_monic(cell, rows[-1]) if rows[-1] else cell
            if g.degree == cell.degree:
                rows.pop()  # row vanishes at every root of the cell
            elif g.degree == 0:
                break
            else:
                split = g
                break
        if split is not None:
            work.append((split, a, b))
            work.append((cell / split, a, b))
            continue
        b2 = Poly._make(rows)
        if not b2:
            out.append((cell, a))
            continue
        if b2.degree == 0:
            out.append((cell, None))
            continue
        r = prem(a, b2)
        if r:
            cont = content_monic(r)
            if cont.degree > 0:
                g = gcd_monic(cell, cont)
                if g.degree == cell.degree:
                    r = Poly(())  # remainder vanishes on the whole cell
                else:
                    if g.degree > 0:
                        out.append((g, b2))
                        cell = cell / g
                    r = Poly._make([c / cont if c else 0 for c in r.cs])
        if r:
            lc_in = r.lc.lc
            if lc_in != 1:
                r = Poly._make([c / lc_in if c else c for c in r.cs])
            work.append((cell, b2, r))
        else:
            out.append((cell, b2))
    return out


def critical_points_over(ctx0: TowerContext, f: Poly, cfg: EngineConfig = DEFAULT):
    """Conjugacy classes of solutions of f_x = f_y = 0 above a context.

    Triangular decomposition: squarefree part of res_y(f_x, f_y) gives the
    x-coordinates, cut into cells on which the parametric gcd of the
    specialized partials is a single polynomial; its roots over each
    x-class give the y-coordinates.  Splits of ctx0's own levels propagate
    to the caller.  Deterministic order by tower chains."""
    px = critical_x_poly(f)
    if px is None:
        return []
    fx = partial_x(f)
    fy = partial_y(f)

    pts = []
    for cell, G in _gcd_cells(fy, fx, px):
        if G is None or G.degree < 1:
            continue

        def at_x(cx, xbar, G=G):
            gy = _eval_rows(G, xbar)
            # the leading row avoids the cell's roots, so this cannot split
            gy = gy.monic()
            out = []
            for (cy, ybar), val in map_roots(cx, gy, lambda _cy, yb: yb):
                out.append((cy, xbar.in_context(cy), val))
            return out

        for (_cx, _xb), sub in map_roots(ctx0, cell, at_x):
            for cy, xv, yv in sub:
                pts.append(PointClass(cy, xv, yv, cy.degree))
    pts.sort(key=PointClass.sort_key)
    return pts


def critical_points(f: Poly, cfg: EngineConfig = DEFAULT):
    """Conjugacy classes of solutions of f_x = f_y = 0 over the rationals."""
    return critical_points_over(TowerContext.base(cfg), f, cfg)


def _eval_rows(f: Poly, xbar) -> Poly:
    """Specialize the inner variable, leaving a univariate in the outer one."""
    cs = []
    for row in f.cs:
        if isinstance(row, Poly):
            cs.append(row.evaluate(xbar) if row.cs else 0)
        else:
            cs.append(row)
    return Poly(cs)


# ---------------------------------------------------------------------------
# local intersection numbers


def local_int_origin(ctx: TowerContext, F: Poly, G: Poly) -> int:
    """Intersection number of F and G at the origin of ctx^2.

    Shears x -> x + c*y until both curves are y-proper (constant leading
    y-coefficient) and the origin is their only common point on the line
    x = 0; then the answer is the x-valuation of the y-resultant."""
    if not _vanishes_at_origin(F) or not _vanishes_at_origin(G):
        return 0
    for c in _shear_constants(ctx):
        Fc = semantic_clean(shear_x_by_y(F, c, ctx))
        Gc = semantic_clean(shear_x_by_y(G, c, ctx))
        if not (_y_proper(Fc) and _y_proper(Gc)):
            continue
        a0 = _column_zero(Fc)
        b0 = _column_zero(Gc)
        if a0.degree < 0 or b0.degree < 0:
            continue
        g = gcd_monic(a0, b0)
        if g.degree < 1 or not _is_y_power(g):
            continue
        r = resultant_y(Fc, Gc)
        if not isinstance(r, Poly):
            r = Poly((r,)) if r else Poly(())
        v = _semantic_val(r)
        if v is None:
            raise InputError("infinite local intersection: common component")
        return v
    raise InternalCheckError("no admissible shear found for a local intersection")


def _shear_constants(ctx):
    yield ctx.zero()
    k = 1
    while k <= _SHEAR_TRIES:
        yield ctx.from_qq(k)
        yield ctx.from_qq(-k)
        k += 1


def _vanishes_at_origin(F: Poly) -> bool:
    if not F.cs:
        return True
    row = F.cs[0]
    if not isinstance(row, Poly):
        return not row
    return not (row.cs[0] if row.cs else 0)


def _y_proper(F: Poly) -> bool:
    # callers clean F first, so degrees here are semantic
    if not F.cs:
        return False
    top = F.cs[-1]
    if not isinstance(top, Poly):
        return bool(top)
    return top.degree == 0


def _column_zero(F: Poly) -> Poly:
    cs = []
    for row in F.cs:
        if isinstance(row, Poly):
            cs.append(row.cs[0] if row.cs else 0)
        else:
            cs.append(row)
    return Poly(cs)


def _is_y_power(g: Poly) -> bool:
    return all(not c for c in g.cs[:-1])


def _semantic_val(p: Poly):
    for i, c in enumerate(p.cs):
        if c:
            return i
    return None


def local_int(f: Poly, g: Poly, pc: PointClass) -> int:
    F = shift_origin(f, pc.ctx, pc.x, pc.y)
    G = shift_origin(g, pc.ctx, pc.x, pc.y)
    return local_int_origin(pc.ctx, F, G)


def milnor_local(f: Poly, pc: PointClass) -> int:
    """Local Milnor number: intersection of the two partials at the point;
    0 at smooth points."""
    return local_int(partial_x(f), partial_y(f), pc)


def branches_at(f: Poly, pc: PointClass, cfg: EngineConfig = DEFAULT):
    """Branches of the level curve of f through the point.

    The constant term of the shifted germ is dropped, so this reads the
    fiber f - f(p) when the point does not lie on f itself."""
    F = shift_origin(f, pc.ctx, pc.x, pc.y)
    return branches_at_origin(pc.ctx, _drop_constant(F), cfg)


def _drop_constant(F: Poly) -> Poly:
    if not F.cs:
        return F
    rows = list(F.cs)
    r0 = rows[0]
    if isinstance(r0, Poly) and r0.cs:
        rows[0] = Poly((0,) + tuple(r0.cs[1:]))
    elif not isinstance(r0, Poly):
        rows[0] = 0
    return Poly(rows)


# ---------------------------------------------------------------------------
# per-point reports


@dataclass(frozen=True)
class LocalReport:
    point: PointClass
    mu: int
    r: int
    delta: int

    def weighted(self):
        return self.point.orbit_degree


def _hessian_nonzero(f: Poly, pc: PointClass) -> bool:
    fx = partial_x(f)
    fy = partial_y(f)
    fxx = partial_x(fx)
    fxy = partial_y(fx)
    fyy = partial_y(fy)
    a = bi_eval(fxx, pc.x, pc.y)
    b = bi_eval(fxy, pc.x, pc.y)
    c = bi_eval(fyy, pc.x, pc.y)
    return bool(a * c - b * b)


def local_report(f: Poly, pc: PointClass, cfg: EngineConfig = DEFAULT) -> LocalReport:
    """(mu, r, delta) of the level curve of f through a critical point class.

    A nondegenerate Hessian certifies a node (mu=1, r=2, delta=1) without
    any Puiseux work; that is an exact criterion in characteristic zero,
    and it covers the bulk of generated corpora."""
    fx = partial_x(f)
    fy = partial_y(f)
    if bool(bi_eval(fx, pc.x, pc.y)) or bool(bi_eval(fy, pc.x, pc.y)):
        return LocalReport(pc, 0, 1, 0)
    if cfg.fast_nodes and _hessian_nonzero(f, pc):
        return LocalReport(pc, 1, 2, 1)
    mu = milnor_local(f, pc)
    brs = branches_at(f, pc, cfg)
    r = sum(br.rel_degree for br in brs)
    if (mu + r - 1) % 2:
        raise InternalCheckError("parity violation in 2*delta = mu + r - 1")
    return LocalReport(pc, mu, r, (mu + r - 1) // 2)


def delta_local(mu: int, r: int) -> int:
    if (mu + r - 1) % 2:
        raise InternalCheckError("parity violation in 2*delta = mu + r - 1")
    return (mu + r - 1) // 2


# ---------------------------------------------------------------------------
# the place at infinity


def r_inf_of(ctx: TowerContext, F: Poly, cfg: EngineConfig = DEFAULT) -> int:
    """Branch count of a localized form F(y, u) at its origin over ctx."""
    return sum(br.rel_degree for br in branches_at_origin(ctx, F, cfg))


def mu_inf_of(F: Poly) -> int:
    """u-valuation of res_y(F_u, F_y) for a localized form F(y, u).

    This is the quotient rank over the whole line u = 0; under the degree
    condition the curve meets u = 0 only at y = 0, so it is also the local
    number there."""
    fu = partial_x(F)
    fy = partial_y(F)
    if not fu:
        if deg_y(fy) <= 0:
            return 0
        raise InputError("localized form does not depend on u")
    r = resultant_y(fu, fy)
    if not isinstance(r, Poly):
        r = Poly((r,)) if r else Poly(())
    v = _semantic_val(r)
    if v is None:
        raise InputError("partials of the localized form share a component")
    return v


def r_infinity(nf, cfg: EngineConfig = DEFAULT) -> int:
    """Branch count of the localized curve at its point at infinity."""
    return r_inf_of(TowerContext.base(cfg), localize_at_infinity(nf), cfg)


def mu_infinity(nf) -> int:
    return mu_inf_of(localize_at_infinity(nf))


def infinity_report(nf, cfg: EngineConfig = DEFAULT):
    """(r_inf, mu_inf, delta_inf) of the localized curve."""
    r = r_infinity(nf, cfg)
    mu = mu_infinity(nf)
    return r, mu, delta_local(mu, r)


# ---------------------------------------------------------------------------
# the local lemma record


def germ_bounds_check(H: Poly, cfg: EngineConfig = DEFAULT) -> dict:
    """Singularity bounds at the origin: mu against the branch count.

    bound_ok: mu >= (r-1)^2; strict_ok: r >= 3 implies mu > r - 1;
    coords_ok: when r = 2 and mu = 1, the two branches are smooth and
    transverse (distinct tangents by the 2-jet discriminant)."""
    if not bi_is_reduced(H):
        raise InputError("non-reduced input")
    base = TowerContext.base(cfg)
    if not _vanishes_at_origin(H):
        raise InputError("germ does not pass through the origin")
    mu0 = local_int_origin(base, partial_x(H), partial_y(H))
    brs = branches_at_origin(base, H, cfg)
    r = sum(br.rel_degree for br in brs)
    rec = {
        "mu0": mu0,
        "r": r,
        "bound_ok": mu0 >= (r - 1) ** 2,
        "strict_ok": (mu0 > r - 1) if r >= 3 else "vacuous",
        "coords_ok": "vacuous",
    }
    if r == 2 and mu0 == 1:
        smooth = all(br.multiplicity(cfg) == 1 for br in brs)
        a = _jet2(H, 0, 2)
        b = _jet2(H, 1, 1)
        c = _jet2(H, 2, 0)
        transverse = bool(b * b - 4 * a * c)
        rec["coords_ok"] = bool(smooth and transverse)
    return rec


def _jet2(H: Poly, i: int, j: int):
    if j > H.degree:
        return QQ(0)
    row = H.cs[j]
    if not isinstance(row, Poly) or i > row.degree:
        return QQ(0)
    return row.cs[i]
