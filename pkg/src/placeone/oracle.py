"""Independent brute-force verifiers for the main kernels.

Everything here recomputes a quantity the engine already knows by a
different algorithm: resultants as Sylvester determinants under
fraction-free Bareiss elimination, global intersection dimensions from the
multiplication matrix of the second curve on the first one's residue
module, and local intersection numbers as corank of truncated ideals.  The
test suite pins the fast paths to these.  Speed is a non-goal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import bi_translate, deg_y
from .config import DEFAULT, EngineConfig
from .errors import CapExceeded, InputError
from .poly import Poly
from .rationals import QQ


# ---------------------------------------------------------------------------
# determinant resultants


def sylvester_matrix(a: Poly, b: Poly):
    """Coefficient matrix whose determinant is res(a, b); entries are made
    uniform (all Poly or all QQ) so Bareiss division stays in one ring."""
    m, n = a.degree, b.degree
    size = m + n
    rows = []
    ra = list(reversed(a.cs))
    rb = list(reversed(b.cs))
    for r in range(n):
        rows.append([0] * r + ra + [0] * (n - 1 - r))
    for r in range(m):
        rows.append([0] * r + rb + [0] * (m - 1 - r))
    if any(isinstance(c, Poly) for row in rows for c in row):
        coerce = lambda c: c if isinstance(c, Poly) else (Poly((c,)) if c else Poly(()))
    else:
        coerce = lambda c: QQ(c) if isinstance(c, int) else c
    return [[coerce(c) for c in row] for row in rows], size


def det_bareiss(M, size: int):
    """Fraction-free determinant; all intermediate divisions are exact."""
    if size == 0:
        return QQ(1)
    M = [row[:] for row in M]
    sign = 1
    prev = None
    for k in range(size - 1):
        if not M[k][k]:
            for r in range(k + 1, size):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return M[k][k] * 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                t = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = t if prev is None else t / prev
            M[i][k] = 0
        prev = M[k][k]
    d = M[size - 1][size - 1]
    return d if sign == 1 else -d


def resultant_sylvester(a: Poly, b: Poly):
    """res(a, b) as a determinant; conventions match the kernel resultant."""
    if not a or not b:
        other = b if not a else a
        return 0 if other.degree >= 1 else 1
    M, size = sylvester_matrix(a, b)
    return det_bareiss(M, size)


# ---------------------------------------------------------------------------
# global intersection dimension


def _as_row(c) -> Poly:
    if isinstance(c, Poly):
        return c
    return Poly((c,)) if c else Poly(())


def _reduce_mod(f: Poly, v: list) -> list:
    """Reduce a y-coefficient vector modulo monic f, in place."""
    n = f.degree
    while len(v) > n:
        top = v.pop()
        if not top:
            continue
        for j in range(n):
            v[-n + j] = v[-n + j] - top * _as_row(f.cs[j])
    return v


def quotient_dim_global(f: Poly, g: Poly) -> int:
    """dim_Q Q[x,y]/(f, g) for f monic in y.

    Q[x,y]/(f) is a free Q[x]-module on 1, y, ..., y^(n-1); the cokernel of
    multiplication by g has dimension equal to the degree of the matrix
    determinant.  No resultant sequence is involved."""
    if not f or not g:
        raise InputError("intersection with the zero polynomial")
    top = f.cs[-1]
    if isinstance(top, Poly) and (top.degree != 0 or top.cs[0] != 1):
        raise InputError("the first curve must be monic in y")
    n = f.degree
    if n < 1:
        raise InputError("the first curve must involve y")
    col = _reduce_mod(f, [_as_row(c) for c in g.cs])
    col += [Poly(())] * (n - len(col))
    cols = [list(col)]
    for _ in range(n - 1):
        nxt = [Poly(())] + [row for row in cols[-1]]
        cols.append(_reduce_mod(f, nxt) + [Poly(())] * (n - len(nxt)))
    M = [[cols[k][j] for k in range(n)] for j in range(n)]
    d = det_bareiss(M, n)
    if not d:
        raise InputError("curves share a component: infinite intersection")
    return d.degree if isinstance(d, Poly) else 0


# ---------------------------------------------------------------------------
# local intersection dimension by truncated linear algebra


@dataclass(frozen=True)
class TruncatedQuotient:
    """One truncation step: the quotient by (f, g) and all monomials of
    total degree cap."""

    cap: int
    n_monomials: int
    dimension: int
    stabilized: bool


def _mono_dict(F: Poly) -> dict:
    out = {}
    for j, row in enumerate(F.cs):
        if not isinstance(row, Poly):
            if row:
                out[(0, j)] = QQ(row) if isinstance(row, int) else row
            continue
        for i, c in enumerate(row.cs):
            if c:
                out[(i, j)] = QQ(c) if isinstance(c, int) else c
    return out


def _mono_key(m):
    return (m[0] + m[1], m[0])


def _trunc_dim(mf: dict, mg: dict, D: int) -> int:
    """Corank of the span of all truncated monomial multiples of the two
    germs inside the monomials of total degree < D."""
    vf = min(i + j for i, j in mf)
    vg = min(i + j for i, j in mg)
    pivots: dict = {}

    def reduce_insert(row: dict):
        while row:
            k = min(row, key=_mono_key)
            if k not in pivots:
                inv = 1 / row[k]
                pivots[k] = {m: c * inv for m, c in row.items()}
                return
            prow = pivots[k]
            coef = row[k]
            for m, c in prow.items():
                v = row.get(m, QQ(0)) - coef * c
                if v:
                    row[m] = v
                elif m in row:
                    del row[m]

    for src, val in ((mf, vf), (mg, vg)):
        for a in range(D - val):
            for b in range(D - val - a):
                row = {}
                for (i, j), c in src.items():
                    if i + a + j + b < D:
                        row[(i + a, j + b)] = c
                if row:
                    reduce_insert(row)
    return D * (D + 1) // 2 - len(pivots)


def quotient_dim_local(f: Poly, g: Poly, p=(0, 0), cfg: EngineConfig = DEFAULT) -> int:
    """dim_Q Q[[x,y]]/(f, g) at the rational point p.

    Truncation degrees double until the dimension agrees across two
    consecutive doublings; the graded pieces of a finite-colength quotient
    cannot revive after vanishing, so a plateau certifies the limit."""
    return quotient_dim_steps(f, g, p, cfg)[-1].dimension


def quotient_dim_steps(f: Poly, g: Poly, p=(0, 0), cfg: EngineConfig = DEFAULT):
    """The refinement trail behind quotient_dim_local."""
    a, b = QQ(p[0]), QQ(p[1])
    if a or b:
        f = bi_translate(f, a, b)
        g = bi_translate(g, a, b)
    mf, mg = _mono_dict(f), _mono_dict(g)
    if not mf or not mg:
        raise InputError("local quotient of a zero germ")
    steps = []
    stable = 0
    D = cfg.trunc_start
    while D <= cfg.oracle_cap:
        dim = _trunc_dim(mf, mg, D)
        if steps and dim == steps[-1].dimension:
            stable += 1
        else:
            stable = 0
        done = stable >= 2
        steps.append(TruncatedQuotient(D, D * (D + 1) // 2, dim, done))
        if done:
            return steps
        D *= 2
    raise CapExceeded(f"oracle cap exceeded: no stabilization below degree {cfg.oracle_cap}")
