"""Field extensions of QQ presented as triangular towers, with lazy
splitting in the style of dynamic evaluation.

A TowerContext is a chain of levels, each a monic squarefree minimal
polynomial over the levels below.  Moduli need not be irreducible: a
TowerElem may be a zero divisor, and the arithmetic discovers that exactly
when a zero test or an inversion hits a proper gcd with a modulus.  At that
moment a SplitRequest carrying the coprime factors is raised; the
enumeration frame that created the offending level (identified by its tag)
rebuilds child contexts, one per factor, and replays its computation in
each.  Values computed this way are constant on each class of conjugate
roots, which is what the callers report.

Representations are nested Polys over QQ (depth equals the number of
levels, ascending, fully reduced); the zero element at any depth is the
empty Poly.  Elements of an ancestor context embed into a descendant by
wrapping, so mixed arithmetic between a context and its ancestors works
directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import DEFAULT, EngineConfig
from .errors import CapExceeded, InputError, InternalCheckError
from .parse import format_poly
from .poly import (
    Poly,
    ext_gcd_monic,
    gcd_monic,
    rational_roots,
    resultant,
    squarefree_part_monic,
    yun_squarefree,
)
from .rationals import QQ, qq_str

_tags = itertools.count(1)


class SplitRequest(Exception):
    """A modulus factored during a zero test or inversion.

    tag identifies the level; factors are monic coprime Polys over the
    subtower below that level, in representation form.
    """

    def __init__(self, tag: int, factors):
        super().__init__(f"modulus split at level tag {tag}")
        self.tag = tag
        self.factors = tuple(factors)


class Level:
    __slots__ = ("name", "minpoly", "degree", "tag")

    def __init__(self, name: str, minpoly: Poly, tag: int):
        self.name = name
        self.minpoly = minpoly
        self.degree = minpoly.degree
        self.tag = tag


class TowerContext:
    __slots__ = ("levels", "parent", "config", "degree")

    def __init__(self, levels: tuple, parent, config: EngineConfig):
        self.levels = levels
        self.parent = parent
        self.config = config
        d = 1
        for lv in levels:
            d *= lv.degree
        self.degree = d

    @classmethod
    def base(cls, config: EngineConfig = DEFAULT) -> "TowerContext":
        return cls((), None, config)

    @property
    def depth(self) -> int:
        return len(self.levels)

    @property
    def top(self) -> Level:
        return self.levels[-1]

    def zero(self) -> "TowerElem":
        return TowerElem(self, _zero_rep(self.depth))

    def one(self) -> "TowerElem":
        return self.from_qq(QQ(1))

    def from_qq(self, q) -> "TowerElem":
        return TowerElem(self, _embed_scalar(QQ(q), self.depth))

    def var(self) -> "TowerElem":
        if not self.levels:
            raise InternalCheckError("the base context has no generator")
        rep = Poly((_zero_rep(self.depth - 1), _embed_scalar(QQ(1), self.depth - 1)))
        return TowerElem(self, rep)

    def is_ancestor_of(self, other: "TowerContext") -> bool:
        walk = other
        while walk is not None:
            if walk is self:
                return True
            walk = walk.parent
        return False

    def level_names(self) -> tuple[str, ...]:
        return tuple(lv.name for lv in self.levels)

    def minpoly_strings(self) -> tuple[str, ...]:
        out = []
        for k, lv in enumerate(self.levels):
            names = self.level_names()[: k + 1]
            out.append(format_poly(lv.minpoly, names))
        return tuple(out)

    def sort_key(self) -> tuple:
        return self.minpoly_strings()

    def __repr__(self):
        chain = ", ".join(self.minpoly_strings()) or "QQ"
        return f"<TowerContext deg {self.degree}: {chain}>"


def _zero_rep(depth: int):
    return QQ(0) if depth == 0 else Poly(())


def _embed_scalar(q, depth: int):
    if depth == 0:
        return QQ(q)
    if not q:
        return Poly(())
    out = QQ(q)
    for _ in range(depth):
        out = Poly((out,))
    return out


def _rep_of(c, depth: int):
    """Representation of a coefficient that may be a TowerElem or a scalar."""
    if isinstance(c, TowerElem):
        return c.rep
    return _embed_scalar(QQ(c), depth)


def _reduce(rep, levels: tuple):
    """Fully reduce a possibly unreduced nested representation."""
    if not levels:
        if isinstance(rep, Poly):
            raise InternalCheckError("representation deeper than the tower")
        return QQ(rep) if type(rep) is int else rep
    if not isinstance(rep, Poly):
        return _embed_scalar(QQ(rep), len(levels))
    sub = levels[:-1]
    m = levels[-1].minpoly
    cs = [_reduce(c, sub) for c in rep.cs]
    p = Poly(cs)
    if p.degree >= m.degree:
        p = p % m
        p = Poly([_reduce(c, sub) for c in p.cs])
    return p


class TowerElem:
    """An element of a tower context; arithmetic is exact, zero tests are
    semantic, and inversions may raise SplitRequest."""

    __slots__ = ("ctx", "rep", "_inv")

    def __init__(self, ctx: TowerContext, rep):
        self.ctx = ctx
        self.rep = rep
        self._inv = None

    # -- coercion ----------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, TowerElem):
            if other.ctx is self.ctx:
                return self, other
            if other.ctx.is_ancestor_of(self.ctx):
                return self, other.in_context(self.ctx)
            if self.ctx.is_ancestor_of(other.ctx):
                return self.in_context(other.ctx), other
            raise InternalCheckError("arithmetic between unrelated towers")
        if isinstance(other, (int, QQ)):
            return self, self.ctx.from_qq(other)
        return self, None

    def in_context(self, ctx2: TowerContext) -> "TowerElem":
        if ctx2 is self.ctx:
            return self
        chain = []
        walk = ctx2
        while walk is not None and walk is not self.ctx:
            chain.append(walk)
            walk = walk.parent
        if walk is None:
            raise InternalCheckError("element does not embed in that context")
        rep = self.rep
        for _ in chain:
            rep = Poly((rep,)) if rep else Poly(())
        return TowerElem(ctx2, rep)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if b is None:
            return NotImplemented
        return TowerElem(a.ctx, a.rep + b.rep)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        if b is None:
            return NotImplemented
        return TowerElem(a.ctx, a.rep - b.rep)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return TowerElem(self.ctx, -self.rep)

    def __mul__(self, other):
        a, b = self._pair(other)
        if b is None:
            return NotImplemented
        return TowerElem(a.ctx, _reduce(a.rep * b.rep, a.ctx.levels))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.ctx.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            if n > 1:
                base = base * base
            n >>= 1
        return acc

    def __truediv__(self, other):
        if isinstance(other, (int, QQ)):
            q = QQ(other)
            if not q:
                raise ZeroDivisionError("division by zero")
            return self * self.ctx.from_qq(QQ(1) / q)
        if isinstance(other, TowerElem):
            a, b = self._pair(other)
            return a * b.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, QQ)):
            if not other:
                return self.ctx.zero()
            return self.inverse() * other
        return NotImplemented

    # -- semantics ---------------------------------------------------------

    def __bool__(self) -> bool:
        rep = self.rep
        if not isinstance(rep, Poly):
            return bool(rep)
        if not rep:
            return False
        if self._inv is not None:
            return True
        if rep.degree == 0:
            return bool(TowerElem(self.ctx.parent, rep.cs[0]))
        self.inverse()
        return True

    def is_zero(self) -> bool:
        return not self

    def inverse(self) -> "TowerElem":
        if self._inv is not None:
            return self._inv
        ctx = self.ctx
        if not isinstance(self.rep, Poly):
            if not self.rep:
                raise ZeroDivisionError("inverse of zero")
            inv = TowerElem(ctx, QQ(1) / self.rep)
        else:
            if not self.rep:
                raise ZeroDivisionError("inverse of zero")
            sub = ctx.parent
            A = Poly([TowerElem(sub, c) for c in self.rep.cs])
            if not A:
                raise ZeroDivisionError("inverse of zero")
            M = Poly([TowerElem(sub, c) for c in ctx.top.minpoly.cs])
            g, u = ext_gcd_monic(A, M)
            d = sub.depth
            if g.degree == 0:
                rep = Poly([_rep_of(c, d) for c in u.cs])
                inv = TowerElem(ctx, _reduce(rep, ctx.levels))
            else:
                cof = M / g
                raise SplitRequest(
                    ctx.top.tag,
                    (
                        Poly([_rep_of(c, d) for c in g.cs]),
                        Poly([_rep_of(c, d) for c in cof.cs]),
                    ),
                )
        self._inv = inv
        inv._inv = self
        return inv

    # -- conversions and display ------------------------------------------

    def is_rational(self) -> bool:
        rep = self.rep
        while isinstance(rep, Poly):
            if rep.degree > 0:
                return False
            rep = rep.cs[0] if rep.cs else QQ(0)
        return True

    def as_qq(self):
        rep = self.rep
        while isinstance(rep, Poly):
            if rep.degree > 0:
                raise InternalCheckError("element is not rational")
            rep = rep.cs[0] if rep.cs else QQ(0)
        return rep

    def __str__(self) -> str:
        if not isinstance(self.rep, Poly):
            return qq_str(self.rep)
        if not self.rep:
            return "0"
        return format_poly(self.rep, self.ctx.level_names())

    def __repr__(self):
        return f"<TowerElem {self} in deg-{self.ctx.degree} tower>"


@dataclass(frozen=True)
class PointClass:
    """A conjugacy class of points with coordinates in a tower context;
    orbit_degree counts the geometric points it represents."""

    ctx: TowerContext
    x: TowerElem
    y: TowerElem
    orbit_degree: int

    def sort_key(self) -> tuple:
        return self.ctx.sort_key() + (str(self.x), str(self.y))


# ---------------------------------------------------------------------------
# adjunction and split-aware enumeration


def _coerce_poly(ctx: TowerContext, p: Poly) -> Poly:
    cs = []
    for c in p.cs:
        if isinstance(c, TowerElem):
            cs.append(c.in_context(ctx) if c.ctx is not ctx else c)
        else:
            cs.append(ctx.from_qq(c) if c else ctx.zero())
    return Poly(cs)


def adjoin(ctx: TowerContext, p: Poly, name: str | None = None):
    """Adjoin the roots of p, returning [(context, root), ...].

    p is made monic and squarefree first.  Over the base context rational
    roots are split off eagerly; a linear factor is absorbed into ctx
    instead of creating a junk level.  Deterministic order: rational roots
    ascending, then the extension context.
    """
    cfg = ctx.config
    p = _coerce_poly(ctx, p)
    if p.degree < 1:
        raise InputError("adjoin needs a nonconstant polynomial")
    p = p.monic()
    g = gcd_monic(p, p.derivative())
    if g.degree > 0:
        p = p / g
    out = []
    if ctx.depth == 0:
        qq_p = Poly([_rep_of(c, 0) for c in p.cs])
        roots, cof = rational_roots(qq_p)
        for r in roots:
            out.append((ctx, ctx.from_qq(r)))
        if cof.degree == 0:
            return out
        p = _coerce_poly(ctx, cof)
    if p.degree == 1:
        c0 = p.cs[0]
        root = -(c0 if isinstance(c0, TowerElem) else ctx.from_qq(c0))
        out.append((ctx, root))
        return out
    if ctx.depth + 1 > cfg.max_tower_depth:
        raise CapExceeded(f"tower depth cap {cfg.max_tower_depth} exceeded")
    if ctx.degree * p.degree > cfg.max_ext_degree:
        raise CapExceeded(
            f"extension degree {ctx.degree * p.degree} exceeds cap {cfg.max_ext_degree}"
        )
    minpoly = Poly([_rep_of(c, ctx.depth) for c in p.cs])
    level = Level(name=name or f"a{ctx.depth}", minpoly=minpoly, tag=next(_tags))
    child = TowerContext(ctx.levels + (level,), ctx, cfg)
    out.append((child, child.var()))
    return out


def _split_children(ctx2: TowerContext, factors):
    base = ctx2.parent
    tag = ctx2.top.tag
    name = ctx2.top.name
    out = []
    for fac in factors:
        if fac.degree == 1:
            c0 = fac.cs[0]
            root = TowerElem(base, _reduce(-c0 if c0 else _zero_rep(base.depth), base.levels))
            out.append((base, root))
        else:
            level = Level(name=name, minpoly=fac, tag=tag)
            child = TowerContext(base.levels + (level,), base, base.config)
            out.append((child, child.var()))
    return out


def map_roots(ctx: TowerContext, p: Poly, fn, name: str | None = None):
    """Run fn(context, root) over every root class of p above ctx.

    Splits of the level this call created (or of its refinements) are
    handled here by replaying fn on each child; splits belonging to levels
    of ctx itself or to other frames propagate outward.  Returns
    [((context, root), result), ...] in deterministic order.
    """
    out = []
    stack = list(reversed(adjoin(ctx, p, name)))
    while stack:
        c2, root = stack.pop()
        try:
            out.append(((c2, root), fn(c2, root)))
        except SplitRequest as s:
            if c2 is not ctx and c2.levels and s.tag == c2.top.tag:
                stack.extend(reversed(_split_children(c2, s.factors)))
            else:
                raise
    return out


def tower_squarefree(ctx: TowerContext, p: Poly):
    """Yun decomposition over the context's field; [(factor, mult), ...]."""
    return yun_squarefree(_coerce_poly(ctx, p))


# ---------------------------------------------------------------------------
# minimal polynomials over QQ


def _lift_lambda(rep, depth: int):
    """Replace QQ leaves of a representation by constant lambda-polys."""
    if depth == 0:
        return Poly((rep,)) if rep else Poly(())
    if not isinstance(rep, Poly) or not rep:
        return Poly(())
    return Poly([_lift_lambda(c, depth - 1) for c in rep.cs])


def char_poly_over_Q(e: TowerElem) -> Poly:
    """Monic polynomial of degree [ctx : QQ] whose roots, counted with
    multiplicity, are the images of e under every embedding of its context.

    Computed by eliminating the tower generators with iterated resultants
    against the chain of minimal polynomials (top level first); each level
    is monic, so the elimination is an exact product over embeddings and
    the multiplicity of a root counts the embeddings landing on it.
    """
    k = e.ctx.depth
    if e.is_rational():
        lin = Poly((-e.as_qq(), QQ(1)))
        out = Poly((QQ(1),))
        for _ in range(e.ctx.degree):
            out = out * lin
        return out
    t = _embed_lambda_var(k) - _lift_lambda(e.rep, k)
    levels = e.ctx.levels
    for j in range(k - 1, -1, -1):
        t = resultant(_lift_lambda(levels[j].minpoly, j + 1), t)
        if not isinstance(t, Poly):
            raise InternalCheckError("elimination collapsed early")
    if t.degree != e.ctx.degree or t.cs[-1] != 1:
        raise InternalCheckError("embedding count does not match the tower degree")
    return t


def min_poly_over_Q(e: TowerElem) -> Poly:
    """Monic squarefree annihilator of e over QQ.

    The squarefree part of char_poly_over_Q: its roots are exactly the
    conjugates of e, so for a class that is a single Galois orbit this is
    the minimal polynomial.
    """
    if e.is_rational():
        return Poly((-e.as_qq(), QQ(1)))
    return squarefree_part_monic(char_poly_over_Q(e))


def _embed_lambda_var(depth: int):
    lam = Poly((QQ(0), QQ(1)))
    out = lam
    for _ in range(depth):
        out = Poly((out,))
    return out
