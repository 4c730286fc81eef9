"""Generic dense univariate polynomials and the exact algorithms on them.

A Poly holds an ascending coefficient tuple over a duck-typed ring: QQ
scalars, other Polys (giving recursive-dense multivariate arithmetic), or
tower elements.  Operators with a Poly operand act level-for-level; scalar
multiplication by an *inner* polynomial must go through scale() explicitly,
which keeps mixed-level bugs loud.

The module-level functions (pseudo-remainder, subresultant resultant, monic
Euclid, Yun decomposition, primitive-sequence bivariate gcd) are written
against that duck interface so the same code runs over QQ, over QQ[x], and
over any tower of extensions.
"""

from __future__ import annotations

import math

from . import corepoly as K
from .errors import CapExceeded, InputError, InternalCheckError
from .rationals import QQ, _is_prime, divisors


def _coerce(c):
    return QQ(c) if type(c) is int else c


class Poly:
    __slots__ = ("cs",)

    def __init__(self, cs=()):
        lst = [_coerce(c) for c in cs]
        K.strip(lst)
        self.cs = tuple(lst)

    @classmethod
    def _make(cls, lst):
        """Wrap a kernel output list (already stripped) without re-checking."""
        p = object.__new__(cls)
        p.cs = tuple(lst)
        return p

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def var(cls):
        return cls((0, 1))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.cs) - 1

    @property
    def lc(self):
        return self.cs[-1]

    def coeff(self, i: int):
        return self.cs[i] if 0 <= i < len(self.cs) else 0

    def is_const(self) -> bool:
        return len(self.cs) <= 1

    def __bool__(self) -> bool:
        return bool(self.cs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.cs == other.cs
        if isinstance(other, (int, QQ)):
            if not other:
                return not self.cs
            return len(self.cs) == 1 and self.cs[0] == _coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.cs))

    def __repr__(self):
        return f"Poly{self.cs!r}"

    # -- ring operators ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Poly):
            return Poly._make(K.add(list(self.cs), list(other.cs)))
        if not other:
            return self
        out = list(self.cs) if self.cs else [0]
        out[0] = out[0] + other
        return Poly._make(K.strip(out))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Poly):
            return Poly._make(K.sub(list(self.cs), list(other.cs)))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly._make(K.neg(list(self.cs)))

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly._make(K.mul(list(self.cs), list(other.cs)))
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        acc = Poly.const(1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base if n > 1 else base
            n >>= 1
        return acc

    def scale(self, c):
        return Poly._make(K.scale(list(self.cs), c))

    def shift_up(self, k: int):
        """Multiply by x^k."""
        if not self.cs or k == 0:
            return self
        return Poly._make([0] * k + list(self.cs))

    # -- division ----------------------------------------------------------

    def __divmod__(self, other):
        q, r = K.divmod_lc(list(self.cs), list(other.cs))
        return Poly._make(q), Poly._make(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        """Exact division; raises InternalCheckError when inexact."""
        if isinstance(other, Poly):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            q, r = divmod(self, other)
            if r:
                raise InternalCheckError("inexact polynomial division")
            return q
        return Poly._make(K.div_scalar(list(self.cs), other))

    def __rtruediv__(self, other):
        if not other:
            return Poly._make([])
        raise TypeError("cannot divide a scalar by a polynomial")

    def monic(self):
        if not self.cs:
            return self
        lc = self.cs[-1]
        if lc == 1:
            return self
        return Poly._make(K.div_scalar(list(self.cs), lc))

    # -- calculus and evaluation ------------------------------------------

    def derivative(self):
        return Poly._make(K.deriv(list(self.cs)))

    def evaluate(self, x):
        return K.eval_at(list(self.cs), x)

    def compose(self, q: "Poly"):
        acc = Poly._make([])
        for c in reversed(self.cs):
            acc = acc * q + c
        return acc

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient; raises on zero."""
        for i, c in enumerate(self.cs):
            if c:
                return i
        raise ValueError("valuation of the zero polynomial")

    def trunc(self, n: int):
        return Poly._make(K.strip(list(self.cs[:n])))

    def map_coeffs(self, fn):
        out = [fn(c) for c in self.cs]
        return Poly._make(K.strip(out))


# ---------------------------------------------------------------------------
# algorithms


def prem(a: Poly, b: Poly) -> Poly:
    return Poly._make(K.prem(list(a.cs), list(b.cs)))


def resultant(a: Poly, b: Poly):
    """Subresultant-sequence resultant; returns a coefficient-ring element
    (possibly the ints 0 or 1)."""
    return K.resultant(list(a.cs), list(b.cs))


def gcd_monic(a: Poly, b: Poly) -> Poly:
    """Euclidean gcd over field coefficients, monic-normalized."""
    while b:
        a, b = b, a % b
    return a.monic()


def ext_gcd_monic(a: Poly, b: Poly):
    """(g, u) with u*a = g modulo b and g the monic gcd of a and b."""
    r0, u0 = a, Poly.const(1)
    r1, u1 = b, Poly._make([])
    while r1:
        q, r2 = divmod(r0, r1)
        r0, u0, r1, u1 = r1, u1, r2, u0 - q * u1
    if not r0:
        return r0, u0
    lc = r0.lc
    if lc == 1:
        return r0, u0
    return r0.monic(), Poly._make(K.div_scalar(list(u0.cs), lc))


def squarefree_part_monic(p: Poly) -> Poly:
    g = gcd_monic(p, p.derivative())
    if g.degree <= 0:
        return p.monic()
    return p.monic() / g


def yun_squarefree(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's squarefree decomposition over a characteristic-zero field.

    Returns [(q_i, i)] with p ~ prod q_i^i, the q_i monic, squarefree,
    pairwise coprime, and nonconstant.
    """
    if not p:
        raise InputError("squarefree decomposition of the zero polynomial")
    p = p.monic()
    if p.degree < 1:
        return []
    d = p.derivative()
    g = gcd_monic(p, d)
    if g.degree == 0:
        return [(p, 1)]
    out = []
    b = p / g
    c = d / g
    i = 1
    while b.degree > 0:
        z = c - b.derivative()
        a = gcd_monic(b, z)
        if a.degree > 0:
            out.append((a, i))
        b = b / a if a.degree > 0 else b
        c = z / a if a.degree > 0 else z
        i += 1
    return out


def content_monic(p: Poly) -> Poly:
    """Monic gcd of the (inner polynomial) coefficients."""
    g = Poly._make([])
    for c in p.cs:
        if c:
            g = gcd_monic(g, c)
        if g.degree == 0 and g:
            return g
    return g


def primitive_part(p: Poly) -> Poly:
    if not p:
        return p
    cont = content_monic(p)
    if cont.degree == 0:
        return p
    return Poly._make([c / cont if c else 0 for c in p.cs])


def gcd_primitive_prs(f: Poly, g: Poly) -> Poly:
    """Gcd of bivariate polynomials (outer Poly over inner Poly over QQ)
    by the primitive remainder sequence.

    Normalized so the leading inner coefficient is monic.
    """

    def norm(p: Poly) -> Poly:
        if not p:
            return p
        p = primitive_part(p)
        lc_in = p.lc.lc
        if lc_in == 1:
            return p
        return Poly._make([c / lc_in if c else c for c in p.cs])

    if not f:
        return norm(g)
    if not g:
        return norm(f)
    cont = gcd_monic(content_monic(f), content_monic(g))
    a, b = primitive_part(f), primitive_part(g)
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = prem(a, b)
        if r:
            r = primitive_part(r)
        a, b = b, r
    out = norm(a)
    if cont.degree > 0:
        out = out.scale(cont)
    return out


def interpolate_qq(points) -> Poly:
    """Lagrange interpolation through (x_i, y_i) with QQ nodes and values."""
    pts = list(points)
    acc = Poly._make([])
    for i, (xi, yi) in enumerate(pts):
        if not yi:
            continue
        num = Poly.const(QQ(1))
        den = QQ(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            num = num * Poly((-xj, 1))
            den = den * (xi - xj)
        acc = acc + num.scale(yi / den)
    return acc


def rational_roots(p: Poly):
    """(roots, cofactor) for a squarefree Poly over QQ.

    Divisor enumeration of the outer coefficients is the fast path; when a
    coefficient is too composite for that, a complete modular search (roots
    mod p, Newton lifting, rational reconstruction) takes over.  No rational
    root is ever silently missed, which the census counting relies on.
    """
    if p.degree < 1:
        return [], p.monic()
    lden = 1
    for c in p.cs:
        if c:
            lden = math.lcm(lden, int(c.denominator))
    ics = [int(c.numerator) * (lden // int(c.denominator)) if c else 0 for c in p.cs]
    roots = []
    work = p.monic()
    if ics[0] == 0:
        roots.append(QQ(0))
        work = work / Poly.var()
        ics = ics[1:]
        if len(ics) <= 1:
            return roots, work
    g = 0
    for a in ics:
        g = math.gcd(g, a)
    if g > 1:
        ics = [a // g for a in ics]
    cands = None
    # below 2^32 trial division factors the ends completely and cheaply;
    # past that, factoring can stall, so go straight to the modular search
    if abs(ics[0]) < 1 << 32 and abs(ics[-1]) < 1 << 32:
        try:
            nums = divisors(ics[0], limit=3000)
            dens = divisors(ics[-1], limit=50)
            if len(nums) * len(dens) <= 4000:
                cands = [
                    QQ(s * u) / QQ(v) for v in dens for u in nums for s in (1, -1)
                ]
        except (ArithmeticError, CapExceeded):
            pass
    if cands is None:
        cands = _modular_root_candidates(ics)
    seen = set()
    for cand in cands:
        if cand in seen:
            continue
        seen.add(cand)
        if not work.evaluate(cand):
            roots.append(cand)
            work = work / Poly((-cand, 1))
    return sorted(roots), work


# ---------------------------------------------------------------------------
# complete rational-root search, used when divisor enumeration is hopeless


def _modular_root_candidates(ics: list[int]) -> list:
    """Candidate rational roots of a squarefree integer polynomial.

    A root u/v in lowest terms has u | ics[0] and v | ics[-1], so it stays a
    simple root modulo any prime keeping the polynomial separable, lifts
    uniquely to p^e > 2*B^2 where B bounds |u| and |v|, and is recovered by
    rational reconstruction.  The caller verifies candidates exactly, so
    this only has to be complete, not tight."""
    B = max(abs(ics[0]), abs(ics[-1]))
    p = _separable_prime(ics)
    rp = [r for r in range(p) if _horner_mod(ics, r, p) == 0]
    if not rp:
        return []
    bound = 2 * B * B
    M = p
    while M <= bound:
        M *= p
    der = [i * ics[i] for i in range(1, len(ics))]
    out = []
    for r in rp:
        t = _newton_lift(ics, der, r, p, M)
        if t is None:
            continue
        uv = _rat_reconstruct(t, M)
        if uv is not None:
            out.append(QQ(uv[0]) / QQ(uv[1]))
    return out


def _separable_prime(ics: list[int]) -> int:
    p = 1009
    tries = 0
    while True:
        if _is_prime(p) and ics[-1] % p and _separable_mod(ics, p):
            return p
        p += 2
        tries += 1
        if tries > 50000:
            raise CapExceeded("no separable prime found for root extraction")


def _horner_mod(ics: list[int], r: int, m: int) -> int:
    acc = 0
    for c in reversed(ics):
        acc = (acc * r + c) % m
    return acc


def _gf_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        f = a[-1] * inv % p
        if f:
            off = len(a) - len(b)
            for i in range(len(b) - 1):
                a[off + i] = (a[off + i] - f * b[i]) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _separable_mod(ics: list[int], p: int) -> bool:
    a = [c % p for c in ics]
    if a[-1] == 0:
        return False
    b = [i * a[i] % p for i in range(1, len(a))]
    while b and b[-1] == 0:
        b.pop()
    if not b:
        return False
    while b:
        a, b = b, _gf_rem(a, b, p)
    return len(a) == 1


def _newton_lift(ics, der, r: int, p: int, M: int):
    m = p
    while m < M:
        m = m * m
        fr = _horner_mod(ics, r, m)
        dr = _horner_mod(der, r, m)
        try:
            inv = pow(dr, -1, m)
        except ValueError:
            return None
        r = (r - fr * inv) % m
    return r % M


def _rat_reconstruct(t: int, M: int):
    """(u, v) with t*v = u (mod M) and |u|, |v| below sqrt(M/2)."""
    a0, a1 = M, t % M
    u0, u1 = 0, 1
    bnd = math.isqrt(M // 2)
    while a1 > bnd:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        u0, u1 = u1, u0 - q * u1
    if u1 == 0 or abs(u1) > bnd:
        return None
    u, v = a1, u1
    g = math.gcd(abs(u), abs(v))
    if g > 1:
        u //= g
        v //= g
    if v < 0:
        u, v = -u, -v
    return (u, v)


def series_inverse(a: Poly, n: int) -> Poly:
    """Multiplicative inverse of a unit power series modulo x^n."""
    c0 = a.coeff(0)
    if not c0:
        raise ZeroDivisionError("series inverse of a non-unit")
    x = Poly.const(1 / c0)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        ax = Poly._make(K.mul_trunc(list(a.cs), list(x.cs), prec))
        x = Poly._make(
            K.strip(
                K.sub(
                    K.add(list(x.cs), list(x.cs)),
                    K.mul_trunc(list(x.cs), list(ax.cs), prec),
                )
            )
        )
    return x
