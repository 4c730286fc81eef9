"""Exact rational scalars and small integer utilities.

QQ is gmpy2.mpq when available and fractions.Fraction otherwise; both give
exact field arithmetic, expose numerator/denominator, and print as "p/q".
"""

from __future__ import annotations

import math

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as QQ

QQ0 = QQ(0)
QQ1 = QQ(1)


def qq(value) -> "QQ":
    """Coerce an int, string like "-3/4", or rational to QQ."""
    if isinstance(value, str):
        value = value.strip()
    return QQ(value)


def qq_str(value) -> str:
    return str(QQ(value))


def is_integer(value) -> bool:
    return QQ(value).denominator == 1


# ---------------------------------------------------------------------------
# Integer factorization, only used to enumerate candidate rational roots of
# monic polynomials over QQ.  Deterministic Miller-Rabin is exact for the
# 64-bit-ish magnitudes seen here; Pollard rho handles stray large factors.

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        x = y = 2
        d = 1
        steps = 0
        while d == 1:
            steps += 1
            if steps > 1 << 20:
                d = n  # give up on this offset; hard composites must not hang
                break
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"factorization failed for {n}")


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; n must be nonzero."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        # cheap trial division first; rho only for hard composites
        d = 0
        f = 7
        while f * f <= m and f < 1 << 16:
            if m % f == 0:
                d = f
                break
            f += 2
        if not d:
            d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def divisors(n: int, limit: int = 100000) -> list[int]:
    """Sorted positive divisors of |n|; raises CapExceeded past limit."""
    from .errors import CapExceeded

    facs = factorint(n)
    out = [1]
    for p, e in facs.items():
        powers = [p**k for k in range(e + 1)]
        out = [d * q for d in out for q in powers]
        if len(out) > limit:
            raise CapExceeded(f"divisor enumeration of {n} exceeds {limit}")
    return sorted(out)
