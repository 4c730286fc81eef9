# cython: language_level=3
"""Compiled twin of _corepoly_py: dense kernels over duck-typed coefficients.

Coefficients stay Python objects (exact rationals, nested polynomials, tower
elements), so the speedup comes from typed indices and loop overhead, not C
arithmetic.  Truthiness tests may raise to request a case split; Cython
propagates that untouched.  Keep this file in sync with _corepoly_py.py.
"""


def strip(list cs):
    while cs and not cs[len(cs) - 1]:
        cs.pop()
    return cs


def add(a, b):
    cdef Py_ssize_t i, n
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    n = len(b)
    for i in range(n):
        out[i] = out[i] + b[i]
    return strip(out)


def sub(a, b):
    cdef Py_ssize_t i, la, lb, n
    la = len(a)
    lb = len(b)
    n = la if la > lb else lb
    cdef list out = []
    for i in range(n):
        if i < la and i < lb:
            out.append(a[i] - b[i])
        elif i < la:
            out.append(a[i])
        else:
            out.append(-b[i])
    return strip(out)


def neg(a):
    return [-c for c in a]


def mul(a, b):
    cdef Py_ssize_t i, j, la, lb
    la = len(a)
    lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    for i in range(la):
        ca = a[i]
        if not ca:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + ca * b[j]
    return strip(out)


def mul_trunc(a, b, Py_ssize_t n):
    """Product modulo x^n."""
    cdef Py_ssize_t i, j, la, lb, top, stop
    la = len(a)
    lb = len(b)
    if la == 0 or lb == 0:
        return []
    top = la + lb - 1
    if top > n:
        top = n
    cdef list out = [0] * top
    for i in range(la):
        if i >= n:
            continue
        ca = a[i]
        if not ca:
            continue
        stop = lb
        if stop > n - i:
            stop = n - i
        for j in range(stop):
            out[i + j] = out[i + j] + ca * b[j]
    return strip(out)


def scale(a, c):
    if not c:
        return []
    return strip([x * c for x in a])


def div_scalar(a, c):
    """Coefficient-wise exact division by the ring element c."""
    return strip([x / c for x in a])


def eval_at(a, x):
    cdef Py_ssize_t i
    if not a:
        return 0
    acc = a[len(a) - 1]
    for i in range(len(a) - 2, -1, -1):
        acc = acc * x + a[i]
    return acc


def deriv(a):
    cdef Py_ssize_t i
    return strip([a[i] * i for i in range(1, len(a))])


def divmod_lc(a, b):
    """Quotient and remainder dividing by the leading coefficient of b.

    Correct over a field, and over any coefficient ring when b is monic.
    """
    cdef Py_ssize_t db, k, j
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lc = b[db]
    cdef list rem = list(a)
    if len(rem) - 1 < db:
        return [], strip(rem)
    cdef list quo = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        q = c if lc == 1 else c / lc
        quo[k - db] = q
        rem[k] = 0
        for j in range(db):
            rem[k - db + j] = rem[k - db + j] - q * b[j]
    return strip(quo), strip(rem)


def prem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a modulo b."""
    cdef Py_ssize_t da, db, k, j, e
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    da = len(a) - 1
    db = len(b) - 1
    if da < db:
        return list(a)
    lc = b[db]
    cdef list rem = list(a)
    e = da - db + 1
    while rem and len(rem) - 1 >= db:
        k = len(rem) - 1
        c = rem[k]
        rem = [x * lc for x in rem]
        rem[k] = 0
        for j in range(db):
            rem[k - db + j] = rem[k - db + j] - c * b[j]
        while rem and not rem[len(rem) - 1]:
            rem.pop()
        e -= 1
    for j in range(e):
        rem = [x * lc for x in rem]
    return strip(rem)


def resultant(a, b):
    """Resultant by the subresultant remainder sequence.

    Exact over any integral domain whose elements support *, /, ** and the
    truthiness test.  Zero inputs follow the common-root convention: the
    result is 0 when the other argument has positive degree, 1 otherwise.
    """
    cdef Py_ssize_t m, n, d
    cdef bint negate
    if not a and not b:
        return 0
    if not a:
        return 0 if len(b) > 1 else 1
    if not b:
        return 0 if len(a) > 1 else 1
    m = len(a) - 1
    n = len(b) - 1
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return a[0] ** n
    if n == 0:
        return b[0] ** m
    negate = False
    if m < n:
        a, b = b, a
        m, n = n, m
        if (m & 1) and (n & 1):
            negate = not negate
    g = 1
    h = 1
    while True:
        d = m - n
        if (m & 1) and (n & 1):
            negate = not negate
        r = prem(a, b)
        if not r:
            return 0
        a, m = b, n
        denom = g * h**d if d else g
        if denom == 1:
            b = list(r)
        else:
            b = [c / denom for c in r]
        n = len(b) - 1
        g = a[m]
        if d:
            h = g if d == 1 else (g**d) / (h ** (d - 1))
        if n == 0:
            break
    res = (b[0] ** m) / (h ** (m - 1)) if m > 1 else b[0]
    return -res if negate else res
