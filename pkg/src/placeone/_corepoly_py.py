"""Dense polynomial kernels over duck-typed exact coefficients.

Coefficients are anything with ring operators and a truthiness test that
means "nonzero": QQ scalars, nested polynomial objects, or tower elements
(whose __bool__ may raise to request a case split; that exception must pass
through untouched).  Lists are dense, ascending, and stripped of trailing
zeros.  The ints 0 and 1 serve as universal ring constants.

This file has a compiled twin (_corepoly_cy.pyx) kept in sync by hand.
"""


def strip(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return strip(out)


def sub(a, b):
    la, lb = len(a), len(b)
    n = la if la > lb else lb
    out = []
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
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return strip(out)


def mul_trunc(a, b, n):
    """Product modulo x^n."""
    if not a or not b:
        return []
    top = len(a) + len(b) - 1
    if top > n:
        top = n
    out = [0] * top
    for i, ca in enumerate(a):
        if i >= n or not ca:
            continue
        stop = len(b)
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
    if not a:
        return 0
    acc = a[-1]
    for i in range(len(a) - 2, -1, -1):
        acc = acc * x + a[i]
    return acc


def deriv(a):
    return strip([a[i] * i for i in range(1, len(a))])


def divmod_lc(a, b):
    """Quotient and remainder dividing by the leading coefficient of b.

    Correct over a field, and over any coefficient ring when b is monic.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lc = b[db]
    rem = list(a)
    if len(rem) - 1 < db:
        return [], strip(rem)
    quo = [0] * (len(rem) - db)
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
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return list(a)
    lc = b[db]
    rem = list(a)
    e = da - db + 1
    while rem and len(rem) - 1 >= db:
        k = len(rem) - 1
        c = rem[k]
        rem = [x * lc for x in rem]
        rem[k] = 0
        for j in range(db):
            rem[k - db + j] = rem[k - db + j] - c * b[j]
        while rem and not rem[-1]:
            rem.pop()
        e -= 1
    for _ in range(e):
        rem = [x * lc for x in rem]
    return strip(rem)


def resultant(a, b):
    """Resultant by the subresultant remainder sequence.

    Exact over any integral domain whose elements support *, /, ** and the
    truthiness test.  Zero inputs follow the common-root convention: the
    result is 0 when the other argument has positive degree, 1 otherwise.
    """
    if not a and not b:
        return 0
    if not a:
        return 0 if len(b) > 1 else 1
    if not b:
        return 0 if len(a) > 1 else 1
    m, n = len(a) - 1, len(b) - 1
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
