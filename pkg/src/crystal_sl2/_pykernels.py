"""Dense integer polynomial kernels, pure-Python implementation.

Polynomials are lists of Python ints, lowest degree first, with no
trailing zeros; ``[]`` is the zero polynomial.  The compiled module
``_ckernels`` exports the same functions with the same semantics.
"""

from math import gcd, isqrt

IMPLEMENTATION = "python"


def trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n] if n != len(a) else a


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a, b):
    out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def scale(a, c):
    if c == 0:
        return []
    return [x * c for x in a]


def mul(a, b):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


def divmod_poly(a, b):
    """Division over Z when the leading coefficient of b divides each step.

    Returns ``(quotient, remainder)``; raises ArithmeticError when a step
    leaves a non-integral quotient coefficient.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) <= db:
        return [], trim(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        qc, rem = divmod(c, lb)
        if rem:
            raise ArithmeticError("non-integral polynomial quotient")
        q[k - db] = qc
        off = k - db
        for i in range(db + 1):
            r[off + i] -= qc * b[i]
    return trim(q), trim(r[:db])


def divexact(a, b):
    q, r = divmod_poly(a, b)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def prem(a, b):
    """Pseudo-remainder of a by b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        off = len(r) - 1 - db
        r = [x * lb for x in r]
        for i in range(db + 1):
            r[off + i] -= c * b[i]
        r = trim(r)
    return r


def _primitive(a):
    c = content(a)
    if c == 0:
        return []
    if a[-1] < 0:
        c = -c
    return [x // c for x in a] if c != 1 else list(a)


def _evaluate(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def _interpolate(h, x):
    out = []
    half = x // 2
    while h:
        r = h % x
        if r > half:
            r -= x
        out.append(r)
        h = (h - r) // x
    return out


def _divides(b, a):
    try:
        divexact(a, b)
    except ArithmeticError:
        return False
    return True


def _prs_gcd(a, b):
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prem(a, b)
        a, b = b, _primitive(r)
    return a


def gcd_poly(a, b):
    """Primitive gcd in Z[x] with positive leading coefficient.

    The integer content gcd is dropped.  Uses the heuristic
    evaluation/interpolation gcd and falls back to a primitive PRS.
    """
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    if len(a) == 1 or len(b) == 1:
        return [1]
    f, g = _primitive(a), _primitive(b)
    if f == g:
        return f
    nf = max(abs(c) for c in f)
    ng = max(abs(c) for c in g)
    bound = 2 * min(nf, ng) + 29
    x = max(min(bound, 99 * isqrt(bound)),
            2 * min(nf // abs(f[-1]), ng // abs(g[-1])) + 2)
    for _ in range(6):
        ff = _evaluate(f, x)
        gg = _evaluate(g, x)
        if ff and gg:
            h = gcd(ff, gg)
            cand = _primitive(_interpolate(h, x))
            if cand and _divides(cand, f) and _divides(cand, g):
                return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return _prs_gcd(f, g)
