# cython: language_level=3, boundscheck=False, wraparound=False
"""Dense integer polynomial kernels, compiled implementation.

Same contract as ``_pykernels``: lists of Python ints, lowest degree
first, no trailing zeros.  Multiplication switches to C ``long long``
arithmetic when the product coefficients provably fit in 62 bits.
"""

from math import gcd, isqrt

from libc.stdlib cimport malloc, free

IMPLEMENTATION = "cython"

cdef long long _SMALL = 1 << 30


cpdef list trim(list a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    if n != len(a):
        return a[:n]
    return a


cpdef list add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return trim(out)


cpdef list sub(list a, list b):
    cdef Py_ssize_t i
    cdef list out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return trim(out)


cpdef list scale(list a, object c):
    if c == 0:
        return []
    return [x * c for x in a]


cdef bint _fits(list a, Py_ssize_t *maxabs):
    cdef Py_ssize_t i
    cdef object v
    cdef long long m = 0, w
    for i in range(len(a)):
        v = a[i]
        if not (-_SMALL < v < _SMALL):
            return False
        w = v
        if w < 0:
            w = -w
        if w > m:
            m = w
    maxabs[0] = <Py_ssize_t>m
    return True


cdef list _mul_small(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef long long *ca = <long long *>malloc(na * sizeof(long long))
    cdef long long *cb = <long long *>malloc(nb * sizeof(long long))
    cdef long long *co = <long long *>malloc((na + nb - 1) * sizeof(long long))
    cdef long long bj
    cdef list out
    try:
        for i in range(na):
            ca[i] = a[i]
        for j in range(nb):
            cb[j] = b[j]
        for i in range(na + nb - 1):
            co[i] = 0
        for j in range(nb):
            bj = cb[j]
            if bj:
                for i in range(na):
                    co[i + j] += ca[i] * bj
        out = [co[i] for i in range(na + nb - 1)]
    finally:
        free(ca)
        free(cb)
        free(co)
    return out


cpdef list mul(list a, list b):
    cdef Py_ssize_t i, j, na, nb
    cdef Py_ssize_t ma = 0, mb = 0
    cdef object bj
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    na = len(a)
    nb = len(b)
    if _fits(a, &ma) and _fits(b, &mb):
        # |sum| <= nb * ma * mb must stay below 2**62
        if ma == 0 or mb == 0 or <double>ma * <double>mb * <double>nb < 4.0e18:
            return _mul_small(a, b)
    cdef list out = [0] * (na + nb - 1)
    for j in range(nb):
        bj = b[j]
        if bj:
            for i in range(na):
                out[i + j] = out[i + j] + a[i] * bj
    return out


cpdef tuple divmod_poly(list a, list b):
    cdef Py_ssize_t db, k, i, off
    cdef object lb, c, qc, rem
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef list r = list(a)
    db = len(b) - 1
    lb = b[db]
    if len(r) <= db:
        return [], trim(r)
    cdef list q = [0] * (len(r) - db)
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
            r[off + i] = r[off + i] - qc * b[i]
    return trim(q), trim(r[:db])


cpdef list divexact(list a, list b):
    q, r = divmod_poly(a, b)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


cpdef object content(list a):
    cdef object g = 0
    cdef Py_ssize_t i
    for i in range(len(a)):
        g = gcd(g, a[i])
        if g == 1:
            break
    return g


cpdef list derivative(list a):
    cdef Py_ssize_t i
    return trim([i * a[i] for i in range(1, len(a))])


cpdef list prem(list a, list b):
    cdef Py_ssize_t db = len(b) - 1, off, i
    cdef object lb = b[db], c
    cdef list r = list(a)
    while r and len(r) - 1 >= db:
        c = r[len(r) - 1]
        off = len(r) - 1 - db
        r = [x * lb for x in r]
        for i in range(db + 1):
            r[off + i] = r[off + i] - c * b[i]
        r = trim(r)
    return r


cdef list _primitive(list a):
    cdef object c = content(a)
    if c == 0:
        return []
    if a[len(a) - 1] < 0:
        c = -c
    if c == 1:
        return list(a)
    return [x // c for x in a]


cdef object _evaluate(list a, object x):
    cdef object v = 0
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        v = v * x + a[i]
    return v


cdef list _interpolate(object h, object x):
    cdef list out = []
    cdef object half = x // 2, r
    while h:
        r = h % x
        if r > half:
            r = r - x
        out.append(r)
        h = (h - r) // x
    return out


cdef bint _divides(list b, list a):
    try:
        divexact(a, b)
    except ArithmeticError:
        return False
    return True


cdef list _prs_gcd(list a, list b):
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prem(a, b)
        a, b = b, _primitive(r)
    return a


cpdef list gcd_poly(list a, list b):
    cdef int attempt
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    if len(a) == 1 or len(b) == 1:
        return [1]
    cdef list f = _primitive(a), g = _primitive(b), cand
    if f == g:
        return f
    nf = max([abs(c) for c in f])
    ng = max([abs(c) for c in g])
    bound = 2 * min(nf, ng) + 29
    x = max(min(bound, 99 * isqrt(bound)),
            2 * min(nf // abs(f[len(f) - 1]), ng // abs(g[len(g) - 1])) + 2)
    for attempt in range(6):
        ff = _evaluate(f, x)
        gg = _evaluate(g, x)
        if ff and gg:
            h = gcd(ff, gg)
            cand = _primitive(_interpolate(h, x))
            if cand and _divides(cand, f) and _divides(cand, g):
                return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return _prs_gcd(f, g)
