"""Polynomial helpers on top of the integer kernels.

Internally every quantity is a polynomial in ``t = q**(1/2)`` so that
half-integer powers of q are ordinary integer powers of t.  Square-root
kernels live in q proper; ``spread``/``compress`` convert between the two.
"""

from __future__ import annotations

from math import gcd, isqrt

from .. import _kernels as K

__all__ = [
    "split", "normalize_sign", "spread", "compress", "is_even",
    "sqf_list", "sqf_split", "int_sqf", "poly_gcd", "evaluate",
]


def split(ints):
    """Return ``(shift, content, primitive)`` with ``primitive[0] > 0``.

    ``ints`` is a nonzero coefficient list (lowest degree first); the
    shift counts vanishing low-order coefficients and the signed integer
    content carries the sign of the lowest nonzero coefficient.
    """
    k = 0
    while ints[k] == 0:
        k += 1
    p = list(ints[k:])
    c = K.content(p)
    if p[0] < 0:
        c = -c
    if c != 1:
        p = [x // c for x in p]
    return k, c, tuple(p)


def normalize_sign(p):
    if p and p[0] < 0:
        return [-x for x in p]
    return p


def poly_gcd(a, b):
    """Primitive gcd normalised to a positive constant term."""
    if len(a) == 1 or len(b) == 1:
        return (1,)
    g = K.gcd_poly(list(a), list(b))
    return tuple(normalize_sign(g))


def spread(p, step=2):
    """Substitute x -> x**step."""
    if not p:
        return []
    out = [0] * ((len(p) - 1) * step + 1)
    out[::step] = p
    return out


def is_even(p):
    return all(c == 0 for c in p[1::2])


def compress(p):
    """Inverse of :func:`spread` for even polynomials."""
    return list(p[::2])


def sqf_list(f):
    """Yun's square-free decomposition of a primitive f with f(0) > 0.

    Returns ``[(a_1, 1), (a_2, 2), ...]`` with primitive, pairwise coprime,
    square-free ``a_i`` (constant term positive) so that the product of
    ``a_i**i`` equals ``f``.  Trivial factors are omitted.
    """
    f = list(f)
    if len(f) <= 1:
        return []
    df = K.derivative(f)
    a0 = list(poly_gcd(f, df))
    b = K.divexact(f, a0)
    c = K.divexact(df, a0)
    d = K.sub(c, K.derivative(b))
    out = []
    i = 1
    while len(b) > 1:
        a = list(poly_gcd(b, d)) if d else list(normalize_sign(_prim(b)))
        b = K.divexact(b, a)
        if d:
            c = K.divexact(d, a)
            d = K.sub(c, K.derivative(b))
        if len(a) > 1:
            out.append((tuple(normalize_sign(_prim(a))), i))
        i += 1
    return out


def _prim(p):
    c = K.content(p)
    return [x // c for x in p] if c not in (0, 1) else list(p)


def sqf_split(f):
    """Write primitive ``f`` as ``square**2 * kernel`` (both primitive)."""
    square = [1]
    kernel = [1]
    for a, i in sqf_list(f):
        if i // 2:
            for _ in range(i // 2):
                square = K.mul(square, list(a))
        if i % 2:
            kernel = K.mul(kernel, list(a))
    return tuple(square), tuple(kernel)


def int_sqf(n: int):
    """Write a positive integer as ``f**2 * s`` with s square-free."""
    if n <= 0:
        raise ValueError("int_sqf needs a positive integer")
    if n == 1:
        return 1, 1
    r = isqrt(n)
    if r * r == n:
        return r, 1
    f, s = 1, 1
    if n < 1 << 40:
        m = n
        p = 2
        while p * p <= m:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            f *= p ** (e // 2)
            s *= p ** (e % 2)
            p += 1 if p == 2 else 2
        return f, s * m
    from sympy import factorint

    for p, e in factorint(n).items():
        f *= p ** (e // 2)
        s *= p ** (e % 2)
    return f, s


def evaluate(p, x):
    v = 0
    for c in reversed(p):
        v = v * x + c
    return v


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b
