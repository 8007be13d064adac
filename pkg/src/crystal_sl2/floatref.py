"""Floating-point reference for cross-validating the exact engine.

Everything here works with binary floats at a fixed numerical q and shares
no code with the exact arithmetic: q-numbers, ladder coefficients, the
coupled basis and the operator matrices are rebuilt from scratch.

Lowering produces entries of order q^k as differences of order-one terms,
so double precision loses about 8 digits at q = 0.01.  The default working
precision is therefore 113 bits (IEEE quad).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mpf

PRECISION_BITS = 113

__all__ = ["qnum_f", "ladder_f", "cg_table_f", "vector_reduced_f",
           "spinor_reduced_f", "PRECISION_BITS"]


def _num(x):
    """Exact rational (Fraction, int, str) as an mpf at the working precision."""
    x = Fraction(x)
    return mpf(x.numerator) / x.denominator


def _qpow(q, e):
    return q ** _num(e)


def qnum_f(x, q):
    x = _num(x)
    if q == 1:
        return x
    return (q ** x - q ** -x) / (q - 1 / q)


def ladder_f(d: int, j, m, q):
    j, m = Fraction(j), Fraction(m)
    if (d > 0 and m == j) or (d < 0 and m == -j):
        return mpf(0)
    return mpmath.sqrt(qnum_f(j - d * m, q) * qnum_f(j + d * m + 1, q))


def _ms(j):
    j = Fraction(j)
    return [j - k for k in range(int(2 * j) + 1)]


def _cg_table(j1, j2, q) -> dict:
    out = {}
    J = j1 + j2
    while J >= abs(j1 - j2):
        top = min(j1, J + j2)
        bottom = max(-j1, J - j2)
        c = {top: mpf(1)}
        a = top - 1
        while a >= bottom:
            c[a] = -c[a + 1] * _qpow(q, -(a + 1)) * ladder_f(1, j2, J - a - 1, q) / (
                ladder_f(1, j1, a, q) * _qpow(q, J - a))
            a -= 1
        norm = mpmath.sqrt(sum(v * v for v in c.values()))
        vec = {(m1, J - m1): v / norm for m1, v in c.items()}
        M = J
        while True:
            for (m1, m2), v in vec.items():
                out[(m1, m2, J, M)] = v
            if M == -J:
                break
            new = {}
            for (m1, m2), v in vec.items():
                if m1 > -j1:
                    key = (m1 - 1, m2)
                    new[key] = new.get(key, 0) + v * ladder_f(-1, j1, m1, q) * _qpow(q, m2)
                if m2 > -j2:
                    key = (m1, m2 - 1)
                    new[key] = new.get(key, 0) + v * ladder_f(-1, j2, m2, q) * _qpow(q, -m1)
            f = ladder_f(-1, J, M, q)
            vec = {k: v / f for k, v in new.items()}
            M -= 1
        J -= 1
    return out


@lru_cache(maxsize=None)
def _cg_cached(j1, j2, q, bits):
    with mpmath.workprec(bits):
        return _cg_table(j1, j2, _num(q))


def cg_table_f(j1, j2, q, bits: int = PRECISION_BITS) -> dict:
    """``{(m1, m2, J, M): float}`` by highest-weight recursion and lowering.

    Keys are Fractions; q is any exact rational (``"1/100"``, Fraction, int).
    """
    table = _cg_cached(Fraction(j1), Fraction(j2), Fraction(q), bits)
    return {k: float(v) for k, v in table.items()}


def _reduced_from(entry, j, J_out, j_in, q, table_of):
    """Reduced element from ``entry(m, m_in)``, pivoting on the largest CG."""
    best = None
    for m in _ms(j):
        for m1 in _ms(j_in):
            M = m1 + m
            if abs(M) > J_out:
                continue
            c = table_of(j_in, j).get((m1, m, J_out, M), mpf(0))
            if best is None or abs(c) > abs(best[2]):
                best = (m, m1, c)
    m, m1, c = best
    sign = -1 if (2 * Fraction(j)) % 2 else 1
    return sign * entry(m, m1) * mpmath.sqrt(qnum_f(2 * J_out + 1, q)) / c


def _vector_entry(j1, m, m1, q):
    """``<j1, m1+m| T_m |j1, m1>`` for the generator-built vector operator."""
    if m == 1:
        return -_qpow(q, -(m1 + 1)) * ladder_f(1, j1, m1, q) / mpmath.sqrt(qnum_f(2, q))
    if m == -1:
        return _qpow(q, -(m1 - 1)) * ladder_f(-1, j1, m1, q) / mpmath.sqrt(qnum_f(2, q))
    jpjm = ladder_f(-1, j1, m1, q) * ladder_f(1, j1, m1 - 1, q) if m1 > -j1 else 0
    return (qnum_f(2 * m1, q) / q + (q - 1 / q) * jpjm) / qnum_f(2, q)


def vector_reduced_f(j1, q, bits: int = PRECISION_BITS) -> float:
    j1 = Fraction(j1)
    with mpmath.workprec(bits):
        qq = _num(q)
        tables = lambda a, b: _cg_table(Fraction(a), Fraction(b), qq)
        return float(_reduced_from(lambda m, m1: _vector_entry(j1, m, m1, qq),
                                   1, j1, j1, qq, tables))


def _spinor_entry(dagger, m, j_in, m1, q):
    """``<out| T_m |j_in m1>`` from the two-mode Fock realization."""
    n1 = int(j_in + m1)
    n2 = int(j_in - m1)
    half = Fraction(1, 2)
    if not dagger:
        if m == half:
            return mpmath.sqrt(qnum_f(n1 + 1, q)) * _qpow(q, Fraction(n2, 2))
        return mpmath.sqrt(qnum_f(n2 + 1, q)) * _qpow(q, Fraction(-n1, 2))
    if m == half:
        return -mpmath.sqrt(qnum_f(n2, q)) * _qpow(q, Fraction(-(n1 + 1), 2)) if n2 else mpf(0)
    return mpmath.sqrt(qnum_f(n1, q)) * _qpow(q, Fraction(n2 + 1, 2)) if n1 else mpf(0)


def spinor_reduced_f(dagger: bool, j1, q, bits: int = PRECISION_BITS) -> float:
    j1 = Fraction(j1)
    J = j1 - Fraction(1, 2) if dagger else j1 + Fraction(1, 2)
    with mpmath.workprec(bits):
        qq = _num(q)
        tables = lambda a, b: _cg_table(Fraction(a), Fraction(b), qq)
        return float(_reduced_from(lambda m, m1: _spinor_entry(dagger, m, j1, m1, qq),
                                   Fraction(1, 2), J, j1, qq, tables))
