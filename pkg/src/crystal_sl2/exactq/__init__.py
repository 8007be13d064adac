"""Exact arithmetic over rational functions of q extended by square roots.

>>> from crystal_sl2.exactq import qnum, format_ratfunc
>>> format_ratfunc(qnum(3))
'q^2 + 1 + q^-2'
"""

from functools import lru_cache

from ..halfint import HalfInt, half
from .asymptotics import LeadingBehavior, Limit, eval_numeric, leading, limit_q0
from .grammar import (ParseError, format_laurent, format_ratfunc, format_scalar,
                      parse_scalar)
from .ring import LaurentPoly, QRatFunc
from .scalar import Kernel, QScalar, RadicalError, SqrtTerm, sqrt_of

__all__ = [
    "HalfInt", "Kernel", "LaurentPoly", "LeadingBehavior", "Limit", "ParseError",
    "QRatFunc", "QScalar", "RadicalError", "SqrtTerm", "eval_numeric",
    "format_laurent", "format_ratfunc", "format_scalar", "leading", "limit_q0",
    "parse_scalar", "qfact", "qnum", "sqrt_of",
]


@lru_cache(maxsize=None)
def _qnum_twice(x2: int) -> QRatFunc:
    if x2 == 0:
        return QRatFunc.zero()
    if x2 < 0:
        return -_qnum_twice(-x2)
    if x2 % 2 == 0:
        # [x] = q^(x-1) + q^(x-3) + ... + q^(1-x)
        x = x2 // 2
        ints = [0] * (4 * (x - 1) + 1)
        ints[::4] = [1] * x
        return QRatFunc._normalized(1, -2 * (x - 1), ints, [1])
    # (t^X - t^-X) / (t^2 - t^-2) with t = q^(1/2), X = 2x
    num = [-1] + [0] * (2 * x2 - 1) + [1]
    return QRatFunc._normalized(1, -x2 + 2, num, [-1, 0, 0, 0, 1])


def qnum(x) -> QRatFunc:
    """The q-number ``[x] = (q^x - q^-x) / (q - q^-1)`` for half-integer x."""
    return _qnum_twice(half(x).twice)


@lru_cache(maxsize=None)
def qfact(n: int) -> QRatFunc:
    """``[n]! = [1][2]...[n]``, with ``[0]! = 1``."""
    if int(n) != n or n < 0:
        raise ValueError("qfact needs a non-negative integer")
    n = int(n)
    if n == 0:
        return QRatFunc.one()
    return qfact(n - 1) * qnum(n)
