"""The computation ring: rational functions of q extended by square roots.

A :class:`QScalar` is a finite sum ``sum_k coeff_k * sqrt(kernel_k)`` with
pairwise distinct kernels.  A kernel is ``s * k(q)`` where ``s`` is a
square-free positive integer and ``k`` a primitive square-free polynomial
in q with positive constant term.  Square roots of distinct kernels are
linearly independent over Q(q**(1/2)), so the representation is
canonical and equality is decidable term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
import numbers

from .. import _kernels as K
from ..halfint import HalfInt
from .polyalg import compress, int_sqf, is_even, poly_gcd, spread, sqf_split
from .ring import LaurentPoly, QRatFunc

__all__ = ["Kernel", "SqrtTerm", "QScalar", "sqrt_of", "RadicalError"]


class RadicalError(ArithmeticError):
    """A square root that the ring cannot represent (negative or quartic)."""


@dataclass(frozen=True, order=True)
class Kernel:
    """Square-free radicand ``scale * poly(q)``; ``Kernel.ONE`` means rational."""

    poly: tuple
    scale: int = 1

    def is_one(self) -> bool:
        return self.scale == 1 and self.poly == (1,)

    def as_laurent(self) -> LaurentPoly:
        return LaurentPoly({i: self.scale * c for i, c in enumerate(self.poly) if c})

    def as_ratfunc(self) -> QRatFunc:
        return QRatFunc._raw(Fraction(self.scale), 0, tuple(spread(list(self.poly))), (1,))

    def sort_key(self):
        return (len(self.poly), self.poly, self.scale)

    def value_at(self, q: Fraction) -> Fraction:
        v = Fraction(0)
        for c in reversed(self.poly):
            v = v * q + c
        return self.scale * v


Kernel.ONE = Kernel((1,), 1)


def _kernel_product(a: Kernel, b: Kernel):
    """Return ``(square_factor, kernel)`` with ``a*b = square_factor**2 * kernel``."""
    if a.is_one():
        return QRatFunc.one(), b
    if b.is_one():
        return QRatFunc.one(), a
    gs = gcd(a.scale, b.scale)
    scale = (a.scale // gs) * (b.scale // gs)
    if len(a.poly) > 1 and len(b.poly) > 1:
        g = poly_gcd(a.poly, b.poly)
    else:
        g = (1,)
    if len(g) > 1:
        pa = K.divexact(list(a.poly), list(g))
        pb = K.divexact(list(b.poly), list(g))
        sq = QRatFunc._raw(Fraction(gs), 0, tuple(spread(list(g))), (1,))
    else:
        pa, pb = list(a.poly), list(b.poly)
        sq = QRatFunc.constant(gs)
    poly = tuple(K.mul(pa, pb))
    return sq, Kernel(poly, scale)


@dataclass(frozen=True)
class SqrtTerm:
    """``coeff * sqrt(kernel)`` as exposed to callers."""

    coeff: QRatFunc
    kernel: LaurentPoly


def _coerce(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, QRatFunc):
        return QScalar._from_items([(Kernel.ONE, x)])
    if isinstance(x, LaurentPoly):
        return QScalar._from_items([(Kernel.ONE, x.to_ratfunc())])
    if isinstance(x, numbers.Rational) and not isinstance(x, bool):
        return QScalar._from_items([(Kernel.ONE, QRatFunc.constant(x))])
    return None


class QScalar:
    """Exact element of Q(q**(1/2)) adjoined square roots of q-polynomials."""

    __slots__ = ("_items", "_hash")

    def __init__(self, value=0):
        x = _coerce(value)
        if x is None:
            raise TypeError(f"cannot make a QScalar from {type(value).__name__}")
        self._items = x._items
        self._hash = None

    @classmethod
    def _from_items(cls, items):
        obj = cls.__new__(cls)
        obj._items = tuple(sorted(((k, c) for k, c in items if c), key=lambda kc: kc[0].sort_key()))
        obj._hash = None
        return obj

    @classmethod
    def _from_dict(cls, d):
        return cls._from_items(d.items())

    @classmethod
    def zero(cls) -> "QScalar":
        return _ZERO

    @classmethod
    def one(cls) -> "QScalar":
        return _ONE

    @classmethod
    def qpow(cls, exponent) -> "QScalar":
        """``q**exponent`` for a half-integer exponent."""
        return cls._from_items([(Kernel.ONE, QRatFunc.monomial(1, exponent))])

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> list:
        return [SqrtTerm(c, k.as_laurent()) for k, c in self._items]

    def items(self):
        """Raw ``(Kernel, QRatFunc)`` pairs in canonical order."""
        return self._items

    def __len__(self):
        return len(self._items)

    def __bool__(self):
        return bool(self._items)

    def is_zero(self) -> bool:
        return not self._items

    def is_rational(self) -> bool:
        return not self._items or (len(self._items) == 1 and self._items[0][0].is_one())

    def rational(self) -> QRatFunc:
        if not self._items:
            return QRatFunc.zero()
        if not self.is_rational():
            raise ValueError("scalar carries an irrational square root")
        return self._items[0][1]

    def is_single_term(self) -> bool:
        return len(self._items) == 1

    # -- arithmetic ---------------------------------------------------
    def __neg__(self):
        return QScalar._from_items([(k, -c) for k, c in self._items])

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self._items:
            return other
        if not other._items:
            return self
        acc = dict(self._items)
        for k, c in other._items:
            if k in acc:
                acc[k] = acc[k] + c
            else:
                acc[k] = c
        return QScalar._from_dict(acc)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, QRatFunc) or (isinstance(other, numbers.Rational) and not isinstance(other, bool)):
            if not other:
                return _ZERO
            return QScalar._from_items([(k, c * other) for k, c in self._items])
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = {}
        for ka, ca in self._items:
            for kb, cb in other._items:
                sq, k = _kernel_product(ka, kb)
                term = ca * cb * sq
                if k in acc:
                    acc[k] = acc[k] + term
                else:
                    acc[k] = term
        return QScalar._from_dict(acc)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        """Inverse of a single-term scalar: ``1/(c*sqrt(K)) = sqrt(K)/(c*K)``."""
        if not self._items:
            raise ZeroDivisionError("inverse of zero")
        if len(self._items) != 1:
            raise ValueError("only single-term scalars can be inverted")
        k, c = self._items[0]
        if k.is_one():
            return QScalar._from_items([(k, c.inverse())])
        return QScalar._from_items([(k, (c * k.as_ratfunc()).inverse())])

    def __truediv__(self, other):
        if isinstance(other, QRatFunc) or (isinstance(other, numbers.Rational) and not isinstance(other, bool)):
            inv = QRatFunc.constant(1) / other
            return QScalar._from_items([(k, c * inv) for k, c in self._items])
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exponent) -> "QScalar":
        """Multiply by ``q**exponent``."""
        return QScalar._from_items([(k, c.shift(exponent)) for k, c in self._items])

    # -- comparisons --------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.rational())
            else:
                self._hash = hash(self._items)
        return self._hash

    def __repr__(self):
        from .grammar import format_scalar

        return f"QScalar({format_scalar(self)!r})"

    def __str__(self):
        from .grammar import format_scalar

        return format_scalar(self)


_ZERO = QScalar._from_items([])
_ONE = QScalar._from_items([(Kernel.ONE, QRatFunc.one())])


def sqrt_of(r) -> QScalar:
    """Canonical positive square root of a rational function of q.

    ``r`` may be a QRatFunc, a rational number, or a QScalar without
    irrational part.  The returned value is positive as q -> 0+ (and so on
    all of (0, 1) for the products of q-numbers that arise here).  Raises
    :class:`RadicalError` for a negative radicand or one that would need a
    fourth root of q.
    """
    if isinstance(r, QScalar):
        if not r.is_rational():
            raise RadicalError("square root of an irrational scalar needs a fourth root")
        r = r.rational()
    elif not isinstance(r, QRatFunc):
        r = QRatFunc.constant(r)
    if r.is_zero():
        return _ZERO
    c, s, n, d = r._c, r._s, r._n, r._d
    if c < 0:
        raise RadicalError("negative radicand")
    if s % 2:
        raise RadicalError("odd power of q**(1/2) under a square root")
    nd = list(n) if d == (1,) else K.mul(list(n), list(d))
    if is_even(nd):
        sq_q, ker_q = sqf_split(compress(nd))
        sq_t = spread(list(sq_q))
    else:
        sq_t, ker_t = sqf_split(nd)
        if not is_even(list(ker_t)):
            raise RadicalError("square root would need q**(1/4)")
        ker_q = tuple(compress(list(ker_t)))
        sq_t = list(sq_t)
    f, sfree = int_sqf(c.numerator * c.denominator)
    coeff = QRatFunc._normalized(Fraction(f, c.denominator), s // 2, sq_t, list(d))
    return QScalar._from_items([(Kernel(tuple(ker_q), sfree), coeff)])
