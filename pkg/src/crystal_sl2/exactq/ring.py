"""Laurent polynomials and rational functions in q with rational coefficients.

Both types are immutable and canonical, so ``==`` is exact equality of
functions.  Internally a :class:`QRatFunc` is

    c * t**s * n(t) / d(t),      t = q**(1/2),

with ``c`` a nonzero Fraction, ``n`` and ``d`` primitive integer
polynomials with positive constant terms and ``gcd(n, d) = 1``.
"""

from __future__ import annotations

from fractions import Fraction
import numbers

from .. import _kernels as K
from ..halfint import HalfInt
from .polyalg import lcm, poly_gcd, split

__all__ = ["LaurentPoly", "QRatFunc"]


class LaurentPoly:
    """Finite sum of rational multiples of half-integer powers of q."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                tw = HalfInt(e).twice
                clean[tw] = clean.get(tw, Fraction(0)) + c
        self._terms = {k: v for k, v in sorted(clean.items()) if v}

    @classmethod
    def _from_twice(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = {k: Fraction(v) for k, v in sorted(terms.items()) if v}
        return obj

    @property
    def terms(self) -> dict:
        """Mapping ``HalfInt exponent -> Fraction coefficient``."""
        return {HalfInt.from_twice(k): v for k, v in self._terms.items()}

    def is_zero(self) -> bool:
        return not self._terms

    def ord(self) -> HalfInt:
        if not self._terms:
            raise ValueError("ord of the zero polynomial")
        return HalfInt.from_twice(next(iter(self._terms)))

    def degree(self) -> HalfInt:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return HalfInt.from_twice(next(reversed(self._terms)))

    def to_ratfunc(self) -> "QRatFunc":
        if not self._terms:
            return QRatFunc.zero()
        lo = next(iter(self._terms))
        hi = next(reversed(self._terms))
        den = 1
        for v in self._terms.values():
            den = lcm(den, v.denominator)
        ints = [0] * (hi - lo + 1)
        for k, v in self._terms.items():
            ints[k - lo] = int(v * den)
        return QRatFunc._normalized(Fraction(1, den), lo, ints, [1])

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (QRatFunc, numbers.Rational)):
            return self.to_ratfunc() == other
        return NotImplemented

    def __hash__(self):
        return hash(self.to_ratfunc())

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly._from_twice(out)

    def __neg__(self):
        return LaurentPoly._from_twice({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPoly._from_twice(out)

    __rmul__ = __mul__

    def __repr__(self):
        from .grammar import format_laurent

        return f"LaurentPoly({format_laurent(self)!r})"


def _as_ratfunc(x):
    if isinstance(x, QRatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return x.to_ratfunc()
    if isinstance(x, numbers.Rational) and not isinstance(x, bool):
        return QRatFunc.constant(x)
    return None


class QRatFunc:
    """Canonical rational function of ``q**(1/2)`` over the rationals."""

    __slots__ = ("_c", "_s", "_n", "_d", "_hash")

    def __init__(self, num=0, den=1):
        n = _as_ratfunc(num)
        d = _as_ratfunc(den)
        if n is None or d is None:
            raise TypeError("QRatFunc expects Laurent polynomials or rationals")
        r = n / d
        self._c, self._s, self._n, self._d = r._c, r._s, r._n, r._d
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def _raw(cls, c, s, n, d):
        obj = cls.__new__(cls)
        obj._c = c
        obj._s = s
        obj._n = n
        obj._d = d
        obj._hash = None
        return obj

    @classmethod
    def _normalized(cls, c, s, nints, dints):
        """Canonical form of ``c * t**s * nints/dints`` (integer lists)."""
        c = Fraction(c)
        if c == 0 or not any(nints):
            return cls.zero()
        if not any(dints):
            raise ZeroDivisionError("rational function with zero denominator")
        ks, kc, n = split(nints)
        ds, dc, d = split(dints)
        c = c * Fraction(kc, dc)
        s = s + ks - ds
        if len(n) > 1 and len(d) > 1:
            g = poly_gcd(n, d)
            if len(g) > 1:
                n = tuple(K.divexact(list(n), list(g)))
                d = tuple(K.divexact(list(d), list(g)))
        return cls._raw(c, s, n, d)

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def constant(cls, value):
        value = Fraction(value)
        if value == 0:
            return _ZERO
        return cls._raw(value, 0, (1,), (1,))

    @classmethod
    def monomial(cls, coeff, exponent):
        """``coeff * q**exponent`` with a half-integer exponent."""
        coeff = Fraction(coeff)
        if coeff == 0:
            return _ZERO
        return cls._raw(coeff, HalfInt(exponent).twice, (1,), (1,))

    # -- accessors ----------------------------------------------------
    @property
    def num(self) -> LaurentPoly:
        """Numerator, scaled so that :attr:`den` has lowest coefficient 1."""
        if self._c == 0:
            return LaurentPoly()
        k = self._c * self._d[0]
        return LaurentPoly._from_twice({self._s + i: k * v for i, v in enumerate(self._n) if v})

    @property
    def den(self) -> LaurentPoly:
        d0 = self._d[0]
        return LaurentPoly._from_twice({i: Fraction(v, d0) for i, v in enumerate(self._d) if v})

    def is_zero(self) -> bool:
        return self._c == 0

    def is_laurent(self) -> bool:
        return self._d == (1,)

    def is_constant(self) -> bool:
        return self._c == 0 or (self._s == 0 and self._n == (1,) and self._d == (1,))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self._c

    def ord(self) -> HalfInt:
        if self._c == 0:
            raise ValueError("ord of zero")
        return HalfInt.from_twice(self._s)

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the lowest power of q in the expansion at q = 0."""
        return self._c * Fraction(self._n[0], self._d[0])

    def __bool__(self):
        return self._c != 0

    # -- arithmetic ---------------------------------------------------
    def __neg__(self):
        if self._c == 0:
            return self
        return QRatFunc._raw(-self._c, self._s, self._n, self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self._c == 0:
            return other
        if other._c == 0:
            return self
        s = min(self._s, other._s)
        if self._d == other._d:
            m1 = m2 = [1]
            d = self._d
        else:
            g = poly_gcd(self._d, other._d)
            if len(g) > 1:
                m1 = K.divexact(list(other._d), list(g))
                m2 = K.divexact(list(self._d), list(g))
            else:
                m1, m2 = list(other._d), list(self._d)
            d = tuple(K.mul(list(self._d), m1))
        b1, b2 = self._c.denominator, other._c.denominator
        den = lcm(b1, b2)
        k1 = self._c.numerator * (den // b1)
        k2 = other._c.numerator * (den // b2)
        a1 = [0] * (self._s - s) + K.scale(K.mul(list(self._n), m1), k1)
        a2 = [0] * (other._s - s) + K.scale(K.mul(list(other._n), m2), k2)
        p = K.add(a1, a2)
        if not p:
            return _ZERO
        ks, kc, n = split(p)
        if len(d) > 1 and len(n) > 1:
            g = poly_gcd(n, d)
            if len(g) > 1:
                n = tuple(K.divexact(list(n), list(g)))
                d = tuple(K.divexact(list(d), list(g)))
        return QRatFunc._raw(Fraction(kc, den), s + ks, n, d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self._c == 0 or other._c == 0:
            return _ZERO
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        if len(n1) > 1 and len(d2) > 1:
            g = poly_gcd(n1, d2)
            if len(g) > 1:
                n1 = tuple(K.divexact(list(n1), list(g)))
                d2 = tuple(K.divexact(list(d2), list(g)))
        if len(n2) > 1 and len(d1) > 1:
            g = poly_gcd(n2, d1)
            if len(g) > 1:
                n2 = tuple(K.divexact(list(n2), list(g)))
                d1 = tuple(K.divexact(list(d1), list(g)))
        n = n1 if n2 == (1,) else n2 if n1 == (1,) else tuple(K.mul(list(n1), list(n2)))
        d = d1 if d2 == (1,) else d2 if d1 == (1,) else tuple(K.mul(list(d1), list(d2)))
        return QRatFunc._raw(self._c * other._c, self._s + other._s, n, d)

    __rmul__ = __mul__

    def inverse(self):
        if self._c == 0:
            raise ZeroDivisionError("inverse of zero rational function")
        return QRatFunc._raw(1 / self._c, -self._s, self._d, self._n)

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
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

    def shift(self, exponent) -> "QRatFunc":
        """Multiply by ``q**exponent``."""
        if self._c == 0:
            return self
        return QRatFunc._raw(self._c, self._s + HalfInt(exponent).twice, self._n, self._d)

    # -- comparisons --------------------------------------------------
    def _key(self):
        return (self._c, self._s, self._n, self._d)

    def __eq__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._c)
            else:
                self._hash = hash(self._key())
        return self._hash

    # -- analysis -----------------------------------------------------
    def series(self, count: int) -> list:
        """First ``count`` coefficients of the t-expansion, starting at t**s."""
        n, d = self._n, self._d
        out = []
        d0 = d[0]
        for k in range(count):
            acc = Fraction(n[k]) if k < len(n) else Fraction(0)
            for i in range(1, min(k, len(d) - 1) + 1):
                acc -= d[i] * out[k - i]
            out.append(acc / d0)
        return [self._c * v for v in out]

    def evaluate_t(self, t):
        """Evaluate at ``t = q**(1/2)``; ``t`` may be a Fraction or Decimal."""
        if self._c == 0:
            return t * 0
        num = 0
        for c in reversed(self._n):
            num = num * t + c
        den = 0
        for c in reversed(self._d):
            den = den * t + c
        c = self._c
        if not isinstance(t, Fraction):
            c = type(t)(c.numerator) / type(t)(c.denominator)
        return c * t ** self._s * num / den

    def __repr__(self):
        from .grammar import format_ratfunc

        return f"QRatFunc({format_ratfunc(self)!r})"


_ZERO = QRatFunc._raw(Fraction(0), 0, (), (1,))
_ONE = QRatFunc._raw(Fraction(1), 0, (1,), (1,))
