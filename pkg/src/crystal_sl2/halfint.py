"""Exact half-integers for spin labels, weights and q-exponents."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
import numbers

__all__ = ["HalfInt", "half"]


@total_ordering
class HalfInt:
    """A number of the form ``twice / 2`` with ``twice`` an integer.

    Instances hash and compare equal to the corresponding ``int`` or
    ``Fraction`` so they can be mixed freely with ordinary numbers in
    dictionary keys.
    """

    __slots__ = ("twice",)

    def __init__(self, value=0):
        if isinstance(value, HalfInt):
            twice = value.twice
        elif isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        elif isinstance(value, numbers.Integral):
            twice = 2 * int(value)
        elif isinstance(value, str):
            twice = _parse_twice(value)
        else:
            f = Fraction(value)
            if f.denominator not in (1, 2):
                raise ValueError(f"{value!r} is not a half-integer")
            twice = int(2 * f)
        object.__setattr__(self, "twice", twice)

    @classmethod
    def from_twice(cls, twice: int) -> "HalfInt":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "twice", int(twice))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    # -- conversions --------------------------------------------------
    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __int__(self) -> int:
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __index__(self) -> int:
        return int(self)

    def __float__(self) -> float:
        return self.twice / 2

    def __bool__(self) -> bool:
        return self.twice != 0

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({str(self)!r})"

    def __hash__(self) -> int:
        if self.twice % 2 == 0:
            return hash(self.twice // 2)
        return hash(Fraction(self.twice, 2))

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, numbers.Integral) and not isinstance(other, bool):
            return HalfInt.from_twice(2 * int(other))
        if isinstance(other, Fraction) and other.denominator in (1, 2):
            return HalfInt.from_twice(int(2 * other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HalfInt.from_twice(self.twice + o.twice)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HalfInt.from_twice(self.twice - o.twice)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HalfInt.from_twice(o.twice - self.twice)

    def __neg__(self):
        return HalfInt.from_twice(-self.twice)

    def __pos__(self):
        return self

    def __abs__(self):
        return HalfInt.from_twice(abs(self.twice))

    def __mul__(self, other):
        if isinstance(other, numbers.Integral) and not isinstance(other, bool):
            return HalfInt.from_twice(self.twice * int(other))
        if isinstance(other, HalfInt):
            return Fraction(self.twice * other.twice, 4)
        return NotImplemented

    __rmul__ = __mul__

    # -- comparisons --------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        if isinstance(other, (numbers.Rational, float)) and not isinstance(other, bool):
            return Fraction(self.twice, 2) == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, HalfInt):
            return self.twice < other.twice
        if isinstance(other, (numbers.Rational, float)):
            return Fraction(self.twice, 2) < other
        return NotImplemented

    def __reduce__(self):
        return (HalfInt.from_twice, (self.twice,))


def _parse_twice(text: str) -> int:
    s = text.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        num, den = int(num), int(den)
        if den == 2 and num % 2:
            return num
        if den == 1:
            return 2 * num
        raise ValueError(f"{text!r} is not a lowest-terms half-integer")
    return 2 * int(s)


def half(value) -> HalfInt:
    """Coerce ``value`` (int, Fraction, str or HalfInt) to a HalfInt."""
    return value if isinstance(value, HalfInt) else HalfInt(value)
