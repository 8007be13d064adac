"""Behaviour of exact scalars as q -> 0+, and numerical evaluation."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
import numbers

from ..halfint import HalfInt
from .polyalg import int_sqf, spread
from .ring import QRatFunc
from .scalar import QScalar

__all__ = ["LeadingBehavior", "Limit", "leading", "limit_q0", "eval_numeric"]


@dataclass(frozen=True)
class LeadingBehavior:
    """``sign * sqrt(magnitude_squared) * q**exponent`` as q -> 0+.

    The zero scalar is represented by :data:`LeadingBehavior.ZERO`, which
    has ``exponent=None`` and ``sign=0``.
    """

    exponent: HalfInt | None
    sign: int
    magnitude_squared: Fraction

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __str__(self):
        if self.is_zero:
            return "0"
        sign = "-" if self.sign < 0 else "+"
        return f"{sign}sqrt({self.magnitude_squared})*q^({self.exponent})"


LeadingBehavior.ZERO = LeadingBehavior(None, 0, Fraction(0))


class Limit:
    """Value of ``lim_{q->0+}``: zero, a finite signed square root, or divergent."""

    __slots__ = ("kind", "sign", "magnitude_squared")

    def __init__(self, kind: str, sign: int = 0, magnitude_squared=Fraction(0)):
        if kind not in ("zero", "finite", "diverges"):
            raise ValueError(kind)
        self.kind = kind
        self.sign = sign
        self.magnitude_squared = Fraction(magnitude_squared)

    @property
    def is_finite(self) -> bool:
        return self.kind != "diverges"

    @property
    def diverges(self) -> bool:
        return self.kind == "diverges"

    @property
    def value(self) -> Fraction:
        """Exact limit when it is rational; raises otherwise."""
        if self.kind == "zero":
            return Fraction(0)
        if self.kind == "diverges":
            raise ValueError("limit diverges")
        f, s = int_sqf(self.magnitude_squared.numerator * self.magnitude_squared.denominator)
        if s != 1:
            raise ValueError("limit is irrational")
        return self.sign * Fraction(f, self.magnitude_squared.denominator)

    def __float__(self):
        if self.kind == "diverges":
            return float("inf")
        return self.sign * float(self.magnitude_squared) ** 0.5

    def __eq__(self, other):
        if isinstance(other, Limit):
            return (self.kind, self.sign, self.magnitude_squared) == (
                other.kind, other.sign, other.magnitude_squared)
        if isinstance(other, numbers.Rational):
            if self.kind == "diverges":
                return False
            other = Fraction(other)
            if self.kind == "zero":
                return other == 0
            return (other > 0) == (self.sign > 0) and other * other == self.magnitude_squared
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.sign, self.magnitude_squared))

    def __repr__(self):
        if self.kind == "finite":
            return f"Limit(finite, {'-' if self.sign < 0 else '+'}sqrt({self.magnitude_squared}))"
        return f"Limit({self.kind})"

    def __str__(self):
        if self.kind == "zero":
            return "0"
        if self.kind == "diverges":
            return "DIVERGES"
        try:
            return str(self.value)
        except ValueError:
            return f"{'-' if self.sign < 0 else ''}sqrt({self.magnitude_squared})"


Limit.ZERO = Limit("zero")
Limit.DIVERGES = Limit("diverges")

_MAX_ORDER = 1 << 12


def _sqrt_series(poly_t, count):
    """Coefficients of sqrt(p(t)/p(0)) up to t**(count-1)."""
    p0 = Fraction(poly_t[0])
    f = [Fraction(c) / p0 for c in poly_t[:count]] + [Fraction(0)] * max(0, count - len(poly_t))
    h = [Fraction(1)]
    for n in range(1, count):
        acc = f[n]
        for i in range(1, n):
            acc -= h[i] * h[n - i]
        h.append(acc / 2)
    return h


def _mul_series(a, b, count):
    out = [Fraction(0)] * count
    for i, x in enumerate(a[:count]):
        if x:
            for j in range(min(len(b), count - i)):
                out[i + j] += x * b[j]
    return out


def leading(s) -> LeadingBehavior:
    """Leading term of ``s`` as q -> 0+.

    Terms sharing the minimal power of q are combined; when they cancel
    exactly, the series of each term is expanded further until a nonzero
    order appears.
    """
    if not isinstance(s, QScalar):
        s = QScalar(s)
    if s.is_zero():
        return LeadingBehavior.ZERO
    items = s.items()
    # Every term c*t**e*n/d*sqrt(K) with n(0), d(0), K(0) nonzero starts at t**e.
    groups = []
    for kernel, coeff in items:
        f, r = int_sqf(kernel.scale * kernel.poly[0])
        groups.append((kernel, coeff, f, r))
    emin = min(c._s for _, c, _, _ in groups)
    width = 4
    while True:
        totals = {}
        for kernel, coeff, f, r in groups:
            offset = coeff._s - emin
            if offset >= width:
                continue
            cs = coeff.series(width - offset)
            if kernel.is_one() or len(kernel.poly) == 1:
                ks = [Fraction(1)]
            else:
                ks = _sqrt_series(spread(list(kernel.poly)), width - offset)
            series = _mul_series(cs, ks, width - offset)
            acc = totals.setdefault(r, [Fraction(0)] * width)
            for i, v in enumerate(series):
                acc[offset + i] += f * v
        for order in range(width):
            nonzero = {r: acc[order] for r, acc in totals.items() if acc[order]}
            if nonzero:
                if len(nonzero) > 1:
                    raise ArithmeticError(
                        "leading coefficient mixes independent square roots")
                (r, coef), = nonzero.items()
                return LeadingBehavior(HalfInt.from_twice(emin + order),
                                       1 if coef > 0 else -1, coef * coef * r)
        if width >= _MAX_ORDER:
            raise ArithmeticError("no nonzero order found in the series expansion")
        width *= 2


def limit_q0(s) -> Limit:
    """``lim_{q->0+} s``: :data:`Limit.ZERO`, a finite value, or :data:`Limit.DIVERGES`."""
    lb = leading(s)
    if lb.is_zero or lb.exponent > 0:
        return Limit.ZERO
    if lb.exponent < 0:
        return Limit.DIVERGES
    return Limit("finite", lb.sign, lb.magnitude_squared)


def eval_numeric(s, q0, precision: int = 30) -> Decimal:
    """Evaluate ``s`` at ``q = q0`` (0 < q0 < 1) to ``precision`` digits."""
    if not isinstance(s, QScalar):
        s = QScalar(s)
    q0 = Fraction(q0) if not isinstance(q0, str) else Fraction(q0)
    if not 0 < q0 < 1:
        raise ValueError("evaluation point must lie in (0, 1)")
    with localcontext() as ctx:
        ctx.prec = precision + 20
        qd = Decimal(q0.numerator) / Decimal(q0.denominator)
        t = qd.sqrt()
        total = Decimal(0)
        for kernel, coeff in s.items():
            value = coeff.evaluate_t(t)
            if not kernel.is_one():
                kv = kernel.value_at(q0)
                if kv <= 0:
                    raise ValueError(f"kernel is not positive at q = {q0}")
                value *= (Decimal(kv.numerator) / Decimal(kv.denominator)).sqrt()
            total += value
    with localcontext() as ctx:
        ctx.prec = precision
        return +total
