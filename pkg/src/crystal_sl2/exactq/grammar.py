"""Text form of exact scalars.

Output is canonical: ``parse_scalar(format_scalar(x)) == x`` and
formatting the re-parsed value reproduces the same string.  Laurent
polynomials print in descending powers, e.g. ``q^2 + 1 + q^-2``; a
half-integer power prints as ``q^(3/2)``.  A rational-function
coefficient prints as ``(num)/(den)``, or ``c*q^k/(den)`` when the
numerator is a single monomial; square roots as ``sqrt(...)``.

The parser accepts a superset: ``+ - * /``, parentheses, ``^`` with an
integer or parenthesised half-integer exponent, the symbol ``q``,
integer literals and ``sqrt(...)``.
"""

from __future__ import annotations

from fractions import Fraction
import re

from ..halfint import HalfInt
from .ring import LaurentPoly, QRatFunc
from .scalar import QScalar, sqrt_of

__all__ = [
    "format_laurent", "format_ratfunc", "format_scalar", "parse_scalar",
    "ParseError",
]


class ParseError(ValueError):
    pass


def _exponent_text(twice: int) -> str:
    if twice == 2:
        return "q"
    if twice % 2 == 0:
        return f"q^{twice // 2}"
    return f"q^({twice}/2)"


def _monomials(terms):
    """Yield ``(negative, body)`` for each monomial, highest power first."""
    for tw in sorted(terms, reverse=True):
        c = terms[tw]
        neg = c < 0
        a = -c if neg else c
        if tw == 0:
            body = str(a)
        elif a == 1:
            body = _exponent_text(tw)
        else:
            body = f"{a}*{_exponent_text(tw)}"
        yield neg, body


def _join(parts):
    out = ""
    for i, (neg, body) in enumerate(parts):
        if i == 0:
            out = f"-{body}" if neg else body
        else:
            out += f" - {body}" if neg else f" + {body}"
    return out or "0"


def format_laurent(p: LaurentPoly) -> str:
    return _join(list(_monomials(p._terms)))


def _ratfunc_parts(r: QRatFunc, suffix: str = ""):
    """Monomial parts of ``r * suffix`` for use inside a scalar sum."""
    if r.is_laurent():
        parts = []
        for neg, body in _monomials(r.num._terms):
            if suffix:
                body = suffix if body == "1" else f"{body}*{suffix}"
            parts.append((neg, body))
        return parts
    den = f"({format_laurent(r.den)})"
    mono = list(_monomials(r.num._terms))
    if len(mono) == 1:
        neg, body = mono[0]
        body = f"{body}/{den}"
    else:
        neg, body = False, f"({format_laurent(r.num)})/{den}"
    if suffix:
        body += f"*{suffix}"
    return [(neg, body)]


def format_ratfunc(r: QRatFunc) -> str:
    return _join(_ratfunc_parts(r))


def format_scalar(x) -> str:
    if not isinstance(x, QScalar):
        x = QScalar(x)
    parts = []
    for kernel, coeff in x.items():
        suffix = "" if kernel.is_one() else f"sqrt({format_laurent(kernel.as_laurent())})"
        parts.extend(_ratfunc_parts(coeff, suffix))
    return _join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt|q)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group(1):
            out.append(("int", int(m.group(1))))
        elif m.group(2):
            out.append(("name", m.group(2)))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"expected {value or kind}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return v

    def expr(self):
        neg = False
        if self.peek() == ("op", "-"):
            self.take()
            neg = True
        elif self.peek() == ("op", "+"):
            self.take()
        v = self.term()
        if neg:
            v = -v
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            v = v + t if op == "+" else v - t
        return v

    def term(self):
        v = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            f = self.factor()
            if op == "*":
                v = v * f
            else:
                if not f:
                    raise ParseError("division by zero")
                try:
                    v = v / f
                except ValueError as exc:
                    raise ParseError(str(exc)) from None
        return v

    def factor(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.factor()
        kind, val = self.peek()
        if kind == "name" and val == "q":
            self.take()
            if self.peek() == ("op", "^"):
                self.take()
                return QScalar.qpow(self.exponent())
            return QScalar.qpow(1)
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            e = self.exponent()
            if not e.is_integer():
                raise ParseError("half-integer powers are only allowed on q")
            return base ** int(e)
        return base

    def exponent(self):
        neg = False
        if self.peek() == ("op", "-"):
            self.take()
            neg = True
        if self.peek() == ("op", "("):
            self.take()
            inner_neg = False
            if self.peek() == ("op", "-"):
                self.take()
                inner_neg = True
            num = self.take("int")[1]
            den = 1
            if self.peek() == ("op", "/"):
                self.take()
                den = self.take("int")[1]
            self.take("op", ")")
            try:
                e = HalfInt(Fraction(num, den))
            except ValueError as exc:
                raise ParseError(str(exc)) from None
            if inner_neg:
                e = -e
        else:
            e = HalfInt(self.take("int")[1])
        return -e if neg else e

    def atom(self):
        kind, val = self.peek()
        if kind == "int":
            self.take()
            return QScalar(val)
        if kind == "name" and val == "sqrt":
            self.take()
            self.take("op", "(")
            inner = self.expr()
            self.take("op", ")")
            try:
                return sqrt_of(inner)
            except ArithmeticError as exc:
                raise ParseError(f"cannot take sqrt: {exc}") from None
        if kind == "op" and val == "(":
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        raise ParseError(f"unexpected token {val!r}")


def parse_scalar(text: str) -> QScalar:
    """Parse an expression into a canonical :class:`QScalar`."""
    return _Parser(text).parse()
