"""Exact q-Clebsch-Gordan coefficients.

The coupled basis of ``j1 (x) j2`` is built with the coproduct

    Delta(J3) = J3 (x) 1 + 1 (x) J3
    Delta(J+-) = J+- (x) q^J3 + q^-J3 (x) J+-

by solving for the highest-weight vector of each J and lowering it with
``Delta(J-)``.  Phase convention: in every highest-weight vector the
component with the largest m1 has a positive amplitude.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, NoSolutionError
from .exactq import LeadingBehavior, QScalar, format_scalar, leading, sqrt_of
from .halfint import HalfInt, half
from .report import Report
from .uqsl2 import Ket, WeightState, basis, direction, ladder_coeff

__all__ = [
    "CoupledKey", "CGTable", "coproduct_ladder", "coproduct_J3",
    "coupled_highest", "coupled_states", "cg_table", "cg", "cg_limit",
    "cg_orthogonality", "coupled_range", "limit_rows", "limits_csv",
]


@dataclass(frozen=True, order=True)
class CoupledKey:
    j1: HalfInt
    m1: HalfInt
    j2: HalfInt
    m2: HalfInt
    J: HalfInt
    M: HalfInt

    def __post_init__(self):
        for name in ("j1", "m1", "j2", "m2", "J", "M"):
            object.__setattr__(self, name, half(getattr(self, name)))

    def is_valid(self) -> bool:
        j1, m1, j2, m2, J, M = (x.twice for x in (self.j1, self.m1, self.j2, self.m2, self.J, self.M))
        return (
            min(j1, j2, J) >= 0
            and abs(j1 - j2) <= J <= j1 + j2
            and (j1 + j2 - J) % 2 == 0
            and M == m1 + m2
            and abs(m1) <= j1 and (j1 - m1) % 2 == 0
            and abs(m2) <= j2 and (j2 - m2) % 2 == 0
            and abs(M) <= J
        )


def coupled_range(j1, j2) -> list:
    """``[j1+j2, j1+j2-1, ..., |j1-j2|]``."""
    j1, j2 = half(j1), half(j2)
    top = (j1 + j2).twice
    bottom = abs((j1 - j2).twice)
    return [HalfInt.from_twice(t) for t in range(top, bottom - 1, -2)]


def coproduct_ladder(d, ket: Ket) -> Ket:
    """Action of ``Delta(J+-)`` on a Ket labelled by pairs of WeightStates."""
    d = direction(d)

    def step(label):
        a, b = label
        out = []
        fa = ladder_coeff(d, a.j, a.m)
        if fa:
            out.append(((WeightState(a.j, a.m + d), b), fa.shift(b.m)))
        fb = ladder_coeff(d, b.j, b.m)
        if fb:
            out.append(((a, WeightState(b.j, b.m + d)), fb.shift(-a.m)))
        return out

    return ket.map(step)


def coproduct_J3(ket: Ket) -> Ket:
    return ket.map(lambda ab: [(ab, (ab[0].m + ab[1].m).as_fraction())])


@lru_cache(maxsize=None)
def _highest(j1t: int, j2t: int, Jt: int) -> Ket:
    j1, j2, J = (HalfInt.from_twice(x) for x in (j1t, j2t, Jt))
    if not (abs(j1t - j2t) <= Jt <= j1t + j2t and (j1t + j2t - Jt) % 2 == 0):
        raise NoSolutionError(f"J = {J} is not in the range of {j1} (x) {j2}")
    top = min(j1, J + j2)
    bottom = max(-j1, J - j2)
    coeffs = {top: QScalar.one()}
    a = top - 1
    while a >= bottom:
        # Delta(J+) annihilates: c_a F+(j1,a) q^(J-a) + c_{a+1} q^-(a+1) F+(j2,J-a-1) = 0
        num = coeffs[a + 1] * ladder_coeff(+1, j2, J - a - 1)
        den = ladder_coeff(+1, j1, a)
        coeffs[a] = -(num / den).shift(-(a + 1) - (J - a))
        a = a - 1
    ket = Ket({(WeightState(j1, m1), WeightState(j2, J - m1)): c for m1, c in coeffs.items()})
    norm = sqrt_of(ket.norm_squared())
    ket = ket / norm
    if coproduct_ladder(+1, ket):
        raise NoSolutionError(f"no highest-weight vector of weight {J} in {j1} (x) {j2}")
    return ket


def coupled_highest(j1, j2, J) -> Ket:
    """Normalised vector of weight ``M = J`` annihilated by ``Delta(J+)``."""
    return _highest(half(j1).twice, half(j2).twice, half(J).twice)


@lru_cache(maxsize=None)
def _coupled(j1t: int, j2t: int, Jt: int) -> tuple:
    J = HalfInt.from_twice(Jt)
    ket = _highest(j1t, j2t, Jt)
    out = [ket]
    M = J
    while M > -J:
        ket = coproduct_ladder(-1, ket) / ladder_coeff(-1, J, M)
        out.append(ket)
        M = M - 1
    return tuple(out)


def coupled_states(j1, j2, J) -> dict:
    """``{M: |J M>}`` expressed in the product basis, for ``M = J .. -J``."""
    J = half(J)
    kets = _coupled(half(j1).twice, half(j2).twice, J.twice)
    return {J - k: ket for k, ket in enumerate(kets)}


@dataclass(frozen=True)
class CGTable:
    """All coefficients ``<j1 m1 j2 m2 | J M>`` for a fixed pair (j1, j2)."""

    j1: HalfInt
    j2: HalfInt
    coefficients: dict

    def get(self, m1, m2, J, M=None) -> QScalar:
        m1, m2 = half(m1), half(m2)
        M = m1 + m2 if M is None else half(M)
        key = CoupledKey(self.j1, m1, self.j2, m2, half(J), M)
        return self.coefficients.get(key, QScalar.zero())

    def keys(self):
        return self.coefficients.keys()

    def to_json(self) -> str:
        entries = []
        for key in sorted(self.coefficients, key=lambda k: (-k.m1, -k.m2, -k.J)):
            entries.append({"m1": str(key.m1), "m2": str(key.m2), "J": str(key.J),
                            "value": format_scalar(self.coefficients[key])})
        return json.dumps({"j1": str(self.j1), "j2": str(self.j2), "entries": entries}, indent=2)


@lru_cache(maxsize=None)
def _table(j1t: int, j2t: int) -> CGTable:
    j1, j2 = HalfInt.from_twice(j1t), HalfInt.from_twice(j2t)
    coeffs = {}
    for J in coupled_range(j1, j2):
        for M, ket in coupled_states(j1, j2, J).items():
            for a in basis(j1):
                m2 = M - a.m
                if abs(m2.twice) > j2t:
                    continue
                b = WeightState(j2, m2)
                coeffs[CoupledKey(j1, a.m, j2, m2, J, M)] = ket[(a, b)]
    return CGTable(j1, j2, coeffs)


def cg_table(j1, j2) -> CGTable:
    """Memoised table for ``j1 (x) j2``; immutable once built."""
    j1, j2 = half(j1), half(j2)
    if j1.twice < 0 or j2.twice < 0:
        raise DomainError("spin labels must be non-negative")
    return _table(j1.twice, j2.twice)


def cg(j1, m1, j2, m2, J, M) -> QScalar:
    """``<j1 m1 j2 m2 | J M>``; exact zero for keys outside the valid domain."""
    key = CoupledKey(j1, m1, j2, m2, J, M)
    if not key.is_valid():
        return QScalar.zero()
    return cg_table(key.j1, key.j2).coefficients[key]


def cg_limit(j1, m1, j2, m2, J) -> LeadingBehavior:
    """Leading q -> 0 behaviour of ``<j1 m1 j2 m2 | J, m1+m2>``."""
    M = half(m1) + half(m2)
    return leading(cg(j1, m1, j2, m2, J, M))


def cg_orthogonality(j1, j2) -> Report:
    """Exact orthonormality of the coupled basis and completeness of the table."""
    j1, j2 = half(j1), half(j2)
    table = cg_table(j1, j2)
    report = Report(f"cg-orthogonality({j1},{j2})")
    Js = coupled_range(j1, j2)
    Ms = sorted({k.M for k in table.keys()}, reverse=True)
    for M in Ms:
        pairs = [(a.m, M - a.m) for a in basis(j1) if abs((M - a.m).twice) <= j2.twice]
        Jm = [J for J in Js if abs(M.twice) <= J.twice]
        for J in Jm:
            for Jp in Jm:
                s = QScalar.zero()
                for m1, m2 in pairs:
                    s = s + table.get(m1, m2, J, M) * table.get(m1, m2, Jp, M)
                report.check(s == (1 if J == Jp else 0),
                             lambda: f"rows J={J}, J'={Jp}, M={M}: sum = {format_scalar(s)}")
        for p in pairs:
            for r in pairs:
                s = QScalar.zero()
                for J in Jm:
                    s = s + table.get(*p, J, M) * table.get(*r, J, M)
                report.check(s == (1 if p == r else 0),
                             lambda: f"columns {p}, {r}, M={M}: sum = {format_scalar(s)}")
    return report


def limit_rows(j1, j2, surviving_only: bool = False) -> list:
    """Rows ``(m1, m2, J, exponent, sign, mag2)`` of the q -> 0 table.

    With ``surviving_only`` there is one row per (m1, m2): the J whose
    coefficient has a nonvanishing limit.
    """
    j1, j2 = half(j1), half(j2)
    rows = []
    for a in basis(j1):
        for b in basis(j2):
            for J in coupled_range(j1, j2):
                if abs((a.m + b.m).twice) > J.twice:
                    continue
                lb = cg_limit(j1, a.m, j2, b.m, J)
                if surviving_only and (lb.is_zero or lb.exponent != 0):
                    continue
                rows.append((a.m, b.m, J, lb.exponent, lb.sign, lb.magnitude_squared))
    return rows


def limits_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m1", "m2", "J", "exponent", "sign", "mag2"])
    for m1, m2, J, e, s, mag2 in rows:
        w.writerow([str(m1), str(m2), str(J), "" if e is None else str(e),
                    {1: "+", -1: "-", 0: "0"}[s], str(mag2)])
    return buf.getvalue()
