"""q-tensor operators, the Wigner-Eckart factorization and its q -> 0 limit.

Conventions used throughout:

* adjoint action ``J+-(T_m) = J+- T_m q^J3 - q^(J3 -+ 1) T_m J+-``, which
  must equal ``F+-(j, m) T_{m+-1}``;
* Wigner-Eckart form
  ``<J M| T_m |j1 m1> = (-1)^(2j) <J||T||j1> / sqrt([2J+1]) <j1 m1 j m|J M>``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable

from .errors import (DomainError, NotATensorError, SingularGammaError,
                     UndeterminedError)
from .exactq import (Limit, QScalar, format_scalar, leading, limit_q0, qnum,
                     sqrt_of)
from .halfint import HalfInt, half
from .qcg import cg, coupled_range
from .report import Report
from .uqsl2 import (Ket, Operator, WeightState, basis, gamma0_eigen,
                    generators, ladder_coeff, casimir_eigen)

__all__ = [
    "TensorOperator", "ReducedElement", "GammaSpec", "CrystalTransition",
    "SelectionTable", "is_q_tensor", "vector_from_generators",
    "reduced_from_blocks", "reduced_elements", "we_apply",
    "gamma_renormalize", "compose", "crystal_we", "crystal_we_closed",
    "selection_table", "components_of",
]


def components_of(j) -> list:
    """``[j, j-1, ..., -j]``."""
    return [s.m for s in basis(j)]


def _sign_2j(j: HalfInt) -> int:
    return -1 if j.twice % 2 else 1


class TensorOperator:
    """Family ``T_m`` (m = j .. -j) of sparse operators on weight states.

    ``components[m]`` is an :class:`Operator` whose keys are
    ``(out_state, in_state)`` pairs.
    """

    def __init__(self, rank, components: dict):
        self.rank = half(rank)
        allowed = set(components_of(self.rank))
        comps = {}
        for m, op in components.items():
            m = half(m)
            if m not in allowed:
                raise DomainError(f"component {m} is not allowed for rank {self.rank}")
            comps[m] = op
        for m in allowed:
            comps.setdefault(m, Operator())
        self.components = comps

    def __getitem__(self, m) -> Operator:
        return self.components[half(m)]

    def irreps(self) -> list:
        js = set()
        for op in self.components.values():
            for (r, c), _ in op.items():
                js.add(r.j)
                js.add(c.j)
        return sorted(js)

    def block_pairs(self) -> list:
        """Pairs ``(J_out, j_in)`` carrying at least one nonzero entry."""
        pairs = set()
        for op in self.components.values():
            for (r, c), _ in op.items():
                pairs.add((r.j, c.j))
        return sorted(pairs)

    def block(self, m, J_out, j_in) -> list:
        """Dense matrix of ``<J_out, M| T_m |j_in, m_in>``, rows by M, columns by m_in."""
        op = self[m]
        return [[op[(r, c)] for c in basis(j_in)] for r in basis(J_out)]

    @property
    def blocks(self) -> dict:
        """``{m: {(J_out, j_in): matrix}}`` over the nonzero block pairs."""
        pairs = self.block_pairs()
        return {m: {p: self.block(m, *p) for p in pairs} for m in components_of(self.rank)}

    def map_entries(self, fn) -> "TensorOperator":
        """New operator with every entry replaced by ``fn(out_state, in_state, value)``."""
        comps = {}
        for m, op in self.components.items():
            comps[m] = Operator._wrap({k: fn(k[0], k[1], v) for k, v in op.items()})
        return TensorOperator(self.rank, comps)

    def restrict(self, js_in=None, js_out=None) -> "TensorOperator":
        """Keep only blocks whose input (output) irrep lies in ``js_in`` (``js_out``)."""
        keep_in = None if js_in is None else {half(j) for j in js_in}
        keep_out = None if js_out is None else {half(j) for j in js_out}

        def keep(r, c):
            return ((keep_in is None or c.j in keep_in)
                    and (keep_out is None or r.j in keep_out))

        comps = {m: Operator._wrap({k: v for k, v in op.items() if keep(*k)})
                 for m, op in self.components.items()}
        return TensorOperator(self.rank, comps)

    def __eq__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return self.rank == other.rank and self.components == other.components

    __hash__ = None

    def __repr__(self):
        return f"TensorOperator(rank={self.rank}, blocks={self.block_pairs()})"


def _first_difference(a: Operator, b: Operator) -> str:
    for key in set(k for k, _ in a.items()) | set(k for k, _ in b.items()):
        if a[key] != b[key]:
            r, c = key
            return f"<{r}|...|{c}>: {format_scalar(a[key])} != {format_scalar(b[key])}"
    return "operators differ"


def is_q_tensor(T: TensorOperator) -> Report:
    """Check ``[J3, T_m] = m T_m`` and both twisted adjoint relations exactly."""
    report = Report(f"q-tensor(rank {T.rank})")
    js = T.irreps()
    if not js:
        return report
    g = generators(js)
    jp, jm, j3, qj3 = g["J+"], g["J-"], g["J3"], g["q^J3"]
    q_up, q_down = qj3 * QScalar.qpow(-1), qj3 * QScalar.qpow(1)
    j = T.rank
    for m in components_of(j):
        Tm = T[m]
        lhs = j3 @ Tm - Tm @ j3
        rhs = Tm * QScalar(m.as_fraction())
        report.check(lhs == rhs, lambda: f"[J3, T_{m}]: {_first_difference(lhs, rhs)}")
        for d, J, qtw in ((+1, jp, q_up), (-1, jm, q_down)):
            lhs = J @ Tm @ qj3 - qtw @ Tm @ J
            target = m + d
            if abs(target.twice) <= j.twice:
                rhs = T[target] * ladder_coeff(d, j, m)
            else:
                rhs = Operator()
            report.check(lhs == rhs,
                         lambda: f"J{'+' if d > 0 else '-'}(T_{m}): {_first_difference(lhs, rhs)}")
    return report


def vector_from_generators(j1) -> TensorOperator:
    """Rank-1 operator on irrep j1 built from the generators.

    ``T_+- = -+ q^-J3 J+- / sqrt([2])`` and
    ``T_0 = (q^-1 [2 J3] + (q - q^-1) J+ J-) / [2]``.
    """
    j1 = half(j1)
    if j1.twice <= 0:
        raise DomainError("the vector operator needs j1 > 0")
    g = generators([j1])
    inv_sqrt2 = sqrt_of(qnum(2)).inverse()
    q2 = QScalar(qnum(2))
    t_plus = (g["q^-J3"] @ g["J+"]) * (-inv_sqrt2)
    t_minus = (g["q^-J3"] @ g["J-"]) * inv_sqrt2
    two_j3 = Operator.diagonal(g["basis"], lambda s: QScalar(qnum(2 * s.m)).shift(-1))
    q_diff = QScalar.qpow(1) - QScalar.qpow(-1)
    t_zero = (two_j3 + (g["J+"] @ g["J-"]) * q_diff) * q2.inverse()
    return TensorOperator(1, {1: t_plus, 0: t_zero, -1: t_minus})


@dataclass(frozen=True)
class ReducedElement:
    J_out: HalfInt
    j_in: HalfInt
    value: QScalar

    def leading(self):
        return leading(self.value)

    def limit(self) -> Limit:
        return limit_q0(self.value)

    def we_ratio(self) -> QScalar:
        """``<J||T||j1> / sqrt([2J+1])``, the factor multiplying the CG."""
        return self.value * sqrt_of(qnum(2 * self.J_out + 1)).inverse()

    def to_dict(self) -> dict:
        lb = self.leading()
        return {
            "J_out": str(self.J_out), "j_in": str(self.j_in),
            "value": format_scalar(self.value),
            "leading_exponent": None if lb.is_zero else str(lb.exponent),
            "limit": str(self.limit()),
        }


def reduced_from_blocks(T: TensorOperator, J_out, j_in) -> ReducedElement:
    """Solve the Wigner-Eckart relation on one block and verify every entry.

    The reduced element is read off a single-term CG coefficient (these
    are always invertible); every other entry of the block must then agree.
    """
    J_out, j_in, j = half(J_out), half(j_in), T.rank
    sqrt_dim = sqrt_of(qnum(2 * J_out + 1))
    sign = _sign_2j(j)
    entries = []
    nonzero_entry = False
    for m in components_of(j):
        op = T[m]
        for s in basis(j_in):
            M = s.m + m
            if abs(M.twice) > J_out.twice:
                continue
            value = op[(WeightState(J_out, M), s)]
            c = cg(j_in, s.m, j, m, J_out, M)
            entries.append((m, s.m, value, c))
            nonzero_entry = nonzero_entry or bool(value)
    if not nonzero_entry:
        raise UndeterminedError(f"block ({J_out} <- {j_in}) is zero")
    pivot = next(((m, m1, v, c) for m, m1, v, c in entries if c and c.is_single_term()), None)
    if pivot is None:
        raise UndeterminedError(f"no usable CG coefficient for block ({J_out} <- {j_in})")
    _, _, v, c = pivot
    reduced = v * sqrt_dim / c * sign
    ratio = reduced / sqrt_dim * sign
    for m, m1, v, c in entries:
        if v != ratio * c:
            raise NotATensorError(
                f"block ({J_out} <- {j_in}) does not factorize at m={m}, m1={m1}: "
                f"{format_scalar(v)} vs {format_scalar(ratio * c)}")
    return ReducedElement(J_out, j_in, reduced)


def reduced_elements(T: TensorOperator) -> dict:
    """``{(J_out, j_in): ReducedElement}`` for every nonzero block of T."""
    return {p: reduced_from_blocks(T, *p) for p in T.block_pairs()}


def we_apply(reduced, j, m, k: Ket) -> Ket:
    """``T_m |j1 m1>`` rebuilt from reduced elements via the Wigner-Eckart theorem.

    ``reduced`` maps ``(J, j1)`` to a ReducedElement or QScalar, or is an
    iterable of ReducedElement.
    """
    j, m = half(j), half(m)
    if not isinstance(reduced, dict):
        reduced = {(r.J_out, r.j_in): r for r in reduced}
    sign = _sign_2j(j)

    def value(J, j1):
        try:
            r = reduced[(J, j1)]
        except KeyError:
            raise DomainError(f"missing reduced element <{J}||T||{j1}>") from None
        return r.value if isinstance(r, ReducedElement) else QScalar(r) if not isinstance(r, QScalar) else r

    def step(s):
        out = []
        for J in coupled_range(s.j, j):
            R = value(J, s.j)
            M = s.m + m
            if abs(M.twice) > J.twice or not R:
                continue
            c = cg(s.j, s.m, j, m, J, M)
            if c:
                out.append((WeightState(J, M), R * c * sqrt_of(qnum(2 * J + 1)).inverse() * sign))
        return out

    return k.map(step)


@dataclass(frozen=True)
class GammaSpec:
    """Central element Γ given by the square of its eigenvalue on each irrep."""

    name: str
    squared_eigen: Callable = field(compare=False)

    @classmethod
    def identity(cls) -> "GammaSpec":
        return cls("identity", lambda j: QScalar.one())

    @classmethod
    def minimal_vector(cls) -> "GammaSpec":
        """Γ^2 = q^(1/2) Γ0^3."""
        return cls("minimal-vector", lambda j: gamma0_eigen(j) ** 3 * QScalar.qpow(HalfInt("1/2")))

    @classmethod
    def spinor(cls) -> "GammaSpec":
        """Γ^2 = q Γ0^2."""
        def sq(j):
            c = casimir_eigen(j)
            if not c:
                raise SingularGammaError(f"Γ0 is singular on the irrep {j}")
            return QScalar(c.inverse()).shift(1)
        return cls("spinor", sq)


def gamma_renormalize(T: TensorOperator, g: GammaSpec) -> TensorOperator:
    """``Γ T Γ``: each block (J_out, j_in) scaled by ``sqrt(g(J_out) g(j_in))``."""
    factors = {}

    def factor(J, j):
        key = (J, j)
        if key not in factors:
            prod = g.squared_eigen(J) * g.squared_eigen(j)
            if not prod:
                raise SingularGammaError(f"Γ vanishes on block ({J} <- {j})")
            factors[key] = sqrt_of(prod)
        return factors[key]

    return T.map_entries(lambda r, c, v: v * factor(r.j, c.j))


def compose(T1: TensorOperator, T2: TensorOperator, R) -> TensorOperator:
    """Rank-R operator ``T_K = sum <r2 k2 r1 k1 | R K> T1_k1 T2_k2``."""
    R = half(R)
    r1, r2 = T1.rank, T2.rank
    if R not in coupled_range(r1, r2):
        raise DomainError(f"rank {R} is not in {r1} (x) {r2}")
    comps = {}
    for K in components_of(R):
        total = Operator()
        for k1 in components_of(r1):
            k2 = K - k1
            if abs(k2.twice) > r2.twice:
                continue
            c = cg(r2, k2, r1, k1, R, K)
            if c:
                total = total + (T1[k1] @ T2[k2]) * c
        comps[K] = total
    return TensorOperator(R, comps)


@dataclass(frozen=True)
class CrystalTransition:
    J: HalfInt
    M: HalfInt
    sign: int


def crystal_we(j, m, j1, m1) -> CrystalTransition:
    """Final irrep and phase of ``tau^j_m |j1 m1>`` in the q -> 0 limit.

    Computed from exact limits of the CG coefficients; exactly one J may
    survive and its limit must be +-1.
    """
    j, m, j1, m1 = half(j), half(m), half(j1), half(m1)
    WeightState(j, m)
    WeightState(j1, m1)
    M = m1 + m
    survivors = []
    for J in coupled_range(j1, j):
        if abs(M.twice) > J.twice:
            continue
        lim = limit_q0(cg(j1, m1, j, m, J, M))
        if lim.kind != "zero":
            survivors.append((J, lim))
    if len(survivors) != 1:
        raise UndeterminedError(
            f"tau^{j}_{m}|{j1},{m1}>: {len(survivors)} surviving irreps")
    J, lim = survivors[0]
    if not (lim == 1 or lim == -1):
        raise UndeterminedError(f"tau^{j}_{m}|{j1},{m1}>: surviving limit is {lim}")
    return CrystalTransition(J, M, _sign_2j(j) * lim.sign)


def crystal_we_closed(j, m, j1, m1) -> CrystalTransition:
    """Closed form: ``J = j + j1 - a`` with ``a = min(j + m, j1 - m1)``, sign ``(-1)^(2j + a)``."""
    j, m, j1, m1 = half(j), half(m), half(j1), half(m1)
    a = min(j + m, j1 - m1)
    J = j + j1 - a
    parity = j.twice + a.twice // 2
    return CrystalTransition(J, m1 + m, -1 if parity % 2 else 1)


@dataclass(frozen=True)
class SelectionTable:
    j: HalfInt
    j1: HalfInt
    cells: dict  # (m1, m) -> CrystalTransition

    def row(self, m1) -> list:
        return [self.cells[(half(m1), m)].J for m in components_of(self.j)]

    def rows(self) -> list:
        return [(m1, self.row(m1)) for m1 in components_of(self.j1)]

    def to_text(self) -> str:
        ms = components_of(self.j)
        grid = [["m1 \\ m"] + [str(m) for m in ms]]
        for m1, Js in self.rows():
            grid.append([str(m1)] + [str(J) for J in Js])
        widths = [max(len(r[c]) for r in grid) for c in range(len(grid[0]))]
        lines = []
        for i, r in enumerate(grid):
            lines.append(" | ".join(x.rjust(w) for x, w in zip(r, widths)).rstrip())
            if i == 0:
                lines.append("-+-".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m1"] + [str(m) for m in components_of(self.j)])
        for m1, Js in self.rows():
            w.writerow([str(m1)] + [str(J) for J in Js])
        return buf.getvalue()

    def to_json(self) -> str:
        entries = []
        for m1 in components_of(self.j1):
            for m in components_of(self.j):
                t = self.cells[(m1, m)]
                entries.append({"m1": str(m1), "m": str(m), "J": str(t.J),
                                "M": str(t.M), "sign": t.sign})
        return json.dumps({"j": str(self.j), "j1": str(self.j1), "entries": entries}, indent=2)


def selection_table(j, j1) -> SelectionTable:
    """Final J of ``tau^j_m |j1 m1>`` for every (m1, m)."""
    j, j1 = half(j), half(j1)
    cells = {(m1, m): crystal_we(j, m, j1, m1)
             for m1 in components_of(j1) for m in components_of(j)}
    return SelectionTable(j, j1, cells)
