"""Two-mode q-boson Fock space and the q-spinor operators built on it.

Conventions: ``adag|n> = sqrt([n+1]) |n+1>`` and ``a|n> = sqrt([n]) |n-1>``,
so that ``a adag - q adag a = q^-N`` on each mode.  The Jordan-Schwinger map
``J+ = adag_1 a_2``, ``J- = adag_2 a_1``, ``J3 = (N1 - N2)/2`` identifies
``|n1, n2>`` with ``|j, m>`` for ``j = (n1+n2)/2``, ``m = (n1-n2)/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
import os

from .errors import DomainError, TruncationError
from .exactq import QScalar, qnum, sqrt_of
from .halfint import HalfInt, half
from .uqsl2 import Ket, Operator, WeightState, basis

__all__ = [
    "FockState", "FockKet", "fock_act", "fock_word", "jordan_schwinger",
    "fock_to_weight", "weight_to_fock", "spinor_operator",
    "spinor_matrix_elements", "default_nmax", "DEFAULT_NMAX", "FOCK_OPS",
]

DEFAULT_NMAX = 12

FockKet = Ket


def default_nmax() -> int:
    """Truncation from ``CRYSTAL_SL2_NMAX`` when set (integer >= 4), else 12."""
    raw = os.environ.get("CRYSTAL_SL2_NMAX")
    if raw is None or raw == "":
        return DEFAULT_NMAX
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"CRYSTAL_SL2_NMAX must be an integer, got {raw!r}") from None
    if value < 4:
        raise DomainError(f"CRYSTAL_SL2_NMAX must be at least 4, got {value}")
    return value


@dataclass(frozen=True, order=True)
class FockState:
    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0:
            raise DomainError(f"occupation numbers must be non-negative: {self.n1}, {self.n2}")

    def __str__(self):
        return f"|{self.n1},{self.n2}>"

    def occupation(self, mode: int) -> int:
        return self.n1 if mode == 1 else self.n2

    def with_occupation(self, mode: int, n: int) -> "FockState":
        return FockState(n, self.n2) if mode == 1 else FockState(self.n1, n)


def _sqrt_qnum(n: int) -> QScalar:
    return sqrt_of(qnum(n))


FOCK_OPS = ("a1", "a2", "adag1", "adag2", "N1", "N2",
            "q^(N1/2)", "q^(-N1/2)", "q^(N2/2)", "q^(-N2/2)")


def _parse_op(op: str):
    if op in ("a1", "a2"):
        return "a", int(op[1])
    if op in ("adag1", "adag2"):
        return "adag", int(op[4])
    if op in ("N1", "N2"):
        return "N", int(op[1])
    for sign in ("", "-"):
        for mode in (1, 2):
            if op == f"q^({sign}N{mode}/2)":
                return ("qN-" if sign else "qN+"), mode
    raise ValueError(f"unknown Fock operator {op!r}; expected one of {', '.join(FOCK_OPS)}")


def fock_act(op: str, k: Ket, nmax: int | None = None) -> Ket:
    """Apply one mode operator to a Fock ket.

    Raises :class:`TruncationError` when ``adag`` would push ``n1 + n2``
    above ``nmax``.
    """
    kind, mode = _parse_op(op)
    nmax = default_nmax() if nmax is None else nmax

    def step(s: FockState):
        n = s.occupation(mode)
        if kind == "a":
            return [] if n == 0 else [(s.with_occupation(mode, n - 1), _sqrt_qnum(n))]
        if kind == "adag":
            if s.n1 + s.n2 + 1 > nmax:
                raise TruncationError(f"adag{mode} on {s} exceeds the truncation n1 + n2 <= {nmax}")
            return [(s.with_occupation(mode, n + 1), _sqrt_qnum(n + 1))]
        if kind == "N":
            return [(s, n)]
        e = HalfInt.from_twice(n if kind == "qN+" else -n)
        return [(s, QScalar.qpow(e))]

    return k.map(step)


def fock_word(ops, k: Ket, nmax: int | None = None) -> Ket:
    """Apply a product of operators, written left to right as in ``A B C |k>``."""
    for op in reversed(list(ops)):
        k = fock_act(op, k, nmax)
    return k


def fock_to_weight(s: FockState) -> WeightState:
    return WeightState(HalfInt.from_twice(s.n1 + s.n2), HalfInt.from_twice(s.n1 - s.n2))


def weight_to_fock(s: WeightState) -> FockState:
    return FockState((s.j + s.m).twice // 2, (s.j - s.m).twice // 2)


def jordan_schwinger(k: Ket, nmax: int | None = None) -> dict:
    """``{'J+': J+|k>, 'J-': J-|k>, 'J3': J3|k>}`` on a Fock ket."""
    return {
        "J+": fock_word(["adag1", "a2"], k, nmax),
        "J-": fock_word(["adag2", "a1"], k, nmax),
        "J3": (fock_act("N1", k, nmax) - fock_act("N2", k, nmax)) * QScalar(HalfInt("1/2").as_fraction()),
    }


# Each component is a word of Fock operators times a constant.
_SPINOR = {
    HalfInt("1/2"): (1, ["adag1", "q^(N2/2)"]),
    HalfInt("-1/2"): (1, ["adag2", "q^(-N1/2)"]),
}
_SPINOR_DAGGER = {
    HalfInt("1/2"): (-1, ["a2", "q^(-N1/2)", "q^(-1/2)"]),
    HalfInt("-1/2"): (1, ["a1", "q^(N2/2)", "q^(1/2)"]),
}


def spinor_operator(dagger: bool, m, k: Ket, nmax: int | None = None) -> Ket:
    """Action of the q-spinor component ``T_m`` (or its conjugate) on a Fock ket.

    ``T_{1/2} = adag_1 q^(N2/2)``, ``T_{-1/2} = adag_2 q^(-N1/2)``;
    ``Tdag_{1/2} = -a_2 q^(-(N1+1)/2)``, ``Tdag_{-1/2} = a_1 q^((N2+1)/2)``.
    """
    table = _SPINOR_DAGGER if dagger else _SPINOR
    try:
        coeff, word = table[half(m)]
    except KeyError:
        raise DomainError(f"spinor component must be +-1/2, got {m}") from None
    scalar = QScalar(coeff)
    ops = []
    for op in word:
        if op == "q^(-1/2)":
            scalar = scalar * QScalar.qpow(HalfInt("-1/2"))
        elif op == "q^(1/2)":
            scalar = scalar * QScalar.qpow(HalfInt("1/2"))
        else:
            ops.append(op)
    return fock_word(ops, k, nmax) * scalar


def spinor_matrix_elements(dagger: bool, j1s, nmax: int | None = None):
    """Spinor operator as a rank-1/2 TensorOperator on the irreps ``j1s``.

    Matrix elements are read off the Fock realization through the
    Jordan-Schwinger identification.  Every input irrep must satisfy
    ``2 j1 + 1 <= nmax`` so that no state reaches the truncation.
    """
    from .tensorops import TensorOperator

    nmax = default_nmax() if nmax is None else nmax
    if isinstance(j1s, (int, str, HalfInt)) or not hasattr(j1s, "__iter__"):
        j1s = [j1s]
    j1s = sorted({half(j) for j in j1s})
    for j in j1s:
        if j.twice + 1 > nmax:
            raise TruncationError(f"irrep {j} needs n1 + n2 = {j.twice + 1} > {nmax}")
    comps = {}
    for m in (HalfInt("1/2"), HalfInt("-1/2")):
        entries = {}
        for j in j1s:
            for s in basis(j):
                out = spinor_operator(dagger, m, Ket.basis_state(weight_to_fock(s)), nmax)
                for f, amp in out.items():
                    entries[(fock_to_weight(f), s)] = amp
        comps[m] = Operator._wrap(entries)
    return TensorOperator(HalfInt("1/2"), comps)
