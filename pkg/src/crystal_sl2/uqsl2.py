"""Irreducible representations of U_q(sl(2)) for generic q.

Basis vectors are :class:`WeightState` labels ``|j,m>``; linear
combinations are :class:`Ket` objects with :class:`QScalar` amplitudes.
Within an irrep the basis is ordered ``m = j, j-1, ..., -j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import numbers

from .errors import DimensionError, DomainError, SingularGammaError
from .exactq import QRatFunc, QScalar, qnum, sqrt_of
from .halfint import HalfInt, half

__all__ = [
    "WeightState", "Ket", "Operator", "direction", "basis", "act_J3",
    "ladder_coeff", "act_ladder", "casimir_eigen", "gamma0_eigen",
    "crystal_act", "irrep_matrices", "generators", "matmul", "matsub",
    "MAX_IRREP_DIM",
]

MAX_IRREP_DIM = 64


def direction(d) -> int:
    """Normalise a ladder direction given as '+', '-', 1 or -1."""
    if d in ("+", 1, +1):
        return 1
    if d in ("-", -1):
        return -1
    raise ValueError(f"direction must be '+' or '-', got {d!r}")


@dataclass(frozen=True, order=True)
class WeightState:
    """Basis vector ``|j, m>`` of the irrep j."""

    j: HalfInt
    m: HalfInt

    def __post_init__(self):
        j, m = half(self.j), half(self.m)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "m", m)
        if j.twice < 0:
            raise DomainError(f"spin label must be non-negative, got {j}")
        if abs(m.twice) > j.twice or (j.twice - m.twice) % 2:
            raise DomainError(f"|{j},{m}> is not a weight of the irrep {j}")

    def __str__(self):
        return f"|{self.j},{self.m}>"

    @classmethod
    def parse(cls, text: str) -> "WeightState":
        body = text.strip()
        if not (body.startswith("|") and body.endswith(">")):
            raise ValueError(f"not a state: {text!r}")
        j, m = body[1:-1].split(",")
        return cls(HalfInt(j), HalfInt(m))


def basis(j) -> list:
    """``[|j,j>, |j,j-1>, ..., |j,-j>]``."""
    j = half(j)
    return [WeightState(j, HalfInt.from_twice(j.twice - 2 * k)) for k in range(j.twice + 1)]


def _scalar(x) -> QScalar:
    return x if isinstance(x, QScalar) else QScalar(x)


class Ket:
    """Finite linear combination of hashable basis labels.

    Labels are usually :class:`WeightState` objects, tuples of them (for
    tensor products), or Fock states.  Zero amplitudes are never stored.
    """

    __slots__ = ("_amps",)

    def __init__(self, amplitudes=None):
        amps = {}
        for label, c in (amplitudes or {}).items():
            c = _scalar(c)
            if c:
                amps[label] = c
        self._amps = amps

    @classmethod
    def basis_state(cls, label, coeff=1) -> "Ket":
        return cls({label: coeff})

    @classmethod
    def _wrap(cls, amps):
        obj = cls.__new__(cls)
        obj._amps = {k: v for k, v in amps.items() if v}
        return obj

    def items(self):
        return self._amps.items()

    def labels(self):
        return self._amps.keys()

    def __getitem__(self, label) -> QScalar:
        return self._amps.get(label, QScalar.zero())

    def __len__(self):
        return len(self._amps)

    def __bool__(self):
        return bool(self._amps)

    def __iter__(self):
        return iter(self._amps)

    def __add__(self, other):
        if not isinstance(other, Ket):
            return NotImplemented
        out = dict(self._amps)
        for k, v in other._amps.items():
            out[k] = out[k] + v if k in out else v
        return Ket._wrap(out)

    def __neg__(self):
        return Ket._wrap({k: -v for k, v in self._amps.items()})

    def __sub__(self, other):
        if not isinstance(other, Ket):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, Ket):
            return NotImplemented
        if not isinstance(c, (QScalar, QRatFunc, numbers.Rational)):
            return NotImplemented
        return Ket._wrap({k: v * c for k, v in self._amps.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = _scalar(c)
        inv = c.inverse()
        return Ket._wrap({k: v * inv for k, v in self._amps.items()})

    def __eq__(self, other):
        if isinstance(other, Ket):
            return self._amps == other._amps
        if isinstance(other, numbers.Number) and other == 0:
            return not self._amps
        return NotImplemented

    __hash__ = None

    def map(self, fn) -> "Ket":
        """Linear extension of ``fn(label) -> iterable of (label, scalar)``."""
        out = {}
        for label, amp in self._amps.items():
            for new, c in fn(label):
                if not c:
                    continue
                term = amp * c
                out[new] = out[new] + term if new in out else term
        return Ket._wrap(out)

    def norm_squared(self) -> QScalar:
        """Sum of squared amplitudes (the amplitudes are real)."""
        total = QScalar.zero()
        for amp in self._amps.values():
            total = total + amp * amp
        return total

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self._amps.items(), key=lambda kv: str(kv[0])))
        return f"Ket({{{body}}})"


def act_J3(k: Ket) -> Ket:
    """``J3 |j,m> = m |j,m>``."""
    return k.map(lambda s: [(s, s.m.as_fraction())])


@lru_cache(maxsize=None)
def _ladder(d: int, j2: int, m2: int) -> QScalar:
    j, m = HalfInt.from_twice(j2), HalfInt.from_twice(m2)
    if (d > 0 and m == j) or (d < 0 and m == -j):
        return QScalar.zero()
    return sqrt_of(qnum(j - d * m) * qnum(j + d * m + 1))


def ladder_coeff(d, j, m) -> QScalar:
    """``F^{+-}(j, m) = sqrt([j -+ m][j +- m + 1])``; zero at the boundary."""
    WeightState(j, m)
    return _ladder(direction(d), half(j).twice, half(m).twice)


def act_ladder(d, k: Ket) -> Ket:
    """``J_{+-} |j,m> = F^{+-}(j,m) |j, m+-1>``, extended linearly."""
    d = direction(d)

    def step(s):
        c = ladder_coeff(d, s.j, s.m)
        if not c:
            return ()
        return [(WeightState(s.j, s.m + d), c)]

    return k.map(step)


@lru_cache(maxsize=None)
def casimir_eigen(j) -> QRatFunc:
    """Eigenvalue ``[j][j+1]`` of the Casimir on the irrep j."""
    j = half(j)
    if j < 0:
        raise DomainError("spin label must be non-negative")
    return qnum(j) * qnum(j + 1)


@lru_cache(maxsize=None)
def gamma0_eigen(j) -> QScalar:
    """Eigenvalue ``([j][j+1])^(-1/2)`` of the central element C^(-1/2)."""
    j = half(j)
    if j.twice == 0:
        raise SingularGammaError("C^(-1/2) is singular on the trivial irrep j = 0")
    return sqrt_of(casimir_eigen(j)).inverse()


def crystal_act(d, s: WeightState):
    """Crystal operator: ``|j,m> -> |j,m+-1>``, or ``None`` at the boundary."""
    d = direction(d)
    m = s.m + d
    if abs(m.twice) > s.j.twice:
        return None
    return WeightState(s.j, m)


def irrep_matrices(j, max_dim: int = MAX_IRREP_DIM):
    """Dense ``(J+, J-, J3)`` on the ordered basis ``m = j .. -j``.

    Entry ``[r][c]`` is ``<basis[r]| X |basis[c]>``.
    """
    states = basis(j)
    n = len(states)
    if n > max_dim:
        raise DimensionError(f"irrep dimension {n} exceeds the bound {max_dim}")
    zero = QScalar.zero()
    jp = [[zero] * n for _ in range(n)]
    jm = [[zero] * n for _ in range(n)]
    j3 = [[zero] * n for _ in range(n)]
    for c, s in enumerate(states):
        j3[c][c] = QScalar(s.m.as_fraction())
        if c > 0:
            jp[c - 1][c] = ladder_coeff(+1, s.j, s.m)
        if c < n - 1:
            jm[c + 1][c] = ladder_coeff(-1, s.j, s.m)
    return jp, jm, j3


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    zero = QScalar.zero()
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            x = a[i][t]
            if x:
                row = b[t]
                for c in range(m):
                    if row[c]:
                        out[i][c] = out[i][c] + x * row[c]
    return out


def matsub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


class Operator:
    """Sparse matrix ``{(row_label, col_label): QScalar}``."""

    __slots__ = ("_entries",)

    def __init__(self, entries=None):
        self._entries = {k: _scalar(v) for k, v in (entries or {}).items() if _scalar(v)}

    @classmethod
    def _wrap(cls, entries):
        obj = cls.__new__(cls)
        obj._entries = {k: v for k, v in entries.items() if v}
        return obj

    @classmethod
    def diagonal(cls, labels, fn) -> "Operator":
        return cls._wrap({(s, s): _scalar(fn(s)) for s in labels})

    def items(self):
        return self._entries.items()

    def __getitem__(self, key) -> QScalar:
        return self._entries.get(key, QScalar.zero())

    def __bool__(self):
        return bool(self._entries)

    def __len__(self):
        return len(self._entries)

    def __add__(self, other):
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out[k] + v if k in out else v
        return Operator._wrap(out)

    def __neg__(self):
        return Operator._wrap({k: -v for k, v in self._entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, Operator):
            return NotImplemented
        return Operator._wrap({k: v * c for k, v in self._entries.items()})

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Ket):
            return other.map(lambda s: [(r, v) for (r, c), v in self._by_col().get(s, ())])
        by_row = {}
        for (r, c), v in other._entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = {}
        for (r, mid), v in self._entries.items():
            for c, w in by_row.get(mid, ()):
                key = (r, c)
                term = v * w
                out[key] = out[key] + term if key in out else term
        return Operator._wrap(out)

    def _by_col(self):
        cols = {}
        for (r, c), v in self._entries.items():
            cols.setdefault(c, []).append(((r, c), v))
        return cols

    def __eq__(self, other):
        if isinstance(other, Operator):
            return self._entries == other._entries
        if isinstance(other, numbers.Number) and other == 0:
            return not self._entries
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"Operator({len(self._entries)} nonzero entries)"


def generators(js) -> dict:
    """Generator operators on the direct sum of the irreps ``js``.

    Keys: ``'J+'``, ``'J-'``, ``'J3'``, ``'q^J3'``, ``'q^-J3'``, and ``'basis'``
    (the list of states).
    """
    states = [s for j in sorted({half(j) for j in js}) for s in basis(j)]
    jp, jm = {}, {}
    for s in states:
        c = ladder_coeff(+1, s.j, s.m)
        if c:
            jp[(WeightState(s.j, s.m + 1), s)] = c
        c = ladder_coeff(-1, s.j, s.m)
        if c:
            jm[(WeightState(s.j, s.m - 1), s)] = c
    return {
        "J+": Operator._wrap(jp),
        "J-": Operator._wrap(jm),
        "J3": Operator.diagonal(states, lambda s: s.m.as_fraction()),
        "q^J3": Operator.diagonal(states, lambda s: QScalar.qpow(s.m)),
        "q^-J3": Operator.diagonal(states, lambda s: QScalar.qpow(-s.m)),
        "basis": states,
    }
