"""Kashiwara crystals of sl(2) irreps and their tensor products.

A word ``(u_1, ..., u_n)`` is an element of ``B(j_1) (x) ... (x) B(j_n)``.
Two-fold products follow the tensor rule literally: the lowering operator
acts on the left letter u iff there is an n >= 1 with ``f^n u != 0`` and
``e^n v = 0``, otherwise on v; the raising operator acts on v iff there is
an n >= 1 with ``e^n v != 0`` and ``f^n u = 0``, otherwise on u.  Longer
words associate to the left, ``((B1 (x) B2) (x) B3) ...``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
import json

from .errors import DimensionError, DomainError
from .halfint import HalfInt, half
from .report import Report
from .uqsl2 import WeightState, basis, crystal_act, direction

__all__ = [
    "CrystalWord", "ComponentLabel", "Decomposition", "kashiwara_act",
    "decompose", "pure_label", "match_cg_limits", "MAX_WORDS",
]

MAX_WORDS = 4096


@dataclass(frozen=True)
class CrystalWord:
    letters: tuple

    def __post_init__(self):
        letters = tuple(self.letters)
        if not letters:
            raise DomainError("a crystal word needs at least one letter")
        for s in letters:
            if not isinstance(s, WeightState):
                raise TypeError(f"letters must be WeightState, got {s!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, *pairs) -> "CrystalWord":
        """``CrystalWord.of((j, m), (j, m), ...)``."""
        return cls(tuple(WeightState(j, m) for j, m in pairs))

    @property
    def weight(self) -> HalfInt:
        return sum((s.m for s in self.letters), HalfInt(0))

    @property
    def shape(self) -> tuple:
        return tuple(s.j for s in self.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return "[" + ",".join(f"({s.j},{s.m})" for s in self.letters) + "]"

    def sort_key(self):
        return tuple(-s.m.twice for s in self.letters)


@dataclass(frozen=True, order=True)
class ComponentLabel:
    J: HalfInt
    M: HalfInt
    index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "J", half(self.J))
        object.__setattr__(self, "M", half(self.M))
        if abs(self.M.twice) > self.J.twice or (self.J.twice - self.M.twice) % 2:
            raise DomainError(f"M = {self.M} is not a weight of J = {self.J}")


def _act_letters(d: int, letters: tuple):
    if len(letters) == 1:
        s = crystal_act(d, letters[0])
        return None if s is None else (s,)
    u, v = letters[:-1], letters[-1]
    if d < 0:
        on_left = _exists_n(u, -1, v, +1)
    else:
        on_left = not _exists_n_rev(v, +1, u, -1)
    if on_left:
        new = _act_cached(d, u)
        return None if new is None else new + (v,)
    w = crystal_act(d, v)
    return None if w is None else u + (w,)


@lru_cache(maxsize=1 << 16)
def _act_cached(d: int, letters: tuple):
    return _act_letters(d, letters)


def _exists_n(u: tuple, du: int, v: WeightState, dv: int) -> bool:
    """Is there n >= 1 with (du-action)^n u != 0 and (dv-action)^n v == 0?"""
    cur_u, cur_v = u, v
    while True:
        cur_u = _act_cached(du, cur_u)
        if cur_u is None:
            return False
        cur_v = crystal_act(dv, cur_v) if cur_v is not None else None
        if cur_v is None:
            return True


def _exists_n_rev(v: WeightState, dv: int, u: tuple, du: int) -> bool:
    """Is there n >= 1 with (dv-action)^n v != 0 and (du-action)^n u == 0?"""
    cur_v, cur_u = v, u
    while True:
        cur_v = crystal_act(dv, cur_v)
        if cur_v is None:
            return False
        cur_u = _act_cached(du, cur_u) if cur_u is not None else None
        if cur_u is None:
            return True


def kashiwara_act(d, w: CrystalWord):
    """Crystal operator on a word; ``None`` when the result is zero."""
    out = _act_cached(direction(d), w.letters)
    return None if out is None else CrystalWord(out)


class Decomposition(Mapping):
    """Word -> component label map for a tensor product of crystals."""

    def __init__(self, shape, labels: dict, components: list):
        self.shape = tuple(shape)
        self._labels = labels
        # each component: (J, index, [words from highest to lowest])
        self.components = components

    def __getitem__(self, word):
        return self._labels[word]

    def __iter__(self):
        return iter(self._labels)

    def __len__(self):
        return len(self._labels)

    def multiplicities(self) -> dict:
        out = {}
        for J, _, _ in self.components:
            out[J] = out.get(J, 0) + 1
        return out

    def highest_weight_words(self) -> list:
        return [words[0] for _, _, words in self.components]

    def to_dict(self) -> dict:
        return {
            "shape": [str(j) for j in self.shape],
            "components": [
                {"J": str(J), "index": idx, "words": [str(w) for w in words]}
                for J, idx, words in self.components
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _all_words(shape):
    words = [()]
    for j in shape:
        words = [w + (s,) for w in words for s in basis(j)]
    return [CrystalWord(w) for w in words]


@lru_cache(maxsize=256)
def _decompose(shape_twice: tuple, max_words: int) -> Decomposition:
    shape = tuple(HalfInt.from_twice(t) for t in shape_twice)
    size = 1
    for t in shape_twice:
        size *= t + 1
    if size > max_words:
        raise DimensionError(f"tensor product has {size} words, above the bound {max_words}")
    words = _all_words(shape)
    highest = sorted((w for w in words if kashiwara_act(+1, w) is None),
                     key=CrystalWord.sort_key)
    labels, components, counts = {}, [], {}
    for hw in highest:
        J = hw.weight
        if J.twice < 0:
            raise DomainError(f"highest-weight word {hw} has negative weight")
        idx = counts.get(J, 0)
        counts[J] = idx + 1
        chain, w = [], hw
        while w is not None:
            if w in labels:
                raise DomainError(f"word {w} reached from two highest-weight words")
            labels[w] = ComponentLabel(J, w.weight, idx)
            chain.append(w)
            w = kashiwara_act(-1, w)
        if len(chain) != J.twice + 1:
            raise DomainError(f"component of {hw} has {len(chain)} words, expected {J.twice + 1}")
        components.append((J, idx, chain))
    if len(labels) != size:
        raise DomainError("crystal components do not cover the tensor product")
    return Decomposition(shape, labels, components)


def decompose(shape, max_words: int = MAX_WORDS) -> Decomposition:
    """Split ``B(j_1) (x) ... (x) B(j_n)`` into connected components.

    Highest-weight words are taken in lexicographic order with larger m
    first; the multiplicity index counts earlier components of equal J.
    """
    shape = tuple(half(j) for j in shape)
    if not shape or any(j.twice < 0 for j in shape):
        raise DomainError("shape must be a non-empty list of non-negative spins")
    return _decompose(tuple(j.twice for j in shape), max_words)


def pure_label(j_op, m_op, j1, m1) -> ComponentLabel:
    """Label of the word ``(|j_op, m_op>, |j1, m1>)`` in ``B(j_op) (x) B(j1)``."""
    w = CrystalWord((WeightState(j_op, m_op), WeightState(j1, m1)))
    return decompose([w.letters[0].j, w.letters[1].j])[w]


def match_cg_limits(j1, j2) -> Report:
    """Compare the surviving q -> 0 CG limits with crystal labels.

    For ``<j1 m1 j2 m2 | J M>`` the matching word is ``(|j2,m2>, |j1,m1>)``.
    """
    from .exactq import limit_q0
    from .qcg import cg, coupled_range

    j1, j2 = half(j1), half(j2)
    report = Report(f"crystal-cg({j1},{j2})")
    dec = decompose([j2, j1])
    for a in basis(j1):
        for b in basis(j2):
            M = a.m + b.m
            survivors = []
            for J in coupled_range(j1, j2):
                if abs(M.twice) > J.twice:
                    continue
                lim = limit_q0(cg(j1, a.m, j2, b.m, J, M))
                if lim.diverges or lim.kind != "zero":
                    survivors.append((J, lim))
            label = dec[CrystalWord((b, a))]
            report.check(
                len(survivors) == 1 and survivors[0][0] == label.J
                and (survivors[0][1] == 1 or survivors[0][1] == -1),
                lambda: f"m1={a.m}, m2={b.m}: limits {[(str(J), str(v)) for J, v in survivors]}, "
                        f"crystal J={label.J}")
    return report
