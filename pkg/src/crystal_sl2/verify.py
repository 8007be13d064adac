"""Named verification suites.

Each suite is an exhaustive exact check over a fixed range and returns a
:class:`Report`.  ``run_suites()`` runs them all (or a named subset).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .crystal import CrystalWord, decompose, kashiwara_act, match_cg_limits, pure_label
from .errors import DomainError, SingularGammaError
from .exactq import (QScalar, eval_numeric, format_scalar, leading, limit_q0,
                     parse_scalar, qnum, sqrt_of)
from .floatref import cg_table_f, spinor_reduced_f, vector_reduced_f
from .halfint import HalfInt, half
from .qboson import (FockState, fock_act, fock_to_weight, fock_word,
                     jordan_schwinger, spinor_matrix_elements, weight_to_fock)
from .qcg import (cg, cg_limit, cg_orthogonality, cg_table, coproduct_ladder,
                  coupled_range, coupled_states)
from .report import Report
from .tensorops import (GammaSpec, components_of, compose, crystal_we,
                        crystal_we_closed, gamma_renormalize, is_q_tensor,
                        reduced_elements, reduced_from_blocks, selection_table,
                        vector_from_generators)
from .uqsl2 import (Ket, WeightState, basis, casimir_eigen, crystal_act,
                    gamma0_eigen, irrep_matrices, ladder_coeff, matmul, matsub)

__all__ = ["SUITES", "run_suites", "table1_expected", "table2_expected",
           "TABLE3", "suite_names"]

H = HalfInt("1/2")


def _spins(lo2, hi2):
    return [HalfInt.from_twice(t) for t in range(lo2, hi2 + 1)]


# ---------------------------------------------------------------- algebra

def suite_algebra() -> Report:
    r = Report("algebra")
    for j in _spins(1, 7):
        jp, jm, j3 = irrep_matrices(j)
        states = basis(j)
        n = len(states)
        comm = matsub(matmul(jp, jm), matmul(jm, jp))
        for a in range(n):
            for b in range(n):
                want = QScalar(qnum(2 * states[a].m)) if a == b else QScalar.zero()
                r.check(comm[a][b] == want, lambda: f"[J+,J-] at j={j}, ({a},{b})")
        c = QScalar(casimir_eigen(j))
        pm, mp = matmul(jp, jm), matmul(jm, jp)
        for a in range(n):
            m = states[a].m
            for b in range(n):
                want = c if a == b else QScalar.zero()
                f1 = pm[a][b] + (QScalar(qnum(m) * qnum(m - 1)) if a == b else QScalar.zero())
                f2 = mp[a][b] + (QScalar(qnum(m) * qnum(m + 1)) if a == b else QScalar.zero())
                r.check(f1 == want and f2 == want, lambda: f"Casimir forms at j={j}, ({a},{b})")
        g0 = gamma0_eigen(j)
        for s in states:
            for d in (+1, -1):
                if crystal_act(d, s) is None:
                    continue
                lb = leading(g0 * ladder_coeff(d, j, s.m))
                r.check(lb.exponent == 0 and lb.magnitude_squared == 1,
                        lambda: f"Γ0 J{d:+d} at {s}: {lb}")
                r.check(crystal_act(-d, crystal_act(d, s)) == s, lambda: f"crystal inverse at {s}")
    return r


# ---------------------------------------------------------------- CG

def suite_cg_orthogonality() -> Report:
    r = Report("cg-orthogonality")
    for j1, j2 in product(_spins(0, 5), repeat=2):
        r.merge(cg_orthogonality(j1, j2))
    return r


def suite_covariance() -> Report:
    r = Report("covariance")
    for j1, j2 in product(_spins(0, 5), repeat=2):
        for J in coupled_range(j1, j2):
            states = coupled_states(j1, j2, J)
            for M, ket in states.items():
                for d in (+1, -1):
                    lhs = coproduct_ladder(d, ket)
                    target = M + d
                    rhs = states[target] * ladder_coeff(d, J, M) if target in states else Ket()
                    r.check(lhs == rhs, lambda: f"Delta(J{d:+d}) on |{J},{M}> in {j1} x {j2}")
    return r


def table1_expected(j1, m1, m, J):
    """(exponent, sign) of <j1 m1 1/2 m | J M> as q -> 0."""
    if J == j1 + H:
        return (j1 - m1, 1) if m == H else (HalfInt(0), 1)
    return (HalfInt(0), -1) if m == H else (j1 - m1 + 1, 1)


def table2_expected(j1, m1, m, J):
    """(exponent, sign) of <j1 m1 1 m | J M> as q -> 0."""
    d = J - j1
    if d == 1:
        return {1: (2 * (j1 - m1), 1), 0: (j1 - m1, 1), -1: (HalfInt(0), 1)}[int(m)]
    if d == 0:
        if m == 1:
            return (j1 - m1 - 1, -1)
        if m == 0:
            return (HalfInt(2), 1) if m1 == j1 else (HalfInt(0), -1)
        return (j1 - m1 + 1, 1)
    # J = j1 - 1, m = -1: solving Delta(J+) psi = 0 forces q^(2(j1-m1)+2), e.g.
    # the 1 x 1 singlet is proportional to (1, -q^-1, q^-2) in m1 = 1, 0, -1.
    return {1: (HalfInt(0), 1), 0: (j1 - m1, -1), -1: (2 * (j1 - m1) + 2, 1)}[int(m)]


def _table_suite(name, j2, expected, spins) -> Report:
    r = Report(name)
    for j1 in spins:
        for s in basis(j1):
            for b in basis(j2):
                for J in coupled_range(j1, j2):
                    M = s.m + b.m
                    if abs(M.twice) > J.twice:
                        r.check(cg(j1, s.m, j2, b.m, J, M) == 0, f"out-of-domain key nonzero")
                        continue
                    lb = cg_limit(j1, s.m, j2, b.m, J)
                    e, sign = expected(j1, s.m, b.m, J)
                    r.check(lb.exponent == e and lb.sign == sign and lb.magnitude_squared == 1,
                            lambda: f"j1={j1}, m1={s.m}, m={b.m}, J={J}: got {lb}, "
                                    f"expected sign {sign:+d} exponent {e}")
    return r


def suite_table1() -> Report:
    return _table_suite("table1", H, table1_expected, _spins(1, 8))


def suite_table2() -> Report:
    return _table_suite("table2", HalfInt(1), table2_expected, _spins(2, 8))


def suite_pure_state() -> Report:
    r = Report("pure-state")
    for j1, j2 in product(_spins(1, 5), repeat=2):
        r.merge(match_cg_limits(j1, j2))
    return r


def suite_q_to_one() -> Report:
    """Symbolic CG near q = 1 against the classical values of the same algorithm."""
    r = Report("q-to-1")
    q0 = Fraction(999999, 1000000)
    for j1, j2 in ((H, H), (HalfInt(1), H)):
        classical = cg_table_f(j1.as_fraction(), j2.as_fraction(), 1)
        for key, v in cg_table(j1, j2).coefficients.items():
            x = float(eval_numeric(v, q0, 20))
            y = classical[(key.m1.as_fraction(), key.m2.as_fraction(),
                           key.J.as_fraction(), key.M.as_fraction())]
            r.check(abs(x - y) < 1e-4, lambda: f"{key}: {x} vs classical {y}")
    return r


# ---------------------------------------------------------------- crystal

_SHAPES = [[H, H], [H, H, H], [H, 1], [1, H], [1, 1], [1, 1, 1], [H, H, H, H],
           [Fraction(3, 2), 1, H], [2, 2], [Fraction(5, 2), Fraction(3, 2)],
           [H, H, H, H, H, H], [3, 3], [1, H, 1, H], [Fraction(7, 2), 3]]


def suite_crystal() -> Report:
    r = Report("crystal")
    for shape in _SHAPES:
        dec = decompose(shape)
        size = 1
        for j in shape:
            size *= half(j).twice + 1
        r.check(len(dec) == size, lambda: f"shape {shape}: {len(dec)} labels for {size} words")
        r.check(sum(len(w) for _, _, w in dec.components) == size, f"shape {shape}: component sizes")
        for J, _, words in dec.components:
            r.check(len(words) == J.twice + 1, lambda: f"shape {shape}: component J={J} size")
        for w in dec:
            low = kashiwara_act(-1, w)
            if low is not None:
                r.check(kashiwara_act(+1, low) == w, lambda: f"e f != id on {w}")
    for j1, j2 in product(_spins(0, 6), repeat=2):
        mult = decompose([j1, j2]).multiplicities()
        want = {J: 1 for J in coupled_range(j1, j2)}
        r.check(mult == want, lambda: f"{j1} x {j2}: multiplicities {mult}")
    swapped = False
    a, b = decompose([H, 1]), decompose([1, H])
    for w in a:
        sw = CrystalWord(tuple(reversed(w.letters)))
        if a[w].J != b[sw].J:
            swapped = True
            break
    r.check(swapped, "no order-sensitivity witness between 1/2 x 1 and 1 x 1/2")
    return r


# ---------------------------------------------------------------- tensor operators

def suite_tensor() -> Report:
    r = Report("tensor")
    for j1 in _spins(1, 6):
        T = vector_from_generators(j1)
        r.merge(is_q_tensor(T))
        red = reduced_from_blocks(T, j1, j1).value
        want = sqrt_of(qnum(2 * j1) * qnum(2 * j1 + 1) * qnum(2 * j1 + 2)) / qnum(2)
        r.check(red == want, lambda: f"vector reduced at j1={j1}: {format_scalar(red)}")
        r.check(leading(red).exponent == -3 * j1 + 1, f"vector exponent at j1={j1}")
        Tg = gamma_renormalize(T, GammaSpec.minimal_vector())
        r.check(limit_q0(reduced_from_blocks(Tg, j1, j1).value) == 1,
                f"renormalized vector limit at j1={j1}")
    domain = _spins(1, 6)
    for dagger in (False, True):
        T = spinor_matrix_elements(dagger, _spins(0, 6))
        r.merge(is_q_tensor(T))
        pos = _spins(1, 7)
        Tg = gamma_renormalize(T.restrict(pos, pos), GammaSpec.spinor())
        for j1 in domain:
            if dagger:
                J, want = j1 - H, -sqrt_of(qnum(2 * j1) * qnum(2 * j1 + 1))
                exp = -2 * j1 + H
            else:
                J, want = j1 + H, -sqrt_of(qnum(2 * j1 + 1) * qnum(2 * j1 + 2))
                exp = -2 * j1 - H
            red = reduced_from_blocks(T, J, j1).value
            r.check(red == want, lambda: f"spinor(dagger={dagger}) reduced at j1={j1}")
            r.check(leading(red).exponent == exp, f"spinor(dagger={dagger}) exponent at j1={j1}")
            if J.twice > 0:
                lim = limit_q0(reduced_from_blocks(Tg, J, j1).value)
                r.check(lim == -1, lambda: f"renormalized spinor(dagger={dagger}) at j1={j1}: {lim}")
            else:
                try:
                    gamma_renormalize(T.restrict([j1]), GammaSpec.spinor())
                    r.check(False, f"Γ should be singular on the block {J} <- {j1}")
                except SingularGammaError:
                    r.check(True, "")
    return r


def _renormalized_spinors(max2=4):
    pos = _spins(1, max2 + 1)
    g = GammaSpec.spinor()
    S = gamma_renormalize(spinor_matrix_elements(False, _spins(1, max2)), g)
    D = gamma_renormalize(spinor_matrix_elements(True, pos).restrict(pos, pos), g)
    return S, D


def suite_composite_limit() -> Report:
    r = Report("composite-limit")
    S, D = _renormalized_spinors()
    for R in (0, 1):
        C = compose(D, S, R)
        r.merge(is_q_tensor(C))
        for key, red in reduced_elements(C).items():
            lb = red.leading()
            r.check(lb.is_zero or lb.exponent >= 0,
                    lambda: f"R={R}, block {key}: leading {lb} has no finite limit")
    return r


TABLE3 = {
    H: [[Fraction(3, 2)] * 3, [H, H, Fraction(3, 2)]],
    HalfInt(1): [[2, 2, 2], [1, 1, 2], [0, 1, 2]],
    HalfInt("3/2"): [[Fraction(5, 2)] * 3, [Fraction(3, 2), Fraction(3, 2), Fraction(5, 2)],
                     [H, Fraction(3, 2), Fraction(5, 2)], [H, Fraction(3, 2), Fraction(5, 2)]],
}


def suite_table3() -> Report:
    r = Report("table3")
    for j1, rows in TABLE3.items():
        table = selection_table(1, j1)
        for m1, want in zip(components_of(j1), rows):
            got = table.row(m1)
            r.check(got == [half(x) for x in want], lambda: f"j1={j1}, m1={m1}: {got}")
    return r


def suite_crystal_we() -> Report:
    r = Report("crystal-we")
    for j in _spins(1, 4):
        for j1 in _spins(1, 8):
            for m in components_of(j):
                for m1 in components_of(j1):
                    try:
                        t = crystal_we(j, m, j1, m1)
                    except DomainError as exc:
                        r.check(False, f"tau^{j}_{m}|{j1},{m1}>: {exc}")
                        continue
                    r.check(True, "")
                    closed = crystal_we_closed(j, m, j1, m1)
                    r.check(t == closed, lambda: f"tau^{j}_{m}|{j1},{m1}>: {t} vs closed form {closed}")
                    pl = pure_label(j, m, j1, m1)
                    r.check(t.J == pl.J, lambda: f"tau^{j}_{m}|{j1},{m1}>: J={t.J}, crystal J={pl.J}")
                r.check(crystal_we(j, m, j1, j1).J == j1 + j, f"highest-weight law j={j}, j1={j1}, m={m}")
                if j1 >= j:
                    # Lowest weight: J = j1 - m, the pattern of every selection table.
                    r.check(crystal_we(j, m, j1, -j1).J == j1 - m, f"lowest-weight law j={j}, j1={j1}, m={m}")
    for j1 in _spins(2, 8):
        table = selection_table(1, j1)
        r.check(any(t.J != j1 for t in table.cells.values()),
                f"selection table for j1={j1} only preserves j1")
    return r


# ---------------------------------------------------------------- q-bosons

def suite_qboson(nmax: int = 12) -> Report:
    r = Report("qboson")
    for n1 in range(nmax):
        for n2 in range(nmax - n1):
            k = Ket.basis_state(FockState(n1, n2))
            for i in (1, 2):
                for jj in (1, 2):
                    a, ad = f"a{i}", f"adag{jj}"
                    if i == jj:
                        lhs = fock_word([a, ad], k, nmax) - fock_word([ad, a], k, nmax) * QScalar.qpow(1)
                        n = n1 if i == 1 else n2
                        rhs = k * QScalar.qpow(-n)
                    else:
                        lhs = fock_word([a, ad], k, nmax) - fock_word([ad, a], k, nmax)
                        rhs = Ket()
                    r.check(lhs == rhs, lambda: f"{a} {ad} relation on |{n1},{n2}>")
    for twice in range(0, nmax):
        j = HalfInt.from_twice(twice)
        jp, jm, j3 = irrep_matrices(j)
        states = basis(j)
        for c, s in enumerate(states):
            js = jordan_schwinger(Ket.basis_state(weight_to_fock(s)), nmax)
            for name, mat in (("J+", jp), ("J-", jm), ("J3", j3)):
                got = {fock_to_weight(f): v for f, v in js[name].items()}
                want = {states[row]: mat[row][c] for row in range(len(states)) if mat[row][c]}
                r.check(got == want, lambda: f"{name} on {s}")
    for dagger in (False, True):
        T = spinor_matrix_elements(dagger, _spins(0, nmax - 1), nmax)
        r.merge(is_q_tensor(T))
        for key, red in reduced_elements(T).items():
            r.check(not red.leading().is_zero, f"reduced {key} has no leading term")
    exps = [leading(QScalar.qpow(HalfInt.from_twice(-n))).exponent for n in range(nmax)]
    r.check(all(b < a for a, b in zip(exps, exps[1:])), "q^(-N1/2) exponents not unbounded")
    return r


# ---------------------------------------------------------------- numerics

def suite_numeric(tolerance: float = 1e-8) -> Report:
    r = Report("numeric")
    for q0 in ("1/2", "1/10", "1/100"):
        for j1, j2 in product(_spins(0, 3), repeat=2):
            ref = cg_table_f(j1.as_fraction(), j2.as_fraction(), q0)
            for key, v in cg_table(j1, j2).coefficients.items():
                x = float(eval_numeric(v, q0, 25))
                y = ref[(key.m1.as_fraction(), key.m2.as_fraction(),
                         key.J.as_fraction(), key.M.as_fraction())]
                ok = abs(x - y) <= tolerance * abs(x) if x else abs(y) <= tolerance
                r.check(ok, lambda: f"q={q0}, {key}: exact {x} vs float {y}")
        for j1 in _spins(1, 3):
            cases = [("vector", reduced_from_blocks(vector_from_generators(j1), j1, j1).value,
                      vector_reduced_f(j1.as_fraction(), q0))]
            for dagger in (False, True):
                J = j1 - H if dagger else j1 + H
                T = spinor_matrix_elements(dagger, [j1])
                cases.append((f"spinor(dagger={dagger})", reduced_from_blocks(T, J, j1).value,
                              spinor_reduced_f(dagger, j1.as_fraction(), q0)))
            for name, exact, y in cases:
                x = float(eval_numeric(exact, q0, 25))
                r.check(abs(x - y) <= tolerance * abs(x),
                        lambda: f"q={q0}, {name} j1={j1}: exact {x} vs float {y}")
    return r


def suite_roundtrip() -> Report:
    r = Report("roundtrip")
    for j1, j2 in product(_spins(0, 3), repeat=2):
        for v in cg_table(j1, j2).coefficients.values():
            text = format_scalar(v)
            back = parse_scalar(text)
            r.check(back == v and format_scalar(back) == text, lambda: f"round trip of {text}")
    return r


SUITES = {
    "algebra": suite_algebra,
    "cg-orthogonality": suite_cg_orthogonality,
    "covariance": suite_covariance,
    "table1": suite_table1,
    "table2": suite_table2,
    "pure-state": suite_pure_state,
    "q-to-1": suite_q_to_one,
    "crystal": suite_crystal,
    "tensor": suite_tensor,
    "composite-limit": suite_composite_limit,
    "table3": suite_table3,
    "crystal-we": suite_crystal_we,
    "qboson": suite_qboson,
    "numeric": suite_numeric,
    "roundtrip": suite_roundtrip,
}


def suite_names() -> list:
    return list(SUITES)


def run_suites(names=None) -> list:
    """Run the named suites (all by default) in a fixed order."""
    if names is None:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}; known: {', '.join(SUITES)}")
    return [SUITES[n]() for n in names]
