"""Acceptance criteria 1-9, one literal check per criterion.

Every check prints one PASS/FAIL line in the terminal summary (and when
this file is run as a script).  Clauses whose stated value cannot be
reached are kept literal and marked as strict expected failures, next to
a test of what the engine actually computes.
"""

from itertools import product

import pytest

from crystal_sl2.crystal import match_cg_limits, pure_label
from crystal_sl2.errors import DomainError, SingularGammaError
from crystal_sl2.exactq import HalfInt, eval_numeric, leading, limit_q0, qnum, sqrt_of
from crystal_sl2.floatref import cg_table_f, spinor_reduced_f, vector_reduced_f
from crystal_sl2.qboson import spinor_matrix_elements
from crystal_sl2.qcg import cg, cg_limit, cg_table, coupled_range
from crystal_sl2.report import Report
from crystal_sl2.tensorops import (GammaSpec, components_of, compose, crystal_we,
                                   gamma_renormalize, is_q_tensor, reduced_elements,
                                   reduced_from_blocks, selection_table,
                                   vector_from_generators)
from crystal_sl2.uqsl2 import basis
from crystal_sl2.verify import SUITES

H = HalfInt("1/2")
ZERO = HalfInt(0)


def spins(lo2, hi2):
    return [HalfInt.from_twice(t) for t in range(lo2, hi2 + 1)]


# -- expected q -> 0 behaviour, entry by entry ---------------------------
# Each entry maps (j1, m1) to (exponent, sign).

SPINOR_COUPLING = {
    (+H, +H): lambda j1, m1: (j1 - m1, 1),
    (+H, -H): lambda j1, m1: (ZERO, 1),
    (-H, +H): lambda j1, m1: (ZERO, -1),
    (-H, -H): lambda j1, m1: (j1 - m1 + 1, 1),   # q^(j1-m1) q
}

ONE = HalfInt(1)
VECTOR_COUPLING = {
    (+ONE, ONE): lambda j1, m1: (2 * (j1 - m1), 1),
    (+ONE, ZERO): lambda j1, m1: (j1 - m1, 1),
    (+ONE, -ONE): lambda j1, m1: (ZERO, 1),
    (ZERO, ONE): lambda j1, m1: (j1 - m1 - 1, -1),
    # q^2 q^(2(j1-m1)) - 1 + delta(j1, m1)
    (ZERO, ZERO): lambda j1, m1: (HalfInt(2), 1) if m1 == j1 else (ZERO, -1),
    (ZERO, -ONE): lambda j1, m1: (j1 - m1 + 1, 1),
    (-ONE, ONE): lambda j1, m1: (ZERO, 1),
    (-ONE, ZERO): lambda j1, m1: (j1 - m1, -1),
    (-ONE, -ONE): lambda j1, m1: (2 * (j1 - m1) + 1, 1),  # q q^(2(j1-m1))
}


def coupling_report(name, j2, entries, twice_range, skip=()):
    r = Report(name)
    for j1 in spins(*twice_range):
        for s, b in product(basis(j1), basis(j2)):
            for J in coupled_range(j1, j2):
                cell = (J - j1, b.m)
                if cell in skip:
                    continue
                M = s.m + b.m
                if abs(M.twice) > J.twice:
                    r.check(cg(j1, s.m, j2, b.m, J, M) == 0, f"out-of-domain key j1={j1} m1={s.m}")
                    continue
                lb = cg_limit(j1, s.m, j2, b.m, J)
                want = entries[cell](j1, s.m)
                r.check((lb.exponent, lb.sign) == want,
                        lambda: f"j1={j1} m1={s.m} m={b.m} J={J}: got ({lb.exponent}, {lb.sign:+d}),"
                                f" expected ({want[0]}, {want[1]:+d})")
    return r


def record(log, n, report, note=""):
    detail = f"{report.name} ({report.checked} checks"
    if report.failures:
        detail += f", {len(report.failures)} failures; first: {report.failures[0]}"
    detail += ")"
    if note:
        detail += f"; {note}"
    previous = log.get(n)
    ok = report.passed and (previous is None or previous[0])
    if previous is not None:
        detail = f"{previous[1]}; {detail}"
    log[n] = (ok, detail)


# ---------------------------------------------------------------- 1

def test_criterion_1_spin_half_coupling_limits(acceptance_log):
    r = coupling_report("spin-1/2 coupling limits, 2j1 in 1..8", H, SPINOR_COUPLING, (1, 8))
    record(acceptance_log, 1, r)
    assert r.passed, r.failures[:5]


# ---------------------------------------------------------------- 2

MISPRINTED_CELL = (-ONE, -ONE)


def test_criterion_2_spin_one_coupling_limits(acceptance_log):
    r = coupling_report("spin-1 coupling limits, 2j1 in 2..8, all nine cells", ONE,
                        VECTOR_COUPLING, (2, 8))
    record(acceptance_log, 2, r,
           "" if r.passed else "every failure sits in cell J=j1-1, m=-1 (exact exponent 2(j1-m1)+2)")
    if not r.passed:
        pytest.xfail("cell J=j1-1, m=-1: expected exponent 2(j1-m1)+1, exact value 2(j1-m1)+2")
    assert r.passed


@pytest.mark.xfail(strict=True, reason="exponent 2(j1-m1)+1 is unattainable: the highest-weight "
                                       "condition forces 2(j1-m1)+2 in cell J=j1-1, m=-1")
def test_criterion_2_literal_corner_cell():
    j2 = ONE
    for j1 in spins(2, 8):
        for s in basis(j1):
            J, M = j1 - 1, s.m - 1
            if abs(M.twice) > J.twice:
                continue
            lb = cg_limit(j1, s.m, j2, -1, J)
            assert (lb.exponent, lb.sign) == VECTOR_COUPLING[MISPRINTED_CELL](j1, s.m)


def test_criterion_2_other_cells_and_corner_value():
    r = coupling_report("spin-1 coupling limits without the corner cell", ONE, VECTOR_COUPLING,
                        (2, 8), skip={MISPRINTED_CELL})
    assert r.passed, r.failures[:5]
    for j1 in spins(2, 8):
        for s in basis(j1):
            if abs((s.m - 1).twice) <= (j1 - 1).twice:
                lb = cg_limit(j1, s.m, ONE, -1, j1 - 1)
                assert (lb.exponent, lb.sign) == (2 * (j1 - s.m) + 2, 1)


# ---------------------------------------------------------------- 3

SELECTION = {
    H: [["3/2", "3/2", "3/2"], ["1/2", "1/2", "3/2"]],
    HalfInt(1): [["2", "2", "2"], ["1", "1", "2"], ["0", "1", "2"]],
    HalfInt("3/2"): [["5/2", "5/2", "5/2"], ["3/2", "3/2", "5/2"],
                     ["1/2", "3/2", "5/2"], ["1/2", "3/2", "5/2"]],
}


def test_criterion_3_vector_selection_rules(acceptance_log):
    r = Report("vector selection rules, j1 in {1/2, 1, 3/2}")
    for j1, rows in SELECTION.items():
        table = selection_table(1, j1)
        for m1, want in zip(components_of(j1), rows):
            for m, w in zip(components_of(1), want):
                got = table.cells[(m1, m)].J
                r.check(got == HalfInt(w), lambda: f"j1={j1} m1={m1} m={m}: {got} vs {w}")
    assert r.checked == 27
    record(acceptance_log, 3, r)
    assert r.passed, r.failures


# ---------------------------------------------------------------- 4

def _dagger_renormalized(j1):
    T = spinor_matrix_elements(True, [j1])
    return reduced_from_blocks(gamma_renormalize(T, GammaSpec.spinor()), j1 - H, j1)


def test_criterion_4_reduced_element_limits(acceptance_log):
    r = Report("reduced elements and renormalized limits, 2j1 in 1..6")
    for j1 in spins(1, 6):
        T = vector_from_generators(j1)
        red = reduced_from_blocks(T, j1, j1).value
        r.check(red == sqrt_of(qnum(2 * j1) * qnum(2 * j1 + 1) * qnum(2 * j1 + 2)) / qnum(2),
                f"vector value at j1={j1}")
        r.check(leading(red).exponent == -3 * j1 + 1, f"vector exponent at j1={j1}")
        Tg = gamma_renormalize(T, GammaSpec.minimal_vector())
        r.check(limit_q0(reduced_from_blocks(Tg, j1, j1).value) == 1, f"vector limit at j1={j1}")

        S = spinor_matrix_elements(False, [j1])
        red = reduced_from_blocks(S, j1 + H, j1).value
        r.check(red == -sqrt_of(qnum(2 * j1 + 1) * qnum(2 * j1 + 2)), f"spinor value at j1={j1}")
        # -2(j1 + 1/4)
        r.check(leading(red).exponent == -2 * j1 - H, f"spinor exponent at j1={j1}")
        Sg = gamma_renormalize(S, GammaSpec.spinor())
        r.check(limit_q0(reduced_from_blocks(Sg, j1 + H, j1).value) == -1, f"spinor limit at j1={j1}")

        D = spinor_matrix_elements(True, [j1])
        red = reduced_from_blocks(D, j1 - H, j1).value
        r.check(red == -sqrt_of(qnum(2 * j1) * qnum(2 * j1 + 1)), f"dagger value at j1={j1}")
        # -2(j1 - 1/4)
        r.check(leading(red).exponent == -2 * j1 + H, f"dagger exponent at j1={j1}")
        try:
            lim = limit_q0(_dagger_renormalized(j1).value)
        except SingularGammaError as exc:
            r.check(False, f"dagger limit at j1={j1}: undefined ({exc})")
        else:
            r.check(lim == -1, f"dagger limit at j1={j1}: {lim}")
    record(acceptance_log, 4, r)
    if not r.passed:
        pytest.xfail("renormalized dagger at 2j1=1 lands on J=0, where the central element is singular")


@pytest.mark.xfail(strict=True, raises=SingularGammaError,
                   reason="target irrep J=0: the inverse Casimir root is singular")
def test_criterion_4_literal_dagger_at_half():
    assert limit_q0(_dagger_renormalized(H).value) == -1


def test_criterion_4_defined_points():
    for j1 in spins(2, 6):
        assert limit_q0(_dagger_renormalized(j1).value) == -1


# ---------------------------------------------------------------- 5

def test_criterion_5_pure_states(acceptance_log):
    r = Report("one surviving J, value +-1, equal to the crystal label, 2j1, 2j2 <= 5")
    for j1, j2 in product(spins(0, 5), repeat=2):
        r.merge(match_cg_limits(j1, j2))
    record(acceptance_log, 5, r)
    assert r.passed, r.failures[:5]


# ---------------------------------------------------------------- 6

def test_criterion_6_algebra_identities(acceptance_log):
    r = Report("algebra identities")
    for name in ("algebra", "cg-orthogonality", "covariance", "qboson"):
        r.merge(SUITES[name]())
    record(acceptance_log, 6, r)
    assert r.passed, r.failures[:5]


# ---------------------------------------------------------------- 7

def _crystal_structure(lowest):
    r = Report("crystal Wigner-Eckart structure, 2j <= 4, 2j1 <= 8")
    for j, j1 in product(spins(0, 4), spins(0, 8)):
        for m, m1 in product(components_of(j), components_of(j1)):
            try:
                t = crystal_we(j, m, j1, m1)
            except DomainError as exc:
                r.check(False, f"tau^{j}_{m}|{j1},{m1}>: {exc}")
                continue
            r.check(t.sign in (1, -1) and t.J == pure_label(j, m, j1, m1).J,
                    lambda: f"tau^{j}_{m}|{j1},{m1}>: {t}")
        for m in components_of(j):
            r.check(crystal_we(j, m, j1, j1).J == j1 + j, f"highest weight j={j} j1={j1} m={m}")
            if lowest is not None and j1 >= j:
                got = crystal_we(j, m, j1, -j1).J
                r.check(got == lowest(j1, m), lambda: f"lowest weight j={j} j1={j1} m={m}: J={got}")
    for j1 in spins(2, 8):
        r.check(any(t.J != j1 for t in selection_table(1, j1).cells.values()),
                f"selection table j1={j1} preserves j1")
    return r


def test_criterion_7_crystal_structure(acceptance_log):
    r = _crystal_structure(lambda j1, m: j1 + m)
    record(acceptance_log, 7, r, "" if r.passed else
           "lowest-weight clause J=j1+m fails; exact limits give J=j1-m")
    if not r.passed:
        pytest.xfail("lowest-weight clause J = j1 + m contradicts the selection rules (J = j1 - m)")


@pytest.mark.xfail(strict=True, reason="lowest weight lands in J = j1 - m, matching the selection rules")
def test_criterion_7_literal_lowest_weight():
    for j, j1 in product(spins(1, 4), spins(1, 8)):
        if j1 >= j:
            for m in components_of(j):
                assert crystal_we(j, m, j1, -j1).J == j1 + m


def test_criterion_7_other_clauses_and_lowest_weight_value():
    r = _crystal_structure(lambda j1, m: j1 - m)
    assert r.passed, r.failures[:5]


# ---------------------------------------------------------------- 8

def test_criterion_8_composite_limits(acceptance_log):
    pos = spins(1, 5)
    g = GammaSpec.spinor()
    S = gamma_renormalize(spinor_matrix_elements(False, spins(1, 4)), g)
    D = gamma_renormalize(spinor_matrix_elements(True, pos).restrict(pos, pos), g)
    r = Report("rank 0 and 1 composites of renormalized spinors, 2j in 1..4")
    for R in (0, 1):
        C = compose(D, S, R)
        r.merge(is_q_tensor(C))
        reds = reduced_elements(C)
        r.check(bool(reds), f"rank {R}: no blocks")
        for key, red in reds.items():
            try:
                lb = red.leading()
            except ArithmeticError as exc:
                r.check(False, f"rank {R} block {key}: {exc}")
                continue
            r.check(lb.is_zero or lb.exponent >= 0, lambda: f"rank {R} block {key}: {lb}")
    # j = 0 carries no renormalized spinor at all
    with pytest.raises(SingularGammaError):
        gamma_renormalize(spinor_matrix_elements(False, [0]), g)
    record(acceptance_log, 8, r, "j=0 excluded: renormalization singular there")
    assert r.passed, r.failures[:5]


# ---------------------------------------------------------------- 9

def test_criterion_9_float_cross_validation(acceptance_log):
    r = Report("exact vs floating reference, 2j1, 2j2 <= 3, q0 in {1/2, 1/10, 1/100}")
    tol = 1e-8

    def close(x, y):
        return abs(x - y) <= tol * abs(x) if x else abs(y) <= tol

    for q0 in ("1/2", "1/10", "1/100"):
        for j1, j2 in product(spins(0, 3), repeat=2):
            ref = cg_table_f(j1.as_fraction(), j2.as_fraction(), q0)
            for k, v in cg_table(j1, j2).coefficients.items():
                x = float(eval_numeric(v, q0, 25))
                y = ref[(k.m1.as_fraction(), k.m2.as_fraction(), k.J.as_fraction(), k.M.as_fraction())]
                r.check(close(x, y), lambda: f"q0={q0} {k}: {x} vs {y}")
        for j1 in spins(1, 3):
            x = float(eval_numeric(reduced_from_blocks(vector_from_generators(j1), j1, j1).value, q0, 25))
            y = vector_reduced_f(j1.as_fraction(), q0)
            r.check(close(x, y), lambda: f"q0={q0} vector j1={j1}: {x} vs {y}")
            for dagger in (False, True):
                J = j1 - H if dagger else j1 + H
                exact = reduced_from_blocks(spinor_matrix_elements(dagger, [j1]), J, j1).value
                x = float(eval_numeric(exact, q0, 25))
                y = spinor_reduced_f(dagger, j1.as_fraction(), q0)
                r.check(close(x, y), lambda: f"q0={q0} spinor dagger={dagger} j1={j1}: {x} vs {y}")
    record(acceptance_log, 9, r)
    assert r.passed, r.failures[:5]


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-rxX"]))
