import pytest
from hypothesis import given, strategies as st

from crystal_sl2.errors import DomainError, TruncationError
from crystal_sl2.exactq import HalfInt, QScalar, leading, qnum, sqrt_of
from crystal_sl2.qboson import (DEFAULT_NMAX, FockState, default_nmax, fock_act,
                                fock_to_weight, fock_word, jordan_schwinger,
                                spinor_matrix_elements, spinor_operator, weight_to_fock)
from crystal_sl2.tensorops import is_q_tensor, reduced_elements
from crystal_sl2.uqsl2 import Ket, WeightState, basis, irrep_matrices, matmul, matsub

NMAX = 12


def fk(n1, n2, c=1):
    return Ket.basis_state(FockState(n1, n2), c)


def test_single_mode_examples():
    assert not fock_act("a1", fk(0, 3))
    assert fock_act("adag1", fk(2, 0)) == fk(3, 0, sqrt_of(qnum(3)))
    assert str(FockState(3, 1)) == "|3,1>"
    with pytest.raises(DomainError):
        FockState(-1, 0)
    with pytest.raises(ValueError):
        fock_act("b1", fk(0, 0))


@pytest.mark.parametrize("n", range(7))
def test_defining_relation_small(n):
    k = fk(n, 0)
    lhs = fock_word(["a1", "adag1"], k) - fock_word(["adag1", "a1"], k) * QScalar.qpow(1)
    assert lhs == k * QScalar.qpow(-n)


fock_states = st.integers(0, NMAX - 1).flatmap(
    lambda n1: st.tuples(st.just(n1), st.integers(0, NMAX - 1 - n1)))


@given(fock_states)
def test_defining_relations_both_modes(ns):
    n1, n2 = ns
    k = fk(n1, n2)
    for i in (1, 2):
        for j in (1, 2):
            lhs = fock_word([f"a{i}", f"adag{j}"], k, NMAX)
            rhs = fock_word([f"adag{j}", f"a{i}"], k, NMAX)
            if i == j:
                n = n1 if i == 1 else n2
                assert lhs - rhs * QScalar.qpow(1) == k * QScalar.qpow(-n)
            else:
                assert lhs == rhs


def test_truncation():
    with pytest.raises(TruncationError):
        fock_act("adag1", fk(3, 1), nmax=4)
    with pytest.raises(TruncationError):
        spinor_matrix_elements(False, [6], nmax=12)


def test_nmax_from_environment(monkeypatch):
    monkeypatch.delenv("CRYSTAL_SL2_NMAX", raising=False)
    assert default_nmax() == DEFAULT_NMAX == 12
    monkeypatch.setenv("CRYSTAL_SL2_NMAX", "20")
    assert default_nmax() == 20
    monkeypatch.setenv("CRYSTAL_SL2_NMAX", "2")
    with pytest.raises(DomainError):
        default_nmax()
    monkeypatch.setenv("CRYSTAL_SL2_NMAX", "many")
    with pytest.raises(DomainError):
        default_nmax()


def test_jordan_schwinger_examples():
    js = jordan_schwinger(fk(0, 1))
    assert js["J+"] == fk(1, 0)
    assert jordan_schwinger(fk(3, 1))["J3"] == fk(3, 1)
    # [J+, J-] = [2 J3] on n1 + n2 = 2
    for n1 in range(3):
        k = fk(n1, 2 - n1)
        pm = fock_word(["adag1", "a2", "adag2", "a1"], k)
        mp = fock_word(["adag2", "a1", "adag1", "a2"], k)
        assert pm - mp == k * QScalar(qnum(2 * (n1 - 1)))


@pytest.mark.parametrize("twice", range(NMAX))
def test_jordan_schwinger_matches_irrep(twice):
    j = HalfInt.from_twice(twice)
    jp, jm, j3 = irrep_matrices(j)
    states = basis(j)
    for c, s in enumerate(states):
        assert fock_to_weight(weight_to_fock(s)) == s
        js = jordan_schwinger(Ket.basis_state(weight_to_fock(s)), NMAX)
        for name, mat in (("J+", jp), ("J-", jm), ("J3", j3)):
            got = {fock_to_weight(f): v for f, v in js[name].items()}
            want = {states[r]: mat[r][c] for r in range(len(states)) if mat[r][c]}
            assert got == want


def test_spinor_components():
    # T_{1/2} |0,1> = adag1 q^(N2/2) |0,1> = q^(1/2) |1,1>
    assert spinor_operator(False, "1/2", fk(0, 1)) == fk(1, 1, QScalar.qpow(HalfInt("1/2")))
    # Tdag_{-1/2} |1,0> = a1 q^((N2+1)/2) |1,0> = q^(1/2) |0,0>
    assert spinor_operator(True, "-1/2", fk(1, 0)) == fk(0, 0, QScalar.qpow(HalfInt("1/2")))
    with pytest.raises(DomainError):
        spinor_operator(False, 1, fk(0, 0))


@pytest.mark.parametrize("dagger", [False, True])
def test_spinor_families_are_tensors(dagger):
    T = spinor_matrix_elements(dagger, [HalfInt.from_twice(t) for t in range(NMAX)], NMAX)
    assert is_q_tensor(T).passed
    for red in reduced_elements(T).values():
        assert not red.leading().is_zero


def test_number_dressing_has_no_limit():
    exps = [leading(QScalar.qpow(HalfInt.from_twice(-n))).exponent for n in range(NMAX)]
    assert exps == sorted(exps, reverse=True) and exps[-1] < -5
