import pytest
from hypothesis import given, strategies as st

from crystal_sl2.crystal import pure_label
from crystal_sl2.errors import (DomainError, NotATensorError, SingularGammaError,
                                UndeterminedError)
from crystal_sl2.exactq import HalfInt, QScalar, leading, limit_q0, qnum, sqrt_of
from crystal_sl2.qboson import spinor_matrix_elements
from crystal_sl2.tensorops import (CrystalTransition, GammaSpec, ReducedElement,
                                   TensorOperator, components_of, compose, crystal_we,
                                   crystal_we_closed, gamma_renormalize, is_q_tensor,
                                   reduced_elements, reduced_from_blocks, selection_table,
                                   we_apply, vector_from_generators)
from crystal_sl2.uqsl2 import Ket, Operator, WeightState, basis, generators

H = HalfInt("1/2")


def _spins(lo, hi):
    return [HalfInt.from_twice(t) for t in range(lo, hi + 1)]


def test_vector_entry():
    T = vector_from_generators(H)
    # q^-J3 acts after J+, on the output weight 1/2
    want = -sqrt_of(qnum(2)).inverse() * QScalar.qpow(-H)
    assert T[1][(WeightState(H, H), WeightState(H, -H))] == want


def test_vector_zero_component_on_top_state():
    j1 = HalfInt(2)
    T = vector_from_generators(j1)
    top = WeightState(j1, j1)
    want = (QScalar(qnum(2 * j1)).shift(-1) + (QScalar.qpow(1) - QScalar.qpow(-1)) * qnum(2 * j1)) / qnum(2)
    assert T[0][(top, top)] == want


def test_is_q_tensor_examples():
    assert is_q_tensor(vector_from_generators(1)).passed
    assert is_q_tensor(TensorOperator(1, {})).passed
    g = generators([1])
    inv = sqrt_of(qnum(2)).inverse()
    raw = TensorOperator(1, {1: g["J+"] * -inv, 0: g["J3"], -1: g["J-"] * inv})
    rep = is_q_tensor(raw)
    assert not rep.passed and rep.failures


def test_bad_component_rejected():
    with pytest.raises(DomainError):
        TensorOperator(H, {1: Operator()})
    with pytest.raises(DomainError):
        vector_from_generators(0)


@pytest.mark.parametrize("j1", _spins(1, 6))
def test_vector_reduced_element(j1):
    red = reduced_from_blocks(vector_from_generators(j1), j1, j1)
    assert red.value == sqrt_of(qnum(2 * j1) * qnum(2 * j1 + 1) * qnum(2 * j1 + 2)) / qnum(2)
    assert red.leading().exponent == -3 * j1 + 1
    Tg = gamma_renormalize(vector_from_generators(j1), GammaSpec.minimal_vector())
    assert reduced_from_blocks(Tg, j1, j1).limit() == 1


def test_zero_block_is_undetermined():
    with pytest.raises(UndeterminedError):
        reduced_from_blocks(vector_from_generators(1), 2, 1)


def test_non_tensor_block_detected():
    T = vector_from_generators(1)
    s = WeightState(1, 0)
    broken = dict(T[0].items())
    broken[(s, s)] = broken.get((s, s), QScalar(0)) + 1
    bad = TensorOperator(1, {1: T[1], 0: Operator(broken), -1: T[-1]})
    with pytest.raises(NotATensorError):
        reduced_from_blocks(bad, 1, 1)


def test_rank_zero_identity():
    red = [ReducedElement(HalfInt(1), HalfInt(1), sqrt_of(qnum(3)))]
    for s in basis(1):
        k = Ket.basis_state(s)
        assert we_apply(red, 0, 0, k) == k


def test_we_apply_matches_matrix_action():
    j1 = HalfInt(1)
    T = vector_from_generators(j1)
    red = {(J, j1): QScalar(0) for J in (HalfInt(0), HalfInt(2))}
    red[(j1, j1)] = reduced_from_blocks(T, j1, j1)
    for m in components_of(1):
        for s in basis(j1):
            k = Ket.basis_state(s)
            assert we_apply(red, 1, m, k) == T[m] @ k


def test_we_apply_single_reduced_element():
    j1 = HalfInt("3/2")
    red = {(J, j1): QScalar(0) for J in (H, j1)}
    red[(j1 + 1, j1)] = QScalar(1)
    out = we_apply(red, 1, 1, Ket.basis_state(WeightState(j1, j1)))
    assert list(out.labels()) == [WeightState(j1 + 1, j1 + 1)]
    with pytest.raises(DomainError):
        we_apply({}, 1, 1, Ket.basis_state(WeightState(j1, j1)))


def test_identity_gamma_is_noop():
    T = vector_from_generators(HalfInt("3/2"))
    assert gamma_renormalize(T, GammaSpec.identity()) == T


@pytest.mark.parametrize("dagger", [False, True])
def test_spinor_reduced_elements(dagger):
    for j1 in _spins(1, 5):
        T = spinor_matrix_elements(dagger, [j1])
        assert is_q_tensor(T).passed
        if dagger:
            J, want, exp = j1 - H, -sqrt_of(qnum(2 * j1) * qnum(2 * j1 + 1)), -2 * j1 + H
        else:
            J, want, exp = j1 + H, -sqrt_of(qnum(2 * j1 + 1) * qnum(2 * j1 + 2)), -2 * j1 - H
        red = reduced_from_blocks(T, J, j1)
        assert red.value == want
        assert red.leading().exponent == exp
        if J.twice:
            Tg = gamma_renormalize(T, GammaSpec.spinor())
            assert reduced_from_blocks(Tg, J, j1).limit() == -1
        else:
            with pytest.raises(SingularGammaError):
                gamma_renormalize(T, GammaSpec.spinor())


def test_scalar_composite():
    js = _spins(1, 4)
    S = spinor_matrix_elements(False, js)
    D = spinor_matrix_elements(True, _spins(1, 5)).restrict(_spins(2, 5), js)
    C = compose(S, D, 0)
    assert is_q_tensor(C).passed
    pairs = C.block_pairs()
    assert pairs and all(J == j for J, j in pairs)


def _renormalized(max2=4):
    pos = _spins(1, max2 + 1)
    g = GammaSpec.spinor()
    S = gamma_renormalize(spinor_matrix_elements(False, _spins(1, max2)), g)
    D = gamma_renormalize(spinor_matrix_elements(True, pos).restrict(pos, pos), g)
    return S, D


@pytest.mark.parametrize("R", [0, 1])
def test_composite_of_renormalized_spinors(R):
    S, D = _renormalized()
    C = compose(D, S, R)
    assert is_q_tensor(C).passed
    reds = reduced_elements(C)
    assert reds
    for red in reds.values():
        assert red.limit().is_finite


def test_compose_rank_range():
    S, D = _renormalized(2)
    with pytest.raises(DomainError):
        compose(D, S, 2)


def test_crystal_we_examples():
    for j1 in _spins(0, 6):
        assert crystal_we(H, H, j1, j1) == CrystalTransition(j1 + H, j1 + H, -1)
        for m1 in components_of(j1):
            assert crystal_we(1, -1, j1, m1) == CrystalTransition(j1 + 1, m1 - 1, 1)
        if j1.twice >= 2:
            assert crystal_we(1, 1, j1, j1 - 1) == CrystalTransition(j1, j1, -1)


@given(st.integers(1, 4), st.integers(0, 8), st.data())
def test_crystal_we_agrees_with_closed_form_and_crystal(tj, tj1, data):
    j, j1 = HalfInt.from_twice(tj), HalfInt.from_twice(tj1)
    m = data.draw(st.sampled_from(components_of(j)))
    m1 = data.draw(st.sampled_from(components_of(j1)))
    t = crystal_we(j, m, j1, m1)
    assert t == crystal_we_closed(j, m, j1, m1)
    assert t.J == pure_label(j, m, j1, m1).J
    assert t.M == m + m1
    assert t.sign in (1, -1)


def test_selection_examples():
    assert selection_table(1, 1).row(0) == [1, 1, 2]
    assert selection_table(1, HalfInt("3/2")).row(HalfInt("-3/2")) == [H, HalfInt("3/2"), HalfInt("5/2")]
    assert selection_table(1, H).row(H) == [HalfInt("3/2")] * 3


def test_selection_text_grid():
    text = selection_table(1, 1).to_text()
    lines = text.splitlines()
    assert lines[0].split("|")[0].strip() == "m1 \\ m"
    assert len(lines) == 5


@pytest.mark.parametrize("twice", range(2, 9))
def test_selection_tables_leave_j1(twice):
    j1 = HalfInt.from_twice(twice)
    assert any(t.J != j1 for t in selection_table(1, j1).cells.values())
