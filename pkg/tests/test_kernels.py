from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from crystal_sl2 import _pykernels as py

ck = pytest.importorskip("crystal_sl2._ckernels")

ints = st.integers(-50, 50)
polys = st.lists(ints, max_size=12).map(py.trim)
nonzero = polys.filter(bool)


def primitive(a):
    g = py.content(a)
    return [c // g for c in a] if a[-1] > 0 else [-c // g for c in a]


@given(polys, polys)
def test_ring_ops_agree(a, b):
    assert ck.add(a, b) == py.add(a, b)
    assert ck.sub(a, b) == py.sub(a, b)
    assert ck.mul(a, b) == py.mul(a, b)
    assert ck.trim(list(a)) == py.trim(list(a))


@given(polys, st.fractions(max_denominator=9))
def test_scale_agrees(a, c):
    assert ck.scale(a, c) == py.scale(a, c)


@given(polys, nonzero)
def test_exact_division(a, b):
    prod = py.mul(a, b)
    assert ck.divexact(prod, b) == py.divexact(prod, b) == a
    assert ck.divmod_poly(prod, b) == py.divmod_poly(prod, b)


@given(nonzero, nonzero, nonzero)
def test_gcd_agrees(a, b, c):
    x, y = py.mul(a, c), py.mul(b, c)
    g = py.gcd_poly(x, y)
    assert ck.gcd_poly(x, y) == g
    # the primitive part of the common factor divides the gcd
    py.divexact(g, primitive(c))
    py.divexact(x, g)
    py.divexact(y, g)


@given(nonzero)
def test_content_and_derivative(a):
    assert ck.content(a) == py.content(a)
    assert ck.derivative(a) == py.derivative(a)


def test_implementation_tags():
    assert py.IMPLEMENTATION == "python"
    assert ck.IMPLEMENTATION == "cython"


def test_pure_python_switch(monkeypatch):
    import importlib
    import crystal_sl2._kernels as k
    monkeypatch.setenv("CRYSTAL_SL2_PURE", "1")
    try:
        assert importlib.reload(k).IMPLEMENTATION == "python"
    finally:
        monkeypatch.delenv("CRYSTAL_SL2_PURE")
        importlib.reload(k)
