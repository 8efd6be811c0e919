from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from f4verma.exact import M1, M2, M3, M4, LinForm
from f4verma.parabolic import (
    CONFORMAL_SHIFT, DIM_A, DIM_F4, DIM_K, DIM_N, DIM_Q, MAXIMAL_SL3_SL2, Signature,
    c_from_gram, classify_roots, discrete_series_check, ks_dual, make_signature,
    signature, signature_from_json, signature_to_json,
)
from f4verma.verma import Weight, shifted_reflect


def test_dimensions(rs):
    assert DIM_F4 == 4 + 2 * len(rs.positive)
    assert DIM_K + DIM_Q == DIM_F4
    # m = sl(3) + sl(2) has dimension 11; 11 + 1 + 2*20 = 52
    assert 8 + 3 + DIM_A + 2 * DIM_N == DIM_F4
    assert CONFORMAL_SHIFT == Fraction(7, 2)


def test_classify(rs):
    part = classify_roots(rs)
    assert set(part.m_compact) == {(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 1)}
    assert len(part.m_noncompact) == 20
    assert set(part.m_compact) | set(part.m_noncompact) == set(rs.positive)
    assert all(r[2] > 0 for r in part.m_noncompact)


def test_top_signature(rs):
    s = signature(Weight.top())
    assert s == Signature(M1, M2, -(M1 + M2 + M3 + M4 / 2), M4, "-")
    assert s.d == CONFORMAL_SHIFT - (M1 + M2 + M3 + M4 / 2)
    assert s.d.evaluate((1, 1, 1, 1)) == 0


def test_reflected_signature(rs):
    w = shifted_reflect(Weight.top(), (0, 0, 1, 0), rs)
    s = signature(w)
    assert (s.n1, s.n2, s.n4) == (M1, M2 + M3, M3 + M4)
    assert s.c == -(M1 + M2 + M3 / 2 + M4 / 2)


def test_ks_dual():
    s = signature(Weight.top())
    t = ks_dual(s)
    assert t == Signature(M2, M1, M1 + M2 + M3 + M4 / 2, M4, "+")
    assert ks_dual(t) == s
    assert s.d + t.d == LinForm.constant(2 * CONFORMAL_SHIFT)


@given(st.lists(st.integers(1, 30), min_size=4, max_size=4), st.integers(0, 23))
def test_c_agrees_with_gram(rs, xs, k):
    w = shifted_reflect(Weight.concrete(xs), rs.positive[k], rs)
    assert c_from_gram(w, rs=rs) == MAXIMAL_SL3_SL2.c_of(w.labels)


def test_c_agrees_with_gram_symbolic(graph, rs):
    for n in graph.nodes:
        assert c_from_gram(n.weight, rs=rs) == n.signature.c


def test_discrete_series(graph, rs):
    assert discrete_series_check(graph.node_by_name("χ^+_0").weight, rs=rs)
    assert not discrete_series_check(graph.node_by_name("χ^-_0").weight, rs=rs)
    assert not discrete_series_check(graph.node_by_name("χ^-_{10,1}").weight, rs=rs)
    assert not discrete_series_check(graph.node_by_name("χ^+_{10,1}").weight, rs=rs)


def test_signature_json():
    s = signature(Weight.top())
    obj = signature_to_json(s)
    assert obj["c"] == "-m1-m2-m3-1/2*m4"
    assert obj["d"] == "-m1-m2-m3-1/2*m4+7/2"
    assert signature_from_json(obj) == s
    obj["side"] = "+"
    with pytest.raises(ValueError):
        signature_from_json(obj)


def test_make_signature_side():
    assert make_signature(M1, M2, M3, M4).side == "+"
    assert make_signature(M1, M2, -M3, M4).side == "-"
    assert make_signature(M1, M2, M3, M4).evaluate((1, 2, 3, 4)).c == LinForm.constant(3)
