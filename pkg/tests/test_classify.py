import pytest

from u21 import classify, meataxe
from u21.errors import MismatchedParameters, UnsupportedCase


def test_ladic_dimension_table():
    t = classify.ladic_dimension_table(3)
    assert t["St"] == 27
    assert t["sigma"] == (3 - 1) * (9 - 3 + 1)      # 14
    assert t["tau"] == (3 - 1) * (3 + 1) ** 2       # 32
    assert t["nu"] == 3 * (3 - 1)                   # 6
    assert t["R_1"] == 9 - 3 + 1
    assert t["R_St"] == 3 * (9 - 3 + 1)


def test_modular_dims_tau_plus():
    # ell | q^2-q+1 (ell != 3): tau_plus = tau - nu
    d = classify.modular_constituent_dims(3, 7)
    assert d["tau_plus"] == 32 - 6
    # ell = 2, 4 | q-1: tau_plus = tau - 2 nu
    d = classify.modular_constituent_dims(5, 2)
    assert d["tau_plus"] == (5 - 1) * 36 - 2 * 20


def _multiset(report):
    return sorted((lab.dim_mod, m) for lab, m in report.factors)


def test_finite_clauses():
    # banal: semisimple {1, q^3}
    r = classify.finite_ps_structure(3, 5, 0, 0, 3)
    assert r.flags["semisimple"] and _multiset(r) == [(1, 1), (27, 1)]
    # ell | q^2-q+1: uniserial length 3
    r = classify.finite_ps_structure(3, 7, 0, 0, 3)
    assert r.flags["uniserial"] and r.length == 3
    assert _multiset(r) == [(1, 2), (26, 1)]
    # ell | q+1: uniserial length 5
    r = classify.finite_ps_structure(3, 2, 0, 0, 3)
    assert r.flags["uniserial"] and r.length == 5
    assert _multiset(r) == [(1, 2), (6, 2), (14, 1)]
    # ell = 2, 4 | q-1: length 4, not uniserial
    r = classify.finite_ps_structure(5, 2, 0, 0, 3)
    assert not r.flags["uniserial"] and r.length == 4
    assert _multiset(r) == [(1, 2), (20, 1), (104, 1)]
    # ramified pullback, ell | q+1: uniserial length 3
    r = classify.finite_ps_structure(5, 3, 12, 0, 3)
    assert r.flags["uniserial"] and _multiset(r) == [(21, 2), (84, 1)]
    # rank 2, ell | q+1
    r = classify.finite_ps_structure(3, 2, 0, 0, 2)
    assert r.flags["uniserial"] and _multiset(r) == [(1, 2), (2, 1)]
    # regular character: irreducible
    r = classify.finite_ps_structure(3, 5, 1, 0, 3)
    assert not r.reducible and r.length == 1


def test_finite_unsupported():
    with pytest.raises(UnsupportedCase):
        classify.finite_ps_structure(5, 3, 0, 0, 3)


def test_collapse_idempotent_and_rules():
    d = classify.PadicCharDescriptor("zero", "delta_minus_half", 3, 2)
    c1 = classify.collapse(d)
    c2 = classify.collapse(c1)
    assert c1.chi1_class == c2.chi1_class == "trivial"
    # ell | q^2-q+1 swaps the eta twists onto the half powers
    d = classify.PadicCharDescriptor("zero", "eta_delta_quarter", 3, 7)
    assert classify.collapse(d).chi1_class == "delta_minus_half"
    # ell | q-1 kills the half powers but keeps eta
    d = classify.PadicCharDescriptor("zero", "delta_half", 5, 2)
    assert classify.collapse(d).chi1_class == "trivial"
    d = classify.PadicCharDescriptor("zero", "eta_delta_quarter", 7, 3)
    assert classify.collapse(d).chi1_class == "eta_delta_quarter"
    # pullback of ell-power order collapses to trivial
    d = classify.PadicCharDescriptor("zero", "unitary_pullback_nontrivial",
                                     5, 3, chi_order=3)
    assert classify.collapse(d).chi1_class == "trivial"


def test_padic_reducibility_clauses():
    cases = [
        ("delta_minus_half", 3, 0, True, "clause1"),
        ("eta_delta_quarter", 3, 0, True, "clause2"),
        ("unitary_pullback_nontrivial", 3, 0, True, "clause3"),
        ("trivial", 3, 0, False, "none"),
        ("trivial", 3, 2, True, "clause1"),   # q^2 = 1 mod ell
    ]
    for cls, q, ell, want_red, want_clause in cases:
        d = classify.PadicCharDescriptor("zero", cls, q, ell)
        red, clause = classify.padic_reducibility(d)
        assert (red, clause) == (want_red, want_clause)


def test_padic_structures():
    r = classify.padic_ps_structure(
        classify.PadicCharDescriptor("zero", "delta_minus_half", 3, 0))
    assert r.clause == "ur1" and r.length == 2
    r = classify.padic_ps_structure(
        classify.PadicCharDescriptor("zero", "delta_minus_half", 3, 7))
    assert r.clause == "ur3" and r.length == 3
    r = classify.padic_ps_structure(
        classify.PadicCharDescriptor("zero", "delta_minus_half", 3, 2))
    assert r.clause == "ur4" and r.length == 6
    r = classify.padic_ps_structure(
        classify.PadicCharDescriptor("zero", "delta_minus_half", 5, 2))
    assert r.clause == "ur5" and r.length == 5
    r = classify.padic_ps_structure(
        classify.PadicCharDescriptor("zero", "unitary_pullback_nontrivial",
                                     5, 3))
    assert r.clause == "ramified-l-divides-q-plus-1" and r.length == 4
    r = classify.padic_ps_structure(
        classify.PadicCharDescriptor("positive",
                                     "unitary_pullback_nontrivial", 5, 3))
    assert r.clause == "poslev-l-divides-q-plus-1" and r.length == 4


def test_padic_unsupported():
    with pytest.raises(UnsupportedCase):
        classify.padic_ps_structure(
            classify.PadicCharDescriptor("zero", "delta_minus_half", 5, 3))
    with pytest.raises(UnsupportedCase):
        classify.padic_ps_structure(
            classify.PadicCharDescriptor("positive", "delta_minus_half", 3, 2))


def test_bridge_check(make_module):
    desc = classify.PadicCharDescriptor("zero", "delta_minus_half", 3, 2)
    rx = meataxe.chop(make_module(3, 2, 0, 3))
    ry = meataxe.chop(make_module(3, 2, 0, 2))
    assert classify.bridge_check(desc, rx, ry)
    # reports from a different (q, ell) are rejected
    wrong = classify.PadicCharDescriptor("zero", "delta_minus_half", 3, 7)
    with pytest.raises(MismatchedParameters):
        classify.bridge_check(wrong, rx, ry)
    # positive level has no finite bridge
    pos = classify.PadicCharDescriptor("positive",
                                       "unitary_pullback_nontrivial", 3, 2)
    with pytest.raises(MismatchedParameters):
        classify.bridge_check(pos, rx, ry)
