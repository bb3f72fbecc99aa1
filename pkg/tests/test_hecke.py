from fractions import Fraction

import pytest

from u21 import grp, hecke
from u21.errors import BadParams, SubgroupMismatch


def test_presentation_coefficients():
    pres = hecke.presentation(3, 3, 0)
    assert pres.coeff_x == (26, 27)
    assert pres.coeff_y == (2, 3)
    assert pres.norm_x == Fraction(1)
    pres = hecke.presentation(3, 1, 0)
    assert pres.coeff_x == (2, 3)
    assert pres.norm_x == Fraction(1, 3)
    pres = hecke.presentation(3, 3, 7)
    assert pres.coeff_x == (5, 6)


def test_presentation_bad_params():
    with pytest.raises(BadParams):
        hecke.presentation(4, 3, 5)      # even q
    with pytest.raises(BadParams):
        hecke.presentation(3, 2, 5)      # a not in {1, 3}
    with pytest.raises(BadParams):
        hecke.presentation(3, 3, 3)      # ell = p
    with pytest.raises(BadParams):
        hecke.presentation(3, 3, 6)      # ell composite


def test_character_collapse_rule():
    # generic: four characters
    assert len(hecke.characters(hecke.presentation(3, 3, 0))) == 4
    assert len(hecke.characters(hecke.presentation(3, 3, 5))) == 4
    # q^a = -1 but q != -1: two characters (q=3, a=3, ell=7: 27 = -1 mod 7)
    assert len(hecke.characters(hecke.presentation(3, 3, 7))) == 2
    # q = -1: one character (ell | q+1)
    assert len(hecke.characters(hecke.presentation(3, 3, 2))) == 1
    assert len(hecke.characters(hecke.presentation(5, 1, 3))) == 1


def test_character_values_are_roots():
    pres = hecke.presentation(5, 3, 11)
    for ch in hecke.characters(pres):
        c1, c0 = pres.coeff_x
        assert (ch.value_x ** 2 - c1 * ch.value_x - c0) % 11 == 0


def test_laurent_descriptor():
    desc = hecke.characters_regular(3, 7)
    assert desc.algebra == "R[X,X^-1]"
    assert desc.evaluate(10) == 3
    with pytest.raises(BadParams):
        desc.evaluate(0)
    with pytest.raises(BadParams):
        desc.evaluate(14)  # 0 mod 7 is not invertible


def _setup(q0, rank):
    spec = grp.unitary_group(q0, rank)
    table = grp.flag_table(spec)
    return spec, table


def test_convolution_identity_element():
    spec, table = _setup(3, 2)
    e = hecke.indicator(spec, table, None, "id")
    fw = hecke.indicator(spec, table, None, "w")
    for f in (e, fw):
        conv = hecke.convolve(e, f)
        assert (conv.val_id, conv.val_w) == (f.val_id, f.val_w)


def test_convolution_quadratic_relation():
    # f_w * f_w = q^a + (q^a - 1) f_w on the full flag variety
    for q0, rank, qa in [(3, 2, 3), (3, 3, 27)]:
        spec, table = _setup(q0, rank)
        e = hecke.indicator(spec, table, None, "id")
        fw = hecke.indicator(spec, table, None, "w")
        sq = hecke.convolve(fw, fw)
        assert sq.val_id == qa
        assert sq.val_w == qa - 1


def test_convolution_associative():
    spec, table = _setup(3, 2)
    fw = hecke.indicator(spec, table, None, "w")
    sq = hecke.convolve(fw, fw)
    lhs = hecke.convolve(hecke.convolve(fw, fw), fw)
    rhs = hecke.convolve(fw, hecke.convolve(fw, fw))
    assert (lhs.val_id, lhs.val_w) == (rhs.val_id, rhs.val_w)


def test_convolution_mismatch():
    s2, t2 = _setup(3, 2)
    s3, t3 = _setup(3, 3)
    with pytest.raises(SubgroupMismatch):
        hecke.convolve(hecke.indicator(s2, t2, None, "w"),
                       hecke.indicator(s3, t3, None, "w"))
