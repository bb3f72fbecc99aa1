import random

import pytest

from u21 import gf, polys


def _random_poly(F, deg, rng):
    return [rng.randrange(F.order) for _ in range(deg)] + [1]


@pytest.mark.parametrize("p,m", [(2, 1), (5, 1), (3, 2)])
def test_factor_reconstructs(p, m):
    F = gf.field_make(p, m)
    rng = random.Random(0)
    for _ in range(10):
        f = _random_poly(F, rng.randrange(2, 7), rng)
        facs = polys.factor(F, f, rng)
        prod = [1]
        for irr, mult in facs:
            assert irr[-1] == 1  # monic
            for _ in range(mult):
                prod = polys.pmul(F, prod, irr)
        assert prod == polys.monic(F, list(f))


def test_factors_are_irreducible():
    F = gf.field_make(5, 1)
    rng = random.Random(1)
    f = _random_poly(F, 8, rng)
    for irr, _ in polys.factor(F, f, rng):
        d = len(irr) - 1
        # no factor of smaller degree: gcd(x^(q^k) - x, irr) is trivial
        for k in range(1, d):
            xqk = polys.ppowmod(F, [0, 1], F.order ** k, irr)
            g = polys.pgcd(F, polys.psub(F, xqk, [0, 1]), irr)
            assert len(g) == 1


def test_roots_of_splitting_poly():
    F = gf.field_make(3, 2)
    rng = random.Random(2)
    # x^9 - x has every field element as a root
    f = [0, F.neg(1)] + [0] * 7 + [1]
    assert sorted(polys.roots(F, f, rng)) == list(range(9))


def test_divmod_identity():
    F = gf.field_make(7, 1)
    rng = random.Random(3)
    f = _random_poly(F, 6, rng)
    g = _random_poly(F, 3, rng)
    q, r = polys.pdivmod(F, f, g)
    assert polys.padd(F, polys.pmul(F, q, g), r) == f
    assert len(r) - 1 < len(g) - 1


def test_gcd_divides_both():
    F = gf.field_make(5, 1)
    rng = random.Random(4)
    a = _random_poly(F, 4, rng)
    b = _random_poly(F, 5, rng)
    c = _random_poly(F, 2, rng)
    g = polys.pgcd(F, polys.pmul(F, a, c), polys.pmul(F, b, c))
    _, r = polys.pdivmod(F, polys.pmul(F, a, c), g)
    assert r == []
    _, r = polys.pdivmod(F, polys.pmul(F, b, c), g)
    assert r == []
    # the common factor c divides the gcd
    assert polys.pgcd(F, g, c) == polys.monic(F, list(c))


def test_squarefree_decomposition():
    F = gf.field_make(3, 1)
    # f = (x+1)^3 * (x+2)
    one = [1, 1]
    two = [2, 1]
    poly = polys.pmul(F, polys.pmul(F, one, one), polys.pmul(F, one, two))
    parts = polys.squarefree_decomposition(F, poly)
    total = [1]
    for g, mult in parts:
        for _ in range(mult):
            total = polys.pmul(F, total, g)
    assert total == polys.monic(F, list(poly))
