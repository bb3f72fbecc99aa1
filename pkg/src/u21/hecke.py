"""Two-generator Hecke presentations, their characters, and convolution.

The generic algebra has generators f_x, f_y with quadratic relations
f_x^2 = (q^a - 1) f_x + q^a and f_y^2 = (q - 1) f_y + q; its
one-dimensional characters take values in {q^a, -1} x {q, -1} and
collapse as these sets do modulo ell.  The regular case is a Laurent
polynomial algebra.  A small convolution engine over a finite group's
flag cosets validates the structure constants numerically.
"""

from __future__ import annotations

from fractions import Fraction

from . import gf, grp
from .errors import BadParams, SubgroupMismatch


class HeckeParams:
    def __init__(self, q, a, ell):
        self.q = q
        self.a = a
        self.ell = ell


class HeckePresentation:
    """Coefficients of the two quadratic relations, reduced mod ell."""

    def __init__(self, params, coeff_x, coeff_y, norm_x, norm_y):
        self.params = params
        # relation f^2 = c1*f + c0, stored as (c1, c0)
        self.coeff_x = coeff_x
        self.coeff_y = coeff_y
        self.norm_x = norm_x      # the paper's normalization f_x(1); unused
        self.norm_y = norm_y


class HeckeCharacter:
    def __init__(self, name, value_x, value_y):
        self.name = name
        self.value_x = value_x
        self.value_y = value_y

    def __repr__(self):
        return f"{self.name}: ({self.value_x}, {self.value_y})"


def presentation(q, a, ell):
    p, _ = gf.prime_power(q)
    if q < 3 or p == 2:
        raise BadParams(f"q = {q} must be an odd prime power >= 3")
    if a not in (1, 3):
        raise BadParams(f"a = {a} must be 1 or 3")
    if ell != 0 and (not gf.is_prime(ell) or ell == p):
        raise BadParams(f"ell = {ell} must be 0 or a prime different from {p}")
    params = HeckeParams(q, a, ell)
    qa = q ** a
    if ell == 0:
        cx, cy = (qa - 1, qa), (q - 1, q)
    else:
        cx = ((qa - 1) % ell, qa % ell)
        cy = ((q - 1) % ell, q % ell)
    norm_x = Fraction(1) if a == 3 else Fraction(1, q)
    return HeckePresentation(params, cx, cy, norm_x, Fraction(1))


def characters(pres):
    """The distinct one-dimensional characters, largest list first."""
    q, a, ell = pres.params.q, pres.params.a, pres.params.ell
    qa = q ** a
    if ell == 0:
        red = lambda v: v
    else:
        red = lambda v: v % ell
    table = [
        ("Xi_sgn", red(-1), red(-1)),
        ("Xi_ind", red(qa), red(q)),
        ("Xi_1", red(qa), red(-1)),
        ("Xi_2", red(-1), red(q)),
    ]
    out = []
    seen = set()
    for name, vx, vy in table:
        if (vx, vy) in seen:
            continue
        seen.add((vx, vy))
        out.append(HeckeCharacter(name, vx, vy))
    # sanity: the values are roots of the stored quadratics
    for ch in out:
        c1, c0 = pres.coeff_x
        assert red(ch.value_x * ch.value_x - c1 * ch.value_x - c0) == red(0)
        c1, c0 = pres.coeff_y
        assert red(ch.value_y * ch.value_y - c1 * ch.value_y - c0) == red(0)
    return out


class LaurentDescriptor:
    """H(G, lambda) for regular lambda: a Laurent polynomial algebra."""

    def __init__(self, q, ell):
        self.q = q
        self.ell = ell
        self.algebra = "R[X,X^-1]"
        self.simple_modules = "one character per invertible scalar"

    def evaluate(self, x):
        """Character sending X to the invertible scalar x."""
        if x == 0 or (self.ell and x % self.ell == 0):
            raise BadParams("X is invertible; 0 is not a character value")
        return x if self.ell == 0 else x % self.ell


def characters_regular(q, ell):
    return LaurentDescriptor(q, ell)


class CosetFunction:
    """B-bi-invariant function on a finite unitary group, two cosets."""

    def __init__(self, spec, table, field, val_id, val_w):
        self.spec = spec
        self.table = table
        self.field = field      # None means exact integers
        self.val_id = val_id
        self.val_w = val_w

    def evaluate(self, g):
        in_b, _ = grp.borel_membership(self.spec, g)
        return self.val_id if in_b else self.val_w

    def key(self):
        return (self.spec.q0, self.spec.rank_n,
                None if self.field is None else (self.field.p, self.field.m))


def indicator(spec, table, field, coset):
    """Indicator of B ('id') or of the w-double coset ('w')."""
    one = 1
    zero = 0
    if coset == "id":
        return CosetFunction(spec, table, field, one, zero)
    return CosetFunction(spec, table, field, zero, one)


def convolve(f1, f2):
    """f1 * f2 (h) = sum over G/B sections of f1(s) f2(s^-1 h)."""
    if f1.key() != f2.key():
        raise SubgroupMismatch("functions live on different coset spaces")
    spec, table = f1.spec, f1.table
    F = f1.field

    def mul(x, y):
        return x * y if F is None else F.mul(x, y)

    def add(x, y):
        return x + y if F is None else F.add(x, y)

    def at(h):
        acc = 0
        for i in range(len(table)):
            s = table.sections[i]
            v1 = f1.evaluate(s)
            if not v1:
                continue
            v2 = f2.evaluate(spec.field.matmul(table.section_invs[i], h))
            if v2:
                acc = add(acc, mul(v1, v2))
        return acc

    ident = table.sections[table.standard_index]
    w = spec.generators[spec.gen_kinds.index("weyl")]
    return CosetFunction(spec, table, F, at(ident), at(w))
