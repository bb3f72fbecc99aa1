"""Induced modules i_B^G(chi) over fields of characteristic ell.

A torus character is a pair of exponents (e1, e2) against the fixed
primitive element of GF(q0^2) and the fixed generator of its norm-one
subgroup.  Exponents are projected to the prime-to-ell parts of their
cyclic groups at construction, mirroring reduction mod ell, and the
coefficient field GF(ell^m) is the smallest one containing the needed
roots of unity.  The induced module lives on the flag basis with the
standard section cocycle, so every generator matrix is monomial.
"""

from __future__ import annotations

import math

import numpy as np

from . import gf, grp
from .errors import BadPrime, FieldMismatch, FormatError


def _prime_to_ell_part(e, n, ell):
    """Project the exponent e mod n to the prime-to-ell subgroup of Z/n."""
    a = 0
    n_prime = n
    while n_prime % ell == 0:
        n_prime //= ell
        a += 1
    if a == 0:
        return e % n
    la = ell ** a
    # CRT: congruent to e mod n', to 0 mod ell^a
    g, inv, _ = _egcd(la, n_prime)
    assert g == 1
    return (e % n_prime) * la * (inv % n_prime) % n


def _egcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def _mult_order(a, n):
    if n == 1:
        return 1
    x = a % n
    k = 1
    while x != 1:
        x = x * a % n
        k += 1
    return k


class TorusCharacter:
    """Character of the diagonal torus, chi(diag) = chi1(x) chi2(prod)."""

    def __init__(self, q0, e1, e2, ell):
        p, _ = gf.prime_power(q0)
        if ell == p:
            raise BadPrime(f"ell = {ell} equals the group characteristic")
        if not gf.is_prime(ell):
            raise BadPrime(f"ell = {ell} is not prime")
        self.q0 = q0
        self.ell = ell
        n1_full = q0 * q0 - 1
        n2_full = q0 + 1
        self.e1 = _prime_to_ell_part(e1, n1_full, ell)
        self.e2 = _prime_to_ell_part(e2, n2_full, ell)
        self.order1 = n1_full // math.gcd(self.e1, n1_full) if self.e1 else 1
        self.order2 = n2_full // math.gcd(self.e2, n2_full) if self.e2 else 1
        m = _mult_order(ell, math.lcm(self.order1, self.order2))
        self.coeff = gf.field_make(ell, m)
        self.zeta1 = gf.embed_root_of_unity(self.order1, self.coeff)
        self.zeta2 = gf.embed_root_of_unity(self.order2, self.coeff)
        # chi1(g^k) = zeta1^(u1*k) with e1 = (n1_full/order1)*u1
        self._u1 = self.e1 // (n1_full // self.order1) if self.e1 else 0
        self._u2 = self.e2 // (n2_full // self.order2) if self.e2 else 0

    @property
    def trivial(self):
        return self.e1 == 0 and self.e2 == 0

    @property
    def regular(self):
        """chi1^(q0+1) != 1 (Weyl-nondegenerate)."""
        return (self.e1 * (self.q0 + 1)) % (self.q0 * self.q0 - 1) != 0

    def chi1(self, field, x):
        """chi1 on the code x of GF(q0^2)^x; field is the group's field."""
        k = int(field.log[x])
        C = self.coeff
        return C.pow(self.zeta1.code, self._u1 * k % self.order1)

    def chi2(self, field, z):
        """chi2 on a norm-one code z = g^((q0-1)t)."""
        if self.order2 == 1:
            return 1
        k = int(field.log[z])
        t = k // (self.q0 - 1)
        assert k % (self.q0 - 1) == 0, "argument is not norm-one"
        C = self.coeff
        return C.pow(self.zeta2.code, self._u2 * t % self.order2)

    def value(self, field, diag):
        """Value on a torus element given by its diagonal codes."""
        C = self.coeff
        x = int(diag[0])
        prod = x
        for d in diag[1:]:
            prod = field.mul(prod, int(d))
        return C.mul(self.chi1(field, x), self.chi2(field, prod))


def torus_character(q0, e1, e2, ell):
    return TorusCharacter(q0, e1, e2, ell)


class FlatModule:
    """A matrix module: one invertible matrix per group generator."""

    def __init__(self, coeff, dim, gens, label=""):
        self.coeff = coeff
        self.dim = dim
        self.gens = gens
        self.label = label

    def __repr__(self):
        return f"FlatModule(dim={self.dim}, field={self.coeff}, ngens={len(self.gens)})"


def label_params(label):
    """Parse 'key=value' fragments of a module label into a dict."""
    out = {}
    for part in label.split(","):
        part = part.strip()
        if "=" in part:
            k, _, v = part.partition("=")
            try:
                out[k.strip()] = int(v.strip())
            except ValueError:
                out[k.strip()] = v.strip()
    return out


def act_matrix(spec, table, chi, g):
    """Monomial matrix of g on the chi-induced module over the flag basis."""
    n = len(table)
    M = np.zeros((n, n), dtype=np.int64)
    F = spec.field
    for i in range(n):
        j, b = grp.coset_action(spec, table, g, i)
        diag = [int(b[k, k]) for k in range(spec.rank_n)]
        M[j, i] = chi.value(F, diag)
    return M


def induced_module(spec, table, chi):
    if chi.q0 != spec.q0:
        raise FieldMismatch(
            f"character is over q0={chi.q0}, group over q0={spec.q0}")
    gens = [act_matrix(spec, table, chi, g) for g in spec.generators]
    label = (f"iB^G(chi), q0={spec.q0}, rank={spec.rank_n}, "
             f"ell={chi.ell}, e1={chi.e1}, e2={chi.e2}")
    return FlatModule(chi.coeff, len(table), gens, label)


def module_write(mod, path):
    F = mod.coeff
    lines = ["FMOD 1"]
    lines.append("field {} {} {}".format(
        F.p, F.m, " ".join(str(c) for c in F.modulus[:-1])))
    lines.append(f"dim {mod.dim}")
    lines.append(f"ngens {len(mod.gens)}")
    lines.append(f"label {mod.label}")
    for i, A in enumerate(mod.gens):
        lines.append(f"gen {i}")
        for row in A:
            lines.append(" ".join(str(int(x)) for x in row))
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def module_read(path):
    with open(path) as fh:
        lines = fh.read().splitlines()

    def expect(idx, prefix):
        if idx >= len(lines):
            raise FormatError("unexpected end of file", line=idx + 1)
        if not lines[idx].startswith(prefix):
            raise FormatError(f"expected {prefix!r}", line=idx + 1)
        return lines[idx][len(prefix):].strip()

    if expect(0, "FMOD") != "1":
        raise FormatError("unsupported FMOD version", line=1)
    parts = expect(1, "field").split()
    try:
        p, m = int(parts[0]), int(parts[1])
        coeffs = [int(c) for c in parts[2:]]
    except (ValueError, IndexError):
        raise FormatError("malformed field line", line=2)
    if len(coeffs) != m:
        raise FormatError(f"expected {m} modulus coefficients", line=2)
    try:
        F = gf.field_with_modulus(p, m, tuple(coeffs + [1]))
    except ValueError as exc:
        raise FormatError(str(exc), line=2)
    try:
        dim = int(expect(2, "dim"))
        ngens = int(expect(3, "ngens"))
    except ValueError:
        raise FormatError("malformed dim/ngens", line=3)
    label = expect(4, "label")
    gens = []
    idx = 5
    for k in range(ngens):
        if expect(idx, "gen") != str(k):
            raise FormatError(f"expected gen {k}", line=idx + 1)
        idx += 1
        A = np.zeros((dim, dim), dtype=np.int64)
        for r in range(dim):
            if idx >= len(lines):
                raise FormatError("unexpected end of file", line=idx + 1)
            row = lines[idx].split()
            if len(row) != dim:
                raise FormatError(
                    f"row has {len(row)} entries, expected {dim}", line=idx + 1)
            try:
                vals = [int(x) for x in row]
            except ValueError:
                raise FormatError("non-integer matrix entry", line=idx + 1)
            for c, v in enumerate(vals):
                if not 0 <= v < F.order:
                    raise FormatError(f"entry {v} out of range", line=idx + 1)
                A[r, c] = v
            idx += 1
        gens.append(A)
    return FlatModule(F, dim, gens, label)
