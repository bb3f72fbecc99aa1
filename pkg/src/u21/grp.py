"""Finite unitary groups U(1,1) and U(2,1) over k_F/k_0 as matrix groups.

The hermitian form is the antidiagonal matrix of ones; entries live in
GF(q0^2) and conjugation is x -> x^q0.  Cosets of the Borel subgroup are
modelled geometrically by isotropic lines in reduced echelon form, each
with a fixed unitary section matrix, so canonical forms never depend on
generator ordering.
"""

from __future__ import annotations

import functools

import numpy as np

from . import gf
from .errors import (EnumerationTooLarge, EvenCharacteristic, NotInGroup,
                     UnsupportedRank)


class GroupSpec:
    """A finite unitary group given by its form matrix and generators."""

    def __init__(self, q0, rank_n, field, form, generators, gen_kinds):
        self.q0 = q0
        self.rank_n = rank_n
        self.field = field          # GF(q0^2)
        self.form = form
        self.generators = generators
        self.gen_kinds = gen_kinds  # parallel list: torus/unipotent/weyl

    def conj_scalar(self, x):
        """The entrywise Galois conjugate x -> x^q0."""
        return self.field.pow(int(x), self.q0)

    def conj_matrix(self, g):
        F = self.field
        out = np.zeros_like(g)
        nz = np.nonzero(g)
        for i, j in zip(*nz):
            out[i, j] = F.pow(int(g[i, j]), self.q0)
        return out

    def is_unitary(self, g):
        F = self.field
        t = F.matmul(F.matmul(g, self.form), F.matmul(self.conj_matrix(g).T, self.form))
        n = g.shape[0]
        ident = np.zeros((n, n), dtype=np.int64)
        np.fill_diagonal(ident, 1)
        return (t == ident).all()

    def inverse(self, g):
        """g^{-1} = J conj(g)^T J from the unitarity equation."""
        F = self.field
        return F.matmul(self.form, F.matmul(self.conj_matrix(g).T, self.form))

    def key(self, g):
        return tuple(int(x) for x in g.ravel())


class FlagTable:
    """Canonical isotropic lines of the hermitian space and their sections."""

    def __init__(self, spec, flags, sections):
        self.spec = spec
        self.flags = flags          # list of column vectors, echelon-normalized
        self.sections = sections
        self.section_invs = [spec.inverse(s) for s in sections]
        self.index = {tuple(int(x) for x in v): i for i, v in enumerate(flags)}
        std = np.zeros(spec.rank_n, dtype=np.int64)
        std[0] = 1
        self.standard_index = self.index[tuple(int(x) for x in std)]

    def __len__(self):
        return len(self.flags)


def _adiag(F, entries):
    n = len(entries)
    out = np.zeros((n, n), dtype=np.int64)
    for i, e in enumerate(entries):
        out[i, n - 1 - i] = e
    return out


def _hermitian(spec, v, u):
    """h(v, u) = v^T J conj(u)."""
    F = spec.field
    acc = 0
    n = spec.rank_n
    for i in range(n):
        acc = F.add(acc, F.mul(int(v[i]), spec.conj_scalar(int(u[n - 1 - i]))))
    return acc


def _trace_one_element(spec):
    """First code c with c + conj(c) = 1, in packed-code order."""
    F = spec.field
    for c in range(F.order):
        if F.add(c, spec.conj_scalar(c)) == 1:
            return c
    raise AssertionError("trace is surjective; unreachable")


def _trace_zero_nonzero(spec):
    F = spec.field
    for c in range(1, F.order):
        if F.add(c, spec.conj_scalar(c)) == 0:
            return c
    raise AssertionError("unreachable for odd characteristic")


def _unipotent3(spec, x, y):
    F = spec.field
    u = np.zeros((3, 3), dtype=np.int64)
    np.fill_diagonal(u, 1)
    u[0, 1] = x
    u[0, 2] = y
    u[1, 2] = F.neg(spec.conj_scalar(x))
    return u


@functools.lru_cache(maxsize=None)
def unitary_group(q0, rank_n):
    """Deterministic generator set: torus, root subgroups, Weyl element."""
    p, s = gf.prime_power(q0)
    if p == 2:
        raise EvenCharacteristic("odd residual characteristic required")
    if rank_n not in (2, 3):
        raise UnsupportedRank(f"rank {rank_n} not supported")
    F = gf.field_make(p, 2 * s)
    form = _adiag(F, [1] * rank_n)
    gamma = F.generator
    gamma_bar_inv = F.inv(F.pow(gamma, q0))
    gens = []
    kinds = []
    if rank_n == 3:
        t1 = np.diag([gamma, 1, gamma_bar_inv]).astype(np.int64)
        zeta = F.pow(gamma, q0 - 1)               # generator of the norm-one group
        t2 = np.diag([1, zeta, 1]).astype(np.int64)
        spec = GroupSpec(q0, rank_n, F, form, [], [])
        c1 = _trace_one_element(spec)
        y0 = _trace_zero_nonzero(spec)
        ugens = []
        for x in (1, gamma):
            norm = F.mul(x, spec.conj_scalar(x))
            ugens.append(_unipotent3(spec, x, F.mul(F.neg(norm), c1)))
        ugens.append(_unipotent3(spec, 0, y0))
        w = _adiag(F, [1, 1, 1])
        gens = [t1, t2] + ugens + [w]
        kinds = ["torus", "torus", "unipotent", "unipotent", "unipotent", "weyl"]
    else:
        t1 = np.diag([gamma, gamma_bar_inv]).astype(np.int64)
        spec = GroupSpec(q0, rank_n, F, form, [], [])
        x0 = _trace_zero_nonzero(spec)
        u = np.array([[1, x0], [0, 1]], dtype=np.int64)
        w = _adiag(F, [1, 1])
        gens = [t1, u, w]
        kinds = ["torus", "unipotent", "weyl"]
    spec = GroupSpec(q0, rank_n, F, form, gens, kinds)
    for g in gens:
        assert spec.is_unitary(g), "generator fails the unitarity equation"
    if (rank_n == 3 and q0 <= 3) or (rank_n == 2 and q0 <= 5):
        assert group_order(spec, "enumerate") == group_order(spec, "formula")
    return spec


def order_formula(q0, rank_n):
    q = q0
    if rank_n == 3:
        return q ** 3 * (q - 1) * (q + 1) ** 3 * (q * q - q + 1)
    return q * (q - 1) * (q + 1) ** 2


def group_order(spec, method="formula"):
    if method == "formula":
        return order_formula(spec.q0, spec.rank_n)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    if (spec.rank_n == 3 and spec.q0 > 3) or (spec.rank_n == 2 and spec.q0 > 7):
        raise EnumerationTooLarge(
            f"BFS closure refused for rank {spec.rank_n}, q0={spec.q0}")
    F = spec.field
    ident = np.zeros((spec.rank_n, spec.rank_n), dtype=np.int64)
    np.fill_diagonal(ident, 1)
    seen = {spec.key(ident)}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in spec.generators:
                gh = F.matmul(g, h)
                k = spec.key(gh)
                if k not in seen:
                    seen.add(k)
                    nxt.append(gh)
        frontier = nxt
    return len(seen)


def borel_membership(spec, g):
    """(True, torus diagonal) if g is upper triangular in the group."""
    if not spec.is_unitary(g):
        raise NotInGroup("matrix fails the unitarity equation")
    n = spec.rank_n
    for i in range(1, n):
        for j in range(i):
            if g[i, j]:
                return False, None
    return True, tuple(int(g[i, i]) for i in range(n))


def _isotropic_lines(spec):
    """All isotropic lines, as echelon-normalized column vectors, sorted."""
    F = spec.field
    n = spec.rank_n
    out = []
    if n == 3:
        for a in range(F.order):
            na = F.mul(a, spec.conj_scalar(a))
            for b in range(F.order):
                if F.add(F.add(b, spec.conj_scalar(b)), na) == 0:
                    out.append(np.array([1, a, b], dtype=np.int64))
        out.append(np.array([0, 0, 1], dtype=np.int64))
    else:
        for b in range(F.order):
            if F.add(b, spec.conj_scalar(b)) == 0:
                out.append(np.array([1, b], dtype=np.int64))
        out.append(np.array([0, 1], dtype=np.int64))
    out.sort(key=lambda v: tuple(int(x) for x in v))
    return out


def _norm_one_scalar(spec, t):
    """c with c * conj(c) = t, for t in the fixed field k_0."""
    F = spec.field
    if t == 1:
        return 1
    d = int(F.log[t])
    # norm image is generated by g^(q0+1)
    if d % (spec.q0 + 1) != 0:
        raise ValueError("target not in the norm image")
    return int(F.exp[d // (spec.q0 + 1)])


def _section_for(spec, v):
    """Unitary matrix with first column the isotropic line v."""
    F = spec.field
    n = spec.rank_n
    std = np.zeros(n, dtype=np.int64)
    std[0] = 1
    if (v == std).all():
        ident = np.zeros((n, n), dtype=np.int64)
        np.fill_diagonal(ident, 1)
        return ident
    # hyperbolic partner: start from a standard vector not orthogonal to v
    w = None
    for i in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[i] = 1
        if _hermitian(spec, v, e) != 0:
            # scale so that h(v, w) = 1: h(v, c*e) = conj(c) h(v, e)
            c = spec.conj_scalar(F.inv(_hermitian(spec, v, e)))
            w = F.vmul(e, np.int64(c))
            break
    t = _hermitian(spec, w, w)
    # make w isotropic: w -> w - lam*v with lam + conj(lam) = t
    if t:
        lam = F.mul(t, _trace_one_element(spec))
        w = F.vsub(w, F.vmul(v, np.int64(lam)))
    cols = [v, w]
    if n == 3:
        # unit vector orthogonal to v and w
        M = np.vstack([
            [spec.conj_scalar(int(v[2])), spec.conj_scalar(int(v[1])), spec.conj_scalar(int(v[0]))],
            [spec.conj_scalar(int(w[2])), spec.conj_scalar(int(w[1])), spec.conj_scalar(int(w[0]))],
        ]).astype(np.int64)
        from . import linalg
        u = linalg.nullspace(F, M)[0]
        nu = _hermitian(spec, u, u)
        c = F.inv(_norm_one_scalar(spec, nu))
        u = F.vmul(u, np.int64(c))
        cols = [v, u, w]
    g = np.stack(cols, axis=1)
    return g


def flag_table(spec):
    flags = _isotropic_lines(spec)
    sections = []
    for v in flags:
        s = _section_for(spec, v)
        assert spec.is_unitary(s), "section is not in the group"
        sections.append(s)
    table = FlagTable(spec, flags, sections)
    # sections must carry the standard line to each flag
    std = flags[table.standard_index]
    for v, s in zip(flags, sections):
        img = spec.field.matmul(s, std[:, None])[:, 0]
        assert (_canonical_line(spec, img) == v).all()
    return table


def _canonical_line(spec, v):
    F = spec.field
    nz = np.nonzero(v)[0]
    c = F.inv(int(v[nz[0]]))
    return F.vmul(v, np.int64(c))


def coset_action(spec, table, g, i):
    """Decompose g*s(i) = s(j)*b with b upper triangular; return (j, b)."""
    F = spec.field
    if not spec.is_unitary(g):
        raise NotInGroup("matrix fails the unitarity equation")
    img = F.matmul(g, table.flags[i][:, None])[:, 0]
    j = table.index[tuple(int(x) for x in _canonical_line(spec, img))]
    b = F.matmul(table.section_invs[j], F.matmul(g, table.sections[i]))
    return j, b
