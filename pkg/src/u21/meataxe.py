"""MeatAxe-style module decomposition over small finite fields.

chop splits a FlatModule into composition factors by spinning kernel
vectors of irreducible factors of the minimal polynomial of random
algebra elements, with Norton's test (run on the transpose module) as
the irreducibility certificate.  Homomorphism spaces are computed by a
spin-tree defect method: a hom out of a module generated by u is
determined by the image of u, and the commutation defect is linear in
that image.  Everything is deterministic given the seed.
"""

from __future__ import annotations

import random

import numpy as np

from . import linalg, polys
from .errors import (AmbiguousParameter, NotIrreducible, NotRankTwo,
                     SplitBudgetExceeded)
from .modrep import FlatModule, label_params

SPLIT_BUDGET = 200
WORD_LEN = 6
WORD_COUNT = 3
FINGERPRINT_WORDS = 8


class CompositionReport:
    """Composition factors with canonical ids and a bottom-up series."""

    def __init__(self, field, dim, seed, factors, series, factor_modules, witness):
        self.field = field
        self.dim = dim
        self.seed = seed
        self.factors = factors            # list of (id, dim, mult)
        self.series = series              # factor ids, submodule first
        self.factor_modules = factor_modules
        self.witness = witness
        self.total_length = len(series)

    def to_json(self, socle=None):
        out = {
            "dim": self.dim,
            "field": [self.field.p, self.field.m],
            "factors": [{"id": i, "dim": d, "mult": m} for i, d, m in self.factors],
            "socle_layers": None,
            "uniserial": None,
            "seed": self.seed,
        }
        if socle is not None:
            out["socle_layers"] = [[[i, m] for i, m in layer] for layer in socle.layers]
            out["uniserial"] = socle.uniserial
        return out


class SocleReport:
    def __init__(self, layers, uniserial):
        self.layers = layers              # list of [(factor_id, mult)], socle first
        self.uniserial = uniserial


class EndAlgebra:
    def __init__(self, field, basis, structure_constants):
        self.field = field
        self.basis = basis                # identity first
        self.dimension = len(basis)
        self.structure_constants = structure_constants


def _random_element(F, gens, rng):
    """Scalar combination of a few bounded-length generator words."""
    n = gens[0].shape[0]
    acc = linalg.zeros(n, n)
    for _ in range(rng.randrange(1, WORD_COUNT + 1)):
        w = linalg.eye(F, n)
        for _ in range(rng.randrange(1, WORD_LEN + 1)):
            w = F.matmul(w, gens[rng.randrange(len(gens))])
        c = rng.randrange(1, F.order)
        acc = F.vadd(acc, F.vmul(w, np.int64(c)))
    return acc


def _split_once(F, gens, rng):
    """Return ('irr', witness) or ('split', submodule basis rows, witness)."""
    n = gens[0].shape[0]
    if n == 1:
        return "irr", None, {"kind": "dim1"}
    for cand in range(SPLIT_BUDGET):
        A = _random_element(F, gens, rng)
        mp = linalg.minpoly(F, A)
        for f, _ in polys.factor(F, mp, rng):
            B = linalg.poly_apply_mat(F, f, A)
            K = linalg.nullspace(F, B)
            if K.shape[0] == 0:
                continue
            for vi in range(K.shape[0]):
                sp = linalg.spin(F, gens, K[vi])
                if not sp.full:
                    wit = {"kind": "kernel", "candidate": cand,
                           "factor_degree": len(f) - 1, "vector": vi}
                    return "split", sp.ech.basis_matrix(), wit
            if K.shape[0] == len(f) - 1:
                # Norton: nullity equals the factor degree, so one dual
                # spin decides irreducibility
                dual = [g.T.copy() for g in gens]
                Kt = linalg.nullspace(F, B.T)
                spt = linalg.spin(F, dual, Kt[0])
                wit = {"kind": "norton", "candidate": cand,
                       "factor_degree": len(f) - 1}
                if spt.full:
                    return "irr", None, wit
                ann = linalg.nullspace(F, spt.ech.basis_matrix())
                return "split", ann, wit
    raise SplitBudgetExceeded(
        f"no decision after {SPLIT_BUDGET} candidates at dim {n}")


def _sub_quot(F, gens, rows):
    """Split generator action along an invariant subspace (row basis)."""
    n = gens[0].shape[0]
    ech = linalg.Echelon(F, n)
    for r in rows:
        ech.add(r)
    R = ech.basis_matrix()
    r = R.shape[0]
    comp = [c for c in range(n) if c not in ech.pivots]
    C = linalg.zeros(n, n)
    C[:, :r] = R.T
    for k, c in enumerate(comp):
        C[c, r + k] = 1
    Cinv = linalg.inverse(F, C)
    subs, quots = [], []
    for A in gens:
        T = F.matmul(Cinv, F.matmul(A, C))
        assert not T[r:, :r].any(), "subspace is not invariant"
        subs.append(T[:r, :r].copy())
        quots.append(T[r:, r:].copy())
    return subs, quots


def _chop_gens(F, gens, rng, leaves, witnesses):
    verdict, rows, wit = _split_once(F, gens, rng)
    if verdict == "irr":
        leaves.append(gens)
        witnesses.append(wit)
        return
    subs, quots = _sub_quot(F, gens, rows)
    _chop_gens(F, subs, rng, leaves, witnesses)
    _chop_gens(F, quots, rng, leaves, witnesses)


def _word_sequences(ngens, count):
    """Deterministic index sequences: single letters, then pairs, ..."""
    out = [[i] for i in range(ngens)]
    length = 2
    while len(out) < count:
        frontier = []
        for seq in out:
            if len(seq) == length - 1:
                for i in range(ngens):
                    frontier.append(seq + [i])
        out.extend(frontier)
        length += 1
    return out[:count]


def _word_matrix(F, gens, seq):
    w = gens[seq[0]]
    for i in seq[1:]:
        w = F.matmul(w, gens[i])
    return w


def _fingerprint(F, gens):
    """Isomorphism invariant: dim plus charpolys of the standard words."""
    n = gens[0].shape[0]
    cps = []
    for seq in _word_sequences(len(gens), FINGERPRINT_WORDS):
        cp = linalg.charpoly(F, _word_matrix(F, gens, seq))
        cps.append(tuple(cp))
    return (n, tuple(sorted(cps)))


def hom_basis(F, sgens, mgens):
    """Basis of Hom(S, M) for S irreducible, as n_M x n_S matrices."""
    ns = sgens[0].shape[0]
    nm = mgens[0].shape[0]
    # pick a word with a conclusive irreducible factor on S
    choice = None
    for seq in _word_sequences(len(sgens), 3 * len(sgens)):
        ws = _word_matrix(F, sgens, seq)
        mp = linalg.minpoly(F, ws)
        rng = random.Random(0)
        for f, _ in polys.factor(F, mp, rng):
            Ks = linalg.nullspace(F, linalg.poly_apply_mat(F, f, ws))
            if Ks.shape[0] == len(f) - 1:
                choice = (seq, f, Ks)
                break
        if choice:
            break
    if choice is None:
        seq = [0]
        ws = _word_matrix(F, sgens, seq)
        mp = linalg.minpoly(F, ws)
        f = polys.factor(F, mp, random.Random(0))[0][0]
        Ks = linalg.nullspace(F, linalg.poly_apply_mat(F, f, ws))
        choice = (seq, f, Ks)
    seq, f, Ks = choice
    wm = _word_matrix(F, mgens, seq)
    Km = linalg.nullspace(F, linalg.poly_apply_mat(F, f, wm))
    k = Km.shape[0]
    if k == 0:
        return []
    u = Ks[0]
    sp = linalg.spin(F, sgens, u)
    assert sp.full, "generator of an irreducible module must spin fully"
    C = sp.restricted_action()
    # images of the tree basis under a hom sending u -> kb, per kernel vector
    mats = [np.stack(sp.transport(Km[i], mgens), axis=1) for i in range(k)]
    defects = []
    for i in range(k):
        cols = []
        for g in range(len(mgens)):
            d = F.vsub(F.matmul(mgens[g], mats[i]), F.matmul(mats[i], C[g]))
            cols.append(d.ravel())
        defects.append(np.concatenate(cols))
    D = np.stack(defects, axis=1)
    coeffs = linalg.nullspace(F, D)
    out = []
    Binv = linalg.inverse(F, sp.basis_matrix().T)
    for c in coeffs:
        M = linalg.zeros(nm, ns)
        for i in range(k):
            if c[i]:
                M = F.vadd(M, F.vmul(mats[i], np.int64(c[i])))
        out.append(F.matmul(M, Binv))
    return out


def _assign_ids(F, leaves):
    """Canonical factor ids '<dim><letter>' shared iff isomorphic."""
    fps = [_fingerprint(F, gens) for gens in leaves]
    classes = []  # list of (fingerprint, representative gens, member indices)
    for idx, fp in enumerate(fps):
        placed = False
        for cls in classes:
            if cls[0] == fp and len(hom_basis(F, leaves[idx], cls[1])) > 0:
                cls[2].append(idx)
                placed = True
                break
        if not placed:
            classes.append((fp, leaves[idx], [idx]))
    classes.sort(key=lambda c: c[0])
    ids = {}
    letters = {}
    for fp, rep, members in classes:
        d = fp[0]
        letter = chr(ord("a") + letters.get(d, 0))
        letters[d] = letters.get(d, 0) + 1
        fid = f"{d}{letter}"
        for idx in members:
            ids[idx] = fid
    return ids, {ids[c[2][0]]: c[1] for c in classes}


def chop(mod, seed=42):
    F = mod.coeff
    rng = random.Random(seed)
    leaves, witnesses = [], []
    _chop_gens(F, mod.gens, rng, leaves, witnesses)
    ids, reps = _assign_ids(F, leaves)
    series = [ids[i] for i in range(len(leaves))]
    counts = {}
    for fid in series:
        counts[fid] = counts.get(fid, 0) + 1
    factor_modules = {
        fid: FlatModule(F, gens[0].shape[0], gens,
                        label=f"factor {fid} of {mod.label}")
        for fid, gens in reps.items()}
    factors = sorted(
        ((fid, factor_modules[fid].dim, counts[fid]) for fid in counts),
        key=lambda t: (t[1], t[0]))
    witness = {}
    for fid, wit in zip(series, witnesses):
        witness.setdefault(fid, wit)
    rep = CompositionReport(F, mod.dim, seed, factors, series,
                            factor_modules, witness)
    assert sum(d * m for _, d, m in factors) == mod.dim
    return rep


def is_isomorphic(a, b, seed=42):
    if a.coeff != b.coeff:
        return False
    for mod in (a, b):
        if chop(mod, seed).total_length != 1:
            raise NotIrreducible(f"module {mod.label!r} is not irreducible")
    if a.dim != b.dim:
        return False
    if _fingerprint(a.coeff, a.gens) != _fingerprint(b.coeff, b.gens):
        return False
    return len(hom_basis(a.coeff, a.gens, b.gens)) > 0


def socle_series(mod, seed=42):
    F = mod.coeff
    report = chop(mod, seed)
    end_dims = {fid: len(hom_basis(F, fm.gens, fm.gens))
                for fid, fm in report.factor_modules.items()}
    layers = []
    gens = mod.gens
    while gens[0].shape[0] > 0:
        layer = []
        ech = linalg.Echelon(F, gens[0].shape[0])
        for fid, fm in sorted(report.factor_modules.items(),
                              key=lambda t: (t[1].dim, t[0])):
            homs = hom_basis(F, fm.gens, gens)
            if not homs:
                continue
            mult = len(homs) // end_dims[fid]
            layer.append((fid, mult))
            for h in homs:
                for col in range(h.shape[1]):
                    ech.add(h[:, col])
        assert layer, "socle of a nonzero module is nonzero"
        layers.append(layer)
        if ech.rank == gens[0].shape[0]:
            break
        _, gens = _sub_quot(F, gens, ech.basis_matrix())
    flat = {}
    for layer in layers:
        for fid, m in layer:
            flat[fid] = flat.get(fid, 0) + m
    assert flat == {fid: m for fid, _, m in report.factors}, \
        "socle layers must reconstruct the composition multiset"
    uniserial = all(len(layer) == 1 and layer[0][1] == 1 for layer in layers)
    return SocleReport(layers, uniserial)


def endomorphism_algebra(mod):
    F = mod.coeff
    gens = mod.gens
    n = mod.dim
    if n == 1:
        ident = linalg.eye(F, 1)
        return EndAlgebra(F, [ident], [[[1] if k == 0 else [0]
                                        for k in range(1)]])
    # find a cyclic vector inside a small word-kernel
    choice = None
    rng = random.Random(0)
    for attempt in range(SPLIT_BUDGET):
        if attempt < 3 * len(gens):
            seqs = _word_sequences(len(gens), 3 * len(gens))
            A = _word_matrix(F, gens, seqs[attempt])
        else:
            A = _random_element(F, gens, rng)
        mp = linalg.minpoly(F, A)
        for f, _ in polys.factor(F, mp, rng):
            K = linalg.nullspace(F, linalg.poly_apply_mat(F, f, A))
            if K.shape[0] == 0:
                continue
            for vi in range(K.shape[0]):
                sp = linalg.spin(F, gens, K[vi])
                if sp.full:
                    choice = (K, vi, sp)
                    break
            if choice:
                break
        if choice:
            break
    if choice is None:
        raise SplitBudgetExceeded("no cyclic vector found in word kernels")
    K, vi, sp = choice
    C = sp.restricted_action()
    k = K.shape[0]
    mats = [np.stack(sp.transport(K[i], gens), axis=1) for i in range(k)]
    defects = []
    for i in range(k):
        cols = []
        for g in range(len(gens)):
            d = F.vsub(F.matmul(gens[g], mats[i]), F.matmul(mats[i], C[g]))
            cols.append(d.ravel())
        defects.append(np.concatenate(cols))
    coeffs = linalg.nullspace(F, np.stack(defects, axis=1))
    Binv = linalg.inverse(F, sp.basis_matrix().T)
    basis = []
    for c in coeffs:
        M = linalg.zeros(n, n)
        for i in range(k):
            if c[i]:
                M = F.vadd(M, F.vmul(mats[i], np.int64(c[i])))
        basis.append(F.matmul(M, Binv))
    # normalize: identity first, remaining elements with zero seed coordinate
    ident = linalg.eye(F, n)
    ech = linalg.Echelon(F, n * n, track=True)
    coord = np.zeros(len(basis), dtype=np.int64)
    added, _, _ = ech.add(ident.ravel(), coord.copy())
    assert added
    keep = [ident]
    for i, M in enumerate(basis):
        coord = np.zeros(len(basis), dtype=np.int64)
        coord[i] = 1
        added, res, _ = ech.add(M.ravel(), coord)
        if added:
            keep.append(ech.rows[-1].reshape(n, n))
    basis = keep
    # structure constants from products reduced against the basis
    bech = linalg.Echelon(F, n * n, track=True)
    for i, M in enumerate(basis):
        coord = np.zeros(len(basis), dtype=np.int64)
        coord[i] = 1
        bech.add(M.ravel(), coord)
    sc = []
    for Mi in basis:
        row = []
        for Mj in basis:
            prod = F.matmul(Mi, Mj)
            res, c = bech.reduce(prod.ravel(), np.zeros(len(basis), dtype=np.int64))
            assert not res.any(), "commutant is not closed under product"
            row.append([int(x) for x in F.vneg(c)])
        sc.append(row)
    return EndAlgebra(F, basis, sc)


def quadratic_parameter(alg, mod):
    if alg.dimension != 2:
        raise NotRankTwo(f"endomorphism algebra has dimension {alg.dimension}")
    params = label_params(mod.label)
    if "q0" not in params:
        raise AmbiguousParameter("module label does not carry q0")
    q0 = params["q0"]
    F = mod.coeff
    n = mod.dim
    E = alg.basis[1]
    diag = E[np.arange(n), np.arange(n)]
    A = E.copy()
    if diag.any():
        # subtract the identity-coset component so A has zero diagonal
        c = int(diag[0])
        ident = linalg.eye(F, n)
        A = F.vsub(E, F.vmul(ident, np.int64(c)))
        if A[np.arange(n), np.arange(n)].any():
            raise AmbiguousParameter(
                "no basis element supported off the identity coset")
    mp = linalg.minpoly(F, A)
    if len(mp) != 3:
        raise NotRankTwo(f"off-coset element has minimal degree {len(mp) - 1}")
    rts = polys.roots(F, mp, random.Random(0))
    if len(rts) != 2:
        raise AmbiguousParameter("quadratic does not split over the field")
    l1, l2 = rts
    ratios = [F.mul(F.neg(l1), F.inv(l2)), F.mul(F.neg(l2), F.inv(l1))]
    for j in range(5):
        target = F.pow(F.from_int(q0), j)
        if target in ratios:
            return q0 ** j
    raise AmbiguousParameter(
        "neither eigenvalue ratio is a power of q0")
