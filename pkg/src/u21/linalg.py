"""Dense linear algebra over a FieldSpec.

Matrices are numpy int64 arrays of packed field codes; vectors are 1-D
arrays.  Module generators act on column vectors (A @ v).  Row operations
go through the field's vectorized arithmetic so the same code serves prime
and extension fields.
"""

from __future__ import annotations

import numpy as np

from . import polys


def zeros(n, m):
    return np.zeros((n, m), dtype=np.int64)


def eye(F, n):
    out = zeros(n, n)
    np.fill_diagonal(out, 1)
    return out


class Echelon:
    """Incremental row echelon structure with optional coefficient tracking."""

    def __init__(self, F, n, track=0):
        self.F = F
        self.n = n
        self.rows = []       # normalized rows, pivot entry 1
        self.pivots = []
        self.coords = []     # row expressed in the originally added vectors
        self.track = track

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, v, coord=None):
        F = self.F
        v = v.copy()
        c = coord.copy() if coord is not None else None
        for row, piv, rc in zip(self.rows, self.pivots, self.coords):
            a = v[piv]
            if a:
                v = F.vsub(v, F.vmul(row, np.int64(a)))
                if c is not None:
                    c = F.vsub(c, F.vmul(rc, np.int64(a)))
        return v, c

    def add(self, v, coord=None):
        """Reduce v and insert if independent.  Returns (added, residual, coord)."""
        F = self.F
        v, c = self.reduce(v, coord)
        nz = np.nonzero(v)[0]
        if len(nz) == 0:
            return False, v, c
        piv = int(nz[0])
        inv = F.inv(int(v[piv]))
        v = F.vmul(v, np.int64(inv))
        if c is not None:
            c = F.vmul(c, np.int64(inv))
        self.rows.append(v)
        self.pivots.append(piv)
        self.coords.append(c)
        return True, v, c

    def contains(self, v):
        r, _ = self.reduce(v)
        return not r.any()

    def basis_matrix(self):
        if not self.rows:
            return zeros(0, self.n)
        return np.vstack(self.rows)


def rref(F, A):
    """Reduced row echelon form; returns (R, pivot columns)."""
    A = A.copy()
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = F.vmul(A[r], np.int64(F.inv(int(A[r, c]))))
        col = A[:, c].copy()
        col[r] = 0
        mask = np.nonzero(col)[0]
        if len(mask):
            A[mask] = F.vsub(A[mask], F.vmul(col[mask, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F, A):
    return rref(F, A)[0].shape[0]


def nullspace(F, A):
    """Rows form a basis of {v : A @ v = 0}."""
    ncols = A.shape[1]
    R, pivots = rref(F, A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = zeros(len(free), ncols)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = F.neg(int(R[i, fc]))
    return basis


def inverse(F, A):
    n = A.shape[0]
    R, pivots = rref(F, np.hstack([A, eye(F, n)]))
    if len(pivots) != n or pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]


def solve_right(F, A, B):
    """Solve A @ X = B (A square invertible)."""
    return F.matmul(inverse(F, A), B)


class SpinResult:
    """Orbit basis of a seed vector under generator matrices.

    basis[j] is the j-th tree vector; tree[j] = (parent, gen) with
    tree[0] = (-1, -1) for the seed.  full is True if the span is the
    whole space.
    """

    def __init__(self, F, gens, basis, tree, ech):
        self.F = F
        self.gens = gens
        self.basis = basis
        self.tree = tree
        self.ech = ech

    @property
    def dim(self):
        return len(self.basis)

    @property
    def full(self):
        return self.dim == self.gens[0].shape[0]

    def basis_matrix(self):
        return np.vstack(self.basis)

    def restricted_action(self):
        """Generator matrices in the tree basis (the spanned submodule)."""
        F = self.F
        d = self.dim
        n = self.basis[0].shape[0]
        ech = Echelon(F, n, track=True)
        for t, b in enumerate(self.basis):
            coord = np.zeros(d, dtype=np.int64)
            coord[t] = 1
            ech.add(b, coord)
        out = []
        for A in self.gens:
            M = zeros(d, d)
            for j, b in enumerate(self.basis):
                w = matvec(F, A, b)
                res, c = ech.reduce(w, np.zeros(d, dtype=np.int64))
                if res.any():
                    raise ValueError("basis does not span a submodule")
                M[:, j] = F.vneg(c)
            out.append(M)
        return out

    def transport(self, v, gens_target):
        """Apply the spin tree to seed image v under another generator set."""
        F = self.F
        out = [None] * self.dim
        out[0] = v
        for j in range(1, self.dim):
            parent, g = self.tree[j]
            out[j] = F.matmul(gens_target[g], out[parent][:, None])[:, 0]
        return out


def spin(F, gens, seed):
    """BFS closure of the span of seed under gens, with tree bookkeeping."""
    n = gens[0].shape[0]
    ech = Echelon(F, n)
    added, _, _ = ech.add(seed)
    if not added:
        raise ValueError("seed vector is zero")
    basis = [seed]
    tree = [(-1, -1)]
    queue = [0]
    while queue:
        j = queue.pop(0)
        for g, A in enumerate(gens):
            w = F.matmul(A, basis[j][:, None])[:, 0]
            added, _, _ = ech.add(w)
            if added:
                basis.append(w)
                tree.append((j, g))
                queue.append(len(basis) - 1)
                if len(basis) == n:
                    return SpinResult(F, gens, basis, tree, ech)
    return SpinResult(F, gens, basis, tree, ech)


def matvec(F, A, v):
    return F.matmul(A, v[:, None])[:, 0]


def poly_apply_vec(F, poly, A, v):
    """Evaluate poly(A) @ v by Horner."""
    n = len(v)
    acc = np.zeros(n, dtype=np.int64)
    for c in reversed(poly):
        acc = matvec(F, A, acc)
        if c:
            acc = F.vadd(acc, F.vmul(v, np.int64(c)))
    return acc


def poly_apply_mat(F, poly, A):
    n = A.shape[0]
    acc = zeros(n, n)
    for c in reversed(poly):
        acc = F.matmul(A, acc)
        if c:
            diag = np.arange(n)
            acc[diag, diag] = F.vadd(acc[diag, diag], np.int64(c))
    return acc


def minpoly(F, A):
    """Minimal polynomial via local Krylov polynomials of the standard basis."""
    n = A.shape[0]
    m = [1]
    for i in range(n):
        v = np.zeros(n, dtype=np.int64)
        v[i] = 1
        if not poly_apply_vec(F, m, A, v).any():
            continue
        ech = Echelon(F, n, track=True)
        coord = np.zeros(n + 1, dtype=np.int64)
        coord[0] = 1
        ech.add(v, coord)
        w = v
        for k in range(1, n + 1):
            w = matvec(F, A, w)
            coord = np.zeros(n + 1, dtype=np.int64)
            coord[k] = 1
            added, _, c = ech.add(w, coord)
            if not added:
                local = polys.trim(list(int(x) for x in c[:k + 1]))
                g = polys.pgcd(F, m, local)
                m = polys.pmul(F, m, polys.pdivmod(F, local, g)[0])
                break
    return polys.monic(F, m)


def hessenberg(F, A):
    H = A.copy()
    n = H.shape[0]
    for j in range(n - 2):
        nz = np.nonzero(H[j + 1:, j])[0]
        if len(nz) == 0:
            continue
        i = j + 1 + int(nz[0])
        if i != j + 1:
            H[[j + 1, i]] = H[[i, j + 1]]
            H[:, [j + 1, i]] = H[:, [i, j + 1]]
        inv = F.inv(int(H[j + 1, j]))
        col = H[j + 2:, j].copy()
        mask = np.nonzero(col)[0]
        for k in mask:
            r = j + 2 + int(k)
            c = F.mul(int(col[k]), inv)
            H[r] = F.vsub(H[r], F.vmul(H[j + 1], np.int64(c)))
            H[:, j + 1] = F.vadd(H[:, j + 1], F.vmul(H[:, r], np.int64(c)))
    return H


def charpoly(F, A):
    """Characteristic polynomial det(xI - A), monic, via Hessenberg form."""
    n = A.shape[0]
    if n == 0:
        return [1]
    H = hessenberg(F, A)
    # p_k for leading k x k block; padded numpy arrays for vector ops
    ps = [np.zeros(n + 1, dtype=np.int64)]
    ps[0][0] = 1
    for k in range(1, n + 1):
        a = int(H[k - 1, k - 1])
        prev = ps[k - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = prev[:-1]                      # x * p_{k-1}
        if a:
            cur = F.vsub(cur, F.vmul(prev, np.int64(a)))
        beta = 1
        for i in range(k - 1, 0, -1):
            beta = F.mul(beta, int(H[i, i - 1]))
            if beta == 0:
                break
            h = int(H[i - 1, k - 1])
            if h:
                cur = F.vsub(cur, F.vmul(ps[i - 1], np.int64(F.mul(h, beta))))
        ps.append(cur)
    return polys.trim([int(c) for c in ps[n]])
