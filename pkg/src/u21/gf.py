"""Exact arithmetic in small finite fields GF(p^m).

Elements are stored as packed integer codes sum(c_i * p^i) with coefficient
vectors little-endian over the prime field.  Every field carries exp/log
(discrete logarithm) tables and a Zech-logarithm table, which caps usable
field orders at 2^20.  The modulus is the lowest-lexicographic irreducible
monic polynomial (ordered by packed value of the non-leading coefficients),
so repeated constructions are identical and serialized data stays portable.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import FieldTooLarge, NonPrimeCharacteristic, NoSuchRoot, ZeroArgument

TABLE_LIMIT = 1 << 20
ZECH_NONE = -1  # marks 1 + g^k = 0


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(q):
    """Return (p, s) with q = p^s, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            s = 0
            n = q
            while n % p == 0:
                n //= p
                s += 1
            if n != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, s
    raise ValueError(f"{q} is not a prime power")


# -- polynomial helpers over the prime field (coefficient lists, little-endian)

def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)


def _pmod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        _ptrim(f)
    return f


def _modulus_is_irreducible(coeffs, p):
    """Trial factorization by all monic polynomials of degree <= deg/2."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for packed in range(p ** d):
            div = _unpack(packed, d, p) + [1]
            if not _pmod(coeffs, div, p):
                return False
    return True


def _unpack(code, m, p):
    out = []
    for _ in range(m):
        code, c = divmod(code, p)
        out.append(c)
    return out


def _pack(vec, p):
    out = 0
    for c in reversed(vec):
        out = out * p + c
    return out


class FieldSpec:
    """A small finite field with exp/log/Zech tables.

    Use :func:`field_make`; direct construction accepts a custom modulus
    (needed when reading serialized modules written with another modulus).
    """

    def __init__(self, p, m, modulus=None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("degree must be positive")
        order = p ** m
        if order > TABLE_LIMIT:
            raise FieldTooLarge(
                f"GF({p}^{m}) has order {order} > {TABLE_LIMIT}; tables refused")
        self.p = p
        self.m = m
        self.order = order
        if modulus is None:
            modulus = self._lowest_irreducible(p, m)
        else:
            modulus = list(modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not _modulus_is_irreducible(modulus, p):
                raise ValueError("modulus is not irreducible")
        self.modulus = tuple(modulus)
        self._build_tables()

    @staticmethod
    def _lowest_irreducible(p, m):
        for packed in range(p ** m):
            coeffs = _unpack(packed, m, p) + [1]
            if _modulus_is_irreducible(coeffs, p):
                return coeffs
        raise AssertionError("no irreducible polynomial found")  # unreachable

    # -- tables ---------------------------------------------------------

    def _mul_codes_poly(self, a, b):
        fa = _unpack(a, self.m, self.p)
        fb = _unpack(b, self.m, self.p)
        prod = _pmod(_pmul(fa, fb, self.p), list(self.modulus), self.p)
        prod += [0] * (self.m - len(prod))
        return _pack(prod, self.p)

    def _build_tables(self):
        n = self.order - 1
        # smallest packed code generating the multiplicative group
        for cand in range(2, self.order):
            seen = 1
            x = cand
            period = 1
            while x != 1:
                x = self._mul_codes_poly(x, cand)
                period += 1
                if period > n:
                    break
            if period == n:
                gen = cand
                break
        else:
            gen = 1  # GF(2): trivial group
        self.generator = gen
        exp = np.zeros(n if n else 1, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        x = 1
        for k in range(max(n, 1)):
            exp[k] = x
            log[x] = k
            x = self._mul_codes_poly(x, gen)
        self.exp = exp
        self.log = log
        # Zech logarithms: zech[k] = log(1 + g^k)
        zech = np.full(max(n, 1), ZECH_NONE, dtype=np.int64)
        one = 1
        for k in range(n):
            s = self.add(one, int(exp[k]))
            zech[k] = ZECH_NONE if s == 0 else int(log[s])
        self.zech = zech
        self.neg_one = self.exp[n // 2] if (self.p != 2 and n) else 1
        self._ppow = [self.p ** i for i in range(self.m)]

    # -- scalar ops on codes ---------------------------------------------

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out = 0
        mul = 1
        for _ in range(self.m):
            a, ca = divmod(a, self.p)
            b, cb = divmod(b, self.p)
            out += ((ca + cb) % self.p) * mul
            mul *= self.p
        return out

    def neg(self, a):
        if self.p == 2 or a == 0:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self.mul(a, int(self.neg_one))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        n = self.order - 1
        return int(self.exp[(int(self.log[a]) + int(self.log[b])) % n])

    def inv(self, a):
        if a == 0:
            raise ZeroArgument("inverse of zero")
        n = self.order - 1
        return int(self.exp[(-int(self.log[a])) % n])

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        n = self.order - 1
        return int(self.exp[(int(self.log[a]) * e) % n]) if n else 1

    def element(self, code):
        return FieldElem(self, int(code) % self.order if code >= 0 else code % self.order)

    def from_int(self, k):
        """Image of the rational integer k under Z -> GF(p) -> GF(p^m)."""
        return int(k) % self.p

    # -- vectorized ops on numpy arrays of codes --------------------------

    def vadd(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pw in self._ppow:
            out += (((a // pw) + (b // pw)) % self.p) * pw
        return out

    def vneg(self, a):
        if self.p == 2:
            return a.copy() if isinstance(a, np.ndarray) else a
        if self.m == 1:
            return (-a) % self.p
        return self.vmul(a, np.int64(self.neg_one))

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        if np.any(nz):
            n = self.order - 1
            k = (self.log[a[nz]] + self.log[b[nz]]) % n
            out[nz] = self.exp[k]
        return out

    def matmul(self, A, B):
        """Matrix product of code matrices over this field."""
        if self.m == 1:
            return (A.astype(np.int64) @ B.astype(np.int64)) % self.p
        n, k = A.shape
        k2, r = B.shape
        assert k == k2
        out = np.zeros((n, r), dtype=np.int64)
        for t in range(k):
            col = A[:, t]
            row = B[t, :]
            if not col.any() or not row.any():
                continue
            out = self.vadd(out, self.vmul(col[:, None], row[None, :]))
        return out

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


class FieldElem:
    """Value-type wrapper around a packed element code."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = int(code)

    def coeffs(self):
        return tuple(_unpack(self.code, self.field.m, self.field.p))

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.code, other.code))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.code, other.code))

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.mul(self.code, self.field.inv(other.code)))

    def __pow__(self, e):
        return FieldElem(self.field, self.field.pow(self.code, e))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.code == other
        return self.field == other.field and self.code == other.code

    def __hash__(self):
        return hash((self.code, self.field.order))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"{self.field}:{self.code}"


@functools.lru_cache(maxsize=None)
def field_make(p, m):
    """Deterministic field constructor; repeated calls return the same spec."""
    return FieldSpec(p, m)


@functools.lru_cache(maxsize=None)
def field_with_modulus(p, m, modulus):
    return FieldSpec(p, m, modulus=list(modulus))


def frobenius(x, k):
    """x ** (p**k); k = degree is the identity."""
    f = x.field
    return FieldElem(f, f.pow(x.code, f.p ** (k % f.m) if f.m > 1 else f.p ** k))


def dlog(x):
    """Exponent e with generator**e == x for the spec's fixed generator."""
    if x.code == 0:
        raise ZeroArgument("discrete log of zero")
    return int(x.field.log[x.code])


def embed_root_of_unity(n, coeff):
    """Fixed primitive n-th root of unity g^((order-1)/n) in coeff."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return FieldElem(coeff, 1)
    if (coeff.order - 1) % n != 0:
        raise NoSuchRoot(
            f"no primitive {n}-th root of unity in {coeff}; enlarge the field")
    return FieldElem(coeff, int(coeff.exp[(coeff.order - 1) // n]))
