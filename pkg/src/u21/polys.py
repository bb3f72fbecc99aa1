"""Dense univariate polynomials over a FieldSpec.

Coefficient lists are little-endian codes with no trailing zeros; the zero
polynomial is [].  Factorization is squarefree decomposition followed by
distinct-degree and Cantor-Zassenhaus equal-degree splitting (with the
trace-map variant in characteristic 2), driven by a caller-supplied RNG so
results are reproducible.
"""

from __future__ import annotations


def trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def padd(F, f, g):
    n = max(len(f), len(g))
    out = [0] * n
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out[i] = F.add(a, b)
    return trim(out)


def pneg(F, f):
    return [F.neg(c) for c in f]


def psub(F, f, g):
    return padd(F, f, pneg(F, g))


def pmul(F, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def pscale(F, c, f):
    if c == 0:
        return []
    return trim([F.mul(c, a) for a in f])


def pdivmod(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv_lead = F.inv(g[-1])
    q = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        c = F.mul(f[-1], inv_lead)
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            if b:
                f[shift + i] = F.sub(f[shift + i], F.mul(c, b))
        trim(f)
    return trim(q), f


def pmod(F, f, g):
    return pdivmod(F, f, g)[1]


def monic(F, f):
    if not f:
        return f
    return pscale(F, F.inv(f[-1]), f)


def pgcd(F, f, g):
    f, g = list(f), list(g)
    while g:
        f, g = g, pmod(F, f, g)
    return monic(F, f)


def ppowmod(F, f, e, mod):
    result = [1]
    base = pmod(F, f, mod)
    while e > 0:
        if e & 1:
            result = pmod(F, pmul(F, result, base), mod)
        base = pmod(F, pmul(F, base, base), mod)
        e >>= 1
    return result


def pderiv(F, f):
    out = []
    for i in range(1, len(f)):
        out.append(F.mul(f[i], F.from_int(i)))
    return trim(out)


def peval_scalar(F, f, x):
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def _pth_root(F, f):
    """For f = h(x^p), return h; coefficient roots via Frobenius inverse."""
    p = F.p
    out = []
    for i in range(0, len(f), p):
        c = f[i]
        # c^(p^(m-1)) is the p-th root in GF(p^m)
        out.append(F.pow(c, p ** (F.m - 1)) if F.m > 1 else c)
    return trim(out)


def squarefree_decomposition(F, f):
    """Return list of (squarefree factor, multiplicity), f monic."""
    out = []
    f = monic(F, list(f))
    mult_base = 1
    while len(f) > 1:
        df = pderiv(F, f)
        if not df:
            f = _pth_root(F, f)
            mult_base *= F.p
            continue
        c = pgcd(F, f, df)
        w = pdivmod(F, f, c)[0]
        i = 1
        while len(w) > 1:
            y = pgcd(F, w, c)
            z = pdivmod(F, w, y)[0]
            if len(z) > 1:
                out.append((z, i * mult_base))
            w = y
            c = pdivmod(F, c, y)[0]
            i += 1
        f = c
    return out


def _distinct_degree(F, f):
    """f squarefree monic; return list of (product-of-deg-d-factors, d)."""
    q = F.order
    out = []
    x = [0, 1]
    h = list(x)
    rest = list(f)
    d = 0
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = ppowmod(F, h, q, rest)
        g = pgcd(F, psub(F, h, x), rest)
        if len(g) > 1:
            out.append((g, d))
            rest = pdivmod(F, rest, g)[0]
            h = pmod(F, h, rest)
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _equal_degree_split(F, f, d, rng):
    """Split squarefree monic f, all of whose factors have degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    q = F.order
    while True:
        h = [rng.randrange(q) for _ in range(n)]
        trim(h)
        if len(h) < 2:
            continue
        if F.p == 2:
            # trace map over GF(2) down from GF(q^d)
            t = list(h)
            acc = list(h)
            e = F.m * d
            for _ in range(e - 1):
                t = pmod(F, pmul(F, t, t), f)
                acc = padd(F, acc, t)
            g = pgcd(F, acc, f)
        else:
            e = (q ** d - 1) // 2
            t = ppowmod(F, h, e, f)
            g = pgcd(F, psub(F, t, [1]), f)
        if 0 < len(g) - 1 < n:
            rest = pdivmod(F, f, g)[0]
            return _equal_degree_split(F, g, d, rng) + _equal_degree_split(F, rest, d, rng)


def factor(F, f, rng):
    """Full factorization of f; returns sorted list of (monic irreducible, mult)."""
    factors = {}
    for sqf, mult in squarefree_decomposition(F, f):
        for block, d in _distinct_degree(F, sqf):
            for irr in _equal_degree_split(F, block, d, rng):
                key = tuple(irr)
                factors[key] = factors.get(key, 0) + mult
    return sorted(((list(k), m) for k, m in factors.items()),
                  key=lambda t: (len(t[0]), t[0]))


def roots(F, f, rng):
    """Roots in F with multiplicity, via the linear factors."""
    out = []
    for irr, mult in factor(F, f, rng):
        if len(irr) == 2:
            out.extend([F.neg(F.mul(irr[0], F.inv(irr[1])))] * mult)
    return out
