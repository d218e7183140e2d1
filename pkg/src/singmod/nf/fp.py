"""Polynomials and linear algebra over F_p.

Polynomials are ascending lists of ints in [0, p).  Factoring is
squarefree decomposition, distinct-degree, then Cantor-Zassenhaus equal
degree splitting with a seeded generator so results are reproducible.
"""

from __future__ import annotations

import random


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def reduce(f, p):
    return trim([c % p for c in f])


def add(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)])


def sub(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return reduce(out, p)


def divmod_fp(f, g, p):
    g = trim(g)
    if not g:
        raise ZeroDivisionError("division by zero polynomial mod p")
    inv = pow(g[-1], -1, p)
    r = reduce(f, p)
    q = [0] * max(len(r) - len(g) + 1, 0)
    while len(r) >= len(g):
        k = r[-1] * inv % p
        shift = len(r) - len(g)
        q[shift] = k
        for i, c in enumerate(g):
            r[shift + i] = (r[shift + i] - k * c) % p
        r = trim(r)
    return trim(q), r


def monic(f, p):
    f = trim(f)
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def gcd(f, g, p):
    f, g = reduce(f, p), reduce(g, p)
    while g:
        f, g = g, divmod_fp(f, g, p)[1]
    return monic(f, p)


def powmod(base, e, mod, p):
    result = [1]
    base = divmod_fp(base, mod, p)[1]
    while e:
        if e & 1:
            result = divmod_fp(mul(result, base, p), mod, p)[1]
        base = divmod_fp(mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def derivative(f, p):
    return reduce([i * f[i] for i in range(1, len(f))], p)


def _pth_root(f, p):
    # f(x) = g(x^p) with coefficients in F_p, so g is the p-th root
    return trim([f[i] for i in range(0, len(f), p)])


def squarefree(f, p):
    """Squarefree decomposition of a monic f: list of (g, multiplicity)."""
    out = []
    f = monic(f, p)
    if len(f) <= 1:
        return out
    df = derivative(f, p)
    if not df:
        return [(g, m * p) for g, m in squarefree(_pth_root(f, p), p)]
    c = gcd(f, df, p)
    w = divmod_fp(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = divmod_fp(w, y, p)[0]
        if len(z) > 1:
            out.append((monic(z, p), i))
        i += 1
        w = y
        c = divmod_fp(c, y, p)[0]
    if len(c) > 1:
        out.extend((g, m * p) for g, m in squarefree(_pth_root(c, p), p))
    return out


def distinct_degree(f, p):
    """Split a squarefree monic f into products of equal-degree irreducibles."""
    out = []
    h = [0, 1]
    d = 0
    f = monic(f, p)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_fp(f, g, p)[0]
            h = divmod_fp(h, f, p)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(f, d, p, rng):
    """Irreducible factors of f, all of which have degree d."""
    n = len(f) - 1
    if n == d:
        return [monic(f, p)]
    while True:
        a = reduce([rng.randrange(p) for _ in range(n)], p)
        if len(a) < 2:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t, s = a, a
            for _ in range(d - 1):
                s = divmod_fp(mul(s, s, p), f, p)[1]
                t = add(t, s, p)
            g = gcd(f, t, p)
        else:
            g = gcd(f, sub(powmod(a, (p**d - 1) // 2, f, p), [1], p), p)
        if 1 < len(g) < len(f):
            q = divmod_fp(f, g, p)[0]
            return equal_degree(g, d, p, rng) + equal_degree(q, d, p, rng)


def factor(f, p, seed: int = 0):
    """Monic irreducible factorization of f mod p: sorted list of (g, e)."""
    f = monic(reduce(f, p), p)
    if not f:
        raise ZeroDivisionError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = []
    for g, e in squarefree(f, p):
        for h, d in distinct_degree(g, p):
            for irr in equal_degree(h, d, p, rng):
                out.append((irr, e))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return out


# ---- linear algebra over F_p; vectors are lists of ints -----------------


def rref(rows, p):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [[c % p for c in r] for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [c * inv % p for c in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                k = rows[i][col]
                rows[i] = [(a - k * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def left_kernel(rows, p):
    """Basis of {c : sum_i c_i rows[i] = 0 (mod p)}."""
    m = len(rows)
    if m == 0:
        return []
    width = len(rows[0])
    aug = [list(r) + [1 if j == i else 0 for j in range(m)] for i, r in enumerate(rows)]
    red, _ = rref(aug, p)
    return [r[width:] for r in red if all(c == 0 for c in r[:width])]


def solve_in_span(basis_rows, v, p):
    """Coordinates c with sum c_i basis_rows[i] = v, or None."""
    ker = left_kernel(list(basis_rows) + [list(v)], p)
    for k in ker:
        if k[-1] % p:
            inv = pow(k[-1], -1, p)
            return [(-c * inv) % p for c in k[:-1]]
    return None
