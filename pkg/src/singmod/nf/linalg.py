"""Small exact matrices: integer HNF, Bareiss determinants, rational inverses.

Matrices are lists of row lists.  Dimensions here never exceed a few
dozen, so plain Python ints and Fractions are fast enough.
"""

from __future__ import annotations

import math
from fractions import Fraction


def hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by `rows`.

    Returns the nonzero rows, upper triangular with positive pivots and
    entries above each pivot reduced into [0, pivot).
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    out = []
    for col in range(ncols):
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                (nxt if r[col] else rest).append(r)
            active = nxt
        if active:
            piv = active[0]
            if piv[col] < 0:
                piv = [-a for a in piv]
            for i, r in enumerate(out):
                q = r[col] // piv[col]
                if q:
                    out[i] = [a - q * b for a, b in zip(r, piv)]
            out.append(piv)
        rows = [r for r in rest if any(r)]
    return out


def det_int(m: list[list[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_rational(m: list[list[Fraction]]) -> Fraction:
    den = 1
    for r in m:
        for x in r:
            den = math.lcm(den, Fraction(x).denominator)
    ints = [[int(Fraction(x) * den) for x in r] for r in m]
    return Fraction(det_int(ints), den ** len(m))


def inverse(m: list[list]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                k = a[i][col]
                a[i] = [x - k * y for x, y in zip(a[i], a[col])]
    return [r[n:] for r in a]


def vecmat(v: list, m: list[list]) -> list:
    """Row vector times matrix."""
    out = [0] * len(m[0])
    for x, row in zip(v, m):
        if x:
            for j, y in enumerate(row):
                out[j] += x * y
    return out


def common_denominator(rows) -> int:
    den = 1
    for r in rows:
        for x in r:
            den = math.lcm(den, Fraction(x).denominator)
    return den


def scaled(rows) -> tuple[list[list[int]], int]:
    """(M, d) with M integral and rows == M / d."""
    d = common_denominator(rows)
    return [[int(Fraction(x) * d) for x in r] for r in rows], d


def inverse_scaled(m) -> tuple[list[list[int]], int]:
    """Inverse of m as an integer matrix over a common denominator."""
    return scaled(inverse(m))
