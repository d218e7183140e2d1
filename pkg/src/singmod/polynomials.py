"""Dense univariate polynomials over Q.

A polynomial is a list of Fractions in ascending order: c[i] is the
coefficient of x**i.  The zero polynomial is the empty list.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .exact import DomainError, FactoredRational

Poly = list  # list[Fraction], ascending


def trim(c: Sequence) -> list:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(c: Sequence) -> int:
    return len(trim(c)) - 1


def evaluate(c: Sequence, x):
    acc = 0
    for a in reversed(c):
        acc = acc * x + a
    return acc


def add(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def scale(a: Sequence, k) -> list:
    return trim([k * x for x in a])


def mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_poly(a: Sequence, b: Sequence) -> tuple[list, list]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in trim(a)]
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(r) >= len(b):
        k = r[-1] / lead
        shift = len(r) - len(b)
        q[shift] = k
        for i, y in enumerate(b):
            r[shift + i] -= k * y
        r = trim(r)
    return trim(q), r


def derivative(c: Sequence) -> list:
    return trim([i * c[i] for i in range(1, len(c))])


def gcd_poly(a: Sequence, b: Sequence) -> list:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(x) / lead for x in a]


def lagrange_interpolate(points: Sequence[tuple]) -> list:
    """Unique polynomial of degree < len(points) through the given (x, y).

    Uses Newton divided differences, then expands to the monomial basis.
    """
    if not points:
        raise DomainError("interpolation needs at least one point")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation abscissas must be distinct")
    coef = [Fraction(y) for _, y in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result: list = [coef[-1]]
    for i in range(n - 2, -1, -1):
        # result = result * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + result
        for k in range(len(result)):
            shifted[k] -= xs[i] * result[k]
        shifted[0] += coef[i]
        result = shifted
    return trim(result)


def is_integral(c: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 for x in c)


def _format_term(coef_text: str, k: int, var: str) -> str:
    mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
    if not mono:
        return coef_text
    if coef_text == "1":
        return mono
    return f"{coef_text}*{mono}"


def format_poly(c: Sequence, var: str = "x", factored: bool = False) -> str:
    """Render descending, e.g. "x^3 - 2*x + 7".

    With factored=True each coefficient is shown in prime-factored form,
    parenthesised when it is a product.
    """
    c = trim(c)
    if not c:
        return "0"
    parts = []
    for k in range(len(c) - 1, -1, -1):
        a = Fraction(c[k])
        if a == 0:
            continue
        neg = a < 0
        a = abs(a)
        if factored and a != 1:
            text = str(FactoredRational.from_fraction(a))
            if k and ("*" in text or "/" in text):
                text = f"({text})"
        else:
            text = str(a)
            if k and "/" in text:
                text = f"({text})"
        term = _format_term(text, k, var)
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts)
