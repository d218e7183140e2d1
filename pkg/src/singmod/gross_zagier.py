"""Norms of differences of classical singular moduli (Gross-Zagier).

For coprime fundamental discriminants -d1, -d2 the product

    prod_{x^2 + 4 n n' = d1 d2, n, n' > 0} n ** eps(n')

over all integers x (both signs) and ordered pairs (n, n') equals
|N(j(tau1) - j(tau2))| ** (8 / (w1 w2)), where w_i is the number of roots
of unity in the order.  With w = 2 for both that is the norm itself.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian

from .exact import DomainError, FactoredInteger, factor_counter, kronecker
from .quadforms import check_discriminant, is_fundamental, unit_count


class EpsilonUndefined(DomainError):
    def __init__(self, p: int, d1: int, d2: int, context: str = ""):
        self.prime = p
        msg = f"epsilon undefined at p={p} for (d1, d2) = ({d1}, {d2})"
        super().__init__(msg + (f" {context}" if context else ""))


class ConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class GZResult:
    d1: int
    d2: int
    product: FactoredInteger
    norm: FactoredInteger
    exponent_applied: Fraction


def epsilon(p: int, d1: int, d2: int) -> int:
    """eps(p) for a prime p with (d1 d2 / p) != -1."""
    if d1 % p == 0 and d2 % p == 0:
        raise DomainError(f"{p} divides both {d1} and {d2}")
    if kronecker(d1 * d2, p) == -1:
        raise EpsilonUndefined(p, d1, d2)
    if d1 % p:
        e = kronecker(-d1, p)
        if d2 % p:
            assert e == kronecker(-d2, p), (p, d1, d2)
        return e
    return kronecker(-d2, p)


def epsilon_extend(n: int, d1: int, d2: int) -> int:
    """Completely multiplicative extension of epsilon to n >= 1."""
    if n < 1:
        raise DomainError(f"epsilon_extend needs n >= 1, got {n}")
    sign = 1
    for p, k in factor_counter(n).items():
        if k % 2:
            sign *= epsilon(p, d1, d2)
        elif kronecker(d1 * d2, p) == -1:
            raise EpsilonUndefined(p, d1, d2)
    return sign


def _validate_pair(d1: int, d2: int) -> None:
    check_discriminant(d1)
    check_discriminant(d2)
    if math.gcd(d1, d2) != 1:
        raise DomainError(f"discriminants -{d1} and -{d2} are not coprime")
    for d in (d1, d2):
        if not is_fundamental(d):
            raise DomainError(f"-{d} is not a fundamental discriminant")


def _divisor_sum(m_fac: dict[int, int], d1: int, d2: int) -> Counter:
    """Exponent map of prod_{n n' = m} n ** eps(n')."""
    primes = sorted(m_fac)
    eps = {}
    for p in primes:
        try:
            eps[p] = epsilon(p, d1, d2)
        except EpsilonUndefined:
            eps[p] = None
    out: Counter = Counter()
    for exps in cartesian(*(range(m_fac[p] + 1) for p in primes)):
        sign = 1
        for p, a in zip(primes, exps):
            rest = m_fac[p] - a
            if rest and eps[p] is None:
                raise EpsilonUndefined(p, d1, d2)
            if rest % 2:
                sign *= eps[p]
        for p, a in zip(primes, exps):
            if a:
                out[p] += sign * a
    return out


def gz_norm(d1: int, d2: int) -> GZResult:
    """Absolute norm of j(tau1) - j(tau2) for CM points of discriminants -d1, -d2."""
    _validate_pair(d1, d2)
    D = d1 * d2
    total: Counter = Counter()
    r = math.isqrt(D)
    for x in range(-r, r + 1):
        if (D - x * x) % 4:
            continue
        m = (D - x * x) // 4
        if m == 0:
            continue
        try:
            total.update(_divisor_sum(dict(factor_counter(m)), d1, d2))
        except EpsilonUndefined as exc:
            raise EpsilonUndefined(exc.prime, d1, d2, f"(x={x}, m={m})") from None
    raw = {p: e for p, e in total.items() if e}
    if any(e < 0 for e in raw.values()):
        raise ConsistencyError(f"negative exponent in product for ({d1}, {d2}): {raw}")
    scale = Fraction(unit_count(d1) * unit_count(d2), 8)
    norm = {}
    for p, e in raw.items():
        q = e * scale
        if q.denominator != 1:
            raise ConsistencyError(f"non-integral exponent {q} at p={p} for ({d1}, {d2})")
        norm[p] = int(q)
    return GZResult(d1, d2, FactoredInteger(1, raw), FactoredInteger(1, norm), scale)
