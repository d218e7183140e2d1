"""Exact integer helpers: factorization, Kronecker symbols, radicals and
factored numbers.

Norms in this package are almost always smooth, so factorization is trial
division up to 10**6 followed by Brent's variant of Pollard rho.  Every
prime that comes out is checked with Miller-Rabin on a fixed set of bases,
which is a proof of primality below 3.3e24.
"""

from __future__ import annotations

import math
import random
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

TRIAL_BOUND = 10**6
DEFAULT_SEED = 0

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


SMALL_PRIMES = _sieve(TRIAL_BOUND)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite n."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, rng: random.Random, out: Counter) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] += 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split_large(r, rng, out)
        _split_large(r, rng, out)
        return
    d = _brent(n, rng)
    _split_large(d, rng, out)
    _split_large(n // d, rng, out)


def factor_counter(n: int, seed: int | None = None) -> Counter:
    """Prime -> exponent counter for |n|; n must be nonzero."""
    if n == 0:
        raise DomainError("cannot factor zero")
    n = abs(n)
    out: Counter = Counter()
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out[p] = k
    else:
        if n > 1:
            _split_large(n, random.Random(DEFAULT_SEED if seed is None else seed), out)
            return out
    if n > 1:
        out[n] += 1
    return out


def factorize(n: int, seed: int | None = None) -> "FactoredInteger":
    """Factor a nonzero integer into sign and prime powers."""
    fac = factor_counter(n, seed)
    return FactoredInteger(1 if n > 0 else -1, dict(fac))


def prime_factors(n: int) -> list[int]:
    return sorted(factor_counter(n))


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), extending Jacobi to n = 2 and n < 0."""
    if n == 0:
        raise DomainError("kronecker symbol undefined for n = 0")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol for odd positive n
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def radical(n: int) -> int:
    if n < 1:
        raise DomainError(f"radical needs a positive integer, got {n}")
    return math.prod(factor_counter(n)) if n > 1 else 1


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise DomainError("valuation of zero is infinite")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _render(factors: Mapping[int, int]) -> str:
    parts = [str(p) if e == 1 else f"{p}^{e}" for p, e in sorted(factors.items())]
    return " * ".join(parts)


@dataclass(frozen=True)
class FactoredInteger:
    sign: int
    factors: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")
        for p, e in self.factors.items():
            if e < 1:
                raise DomainError(f"exponent of {p} must be positive, got {e}")

    @classmethod
    def from_exponents(cls, exps: Mapping[int, int], sign: int = 1) -> "FactoredInteger":
        return cls(sign, {p: e for p, e in exps.items() if e})

    @property
    def value(self) -> int:
        v = self.sign
        for p, e in self.factors.items():
            v *= p**e
        return v

    def __int__(self) -> int:
        return self.value

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        merged = Counter(self.factors)
        merged.update(other.factors)
        return FactoredInteger(self.sign * other.sign, dict(merged))

    def __pow__(self, k: int) -> "FactoredInteger":
        if k < 0:
            raise DomainError("negative power of a FactoredInteger")
        return FactoredInteger(self.sign**k, {p: e * k for p, e in self.factors.items() if k})

    def __str__(self) -> str:
        body = _render(self.factors)
        if not body:
            return str(self.sign)
        return body if self.sign > 0 else "-" + body


@dataclass(frozen=True)
class FactoredRational:
    """A nonzero rational in factored form; reduced on construction."""

    numerator: FactoredInteger
    denominator: FactoredInteger = field(default_factory=lambda: FactoredInteger(1, {}))

    def __post_init__(self):
        if self.denominator.sign < 0:
            raise DomainError("denominator must be positive")
        exps = Counter(self.numerator.factors)
        exps.subtract(self.denominator.factors)
        num = {p: e for p, e in exps.items() if e > 0}
        den = {p: -e for p, e in exps.items() if e < 0}
        object.__setattr__(self, "numerator", FactoredInteger(self.numerator.sign, num))
        object.__setattr__(self, "denominator", FactoredInteger(1, den))

    @classmethod
    def from_fraction(cls, q: Fraction | int) -> "FactoredRational":
        q = Fraction(q)
        if q == 0:
            raise DomainError("zero has no factored form")
        return cls(factorize(q.numerator), factorize(q.denominator))

    @classmethod
    def from_exponents(cls, exps: Mapping[int, int], sign: int = 1) -> "FactoredRational":
        num = {p: e for p, e in exps.items() if e > 0}
        den = {p: -e for p, e in exps.items() if e < 0}
        return cls(FactoredInteger(sign, num), FactoredInteger(1, den))

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator.value, self.denominator.value)

    def exponents(self) -> dict[int, int]:
        out = dict(self.numerator.factors)
        out.update({p: -e for p, e in self.denominator.factors.items()})
        return out

    def __str__(self) -> str:
        if not self.denominator.factors:
            return str(self.numerator)
        num = str(self.numerator)
        if len(self.numerator.factors) > 1:
            num = f"({num})" if self.numerator.sign > 0 else f"-({num[1:]})"
        den = str(self.denominator)
        if len(self.denominator.factors) > 1:
            den = f"({den})"
        return f"{num} / {den}"


_FACTOR_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_factored(text: str) -> int:
    """Parse "2^6 * 3^21 * 19^4", "-7", or "14357588953446649" to an int.

    Factors are separated by `*` or `·`.
    """
    s = text.strip()
    sign = 1
    if s.startswith(("-", "+")):
        sign = -1 if s[0] == "-" else 1
        s = s[1:]
    if not s:
        raise DomainError(f"empty integer string {text!r}")
    value = 1
    for tok in re.split(r"[*·]", s):
        m = _FACTOR_TOKEN.match(tok)
        if not m:
            raise DomainError(f"cannot parse {tok.strip()!r} in {text!r}")
        value *= int(m.group(1)) ** int(m.group(2) or 1)
    return sign * value


def merge_exponents(items: Iterable[Mapping[int, int]]) -> dict[int, int]:
    total: Counter = Counter()
    for m in items:
        total.update(m)
    return {p: e for p, e in total.items() if e}
