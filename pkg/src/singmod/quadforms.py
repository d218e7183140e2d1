"""Class numbers of imaginary quadratic orders by reduced-form enumeration."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact import DomainError, factor_counter

# Discriminants -d of the imaginary quadratic fields of class number one,
# which are exactly the CM points with rational j-invariant.
RATIONAL_MODULI_DISCRIMINANTS = (3, 4, 7, 8, 11, 19, 43, 67, 163)


@dataclass(frozen=True)
class QuadraticOrderData:
    d: int
    class_number: int
    unit_count: int
    reduced_forms: tuple[tuple[int, int, int], ...]


def check_discriminant(d: int) -> None:
    if not isinstance(d, int) or d <= 0 or (-d) % 4 not in (0, 1):
        raise DomainError(f"-{d} is not an imaginary quadratic discriminant")


def is_fundamental(d: int) -> bool:
    """True if -d is the discriminant of a maximal order."""
    check_discriminant(d)
    if d % 4 == 3:
        return all(e == 1 for e in factor_counter(d).values())
    if d % 4 == 0:
        m = d // 4
        if m % 4 not in (1, 2):
            return False
        return all(e == 1 for e in factor_counter(m).values())
    return False


def unit_count(d: int) -> int:
    """Number of roots of unity in the order of discriminant -d."""
    check_discriminant(d)
    return {3: 6, 4: 4}.get(d, 2)


def reduced_forms(d: int) -> list[tuple[int, int, int]]:
    """Primitive reduced forms (a, b, c) with b^2 - 4ac = -d.

    Reduced means |b| <= a <= c, with b >= 0 when |b| = a or a = c.
    """
    check_discriminant(d)
    forms = []
    bmax = math.isqrt(d // 3)
    for b in range(-bmax, bmax + 1):
        if (b - d) % 2:
            continue
        ac = (b * b + d) // 4
        a = max(abs(b), 1)
        while a * a <= ac:
            if ac % a == 0:
                c = ac // a
                if not (b < 0 and (abs(b) == a or a == c)):
                    if math.gcd(math.gcd(a, b), c) == 1:
                        forms.append((a, b, c))
            a += 1
    forms.sort()
    return forms


def class_number(d: int) -> QuadraticOrderData:
    forms = tuple(reduced_forms(d))
    return QuadraticOrderData(d, len(forms), unit_count(d), forms)
