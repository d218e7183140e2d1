"""Infinite places: |g(x)| per embedding with certified error bounds.

Working precision is raised until every requested value meets its
relative tolerance, so the printed digits can be trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import mpmath

from ..exact import DomainError
from .embeddings import CertificationError, archimedean_places, evaluate_with_bound

DEFAULT_PRECISION = 1e-20
MAX_DPS = 4000


@dataclass(frozen=True)
class PlaceValue:
    """|g(x)| at one archimedean place, with an absolute error bound."""

    value: mpmath.mpf
    error: mpmath.mpf
    multiplicity: int

    @property
    def norm(self) -> mpmath.mpf:
        """||x||_v = |g(x)|^e."""
        return self.value**self.multiplicity

    @property
    def log_norm(self) -> mpmath.mpf:
        return self.multiplicity * mpmath.log(self.value)

    @property
    def log_error(self) -> mpmath.mpf:
        """Bound on the error of log_norm."""
        return self.multiplicity * self.error / (self.value - self.error)


def _start_dps(K, elements, precision) -> int:
    digits = max(len(str(abs(c))) for c in K.poly)
    for x in elements:
        for a in x.coeffs:
            digits = max(digits, len(str(a.numerator)), len(str(a.denominator)))
    target = int(-mpmath.log10(precision)) + 1 if precision < 1 else 1
    return 30 + 2 * digits + target


def _places(K, dps):
    def compute():
        with mpmath.workdps(dps):
            return archimedean_places(K.poly, dps, K.signature[0])

    return K.cached(("places", dps), compute)


def place_values(K, elements: Sequence, precision: float = DEFAULT_PRECISION) -> list[list[PlaceValue]]:
    """For each archimedean place (real ones first), the values of each element.

    Every value v carries an error bound err with err <= precision * v.
    """
    for x in elements:
        if x.is_zero():
            raise DomainError("infinite norm of zero")
    dps = _start_dps(K, elements, precision)
    tol = mpmath.mpf(precision)
    while dps <= MAX_DPS:
        try:
            places = _places(K, dps)
        except CertificationError:
            dps *= 2
            continue
        with mpmath.workdps(dps):
            table = []
            ok = True
            for pl in places:
                row = []
                for x in elements:
                    v, err = evaluate_with_bound(x.coeffs, pl.disc, dps)
                    if err >= v * tol:
                        ok = False
                    row.append(PlaceValue(+v, +err, pl.multiplicity))
                table.append(row)
        if ok:
            return table
        dps *= 2
    raise CertificationError(f"could not reach relative precision {precision} below {MAX_DPS} digits")


def infinite_norms(K, x, precision: float = DEFAULT_PRECISION) -> list[PlaceValue]:
    """||x||_v for every infinite place, with certified relative error."""
    return [row[0] for row in place_values(K, [x], precision)]
