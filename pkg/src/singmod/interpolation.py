"""Minimal polynomials of singular moduli from absolute norm values.

If r is rational and alpha has minimal polynomial M of degree h, then
|N(r - alpha)| = |M(r)|.  Knowing |M(r_i)| at h + 1 rational points fixes M
up to the signs of the values; the monic requirement removes the ambiguity.
Classically the values come from Gross-Zagier norms against the nine
rational j-invariants; on the Shimura curve X*_6 they come from a data file.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from typing import Sequence

from . import polynomials as P
from .exact import DomainError
from .gross_zagier import gz_norm
from .quadforms import class_number, is_fundamental

log = logging.getLogger(__name__)


class ReconstructionError(DomainError):
    """No monic candidate, or more than one, survived the sign search."""


class CapabilityError(DomainError):
    """Not enough rational evaluation points for the requested degree."""


class CoefficientFilter(enum.Enum):
    INTEGER = "integer"
    RATIONAL = "rational"


@dataclass(frozen=True)
class EvaluationPoint:
    x: Fraction
    y: Fraction
    source_discriminant: int = 0

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        if self.y <= 0:
            raise DomainError(f"norm value must be positive, got {self.y}")


@dataclass(frozen=True)
class MonicCandidate:
    """A monic polynomial and the signs that made it pass through the data.

    `coefficients` is ascending (constant term first, leading 1 last);
    `sign_vector[i]` is the sign attached to `points[i]`.
    """

    coefficients: tuple[Fraction, ...]
    sign_vector: tuple[int, ...]
    points: tuple[EvaluationPoint, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return P.evaluate(self.coefficients, x)

    def descending(self) -> list[Fraction]:
        return list(reversed(self.coefficients))

    def format(self, factored: bool = False, var: str = "x") -> str:
        return P.format_poly(self.coefficients, var, factored)

    def signs_text(self) -> str:
        return "(" + ",".join("+" if s > 0 else "-" for s in self.sign_vector) + ")"


def _passes(coeffs: Sequence[Fraction], filt: CoefficientFilter) -> bool:
    return filt is CoefficientFilter.RATIONAL or P.is_integral(coeffs)


def sign_search_monic(
    points: Sequence[EvaluationPoint],
    degree: int,
    coefficient_filter: CoefficientFilter = CoefficientFilter.RATIONAL,
) -> list[MonicCandidate]:
    """All monic degree-`degree` polynomials with |M(x_i)| = y_i.

    The first degree + 1 points are fitted; any further points only verify.
    Sign vectors are searched modulo global negation (2**degree fits): a fit
    whose leading coefficient is -1 is negated along with its signs.  With
    exactly `degree` points the monic completion of each of the 2**degree
    sign choices is taken instead, which usually leaves several survivors.
    """
    h = degree
    if h < 0:
        raise DomainError("degree must be non-negative")
    if len(points) < h:
        raise CapabilityError(f"need at least {h} points for degree {h}, got {len(points)}")
    xs = [pt.x for pt in points]
    if len(set(xs)) != len(xs):
        raise DomainError("evaluation abscissas must be distinct")

    fit = list(points[: h + 1])
    extra = list(points[h + 1 :])
    survivors = []
    if len(fit) == h + 1:
        vectors = ((1,) + rest for rest in cartesian((1, -1), repeat=h))
    else:
        vectors = cartesian((1, -1), repeat=h)
    for signs in vectors:
        coeffs = P.lagrange_interpolate([(pt.x, s * pt.y) for pt, s in zip(fit, signs)])
        if len(fit) == h:
            vanishing = [Fraction(1)]
            for pt in fit:
                vanishing = P.mul(vanishing, [-pt.x, Fraction(1)])
            coeffs = P.add(coeffs, vanishing)
        if P.degree(coeffs) != h:
            continue
        lead = coeffs[h]
        if lead == -1:
            coeffs = P.scale(coeffs, -1)
            signs = tuple(-s for s in signs)
        elif lead != 1:
            continue
        if not _passes(coeffs, coefficient_filter):
            continue
        if any(abs(P.evaluate(coeffs, pt.x)) != pt.y for pt in extra):
            continue
        full_signs = tuple(signs) + tuple(
            1 if P.evaluate(coeffs, pt.x) > 0 else -1 for pt in extra
        )
        survivors.append(MonicCandidate(tuple(Fraction(c) for c in coeffs), full_signs, tuple(points)))
    survivors.sort(key=lambda m: m.sign_vector, reverse=True)
    return survivors


def unique_candidate(candidates: list[MonicCandidate], what: str) -> MonicCandidate:
    if not candidates:
        raise ReconstructionError(f"no monic candidate for {what}")
    if len(candidates) > 1:
        shown = ", ".join(c.signs_text() for c in candidates[:8])
        raise ReconstructionError(
            f"{len(candidates)} monic candidates for {what} (sign vectors {shown}); more data needed"
        )
    return candidates[0]


# Rational j-invariants, in the order the discriminants are customarily
# listed (even ones first).  The order fixes which points are used.
CLASSICAL_ORDER = (4, 8, 3, 7, 11, 19, 43, 67, 163)
_FIXED_J = {3: 0, 4: 12**3, 7: -(15**3), 8: 20**3, 11: -(32**3), 19: -(96**3)}


@lru_cache(maxsize=None)
def derive_rational_j(d: int) -> Fraction:
    """j-invariant of the CM point of discriminant -d for the class number one d.

    The six small values are normalisation constants; j(-43), j(-67) and
    j(-163) are pinned down by the two norms |j - 1728| and |j - 8000|.
    """
    if d not in CLASSICAL_ORDER:
        raise DomainError(f"-{d} does not have a rational j-invariant")
    if d in _FIXED_J:
        return Fraction(_FIXED_J[d])
    n4 = gz_norm(d, 4).norm.value
    n8 = gz_norm(d, 8).norm.value
    first = {1728 + n4, 1728 - n4}
    second = {8000 + n8, 8000 - n8}
    common = first & second
    if len(common) != 1:
        raise RuntimeError(f"inconsistent sign resolution for j(-{d}): {sorted(common)}")
    return Fraction(common.pop())


def rational_moduli_table() -> dict[int, Fraction]:
    return {d: derive_rational_j(d) for d in CLASSICAL_ORDER}


def classical_points(d0: int, count: int) -> list[EvaluationPoint]:
    pts = []
    for d in CLASSICAL_ORDER:
        if len(pts) == count:
            break
        if d == d0 or math.gcd(d, d0) != 1:
            continue
        y = gz_norm(d0, d).norm.value
        pts.append(EvaluationPoint(derive_rational_j(d), Fraction(y), d))
    return pts


def classical_min_poly(d0: int) -> MonicCandidate:
    """Monic integer minimal polynomial of j(tau) for tau of discriminant -d0."""
    data = class_number(d0)
    if not is_fundamental(d0):
        raise DomainError(f"-{d0} is not a fundamental discriminant")
    h = data.class_number
    pts = classical_points(d0, len(CLASSICAL_ORDER))
    if len(pts) < h + 1:
        raise CapabilityError(
            f"h(-{d0}) = {h} needs {h + 1} rational moduli coprime to {d0}, only {len(pts)} exist"
        )
    used = h + 1
    while True:
        cands = sign_search_monic(pts[:used], h, CoefficientFilter.INTEGER)
        if len(cands) != 1 and used < len(pts):
            log.info("d0=%d: %d candidates with %d points, adding one", d0, len(cands), used)
            used += 1
            continue
        break
    best = unique_candidate(cands, f"j of discriminant -{d0}")
    if used < len(pts):
        extra = pts[used]
        if abs(best(extra.x)) != extra.y:
            raise ReconstructionError(f"candidate fails verification at discriminant -{extra.source_discriminant}")
    return best


def shimura_min_poly(dataset) -> MonicCandidate:
    """Monic rational minimal polynomial of t(s_d') from a ShimuraNormFile.

    Each record gives zeta_d = t(s_d) and |t_d(s_d')| = |M(zeta_d)|, where
    t_d = zeta_d - t.
    """
    pts = [EvaluationPoint(p.zeta, p.norm, p.d) for p in dataset.points]
    cands = sign_search_monic(pts, dataset.degree, CoefficientFilter.RATIONAL)
    return unique_candidate(cands, f"t(s_{dataset.cm_discriminant}) on X*_{dataset.curve_discriminant}")
