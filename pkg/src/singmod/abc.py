"""abc-ratios: alpha over Q and the algebraic gamma over a number field.

For a + b + c = 0 in K,

    H_K = prod_v max(||a||_v, ||b||_v, ||c||_v)
    rad_K = prod |P| over primes P where v_P(a), v_P(b), v_P(c) differ
    gamma = ln H_K / (ln |D_K| + ln rad_K)

with ||x||_P = |P|^(-v_P(x)) and ||x||_v = |g(x)|^e at an embedding g
(e = 2 for complex ones).  The finite part of ln H_K is an exact integer
combination of logs of primes; the infinite part carries a certified bound.
"""

from __future__ import annotations

import csv
import enum
import io
import logging
import math
import statistics
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .exact import DomainError, FactoredInteger, factor_counter, radical
from .nf.field import FieldElement, NumberField, build_field
from .nf.places import place_values
from .nf.primes import PrimeIdeal, split_prime, valuation

log = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-5
WORK_DPS = 50
CSV_HEADER = ["discriminant", "curve", "degree", "gamma", "lnH", "lnRad", "lnDisc"]


class DegenerateTripleError(DomainError):
    pass


# ---- rational triples ----------------------------------------------------


@dataclass(frozen=True)
class RationalTriple:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise DomainError("a and b must be positive integers")
        if math.gcd(self.a, self.b) != 1:
            raise DomainError(f"gcd({self.a}, {self.b}) != 1")

    @property
    def c(self) -> int:
        return self.a + self.b

    def __iter__(self):
        return iter((self.a, self.b, self.c))


def alpha(a: int, b: int, coprime: bool = True) -> float:
    """ln(c) / ln(rad(abc)) for c = a + b."""
    if coprime:
        RationalTriple(a, b)
    elif a < 1 or b < 1:
        raise DomainError("a and b must be positive integers")
    c = a + b
    r = radical(a * b * c)
    if r == 1:
        raise DomainError("rad(abc) = 1")
    with mpmath.workdps(WORK_DPS):
        return float(mpmath.log(c) / mpmath.log(r))


@dataclass(frozen=True)
class MedianResult:
    median: float
    count: int
    best: tuple[int, int, int]
    best_alpha: float


def median_alpha_sweep(bound: int, coprime: bool = True, ordered: bool = False) -> MedianResult:
    """Median of alpha over 1 <= a, b <= bound.

    By default a <= b and gcd(a, b) = 1; `ordered` counts (a, b) and (b, a)
    separately and `coprime=False` keeps every pair.
    """
    if bound < 2:
        raise DomainError("bound must be at least 2")
    rads = [0] + [radical(n) for n in range(1, 2 * bound + 1)]
    values = []
    best, best_val = None, -1.0
    for a in range(1, bound + 1):
        for b in range(1 if ordered else a, bound + 1):
            g = math.gcd(a, b)
            if coprime and g != 1:
                continue
            c = a + b
            r = radical(rads[a] * rads[b] * rads[c])
            if r == 1:
                continue
            v = math.log(c) / math.log(r)
            values.append(v)
            if v > best_val:
                best, best_val = (a, b, c), v
    return MedianResult(statistics.median(values), len(values), best, best_val)


# ---- field triples -------------------------------------------------------


@dataclass(frozen=True)
class FieldTriple:
    a: FieldElement
    b: FieldElement
    c: FieldElement

    def __post_init__(self):
        K = self.a.field
        if self.b.field != K or self.c.field != K:
            raise DomainError("triple entries lie in different fields")
        for name in "abc":
            if getattr(self, name).is_zero():
                raise DegenerateTripleError(f"{name} = 0")
        if not (self.a + self.b + self.c).is_zero():
            raise DomainError("a + b + c != 0")

    @property
    def field(self) -> NumberField:
        return self.a.field

    def __iter__(self):
        return iter((self.a, self.b, self.c))


@dataclass(frozen=True)
class PrimeContribution:
    ideal: PrimeIdeal
    valuations: tuple[int, int, int]

    @property
    def qualifies(self) -> bool:
        return len(set(self.valuations)) > 1


@dataclass(frozen=True)
class AbcReport:
    height_log: float
    height_error: float
    radical: FactoredInteger
    radical_log: float
    discriminant: int
    discriminant_log: float
    gamma: float
    gamma_low: float
    gamma_high: float
    primes: list = field(default_factory=list)

    @property
    def width(self) -> float:
        return self.gamma_high - self.gamma_low


def _integral_split(K: NumberField, x: FieldElement) -> tuple[int, int]:
    """(|N(y)|, d) with x = y / d, y in O_K."""
    coords = K.maximal_order.coords(x.coeffs)
    d = 1
    for c in coords:
        d = math.lcm(d, c.denominator)
    ny = x.norm() * d**K.degree
    assert ny.denominator == 1
    return abs(int(ny)), d


def candidate_primes(t: FieldTriple, seed: int | None = None) -> list[int]:
    """Rational primes below every P where some entry has nonzero valuation."""
    K = t.field
    ps: set[int] = set()
    for x in t:
        ny, d = _integral_split(K, x)
        ps.update(factor_counter(ny, seed))
        ps.update(factor_counter(d, seed))
    return sorted(ps)


def finite_contributions(t: FieldTriple, seed: int | None = None) -> list[PrimeContribution]:
    K = t.field
    out = []
    for p in candidate_primes(t, seed):
        for P in split_prime(K, p):
            vals = tuple(valuation(K, P, x) for x in t)
            out.append(PrimeContribution(P, vals))
    return out


def radical_k(t: FieldTriple, seed: int | None = None) -> FactoredInteger:
    exps: dict[int, int] = {}
    for pc in finite_contributions(t, seed):
        if pc.qualifies:
            exps[pc.ideal.p] = exps.get(pc.ideal.p, 0) + pc.ideal.f
    return FactoredInteger.from_exponents(exps)


def _infinite_height(K, t: FieldTriple, precision: float):
    """Sum over infinite places of ln max ||.||_v, and an error bound."""
    total = mpmath.mpf(0)
    err = mpmath.mpf(0)
    for row in place_values(K, list(t), precision):
        top = max(row, key=lambda pv: pv.value)
        total += top.log_norm
        err += top.log_error
    return total, err


def gamma(t: FieldTriple, tolerance: float = DEFAULT_TOLERANCE, seed: int | None = None) -> AbcReport:
    """Certified algebraic abc-ratio of the triple."""
    K = t.field
    contribs = finite_contributions(t, seed)
    height_exps: dict[int, int] = {}
    rad_exps: dict[int, int] = {}
    for pc in contribs:
        p, f = pc.ideal.p, pc.ideal.f
        height_exps[p] = height_exps.get(p, 0) - f * min(pc.valuations)
        if pc.qualifies:
            rad_exps[p] = rad_exps.get(p, 0) + f
    rad = FactoredInteger.from_exponents(rad_exps)
    D = K.discriminant
    precision = min(1e-20, tolerance * 1e-3)
    with mpmath.workdps(WORK_DPS):
        fin = sum((k * mpmath.log(p) for p, k in height_exps.items()), mpmath.mpf(0))
        ln_rad = sum((k * mpmath.log(p) for p, k in rad_exps.items()), mpmath.mpf(0))
        ln_disc = mpmath.log(abs(D))
        den = ln_disc + ln_rad
        if den <= 0:
            raise DomainError("ln|D_K| + ln rad_K = 0; gamma undefined")
        slack = mpmath.mpf(10) ** (-WORK_DPS + 10) * (1 + abs(fin) + den)
        while True:
            inf, inf_err = _infinite_height(K, t, precision)
            h = fin + inf
            herr = inf_err + slack
            lo = (h - herr) / (den + slack)
            hi = (h + herr) / (den - slack)
            if hi - lo <= tolerance or precision < 1e-200:
                break
            precision *= 1e-10
        mid = (lo + hi) / 2
        return AbcReport(
            height_log=float(h),
            height_error=float(herr),
            radical=rad,
            radical_log=float(ln_rad),
            discriminant=D,
            discriminant_log=float(ln_disc),
            gamma=float(mid),
            gamma_low=float(lo),
            gamma_high=float(hi),
            primes=contribs,
        )


def rational_field_triple(a: int, b: int) -> FieldTriple:
    """(a, b, -(a+b)) embedded in the degree-1 field Q."""
    Q = NumberField([0, 1], var="x")
    return FieldTriple(Q.element([a]), Q.element([b]), Q.element([-(a + b)]))


def record_triple() -> FieldTriple:
    """(w, (w+1)^10 (w-1), -2^9 (w+1)^5) with w^2 - w - 3 = 0."""
    K = NumberField([-3, -1, 1], var="w")
    w = K.theta
    return FieldTriple(w, (w + 1) ** 10 * (w - 1), -(2**9) * (w + 1) ** 5)


# ---- singular moduli -----------------------------------------------------


class Curve(enum.Enum):
    CLASSICAL = "classical"
    SHIMURA6 = "shimura6"

    @property
    def special_value(self) -> int:
        """The distinguished nonzero finite value N used in (alpha, N - alpha, -N)."""
        return 1728 if self is Curve.CLASSICAL else 1


def singular_moduli_triple(min_poly: Sequence, curve: Curve) -> FieldTriple:
    """(alpha, N - alpha, -N) for a root alpha of the given minimal polynomial.

    `min_poly` is ascending monic rational coefficients or a MonicCandidate.
    """
    coeffs = getattr(min_poly, "coefficients", min_poly)
    K, a = build_field(list(coeffs), var="theta")
    N = curve.special_value
    b = N - a
    if a.is_zero() or b.is_zero():
        raise DegenerateTripleError(f"singular modulus equals {0 if a.is_zero() else N}; triple has a zero entry")
    return FieldTriple(a, b, K.element([-N]))


# ---- sweeps --------------------------------------------------------------


@dataclass(frozen=True)
class SweepItem:
    discriminant: int | None
    curve: Curve
    coefficients: tuple | None = None
    error: str | None = None


def _fmt(x: float, digits: int = 6) -> str:
    return f"{x:.{digits}f}"


def gamma_sweep_rows(items: Iterable[SweepItem], tolerance: float = 1e-8, seed: int | None = None) -> list[dict]:
    rows = []
    for it in items:
        row = {"discriminant": "" if it.discriminant is None else str(it.discriminant), "curve": it.curve.value}
        if it.error is None:
            try:
                t = singular_moduli_triple(it.coefficients, it.curve)
                rep = gamma(t, tolerance, seed)
                row.update(
                    degree=str(len(it.coefficients) - 1),
                    gamma=_fmt(rep.gamma),
                    lnH=_fmt(rep.height_log),
                    lnRad=_fmt(rep.radical_log),
                    lnDisc=_fmt(rep.discriminant_log),
                )
            except DomainError as exc:
                log.warning("discriminant %s: %s", it.discriminant, exc)
                row["error"] = str(exc)
        else:
            row["error"] = it.error
        if it.coefficients is not None:
            row.setdefault("degree", str(len(it.coefficients) - 1))
        row["_key"] = (
            it.coefficients is None,
            len(it.coefficients) if it.coefficients is not None else 0,
            tuple(reversed(it.coefficients)) if it.coefficients is not None else (),
            it.curve.value,
            it.discriminant or 0,
        )
        rows.append(row)
    rows.sort(key=lambda r: r["_key"])
    for r in rows:
        del r["_key"]
    return rows


def gamma_sweep_csv(items: Iterable[SweepItem], tolerance: float = 1e-8, seed: int | None = None) -> str:
    """CSV with one row per singular modulus, ordered by degree then coefficients.

    An `error` column is appended only if some row failed.
    """
    rows = gamma_sweep_rows(items, tolerance, seed)
    header = list(CSV_HEADER)
    if any("error" in r for r in rows):
        header.append("error")
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n", restval="")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
