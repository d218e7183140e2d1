"""Real root isolation (Sturm) and certified complex embeddings.

Real roots are isolated in exact rational intervals with Sturm sequences.
All roots are also approximated with mpmath and certified: around an
approximation z of a root of a degree-n polynomial f there is a root within
n |f(z) / f'(z)|, and once those n discs are pairwise disjoint each holds
exactly one root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .. import polynomials as P
from ..exact import DomainError, factor_counter


class CertificationError(RuntimeError):
    pass


def _squarefree(poly: Sequence) -> list[Fraction]:
    f = P.trim([Fraction(c) for c in poly])
    g = P.gcd_poly(f, P.derivative(f))
    if len(g) > 1:
        f = P.divmod_poly(f, g)[0]
    return f


def sturm_sequence(poly: Sequence) -> list[list[Fraction]]:
    f = _squarefree(poly)
    seq = [f, P.derivative(f)]
    while len(seq[-1]) > 1:
        r = P.divmod_poly(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(P.scale(r, -1))
    return seq


def _variations(seq, x: Fraction) -> int:
    signs = []
    for s in seq:
        v = P.evaluate(s, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def root_bound(poly: Sequence) -> Fraction:
    """Cauchy bound: every root has absolute value < the result."""
    c = P.trim([Fraction(x) for x in poly])
    lead = abs(c[-1])
    return 1 + max((abs(a) / lead for a in c[:-1]), default=Fraction(0))


def count_real_roots(poly: Sequence, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """Number of distinct real roots in (lo, hi] (whole line by default)."""
    seq = sturm_sequence(poly)
    if len(seq[0]) <= 1:
        return 0
    b = root_bound(poly)
    lo = -b if lo is None else Fraction(lo)
    hi = b if hi is None else Fraction(hi)
    return _variations(seq, lo) - _variations(seq, hi)


def isolate_real_roots(poly: Sequence) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi], one per distinct real root, ascending."""
    seq = sturm_sequence(poly)
    if len(seq[0]) <= 1:
        return []
    b = root_bound(poly)
    out = []
    stack = [(-b, b, _variations(seq, -b), _variations(seq, b))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        k = vlo - vhi
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = _variations(seq, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out.sort()
    return out


def refine_root(poly: Sequence, interval: tuple[Fraction, Fraction], width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] until hi - lo <= width."""
    seq = sturm_sequence(poly)
    f = seq[0]
    lo, hi = interval
    if P.evaluate(f, hi) == 0:
        return hi, hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        if P.evaluate(f, mid) == 0:
            return mid, mid
        if _variations(seq, lo) - _variations(seq, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def rational_roots(poly: Sequence) -> list[Fraction]:
    """Rational roots, found by testing p/q (q | leading coefficient) near
    each isolated real root."""
    f = P.trim([Fraction(c) for c in poly])
    if not f:
        raise DomainError("zero polynomial has every root")
    den = 1
    for a in f:
        den = math.lcm(den, a.denominator)
    f = [a * den for a in f]
    lead = abs(int(f[-1]))
    qs = [1]
    for p, e in factor_counter(lead).items():
        qs = [q * p**k for q in qs for k in range(e + 1)]
    roots = []
    width = Fraction(1, 4 * lead * lead)
    for iv in isolate_real_roots(f):
        lo, hi = refine_root(f, iv, width)
        for q in qs:
            # the interval is narrower than 1/q, so it holds at most one p/q
            cand = Fraction(math.ceil(lo * q), q)
            if cand <= hi and P.evaluate(f, cand) == 0 and cand not in roots:
                roots.append(cand)
    return sorted(roots)


# ---- complex embeddings --------------------------------------------------


@dataclass(frozen=True)
class RootDisc:
    """A disc guaranteed to contain exactly one root of the defining polynomial."""

    center: mpmath.mpc
    radius: mpmath.mpf
    is_real: bool


def _mp_poly(poly):
    return [mpmath.mpf(int(c)) if Fraction(c).denominator == 1 else mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator for c in poly]


def _horner(coeffs, z):
    acc = mpmath.mpf(0)
    for a in reversed(coeffs):
        acc = acc * z + a
    return acc


def certified_roots(poly: Sequence[int], dps: int, expected_real: int | None = None) -> list[RootDisc]:
    """All roots of an integer squarefree polynomial as certified discs.

    A disc meeting the real axis is declared real.  That is justified by
    counting: discs missing the axis hold non-real roots, so if the Sturm
    count of real roots equals the number of discs meeting the axis, those
    discs hold exactly the real roots.

    Call inside an mpmath working-precision context of at least `dps`.
    """
    n = len(poly) - 1
    if expected_real is None:
        expected_real = count_real_roots(poly)
    coeffs = _mp_poly(poly)
    dcoeffs = [k * coeffs[k] for k in range(1, n + 1)]
    if n == 1:
        z = -coeffs[0] / coeffs[1]
        return [RootDisc(mpmath.mpc(z), mpmath.mpf(10) ** (-dps) * (1 + abs(z)), True)]
    approx = _rough_roots(poly, n)
    out = []
    for z in approx:
        z = _polish(coeffs, dcoeffs, mpmath.mpc(z), dps)
        rad = _radius(coeffs, dcoeffs, z, n, dps)
        if rad is None:
            raise CertificationError("vanishing derivative at a root approximation")
        if abs(z.imag) <= rad:
            out.append(RootDisc(mpmath.mpc(z.real, 0), rad + abs(z.imag), True))
        else:
            out.append(RootDisc(z, rad, False))
    for i in range(n):
        for j in range(i + 1, n):
            if abs(out[i].center - out[j].center) <= out[i].radius + out[j].radius:
                raise CertificationError("root discs overlap; increase precision")
    if sum(d.is_real for d in out) != expected_real:
        raise CertificationError("real roots not separated from the complex ones; increase precision")
    return out


def _newton_polygon_radii(poly) -> list:
    """Initial root moduli from the upper hull of (i, log|a_i|)."""
    pts = [(i, mpmath.log(abs(c))) for i, c in enumerate(poly) if c]
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (p[0] - x1) <= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    radii = []
    for (i, yi), (j, yj) in zip(hull, hull[1:]):
        radii.extend([mpmath.exp((yi - yj) / (j - i))] * (j - i))
    if len(poly) - 1 > len(radii):  # zero roots cannot occur for irreducible poly
        radii.extend([mpmath.mpf(1)] * (len(poly) - 1 - len(radii)))
    return radii


def _rough_roots(poly, n):
    """All roots to modest precision by Aberth-Ehrlich iteration.

    Starting points sit on circles whose radii come from the Newton polygon,
    which copes with roots of wildly different sizes.  `_polish` finishes.
    """
    digits = max(len(str(abs(int(c)))) for c in poly)
    low = 30 + digits
    with mpmath.workdps(low):
        coeffs = _mp_poly(poly)
        dcoeffs = [k * coeffs[k] for k in range(1, n + 1)]
        radii = _newton_polygon_radii(poly)
        z = [r * mpmath.expj(2 * mpmath.pi * k / n + mpmath.mpf("0.4")) for k, r in enumerate(radii)]
        tol = mpmath.mpf(10) ** (-(low // 2))
        for _ in range(1000):
            moved = 0
            for k in range(n):
                d = _horner(dcoeffs, z[k])
                f = _horner(coeffs, z[k])
                if f == 0:
                    continue
                w = f / d if d != 0 else mpmath.mpf(10) ** (-low // 4) * (1 + abs(z[k]))
                s = sum(1 / (z[k] - z[j]) for j in range(n) if j != k)
                step = w / (1 - w * s)
                z[k] -= step
                moved = max(moved, abs(step) / (1 + abs(z[k])))
            if moved < tol:
                return z
    raise CertificationError("root approximation did not converge")


def _polish(coeffs, dcoeffs, z, dps):
    """Newton iteration until the step is below the working precision."""
    eps = mpmath.mpf(10) ** (-dps)
    for _ in range(200):
        dz = _horner(dcoeffs, z)
        if dz == 0:
            break
        step = _horner(coeffs, z) / dz
        z = z - step
        if abs(step) <= eps * (1 + abs(z)):
            break
    return z


def _radius(coeffs, dcoeffs, z, n, dps):
    dz = _horner(dcoeffs, z)
    if dz == 0:
        return None
    # slack for rounding in evaluating f(z)
    scale = sum(abs(c) * abs(z) ** k for k, c in enumerate(coeffs))
    fz = abs(_horner(coeffs, z)) + scale * mpmath.mpf(10) ** (-dps + 2)
    return 2 * n * fz / abs(dz)


@dataclass(frozen=True)
class Place:
    """An archimedean place: one root per real embedding or conjugate pair."""

    disc: RootDisc
    is_real: bool

    @property
    def multiplicity(self) -> int:
        return 1 if self.is_real else 2


def archimedean_places(poly: Sequence[int], dps: int, expected_real: int | None = None) -> list[Place]:
    discs = certified_roots(poly, dps, expected_real)
    real = [d for d in discs if d.is_real]
    cplx = [d for d in discs if not d.is_real and d.center.imag > 0]
    if 2 * len(cplx) + len(real) != len(poly) - 1:
        raise CertificationError("complex roots do not pair up")
    real.sort(key=lambda d: d.center.real)
    cplx.sort(key=lambda d: (d.center.real, d.center.imag))
    return [Place(d, True) for d in real] + [Place(d, False) for d in cplx]


def evaluate_with_bound(coeffs: Sequence[Fraction], disc: RootDisc, dps: int):
    """|x(root)| for the element with power-basis `coeffs`, plus an error bound."""
    c = _mp_poly(coeffs)
    z, r = disc.center, disc.radius
    v = _horner(c, z)
    # majorant of |x'| on the disc
    R = abs(z) + r
    deriv = sum(k * abs(a) * R ** (k - 1) for k, a in enumerate(c) if k)
    rounding = sum(abs(a) * R**k for k, a in enumerate(c)) * mpmath.mpf(10) ** (-dps + 2)
    return abs(v), deriv * r + rounding
