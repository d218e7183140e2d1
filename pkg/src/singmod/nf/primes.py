"""Prime ideals of O_K above a rational prime, and their valuations.

When p does not divide [O_K : Z[theta]] the factorization of T mod p gives
the primes directly (Dedekind).  Otherwise O_K / pO_K is split by hand: the
p-radical is factored out and the semisimple quotient is decomposed into
fields with Berlekamp's subalgebra and idempotents.

Valuations use the classical trick: pick beta in O_K with beta P in pO_K
but beta not in pO_K.  Then tau = beta / p has valuation -1 at P and is
integral elsewhere, so v_P(x) is the largest k with x tau^k integral.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..exact import DomainError, is_prime, valuation as int_valuation
from . import fp, linalg
from .order import radical_coords

MAX_VALUATION_STEPS = 100_000


class UnsupportedIndexDivisor(DomainError):
    def __init__(self, p: int, why: str = ""):
        self.prime = p
        super().__init__(f"unsupported index divisor p={p}" + (f": {why}" if why else ""))


@dataclass(eq=False)
class PrimeIdeal:
    p: int
    e: int
    f: int
    basis: list  # Z-basis in O_K coordinates (HNF rows)
    generator: object = None  # FieldElement g with P = (p, g), if found
    _tau: list = field(default=None, repr=False)

    @property
    def norm(self) -> int:
        return self.p**self.f

    def __repr__(self) -> str:
        return f"PrimeIdeal(p={self.p}, e={self.e}, f={self.f}, gen={self.generator!r})"


def _unit(i, n):
    return [int(i == j) for j in range(n)]


def _z_basis(order, gens_coords, p):
    n = order.degree
    gens = [list(g) for g in gens_coords] + [[p * x for x in _unit(i, n)] for i in range(n)]
    return linalg.hnf(gens)


def _tau_matrix(order, ideal_basis, p):
    """Rows: O_K-coordinates of omega_k * tau, for tau = beta / p."""
    n = order.degree
    rows = []
    for k in range(n):
        row = []
        for g in ideal_basis:
            row.extend(order.mul(_unit(k, n), g, p))
        rows.append(row)
    kernel = fp.left_kernel(rows, p)
    beta = next((v for v in kernel if any(v)), None)
    if beta is None:
        raise RuntimeError(f"no anti-uniformizer found at p={p}")
    return [[Fraction(x, p) for x in order.mul(_unit(k, n), beta)] for k in range(n)]


def _val_int_coords(P: PrimeIdeal, coords, order) -> int:
    """v_P of a nonzero element of O_K given by integer coordinates."""
    if not any(coords):
        raise DomainError("valuation of zero")
    p = P.p
    k = 0
    coords = list(coords)
    # dividing by p lowers v_P by e; skipped while e is still unknown
    while P.e is not None and all(c % p == 0 for c in coords):
        coords = [c // p for c in coords]
        k += P.e
    vec = [Fraction(c) for c in coords]
    for _ in range(MAX_VALUATION_STEPS):
        nxt = linalg.vecmat(vec, P._tau)
        if any(c.denominator != 1 for c in nxt):
            return k
        vec = nxt
        k += 1
    raise RuntimeError("valuation loop did not terminate")


def valuation(K, P: PrimeIdeal, x) -> int:
    """v_P(x) for a nonzero FieldElement x of K."""
    if x.is_zero():
        raise DomainError("valuation of zero is undefined")
    order = K.maximal_order
    c = order.coords(x.coeffs)
    den = 1
    for a in c:
        den = math.lcm(den, a.denominator)
    ints = [int(a * den) for a in c]
    return _val_int_coords(P, ints, order) - P.e * int_valuation(den, P.p)


# ---- splitting -----------------------------------------------------------


def split_prime(K, p: int) -> list[PrimeIdeal]:
    """Prime ideals above p, cached on the field."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return K.cached(("primes", p), lambda: _split(K, p))


def _split(K, p: int) -> list[PrimeIdeal]:
    order = K.maximal_order
    if K.index % p:
        primes = _split_dedekind(K, order, p)
    else:
        primes = _split_general(K, order, p)
    for P in primes:
        P._tau = _tau_matrix(order, P.basis, p)
    for P in primes:
        if P.e is None:
            P.e = _val_int_coords(P, [p * x for x in order.one], order)
    if sum(P.e * P.f for P in primes) != K.degree:
        raise RuntimeError(f"sum of e*f over primes above {p} is not the degree")
    for P in primes:
        if P.generator is None:
            P.generator = _find_generator(K, order, P, primes)
    primes.sort(key=lambda P: (P.f, P.e, str(P.generator)))
    return primes


def _split_dedekind(K, order, p):
    out = []
    for g, e in fp.factor(list(K.poly), p):
        gen = K.from_poly([Fraction(c) for c in g])
        gcoords = [int(c) for c in order.coords(gen.coeffs)]
        n = order.degree
        gens = [order.mul(_unit(k, n), gcoords) for k in range(n)]
        out.append(PrimeIdeal(p, e, len(g) - 1, _z_basis(order, gens, p), gen))
    return out


class _Quotient:
    """The F_p-algebra A = O_K / I_p with I_p the p-radical."""

    def __init__(self, order, p):
        self.order, self.p = order, p
        n = order.degree
        rad = [[c % p for c in v] for v in radical_coords(order, p)]
        self.rad, pivots = fp.rref([v for v in rad if any(v)], p)
        self.pivots = pivots
        self.free = [j for j in range(n) if j not in pivots]
        self.dim = len(self.free)
        self.one = self.reduce(order.one)

    def reduce(self, v):
        v = [c % self.p for c in v]
        for row, col in zip(self.rad, self.pivots):
            if v[col]:
                k = v[col]
                v = [(a - k * b) % self.p for a, b in zip(v, row)]
        return [v[j] for j in self.free]

    def lift(self, a):
        v = [0] * self.order.degree
        for j, c in zip(self.free, a):
            v[j] = c
        return v

    def mul(self, a, b):
        return self.reduce(self.order.mul(self.lift(a), self.lift(b), self.p))

    def power(self, a, e):
        result, base = list(self.one), list(a)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


def _component_basis(A: _Quotient, idem):
    rows = [A.mul(idem, [int(i == j) for j in range(A.dim)]) for i in range(A.dim)]
    red, _ = fp.rref(rows, A.p)
    return red


def _split_component(A: _Quotient, idem, rng, out):
    p = A.p
    basis = _component_basis(A, idem)
    k = len(basis)
    # Berlekamp subalgebra {x : x^p = x}; its dimension counts the fields
    images = []
    for b in basis:
        bp = A.power(b, p)
        images.append([(x - y) % p for x, y in zip(bp, b)])
    kernel = fp.left_kernel(images, p)
    if len(kernel) <= 1:
        out.append((idem, k))
        return
    elems = [[x % p for x in linalg.vecmat(c, basis)] for c in kernel]
    for _ in range(64):
        coeffs = [rng.randrange(p) for _ in elems]
        b = [sum(c * e[i] for c, e in zip(coeffs, elems)) % p for i in range(A.dim)]
        values = _eigenvalues(A, idem, b)
        if len(values) > 1:
            break
    else:
        raise UnsupportedIndexDivisor(p, "could not separate components")
    for c in values:
        e_c = list(idem)
        for c2 in values:
            if c2 == c:
                continue
            inv = pow(c - c2, -1, p)
            factor = [((x - c2 * y) * inv) % p for x, y in zip(b, idem)]
            e_c = A.mul(e_c, factor)
        _split_component(A, e_c, rng, out)


def _eigenvalues(A: _Quotient, idem, b):
    """Values c in F_p with (b - c*idem) a zero divisor; b^p = b in the component."""
    p = A.p
    # minimal polynomial of b over F_p inside the component
    powers = [list(idem), list(b)]
    while True:
        rows = [list(v) for v in powers]
        ker = fp.left_kernel(rows, p)
        if ker:
            rel = ker[0]
            break
        powers.append(A.mul(powers[-1], b))
    minpoly = fp.monic(fp.trim(rel), p)
    return sorted(g[0] * -1 % p for g, _ in fp.factor(minpoly, p))


def _split_general(K, order, p):
    A = _Quotient(order, p)
    rng = random.Random(p)
    comps = []
    _split_component(A, A.one, rng, comps)
    n = order.degree
    out = []
    for idem, f in comps:
        rows = [A.mul(A.reduce(_unit(k, n)), idem) for k in range(n)]
        kernel = fp.left_kernel(rows, p)
        P = PrimeIdeal(p, None, f, _z_basis(order, kernel, p))
        out.append(P)
    return out


def _find_generator(K, order, P, primes):
    """An element g with P = (p, g), i.e. v_P(g) = 1 when e > 1 and g a unit
    at the other primes above p."""
    n = order.degree
    rng = random.Random(P.p * 7919 + P.f)
    cands = [list(r) for r in P.basis]
    for _ in range(400):
        cands.append([sum(rng.randrange(-2, 3) * r[i] for r in P.basis) for i in range(n)])
    for c in cands:
        if not any(c):
            continue
        if min(P.e, _val_int_coords(P, c, order)) != 1:
            continue
        if all(_val_int_coords(Q, c, order) == 0 for Q in primes if Q is not P):
            return K.element(order.to_power(c))
    return None
