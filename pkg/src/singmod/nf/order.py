"""Orders in a number field and the maximal order by Round 2.

For each prime p with p^2 | disc(T) the Dedekind criterion decides whether
Z[theta] is already p-maximal; if not, the order is replaced by the ring of
multipliers of its p-radical until that stops growing (Zassenhaus / Pohst).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..exact import factor_counter
from . import fp, linalg

MAX_ROUNDS = 200


class OrderError(RuntimeError):
    pass


@dataclass
class Order:
    """A full-rank order given by a Z-basis in power-basis coordinates."""

    field: object
    basis: list[list[Fraction]]
    table: list  # table[i][j] = coordinates of basis[i] * basis[j]
    inv: list[list[Fraction]]
    one: list[int]

    @property
    def degree(self) -> int:
        return len(self.basis)

    def coords(self, power_coeffs) -> list[Fraction]:
        return linalg.vecmat([Fraction(x) for x in power_coeffs], self.inv)

    def to_power(self, coords) -> list[Fraction]:
        return linalg.vecmat(list(coords), self.basis)

    def mul(self, a, b, p: int | None = None) -> list[int]:
        n = self.degree
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                row = self.table[i]
                for j, y in enumerate(b):
                    if y:
                        xy = x * y
                        for k, c in enumerate(row[j]):
                            if c:
                                out[k] += xy * c
        if p is not None:
            out = [v % p for v in out]
        return out

    def pow_mod(self, a, e: int, p: int) -> list[int]:
        result = list(self.one)
        base = [x % p for x in a]
        while e:
            if e & 1:
                result = self.mul(result, base, p)
            base = self.mul(base, base, p)
            e >>= 1
        return result

    def contains(self, power_coeffs) -> bool:
        return all(c.denominator == 1 for c in self.coords(power_coeffs))

    @property
    def index_in_power_order(self) -> Fraction:
        """[self : Z[theta]] as a positive rational."""
        return 1 / abs(linalg.det_rational(self.basis))


@dataclass
class MaximalOrder(Order):
    discriminant: int = 0
    index: int = 1


def make_order(field, basis) -> Order:
    basis = [[Fraction(x) for x in r] for r in basis]
    inv = linalg.inverse(basis)
    n = len(basis)
    bint, bden = linalg.scaled(basis)
    iint, iden = linalg.scaled(inv)
    den = bden * bden * iden
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = field._mul_coeffs(bint[i], bint[j])
            c = linalg.vecmat(prod, iint)
            if any(x % den for x in c):
                raise OrderError("basis is not closed under multiplication")
            row.append([x // den for x in c])
        table.append(row)
    one = [Fraction(x, iden) for x in iint[0]]
    if any(x.denominator != 1 for x in one):
        raise OrderError("order does not contain 1")
    return Order(field, basis, table, inv, [int(x) for x in one])


def _hnf_basis(rows_in_coords, order: Order, scale: Fraction = Fraction(1)) -> list[list[Fraction]]:
    """Power-basis rows of the lattice spanned by integer order coordinates."""
    h = linalg.hnf(rows_in_coords)
    if len(h) != order.degree:
        raise OrderError("lattice is not of full rank")
    return [[x * scale for x in order.to_power(r)] for r in h]


def radical_coords(order: Order, p: int) -> list[list[int]]:
    """Generators (in order coordinates) of the p-radical I_p, pO included."""
    n = order.degree
    q = p
    while q < n:
        q *= p
    frob = [order.pow_mod([int(i == j) for j in range(n)], q, p) for i in range(n)]
    kernel = fp.left_kernel(frob, p)
    gens = [list(v) for v in kernel]
    gens += [[p * int(i == j) for j in range(n)] for i in range(n)]
    return gens


def _enlarge(order: Order, p: int) -> Order | None:
    """Ring of multipliers of the p-radical, or None if order is p-maximal."""
    n = order.degree
    rad = linalg.hnf(radical_coords(order, p))
    rad_inv, rad_den = linalg.inverse_scaled(rad)
    # U = {x in O : x I_p subset p I_p}; kernel of O/pO -> End(I_p / p I_p)
    rows = []
    for k in range(n):
        ek = [int(i == k) for i in range(n)]
        row = []
        for g in rad:
            prod = order.mul(ek, g)
            c = linalg.vecmat(prod, rad_inv)
            row.extend((x // rad_den) % p for x in c)
        rows.append(row)
    kernel = fp.left_kernel(rows, p)
    if not kernel:
        return None
    gens = [list(v) for v in kernel] + [[p * int(i == j) for j in range(n)] for i in range(n)]
    h = linalg.hnf(gens)
    if abs(linalg.det_int(h)) == p**n:
        return None
    new_basis = _hnf_basis(gens, order, Fraction(1, p))
    return make_order(order.field, new_basis)


def dedekind_is_maximal(poly, p: int) -> bool:
    """Dedekind criterion: is Z[theta] p-maximal?"""
    fac = fp.factor(list(poly), p)
    g = [1]
    for t, _ in fac:
        g = fp.mul(g, t, p)
    h = fp.divmod_fp(fp.reduce(poly, p), g, p)[0]
    lifted = fp.trim(_int_mul(g, h))
    diff = [(a - b) for a, b in zip(_pad(lifted, len(poly)), poly)]
    assert all(x % p == 0 for x in diff)
    f = fp.reduce([x // p for x in diff], p)
    z = fp.gcd(fp.gcd(f, g, p), h, p)
    return len(z) <= 1


def _int_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pad(v, n):
    return list(v) + [0] * (n - len(v))


def p_maximal(order: Order, p: int) -> Order:
    for _ in range(MAX_ROUNDS):
        bigger = _enlarge(order, p)
        if bigger is None:
            return order
        order = bigger
    raise OrderError(f"index enlargement at p={p} did not terminate")


def _sum_of_orders(field, orders: list[Order]) -> Order:
    """The order spanned by several orders containing Z[theta]."""
    rows = [r for o in orders for r in o.basis]
    den = linalg.common_denominator(rows)
    h = linalg.hnf([[int(x * den) for x in r] for r in rows])
    return make_order(field, [[Fraction(x, den) for x in r] for r in h])


def maximal_order(field) -> MaximalOrder:
    """O_K as the sum of the p-maximal orders, each grown from Z[theta].

    Working prime by prime keeps the denominators p-powers, which is much
    cheaper than enlarging one order at every prime in turn.
    """
    n = field.degree
    basis = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    if n == 1:
        basis = [[Fraction(1)]]
    base = make_order(field, basis)
    disc = field.poly_discriminant
    local = []
    if n > 1:
        for p, e in sorted(factor_counter(disc).items()):
            if e >= 2 and not dedekind_is_maximal(field.poly, p):
                local.append(p_maximal(base, p))
    order = _sum_of_orders(field, [base] + local) if local else base
    idx = order.index_in_power_order
    if idx.denominator != 1:
        raise OrderError("computed order does not contain Z[theta]")
    index = int(idx)
    dK = Fraction(disc, index * index)
    assert dK.denominator == 1
    dK = int(dK)
    check = field.trace_form_det(order.basis)
    if check != dK:
        raise OrderError(f"discriminant mismatch: {check} vs {dK}")
    return MaximalOrder(field, order.basis, order.table, order.inv, order.one, dK, index)
