"""Number fields K = Q(theta) with theta a root of a monic integer polynomial."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Sequence

from ..exact import DomainError, factor_counter
from ..polynomials import format_poly
from . import linalg

MAX_DEGREE = 8


class ReducibleError(DomainError):
    def __init__(self, poly, factor):
        self.factor = factor
        super().__init__(f"{format_poly(poly)} is reducible; factor {format_poly(factor)}")


class NumberField:
    """Q[x]/(T) for a monic irreducible integer polynomial T.

    Heavy invariants (maximal order, places) are computed lazily and cached;
    the caches are guarded by a lock so a field can be shared by threads.
    """

    def __init__(self, poly: Sequence[int], var: str = "theta", check: bool = True):
        poly = [int(c) for c in poly]
        if len(poly) < 2 or poly[-1] != 1:
            raise DomainError("defining polynomial must be monic of degree >= 1")
        if len(poly) - 1 > MAX_DEGREE:
            raise DomainError(f"degree {len(poly) - 1} exceeds the supported bound {MAX_DEGREE}")
        self.poly = tuple(poly)
        self.degree = len(poly) - 1
        self.var = var
        if check:
            fac = nontrivial_factor(self.poly)
            if fac is not None:
                raise ReducibleError(self.poly, fac)
        n = self.degree
        # _reduce[k] = x^(n+k) mod T as an ascending list of ints
        red = []
        cur = [-c for c in poly[:-1]]
        for _ in range(max(n - 1, 0)):
            red.append(cur)
            top = cur[-1]
            cur = [0] + cur[:-1]
            cur = [a + top * b for a, b in zip(cur, red[0])]
        self._reduce = red
        self._power_sums = self._newton_sums(2 * n)
        self._lock = threading.Lock()
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"NumberField({format_poly(self.poly, 'x')})"

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly)

    # ---- elements -------------------------------------------------------

    def element(self, coeffs: Sequence) -> "FieldElement":
        return FieldElement(self, coeffs)

    def from_poly(self, c: Sequence) -> "FieldElement":
        """Element given by an arbitrary-degree polynomial in theta."""
        n = self.degree
        c = [Fraction(x) for x in c]
        out = c[:n] + [Fraction(0)] * max(0, n - len(c))
        for k, a in enumerate(c[n:]):
            if a:
                for i, b in enumerate(self._reduce_power(n + k)):
                    out[i] += a * b
        return FieldElement(self, out)

    def _reduce_power(self, e: int) -> list[int]:
        n = self.degree
        if e < n:
            return [int(i == e) for i in range(n)]
        if e - n < len(self._reduce):
            return self._reduce[e - n]
        v = self._reduce_power(e - 1)
        top = v[-1]
        v = [0] + v[:-1]
        return [a + top * b for a, b in zip(v, self._reduce[0] if self._reduce else [-self.poly[0]])]

    @property
    def theta(self) -> "FieldElement":
        if self.degree == 1:
            return self.element([-self.poly[0]])
        return self.element([0, 1] + [0] * (self.degree - 2))

    @property
    def one(self) -> "FieldElement":
        return self.element([1] + [0] * (self.degree - 1))

    def _mul_coeffs(self, a: Sequence, b: Sequence) -> list:
        n = self.degree
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            top = prod[k]
            if top:
                for i, r in enumerate(self._reduce[k - n]):
                    out[i] += top * r
        return out

    # ---- traces and discriminants -----------------------------------------

    def _newton_sums(self, count: int) -> list[int]:
        n = self.degree
        a = self.poly  # ascending, a[n] = 1
        s = [n]
        for k in range(1, count):
            acc = 0
            for i in range(1, min(k, n) + 1):
                if i < k:
                    acc += a[n - i] * s[k - i]
            if k <= n:
                acc += k * a[n - k]
            s.append(-acc)
        return s

    def trace_of_coeffs(self, c: Sequence) -> Fraction:
        return sum((Fraction(x) * self._power_sums[i] for i, x in enumerate(c)), Fraction(0))

    def trace_form_det(self, basis: Sequence[Sequence]) -> Fraction:
        n = len(basis)
        gram = [[self.trace_of_coeffs(self._mul_coeffs(basis[i], basis[j])) for j in range(n)] for i in range(n)]
        return linalg.det_rational(gram)

    @property
    def poly_discriminant(self) -> int:
        n = self.degree
        basis = [[int(i == j) for i in range(n)] for j in range(n)]
        return int(self.trace_form_det(basis))

    # ---- lazily computed invariants ---------------------------------------

    def cached(self, key, compute):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = compute()
        with self._lock:
            return self._cache.setdefault(key, value)

    @property
    def maximal_order(self):
        from .order import maximal_order

        return self.cached("maximal_order", lambda: maximal_order(self))

    @property
    def discriminant(self) -> int:
        return self.maximal_order.discriminant

    @property
    def index(self) -> int:
        """[O_K : Z[theta]]."""
        return self.maximal_order.index

    @property
    def integral_basis(self) -> list["FieldElement"]:
        return [self.element(r) for r in self.maximal_order.basis]

    @property
    def signature(self) -> tuple[int, int]:
        from .embeddings import count_real_roots

        def compute():
            r1 = count_real_roots(self.poly)
            return r1, (self.degree - r1) // 2

        return self.cached("signature", compute)


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Sequence):
        n = field.degree
        c = [Fraction(x) for x in coeffs]
        if len(c) > n:
            raise DomainError(f"{len(c)} coordinates for a degree-{n} field; use from_poly")
        self.field = field
        self.coeffs = tuple(c + [Fraction(0)] * (n - len(c)))

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise DomainError("elements of different fields")
            return other
        return self.field.element([Fraction(other)])

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field._mul_coeffs(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except (DomainError, TypeError, ValueError):
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.poly, self.coeffs))

    def __repr__(self) -> str:
        return format_poly(self.coeffs, self.field.var)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def mult_matrix(self) -> list[list[Fraction]]:
        """Rows are theta^i * self in the power basis."""
        n = self.field.degree
        rows = []
        cur = list(self.coeffs)
        for _ in range(n):
            rows.append(cur)
            cur = self.field._mul_coeffs([0, 1], cur) if n > 1 else cur
        return rows

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        inv = linalg.inverse(self.mult_matrix())
        return FieldElement(self.field, inv[0])

    def norm(self) -> Fraction:
        return linalg.det_rational(self.mult_matrix())

    def trace(self) -> Fraction:
        return self.field.trace_of_coeffs(self.coeffs)

    def charpoly(self) -> list[Fraction]:
        """Characteristic polynomial (ascending, monic) by Faddeev-LeVerrier."""
        m = self.mult_matrix()
        n = len(m)
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        mk = [[Fraction(0)] * n for _ in range(n)]
        for k in range(1, n + 1):
            # mk = m * (mk + c_{n-k+1} I)
            prev = [[mk[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)] for i in range(n)]
            mk = [[sum(m[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
            coeffs[n - k] = -sum(mk[i][i] for i in range(n)) / k
        return coeffs

    def denominator(self) -> int:
        den = 1
        for a in self.coeffs:
            den = math.lcm(den, a.denominator)
        return den


def nontrivial_factor(poly: Sequence[int]) -> list | None:
    """A proper factor over Q of an integer polynomial, or None if irreducible."""
    n = len(poly) - 1
    if n <= 1:
        return None
    from .embeddings import rational_roots

    roots = rational_roots(list(poly))
    if roots:
        r = roots[0]
        return [-r, Fraction(1)]
    if n <= 3:
        return None
    import sympy

    x = sympy.Symbol("x")
    _, factors = sympy.Poly(list(reversed(poly)), x).factor_list()
    if len(factors) == 1 and factors[0][1] == 1:
        return None
    g = factors[0][0]
    return [Fraction(int(c)) for c in reversed(g.all_coeffs())]


def rescaling_factor(min_poly: Sequence[Fraction]) -> int:
    """Smallest D with D**n * M(x / D) monic integral, for monic M of degree n."""
    n = len(min_poly) - 1
    need: dict[int, int] = {}
    for k in range(1, n + 1):
        den = Fraction(min_poly[n - k]).denominator
        if den > 1:
            for p, e in factor_counter(den).items():
                need[p] = max(need.get(p, 0), -(-e // k))
    return math.prod(p**e for p, e in need.items())


def build_field(min_poly: Sequence, var: str = "theta") -> tuple[NumberField, FieldElement]:
    """Field generated by a root alpha of the monic rational `min_poly`.

    Returns (K, alpha).  K is presented by T(x) = D**n * M(x / D) with D the
    smallest integer making T integral, so theta = D * alpha.
    """
    c = [Fraction(x) for x in min_poly]
    while c and c[-1] == 0:
        c.pop()
    if len(c) < 2 or c[-1] != 1:
        raise DomainError("minimal polynomial must be monic of degree >= 1")
    n = len(c) - 1
    D = rescaling_factor(c)
    T = [int(c[i] * D ** (n - i)) for i in range(n + 1)]
    K = NumberField(T, var=var)
    alpha = K.theta / D if D != 1 else K.theta
    return K, alpha
