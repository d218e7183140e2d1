import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from singmod.exact import (
    DomainError,
    FactoredInteger,
    FactoredRational,
    factor_counter,
    factorize,
    is_prime,
    kronecker,
    merge_exponents,
    parse_factored,
    radical,
    valuation,
)


def test_factorize_examples():
    assert factorize(12).factors == {2: 2, 3: 1}
    assert factorize(12).sign == 1
    assert factorize(235849).factors == {235849: 1}
    assert factorize(6436343).factors == {23: 5}
    assert str(factorize(-720)) == "-2^4 * 3^2 * 5"


def test_factorize_zero():
    with pytest.raises(DomainError):
        factorize(0)


def test_factorize_unit():
    assert factorize(1).factors == {}
    assert str(factorize(-1)) == "-1"


def test_large_semiprime_uses_rho():
    p, q = 1_000_000_007, 998_244_353
    assert factor_counter(p * q) == {p: 1, q: 1}
    assert factor_counter(p * q * q, seed=5) == {p: 1, q: 2}


@given(st.integers(min_value=-(2**64), max_value=2**64).filter(bool))
def test_round_trip(n):
    f = factorize(n)
    assert f.value == n
    assert all(is_prime(p) for p in f.factors)


@given(st.lists(st.sampled_from([2, 3, 5, 7, 1009, 65537, 10**6 + 3, 2**31 - 1]), min_size=1, max_size=6))
def test_round_trip_smooth(ps):
    n = math.prod(ps)
    assert factorize(n).value == n


@given(st.integers(1, 10**12), st.integers(1, 10**12))
def test_multiplicative(m, n):
    assert factorize(m * n).factors == merge_exponents([factorize(m).factors, factorize(n).factors])


@given(st.integers(2, 10**15))
def test_against_sympy(n):
    assert dict(factor_counter(n)) == sympy.factorint(n)


def test_seed_independence():
    n = (2**61 - 1) * (10**9 + 9)
    assert factor_counter(n, seed=1) == factor_counter(n, seed=99)


def test_kronecker_examples():
    assert kronecker(17, 1) == 1
    assert kronecker(-4, 13) == 1
    assert kronecker(-4, 3) == -1
    with pytest.raises(DomainError):
        kronecker(5, 0)


def _legendre_by_squares(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if any(x * x % p == a for x in range(1, p)) else -1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 101])
def test_kronecker_matches_square_enumeration(p):
    for a in range(-30, 30):
        assert kronecker(a, p) == _legendre_by_squares(a, p)


@given(st.integers(-1000, 1000), st.integers(0, 500), st.integers(0, 500))
def test_kronecker_multiplicative(a, i, j):
    m, n = 2 * i + 1, 2 * j + 1
    assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


@given(st.integers(-1000, 1000), st.integers(0, 2000))
def test_kronecker_matches_jacobi(a, i):
    n = 2 * i + 1
    assert kronecker(a, n) == sympy.jacobi_symbol(a, n)


def test_kronecker_at_two_and_negative():
    # (a/2) depends on a mod 8
    assert [kronecker(a, 2) for a in (1, 3, 5, 7, 4)] == [1, -1, -1, 1, 0]
    assert kronecker(-1, -1) == -1
    assert kronecker(3, -1) == 1


def test_radical_examples():
    assert radical(1) == 1
    assert radical(720) == 30
    assert radical(2 * 3**10 * 109 * 23**5) == 15042


@given(st.integers(1, 10**12))
def test_radical_properties(n):
    r = radical(n)
    assert n % r == 0
    assert all(e == 1 for e in factor_counter(r).values()) or r == 1


def test_valuation():
    assert valuation(3**7 * 10, 3) == 7
    with pytest.raises(DomainError):
        valuation(0, 2)


def test_factored_rational_reduces():
    q = FactoredRational(FactoredInteger(1, {2: 3, 3: 1}), FactoredInteger(1, {2: 1, 5: 2}))
    assert q.numerator.factors == {2: 2, 3: 1}
    assert q.denominator.factors == {5: 2}
    assert q.value == Fraction(12, 25)
    assert str(q) == "(2^2 * 3) / 5^2"


def test_factored_rational_from_fraction():
    q = FactoredRational.from_fraction(Fraction(-87245036145162432, 14357588953446649))
    assert str(q) == "-(2^6 * 3^21 * 19^4) / (17^6 * 29^6)"


def test_parse_factored():
    assert parse_factored("2^6 * 3^21 * 19^4") == 2**6 * 3**21 * 19**4
    assert parse_factored("-7") == -7
    assert parse_factored("14357588953446649") == 17**6 * 29**6
    with pytest.raises(DomainError):
        parse_factored("2^x")
