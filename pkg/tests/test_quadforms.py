import math

import pytest
from hypothesis import given, strategies as st

from singmod.exact import DomainError, kronecker
from singmod.quadforms import (
    RATIONAL_MODULI_DISCRIMINANTS,
    class_number,
    is_fundamental,
    reduced_forms,
    unit_count,
)


def test_examples():
    assert class_number(39).class_number == 4
    assert class_number(4).class_number == 1
    assert class_number(4).unit_count == 4
    assert class_number(23).class_number == 3


@pytest.mark.parametrize("d", RATIONAL_MODULI_DISCRIMINANTS)
def test_rational_moduli_have_class_number_one(d):
    assert class_number(d).class_number == 1


def test_unit_counts():
    assert unit_count(3) == 6
    assert unit_count(4) == 4
    assert unit_count(163) == 2


def test_unit_count_by_norm_equation():
    # units of the order of discriminant -d solve x^2 + bxy + cy^2 = 1 for the principal form
    for d in (3, 4, 7, 8, 15, 20):
        a, b, c = reduced_forms(d)[0]
        sols = [(x, y) for x in range(-3, 4) for y in range(-3, 4) if a * x * x + b * x * y + c * y * y == 1]
        assert len(sols) == unit_count(d)


@pytest.mark.parametrize("d", [0, -3, 1, 2, 5, 6])
def test_invalid(d):
    with pytest.raises(DomainError):
        class_number(d)


def _valid_d():
    return st.integers(1, 4000).map(lambda k: k if k % 4 in (0, 3) else 4 * k).filter(lambda d: d % 4 in (0, 3))


@given(_valid_d())
def test_reduction_inequalities(d):
    forms = reduced_forms(d)
    assert len(forms) == len(set(forms)) >= 1
    for a, b, c in forms:
        assert b * b - 4 * a * c == -d
        assert 0 < a and abs(b) <= a <= c
        if abs(b) == a or a == c:
            assert b >= 0
        assert math.gcd(a, b, c) == 1


def _dirichlet(d):
    # analytic class number of a fundamental discriminant -d < -4
    return -sum(a * kronecker(-d, a) for a in range(1, d)) // d


@given(_valid_d().filter(lambda d: d > 4 and is_fundamental(d)))
def test_dirichlet_oracle(d):
    assert class_number(d).class_number == _dirichlet(d)


def test_fundamental():
    assert is_fundamental(39) and is_fundamental(4) and is_fundamental(8)
    assert not is_fundamental(12) and not is_fundamental(16) and not is_fundamental(27)
