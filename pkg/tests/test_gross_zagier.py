import itertools
import math
import time

import pytest

from singmod.exact import DomainError, factor_counter, kronecker
from singmod.gross_zagier import EpsilonUndefined, epsilon, epsilon_extend, gz_norm
from singmod.quadforms import class_number, is_fundamental

from oracles import gz_numeric

GOLDEN = {
    4: "3^12 * 7^8 * 19^4 * 23^2",
    8: "7^8 * 13^2 * 23^2 * 29 * 31^2 * 37^2 * 53",
    7: "3^12 * 7^4 * 13^2 * 17^3 * 19^2 * 31^2",
    11: "7^8 * 13^2 * 17^3 * 19^2 * 29^2 * 101 * 107",
    19: "3^12 * 13^2 * 19^2 * 29 * 31^2 * 37^2 * 53 * 113 * 173 * 179",
}

FUNDAMENTAL = [d for d in range(3, 130) if d % 4 in (0, 3) and is_fundamental(d)]
PAIRS = [(a, b) for a, b in itertools.combinations(FUNDAMENTAL, 2) if math.gcd(a, b) == 1]


@pytest.mark.parametrize("d2", sorted(GOLDEN))
def test_golden_norms(d2):
    assert str(gz_norm(39, d2).norm) == GOLDEN[d2]


def test_golden_norms_fast():
    t = time.perf_counter()
    for d2 in GOLDEN:
        gz_norm(39, d2)
    assert time.perf_counter() - t < 1.0


def test_epsilon_examples():
    assert epsilon(3, 39, 4) == -1
    assert epsilon(13, 39, 4) == 1
    assert epsilon_extend(1, 39, 4) == 1
    assert epsilon_extend(9, 39, 4) == 1
    assert epsilon_extend(39, 39, 4) == -1


def test_epsilon_branches_agree():
    for d1, d2 in PAIRS[:40]:
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            if (d1 * d2) % p and kronecker(d1 * d2, p) == 1:
                assert epsilon(p, d1, d2) == kronecker(-d1, p) == kronecker(-d2, p)


def test_epsilon_undefined_names_prime():
    # (156 / 11) = -1, so 11 is inert in Q(sqrt(d1 d2))
    with pytest.raises(EpsilonUndefined) as exc:
        epsilon(11, 39, 4)
    assert exc.value.prime == 11
    with pytest.raises(EpsilonUndefined):
        epsilon_extend(121, 39, 4)


def test_rejects_bad_pairs():
    with pytest.raises(DomainError):
        gz_norm(39, 3)  # not coprime
    with pytest.raises(DomainError):
        gz_norm(12, 7)  # -12 is not fundamental
    with pytest.raises(DomainError):
        gz_norm(5, 4)


def test_exponent_scale():
    assert gz_norm(39, 4).exponent_applied == 1
    assert gz_norm(39, 8).exponent_applied == 1 / 2
    assert gz_norm(4, 3).exponent_applied == 3


def test_many_pairs_symmetric():
    assert len(PAIRS) >= 20
    for d1, d2 in PAIRS[::7][:40]:
        assert gz_norm(d1, d2).norm == gz_norm(d2, d1).norm


def test_norm_primes_not_split():
    # a prime dividing the norm is never split in either quadratic field
    for d1, d2 in PAIRS[::5][:60]:
        for p in gz_norm(d1, d2).norm.factors:
            assert kronecker(-d1, p) != 1 and kronecker(-d2, p) != 1


@pytest.mark.parametrize(
    "d1,d2",
    [(39, 4), (39, 8), (23, 4), (23, 3), (7, 4), (3, 4), (15, 7), (31, 20), (47, 24), (55, 3), (71, 8), (35, 19)],
)
def test_against_numeric_product(d1, d2):
    assert gz_norm(d1, d2).norm.value == gz_numeric(d1, d2)


def test_degree_consistency():
    # |N(j1 - j2)| = |M(j2)| with M of degree h(-d1): the norm grows like |j2|^h
    h = class_number(39).class_number
    assert h == 4
    n163 = gz_norm(39, 163).norm.value
    assert 10**67 < n163 < 10**72
    assert all(e > 0 for e in factor_counter(n163).values())
