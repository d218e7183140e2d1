from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from singmod import polynomials as P
from singmod.exact import DomainError
from singmod.gross_zagier import gz_norm
from singmod.interpolation import (
    CLASSICAL_ORDER,
    CapabilityError,
    CoefficientFilter,
    EvaluationPoint,
    ReconstructionError,
    classical_min_poly,
    classical_points,
    derive_rational_j,
    shimura_min_poly,
    sign_search_monic,
    unique_candidate,
)
from singmod.nf.embeddings import rational_roots
from singmod.shimura import ShimuraNormFile, ShimuraPoint, bundled_path, load_norm_file

from oracles import hilbert_poly, j_values

QUARTIC = [20919104368024767633, 109873509788637459, -429878960946, 331531596, 1]
DEN = 14357588953446649
CUBIC = [F(-87245036145162432, DEN), F(2240284633411688496, DEN), F(-159511016412629892, DEN), F(1)]


def test_lagrange_examples():
    assert P.lagrange_interpolate([(0, 5), (1, 6)]) == [5, 1]
    assert P.lagrange_interpolate([(0, F(7, 3))]) == [F(7, 3)]
    with pytest.raises(DomainError):
        P.lagrange_interpolate([(1, 2), (1, 3)])


@given(st.lists(st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100), min_size=1, max_size=6))
def test_lagrange_reproduces_polynomial(coeffs):
    xs = [F(i) - 2 for i in range(len(coeffs))]
    pts = [(x, P.evaluate(coeffs, x)) for x in xs]
    assert P.trim(P.lagrange_interpolate(pts)) == P.trim(coeffs)


def test_classical_39():
    m = classical_min_poly(39)
    assert list(m.coefficients) == QUARTIC
    assert m.signs_text() == "(+,+,-,-,-)"
    assert m.format(factored=True).endswith("3^15 * 17^3 * 23^3 * 29^3")


def test_five_points_interpolate_to_quartic():
    pts = classical_points(39, 5)
    assert [p.source_discriminant for p in pts] == [4, 8, 7, 11, 19]
    assert [p.x for p in pts] == [12**3, 20**3, -(15**3), -(32**3), -(96**3)]
    signs = [1, 1, -1, -1, -1]
    assert P.lagrange_interpolate([(p.x, s * p.y) for p, s in zip(pts, signs)]) == QUARTIC


def test_sign_search_unique_on_classical_data():
    cands = sign_search_monic(classical_points(39, 5), 4, CoefficientFilter.INTEGER)
    assert len(cands) == 1


def test_redundant_points_leave_survivor_unchanged():
    pts = classical_points(39, 7)
    assert len(pts) == 7
    for k in (6, 7):
        cands = sign_search_monic(pts[:k], 4, CoefficientFilter.INTEGER)
        assert [list(c.coefficients) for c in cands] == [QUARTIC]


def test_shimura_cubic():
    m = shimura_min_poly(load_norm_file(bundled_path()))
    assert list(m.coefficients) == CUBIC
    assert m.signs_text() == "(-,+,-,+)"
    text = m.format(factored=True)
    assert "(2^2 * 3^7 * 31 * 67 * 37223 * 235849) / (17^6 * 29^6)" in text
    assert "(2^4 * 3^14 * 151 * 1187 * 163327) / (17^6 * 29^6)" in text
    assert text.endswith("(2^6 * 3^21 * 19^4) / (17^6 * 29^6)")


def test_sign_search_unique_on_shimura_data():
    ds = load_norm_file(bundled_path())
    pts = [EvaluationPoint(p.zeta, p.norm, p.d) for p in ds.points]
    assert len(sign_search_monic(pts, 3, CoefficientFilter.RATIONAL)) == 1
    assert sign_search_monic(pts, 3, CoefficientFilter.INTEGER) == []


def test_evaluation_consistency():
    for m in (classical_min_poly(39), shimura_min_poly(load_norm_file(bundled_path()))):
        for pt in m.points:
            assert abs(m(pt.x)) == pt.y


def test_golden_polys_have_no_rational_roots():
    assert rational_roots(QUARTIC) == []
    assert rational_roots(CUBIC) == []


def test_degree_zero():
    assert [c.coefficients for c in sign_search_monic([EvaluationPoint(3, 1)], 0)] == [(1,)]
    assert sign_search_monic([EvaluationPoint(3, 2)], 0) == []


def test_single_point_degree_one_is_ambiguous():
    ds = ShimuraNormFile(6, 999, 1, (ShimuraPoint(4, F(0), F(5, 7)),))
    with pytest.raises(ReconstructionError, match="2 monic candidates"):
        shimura_min_poly(ds)


def test_no_candidate():
    with pytest.raises(ReconstructionError, match="no monic"):
        unique_candidate([], "test")


def test_duplicate_abscissa():
    with pytest.raises(DomainError):
        sign_search_monic([EvaluationPoint(1, 2), EvaluationPoint(1, 3)], 1)


def test_rational_j_table():
    assert derive_rational_j(4) == 1728
    assert derive_rational_j(7) == -3375
    assert derive_rational_j(3) == 0
    assert derive_rational_j(43) == -884736000
    assert derive_rational_j(67) == -147197952000
    assert derive_rational_j(163) == -262537412640768000
    for d in (43, 67, 163):
        j = derive_rational_j(d)
        assert abs(j - 1728) == gz_norm(d, 4).norm.value
        assert abs(j - 8000) == gz_norm(d, 8).norm.value
    with pytest.raises(DomainError):
        derive_rational_j(23)


@pytest.mark.parametrize("d", CLASSICAL_ORDER)
def test_rational_j_matches_klein_j(d):
    (j,) = j_values(d)
    assert abs(j - int(derive_rational_j(d))) < 1e-20


def test_small_cases():
    assert list(classical_min_poly(4).coefficients) == [-1728, 1]
    assert list(classical_min_poly(3).coefficients) == [0, 1]


@pytest.mark.parametrize("d", [23, 31, 39, 47, 55, 71, 79, 87, 103])
def test_against_hilbert_class_polynomial(d):
    assert list(classical_min_poly(d).coefficients) == hilbert_poly(d)


def test_non_fundamental_rejected():
    with pytest.raises(DomainError):
        classical_min_poly(12)


def test_capability_boundary():
    # h(-95) = 8 needs nine rational moduli coprime to 95; 19 | 95 leaves eight
    with pytest.raises(CapabilityError, match="only 8"):
        classical_min_poly(95)
    with pytest.raises(CapabilityError):
        sign_search_monic([EvaluationPoint(1, 1)], 3)
