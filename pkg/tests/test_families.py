import math
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fano_hilbert.exactq import UniPoly, binomial_poly, poly_compose_linear, poly_mul, rational_sqrt
from fano_hilbert.families import (
    SURFACE_PAIRS,
    ChernData4,
    DelPezzoData,
    MukaiData,
    OutsideClassificationWarning,
    bundle_case2_h0,
    bundle_case2_poly,
    bundle_case13_poly,
    del_pezzo,
    del_pezzo_discriminant,
    fourfold_conditions,
    fourfold_from_chern,
    genus_degree,
    mukai,
    mukai_coefficients,
    mukai_discriminant,
    projective_space,
    quadric,
    surface_from_K2,
    threefold_condition,
    threefold_from_K3,
)
from fano_hilbert.hilbert import HilbertDataError, center, from_h0, hyperplane_section, product
from fano_hilbert.reducibility import analyze, structural_violations, totally_reducible_Q

Z = UniPoly.z()
F = Fraction


def hp_of_product_ps(*dims_and_weights):
    """Hilbert polynomial of a product of projective spaces at O(w1, ..., wk), as a function of z."""
    p = UniPoly([1])
    for n, w in dims_and_weights:
        # h0(P^n, O(w z)) = binom(w z + n, n)
        p = poly_mul(p, poly_compose_linear(binomial_poly(n), w, n))
    return p


def test_projective_space():
    assert projective_space(3).P == (Z + 1) * (Z + 2) * (Z + 3) / 6
    assert projective_space(3).P(1) == 4
    assert projective_space(1).P == Z + 1
    p4 = projective_space(4)
    assert p4.P(0) == 1 and p4.P.lead == F(1, 24)


def test_quadric():
    q3 = quadric(3)
    assert q3.P == (Z + F(3, 2)) * (Z + 1) * (Z + 2) / 3
    assert q3.P(1) == 5
    roots = analyze(quadric(4).P).rational_roots
    assert (F(-2), 2) in roots
    assert quadric(2).P == (Z + 1) ** 2
    for n in (3, 5, 7):
        assert all(r.denominator == 1 or m == 1 for r, m in analyze(quadric(n).P).rational_roots)


def test_del_pezzo_examples():
    hp, d = del_pezzo(DelPezzoData(3, 7))
    assert d == F(4, 7)
    assert hp.r_factor == F(7, 6) * (Z**2 + 2 * Z + F(6, 7))
    hp, d = del_pezzo(DelPezzoData(4, 6))
    assert d == 1 and hp.P == (Z + 1) ** 2 * (Z + 2) ** 2 / 4
    hp, d = del_pezzo(DelPezzoData(3, 8))
    assert d == 1
    assert hp.P == poly_compose_linear(projective_space(3).P, 2, 0)


def test_del_pezzo_outside_classification_warns():
    with pytest.warns(OutsideClassificationWarning):
        del_pezzo(DelPezzoData(3, 9))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        del_pezzo(DelPezzoData(3, 8))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutsideClassificationWarning)
        hp, _ = del_pezzo(DelPezzoData(7, 9))
    assert hp.n == 7
    with pytest.raises(HilbertDataError):
        DelPezzoData(2, 3)


def test_del_pezzo_discriminant_matches_generic_test():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutsideClassificationWarning)
        for n in range(3, 9):
            for d in range(1, 9):
                hp, disc = del_pezzo(DelPezzoData(n, d))
                rep = analyze(hp.P)
                assert rep.q_verdict == (rational_sqrt(disc) is not None)
                assert rep.r_verdict == (disc >= 0)


def test_mukai_examples():
    hp, d = mukai(MukaiData(5, 18))
    assert d == F(1, 81) and totally_reducible_Q(hp.P)[0]
    hp, d = mukai(MukaiData(5, 26))
    assert d == F(37, 117) and rational_sqrt(d) is None
    hp, d = mukai(MukaiData(4, 24))
    assert d == 0
    assert mukai_coefficients(4, 24) == (1, 3, 3, 1)
    assert hp.P == (Z + 1) ** 4


def test_genus_degree():
    assert genus_degree(10) == 18
    assert genus_degree(2) == 2
    assert genus_degree(9) == 16
    with pytest.raises(HilbertDataError):
        genus_degree(1)
    with pytest.raises(HilbertDataError):
        MukaiData(5, 18, g=9)
    with pytest.raises(HilbertDataError):
        MukaiData(5, 17)
    assert MukaiData(5, 18).anticanonical_degree == 18 * 3**5


def test_mukai_against_products():
    # product polarizations with K + (n-2)H = 0 have closed-form h0
    assert mukai(MukaiData(4, 32))[0].P == hp_of_product_ps((1, 1), (3, 2))
    assert mukai(MukaiData(4, 24))[0].P == hp_of_product_ps((1, 1), (1, 1), (1, 1), (1, 1))
    assert mukai(MukaiData(6, 20))[0].P == hp_of_product_ps((3, 1), (3, 1))
    assert mukai(MukaiData(5, 20))[0].P == poly_mul(projective_space(2).P, quadric(3).P)


def test_mukai_discriminant_formula():
    for n in range(3, 11):
        for d in range(2, 40, 2):
            lhs = mukai_discriminant(n, d)
            K = d * (n - 2) ** n
            assert lhs == 1 - F(8 * n * (n - 1) * (n - 2) ** (n - 2), K)


def test_surfaces():
    assert center(surface_from_K2(9, 3)) == (Z**2 - F(1, 4)) / 2
    assert surface_from_K2(9, 3).P == projective_space(2).P
    assert center(surface_from_K2(8, 1)) == 4 * Z**2
    assert center(surface_from_K2(8, 2)) == Z**2
    dp7 = surface_from_K2(7, 1)
    assert center(dp7) == F(7, 2) * Z**2 + F(1, 8)
    assert not analyze(dp7.P).r_verdict
    with pytest.raises(HilbertDataError):
        surface_from_K2(7, 3)
    assert len(SURFACE_PAIRS) == 10


def test_threefolds():
    assert threefold_from_K3(64, 4).P == projective_space(3).P
    assert center(threefold_from_K3(64, 4)) == Z * (Z - 1) * (Z + 1) / 6
    assert threefold_condition(50) == F(1, 25)
    assert threefold_condition(40) < 0
    assert not analyze(threefold_from_K3(40, 1).P).r_verdict
    assert threefold_from_K3(54, 3).P == quadric(3).P
    assert threefold_from_K3(54, 1).P == hp_of_product_ps((1, 2), (2, 3))
    for bad in ((7, 1), (64, 5), (50, 2), (0, 1)):
        with pytest.raises(HilbertDataError):
            threefold_from_K3(*bad)


def test_fourfolds_against_products():
    p4 = fourfold_from_chern(ChernData4(625, 250, 5))
    assert p4.P == projective_space(4).P
    assert center(p4) == (16 * Z**4 - 40 * Z**2 + 9) / 384
    p3p1 = poly_mul(projective_space(3).P, poly_compose_linear(projective_space(1).P, F(1, 2), 0))
    assert fourfold_from_chern(ChernData4(512, 224, 4)).P == p3p1
    assert p3p1 == F(1, 12) * (Z + 1) * (Z + 2) ** 2 * (Z + 3)
    assert fourfold_from_chern(ChernData4(512, 224, 2)).P == hp_of_product_ps((3, 2), (1, 1))
    p2p2 = product(projective_space(2), projective_space(2))
    assert fourfold_from_chern(ChernData4(486, 216, 3)).P == p2p2.P
    with pytest.raises(HilbertDataError):
        ChernData4(500, 200, 2)


def test_fourfold_conditions():
    c = fourfold_conditions(400, 196)
    assert (c.alpha, rational_sqrt(c.beta_sq), rational_sqrt(c.gamma_sq)) == (4, F(1, 5), 0)
    assert c.q_reducible and c.r_reducible
    c = fourfold_conditions(625, 250)
    assert c.alpha_sq == 2500 and c.alpha == 50 and c.q_reducible
    assert totally_reducible_Q(fourfold_from_chern(ChernData4(625, 250)).P)[0]
    c = fourfold_conditions(100, 10)
    assert c.alpha_sq < 0 and not c.r_reducible and not c.q_reducible


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 700), st.integers(-50, 400))
def test_fourfold_conditions_match_generic(k, h):
    hp = fourfold_from_chern(ChernData4(k, h))
    c = fourfold_conditions(k, h)
    rep = analyze(hp.P)
    assert c.q_reducible == rep.q_verdict
    assert c.r_reducible == rep.r_verdict


def test_bundle_h0_values():
    assert bundle_case2_h0(2, 1) == 9
    assert bundle_case2_h0(2, 2) == 31
    assert bundle_case2_h0(3, 1) == 18


def test_bundle_case2_polys():
    assert bundle_case2_poly(2).r_factor == UniPoly([6, 14, 7]) / 6
    assert bundle_case2_poly(3).r_factor == UniPoly([60, 157, 117, 26]) / 120
    assert not analyze(bundle_case2_poly(4).r_factor).q_verdict


def test_bundle_case13():
    assert bundle_case13_poly(2).P == (Z + 1) ** 3
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutsideClassificationWarning)
        assert bundle_case13_poly(2).P == del_pezzo(DelPezzoData(3, 6))[0].P
    for m in range(2, 11):
        hp = bundle_case13_poly(m)
        assert hp.P == hyperplane_section(product(projective_space(m), projective_space(m))).P
        assert totally_reducible_Q(hp.P)[0]


def test_every_generator_is_structurally_sound():
    hps = [projective_space(n) for n in range(1, 9)] + [quadric(n) for n in range(2, 9)]
    hps += [surface_from_K2(k, i) for k, i in SURFACE_PAIRS]
    hps += [threefold_from_K3(k, 1) for k in range(2, 66, 2)]
    hps += [mukai(MukaiData(n, d))[0] for n in range(3, 9) for d in (2, 8, 18)]
    hps += [fourfold_from_chern(ChernData4(k, h)) for k, h in ((625, 250), (400, 196), (384, 192))]
    hps += [bundle_case2_poly(m) for m in range(2, 8)] + [bundle_case13_poly(m) for m in range(2, 8)]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutsideClassificationWarning)
        hps += [del_pezzo(DelPezzoData(n, d))[0] for n in range(3, 9) for d in range(1, 9)]
    for hp in hps:
        assert structural_violations(hp) == [], hp


def test_case2_from_h0_is_the_closed_sum():
    m = 4
    hp = from_h0(2 * m - 1, m, [bundle_case2_h0(m, t) for t in range(m + 1)])
    for t in range(m + 4):
        assert hp.P(t) == bundle_case2_h0(m, t)
    assert hp.degree_Hn == math.factorial(2 * m - 1) * hp.P.lead
