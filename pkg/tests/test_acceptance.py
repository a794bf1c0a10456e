"""Acceptance criteria 1-11, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line (collected into the
terminal summary by conftest.py) and then asserts the same condition.
"""

import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from fano_hilbert.bundle_scan import evidence, render_evidence, scan
from fano_hilbert.catalog import classify, group_by_chern, load_embedded
from fano_hilbert.exactq import UniPoly, poly_compose_linear, poly_mul, rational_sqrt
from fano_hilbert.families import (
    SURFACE_PAIRS,
    ChernData4,
    DelPezzoData,
    MukaiData,
    bundle_case2_poly,
    bundle_case13_poly,
    del_pezzo,
    fourfold_conditions,
    fourfold_from_chern,
    mukai,
    mukai_discriminant,
    projective_space,
    quadric,
    surface_from_K2,
    threefold_condition,
    threefold_from_K3,
)
from fano_hilbert.hilbert import center, from_h0, hyperplane_section, product
from fano_hilbert.reducibility import analyze, gamma_lines, strip_check, structural_violations

Z = UniPoly.z()
F = Fraction
SCAN_MAX = 150


def verdict(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


@pytest.fixture(scope="module")
def full_scan():
    t0 = time.perf_counter()
    recs = scan(2, SCAN_MAX)
    return recs, time.perf_counter() - t0


def test_criterion_01_coefficient_recovery():
    t0 = time.perf_counter()
    hp = from_h0(3, 2, [1, 9, 31])
    elapsed = time.perf_counter() - t0
    ok = hp.r_factor.coeffs == (1, F(7, 3), F(7, 6))
    ok &= hp.r_factor == UniPoly([6, 14, 7]) / 6
    m3 = bundle_case2_poly(3).r_factor
    ok &= m3 == UniPoly([60, 157, 117, 26]) / 120
    verdict(1, ok and elapsed < 0.010, f"a=(1, 7/3, 7/6), m=3 factor exact, from_h0 took {elapsed * 1e3:.2f} ms")


def test_criterion_02_scan_reproduction(full_scan):
    recs, elapsed = full_scan
    split = [r.m for r in recs if r.q_split]
    ok = len(recs) == SCAN_MAX - 1 and not split and elapsed < 60
    verdict(2, ok, f"m=2..{SCAN_MAX}: Q-split for {split or 'no m'}, {elapsed:.1f} s")


def test_criterion_03_surfaces():
    reducible = sorted((k, i) for k, i in SURFACE_PAIRS if analyze(surface_from_K2(k, i).P).q_verdict)
    ok = reducible == [(8, 1), (8, 2), (9, 3)]
    ok &= center(surface_from_K2(9, 3)) == (Z - F(1, 2)) * (Z + F(1, 2)) / 2
    ok &= center(surface_from_K2(8, 2)) == Z**2
    ok &= center(surface_from_K2(8, 1)) == 4 * Z**2
    verdict(3, ok, f"Q-reducible pairs (K^2, iota) = {reducible}")


def test_criterion_04_del_pezzo_geography(quiet_classification):
    deltas = {}
    agree = True
    for n in range(3, 9):
        for d in range(1, 9):
            hp, disc = del_pezzo(DelPezzoData(n, d))
            deltas[n, d] = disc
            agree &= analyze(hp.P).q_verdict == (rational_sqrt(disc) is not None)
    ok = agree and deltas[3, 7] == F(4, 7)
    ok &= all(deltas[p] == 1 for p in ((3, 8), (4, 6), (6, 5)))
    ok &= all(deltas[p] == 0 for p in ((3, 6), (5, 5)))
    ok &= all(deltas[n, d] < 0 for n in (7, 8) for d in range(1, 5))
    lines = [ln.equation for ln in gamma_lines(del_pezzo(DelPezzoData(3, 7))[0], 1).q_lines]
    ok &= lines == ["y-2x+1=0"]
    verdict(4, ok, f"Delta(3,7)={deltas[3, 7]}, Gamma_Q(3,7)={lines}")


def test_criterion_05_mukai():
    rows = [e for e in load_embedded() if e.variant == "mukai" and e.b2 == 1]
    squares = {(e.v1, e.v2): rational_sqrt(mukai_discriminant(e.v1, e.v2)) for e in rows}
    excluded = mukai_discriminant(5, 26)
    ok = len(rows) == 6 and all(s is not None for s in squares.values())
    ok &= all(analyze(mukai(MukaiData(n, d))[0].P).q_verdict for n, d in squares)
    ok &= rational_sqrt(excluded) is None and not analyze(mukai(MukaiData(5, 26))[0].P).q_verdict
    verdict(5, ok, f"six b2=1 cases square, (5, 26*3^5) gives Delta={excluded}")


def test_criterion_06_threefolds():
    # (-K)^3 is even on every Fano threefold; odd values are not generated
    real, rational = [], []
    for K in range(2, 65, 2):
        rep = analyze(threefold_from_K3(K, 1).P)
        if rep.r_verdict:
            real.append(K)
        if rep.q_verdict:
            rational.append(K)
    ok = real == list(range(48, 65, 2)) and rational == [48, 50, 54, 64]
    note = f"1-48/49 = {threefold_condition(49)} is a square but 49 is odd"
    verdict(6, ok, f"R on {real[0]}..{real[-1]}, Q on {rational}; note: {note}")


def test_criterion_07_fourfolds():
    rows = [e for e in load_embedded(4) if e.variant == "chern4"]
    ok = len(rows) == 21 and all(classify(e).report.q_verdict for e in rows)
    c = fourfold_conditions(400, 196)
    ok &= (c.alpha, rational_sqrt(c.beta_sq), rational_sqrt(c.gamma_sq)) == (4, F(1, 5), 0)
    synth = fourfold_conditions(100, 10)
    rep = analyze(fourfold_from_chern(ChernData4(100, 10)).P)
    ok &= synth.alpha_sq < 0 and not synth.r_reducible and not rep.r_verdict
    verdict(7, ok, f"{len(rows)} rows Q-reducible in {len(group_by_chern(rows))} groups, (100,10) not R-reducible")


def _generated():
    yield from (projective_space(n) for n in range(1, 11))
    yield from (quadric(n) for n in range(2, 11))
    yield from (surface_from_K2(k, i) for k, i in SURFACE_PAIRS)
    yield from (threefold_from_K3(K, i) for K in range(2, 65, 2) for i in (1, 2, 3, 4) if K % i**3 == 0)
    for n in range(3, 9):
        for d in range(1, 9):
            yield del_pezzo(DelPezzoData(n, d))[0]
    yield from (mukai(MukaiData(n, d))[0] for n in range(3, 11) for d in range(2, 34, 2))
    yield from (fourfold_from_chern(ChernData4(e.v1, e.v2)) for e in load_embedded(4) if e.variant == "chern4")
    yield from (bundle_case13_poly(m) for m in list(range(2, 51)) + list(range(60, SCAN_MAX + 1, 10)))


def test_criterion_08_structural_suite(quiet_classification):
    failures = []
    count = 0
    for hp in _generated():
        count += 1
        bad = structural_violations(hp)
        if bad:
            failures.append((hp.n, hp.iota, bad))
    for m in range(2, SCAN_MAX + 1):
        count += 1
        bad = structural_violations(bundle_case2_poly(m))
        if bad:
            failures.append(("bundle", m, bad))
    verdict(8, not failures, f"{count} polynomials checked, {len(failures)} failures {failures[:3]}")


def test_criterion_09_cross_constructions(quiet_classification):
    ok = del_pezzo(DelPezzoData(3, 8))[0].P == poly_compose_linear(projective_space(3).P, 2, 0)
    for m in range(2, 11):
        ok &= bundle_case13_poly(m).P == hyperplane_section(product(projective_space(m), projective_space(m))).P
    ok &= fourfold_from_chern(ChernData4(625, 250, 5)).P == projective_space(4).P
    p3p1 = poly_mul(projective_space(3).P, poly_compose_linear(projective_space(1).P, F(1, 2), 0))
    ok &= fourfold_from_chern(ChernData4(512, 224, 4)).P == p3p1
    ok &= fourfold_from_chern(ChernData4(486, 216, 3)).P == product(projective_space(2), projective_space(2)).P
    verdict(9, ok, "dP(3,8), case-1 sections m=2..10, P^4, P^3xP^1, P^2xP^2")


def test_criterion_10_strip():
    tol = F(1, 10**20)
    ok = True
    for n in range(1, 11):
        ok &= all(v.status in ("inside", "boundary") for v in strip_check(projective_space(n), tol))
    q3 = strip_check(quadric(3), tol)
    ok &= all(v.status == "inside" for v in q3)
    verdict(10, ok, f"P^1..P^10 within the strip, Q^3 rescaled roots {[v.rescaled_real for v in q3]}")


def test_criterion_11_conjecture_evidence(full_scan):
    recs = [r for r in full_scan[0] if r.m <= 50]
    table = render_evidence(recs)
    ev = evidence(recs)
    print(table)
    # open conjecture: deviations are reported in the table, not treated as failures
    state = "consistent" if ev.root_pattern_consistent else f"deviations at m={ev.root_deviations + ev.r_split_failures}"
    verdict(11, len(recs) == 49 and bool(table), f"evidence table for m=2..50 emitted ({state})")
