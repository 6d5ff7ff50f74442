"""One test per acceptance criterion; each logs a PASS/FAIL line before asserting."""

import math
import random
import time
from fractions import Fraction

from genvietoris.appell import build_P, certify, evaluate, vector_power
from genvietoris.cli import main, sample_points
from genvietoris.clifford import Paravector, generators
from genvietoris.exactnum import multi_indices
from genvietoris.genfun import (
    DIVERGED,
    G_closed,
    G_hypergeometric,
    G_series,
    alternating_partial_sum,
)
from genvietoris.symprod import SymFactors, SymProductContext, expand_power, sym_product_bruteforce
from genvietoris.trigsum import footnote_condition, positivity_scan, sigma
from genvietoris.vietoris import c_pochhammer, cross_verify

F = Fraction
VIETORIS_FIRST = ["1", "1/2", "1/2", "3/8", "3/8", "5/16", "5/16"]
T_GRID = [s * k / 10 for s in (-1, 1) for k in range(1, 10)]


def test_criterion_1_base_sequence(capsys, acceptance_log):
    start = time.perf_counter()
    status = main(["seq", "--n", "2", "--k-max", "6"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    values = [line.split("\t")[1] for line in out.splitlines()[1:]]
    ok = status == 0 and values == VIETORIS_FIRST and elapsed < 1
    acceptance_log(1, "seq --n 2 --k-max 6 prints the Vietoris values", ok,
                   f"{', '.join(values)}; {elapsed:.3f}s")
    assert ok


def test_criterion_2_formula_agreement(acceptance_log):
    start = time.perf_counter()
    failures = []
    for n in range(1, 9):
        r = cross_verify(n, 12)
        cliff_ks = sorted({k for k, m, _ in r.rows if m == "clifford-generators"})
        if not r.verdict or len(r.methods) < 3 or cliff_ks != (list(range(9)) if n <= 5 else []):
            failures.append(n)
    quat = cross_verify(2, 4, methods=["clifford-generators", "central", "pochhammer"])
    a_values = quat.values("clifford-generators")
    quat_ok = quat.verdict and a_values == [F(1), F(1, 2), F(1, 2), F(3, 8), F(3, 8)]
    elapsed = time.perf_counter() - start
    ok = not failures and quat_ok and elapsed < 60
    acceptance_log(2, "all c_k(n) methods agree, n<=8, k<=12", ok,
                   f"failing n: {failures or 'none'}; A_0..A_4 = {[str(v) for v in a_values]}; {elapsed:.1f}s")
    assert ok


def test_criterion_3_appell_certification(acceptance_log):
    start = time.perf_counter()
    failures = []
    for n in range(1, 5):
        for k in range(9):
            r = certify(n, k)
            if not r.verdict:
                failures.append((n, k, [name for name, v in r.checks.items() if not v]))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    acceptance_log(3, "Appell identities and representation equality, n<=4, k<=8", ok,
                   f"failures: {failures or 'none'}; {elapsed:.1f}s")
    assert ok


def test_criterion_4_restriction(acceptance_log):
    rng = random.Random(20261015)
    failures = []
    checked = 0
    for n in range(1, 5):
        pts = sample_points(n) + [
            Paravector(0, tuple(F(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(n)))
            for _ in range(3)]
        for k in range(9):
            p = build_P(n, k)
            for pt in pts:
                checked += 1
                if evaluate(p, pt) != vector_power(pt, k).scale(c_pochhammer(n, k)):
                    failures.append((n, k, pt.xv))
    ok = not failures
    acceptance_log(4, "P_k^n at x_0 = 0 equals c_k(n) x^k", ok, f"{checked} exact evaluations")
    assert ok


def test_criterion_5_generating_function(acceptance_log):
    start = time.perf_counter()
    worst_hyp = worst_closed = 0.0
    all_converged = True
    for n in range(1, 9):
        for t in T_GRID:
            s = G_series(t, n, tol=1e-11)
            all_converged &= s.converged
            worst_hyp = max(worst_hyp, abs(s.value - G_hypergeometric(t, n)))
            if n <= 4:
                worst_closed = max(worst_closed, abs(s.value - G_closed(t, n)))
    g1 = G_series(0.5, 1).value
    g2 = G_series(0.5, 2).value
    spots = abs(g1 - 2) <= 1e-9 and abs(g2 - 1.464101615137754) <= 1e-9
    elapsed = time.perf_counter() - start
    ok = all_converged and worst_hyp <= 1e-9 and worst_closed <= 1e-9 and spots and elapsed < 10
    acceptance_log(5, "series equals the 2F1 and closed forms", ok,
                   f"max diff 2F1 {worst_hyp:.1e}, closed {worst_closed:.1e}; "
                   f"G(0.5;1)={g1:.12g}, G(0.5;2)={g2:.12g}; {elapsed:.2f}s")
    assert ok


def test_criterion_6_sums_at_plus_minus_one(acceptance_log):
    details = []
    ok = True
    for n in range(4, 11):
        r = G_series(1, n)
        exact = F(n - 1, n - 3)
        good = r.status != DIVERGED and r.value <= float(exact) <= r.value + r.tail_bound
        ok &= good
        if not good:
            details.append(f"n={n}: {r.value} vs {exact} (tail {r.tail_bound:.1e}, {r.status})")
    expected_tags = {1: "hypergeometric-divergent", 2: "central-binomial-lower-bound", 3: "reciprocal-odd-numbers"}
    for n, tag in expected_tags.items():
        r = G_series(1, n)
        good = r.status == DIVERGED and r.reason == tag
        ok &= good
        if not good:
            details.append(f"n={n}: {r.status}/{r.reason}")
    even_sums = all(alternating_partial_sum(n, K) == 1 for n in range(2, 9) for K in range(0, 25, 2))
    ok &= even_sums
    n4, n5 = G_series(1, 4), G_series(1, 5)
    acceptance_log(6, "sums at t = 1 within tail bound, divergence flags, alternating partial sums", ok,
                   "; ".join(details) or f"n=4: {n4.value:.9f}+{n4.tail_bound:.1e}, n=5: {n5.value:.9f}+{n5.tail_bound:.1e}")
    assert ok


def test_criterion_7_positivity_scan(acceptance_log):
    start = time.perf_counter()
    report = positivity_scan(50, 999)
    elapsed = time.perf_counter() - start
    s3 = sigma(3, math.pi / 2)
    footnote = footnote_condition(50)
    min_sigma = min(m[2] for m in report.minima)
    min_tau = min(m[3] for m in report.minima)
    ok = (report.verdict and min_sigma > 0 and min_tau > 0 and abs(s3 - 0.5) <= 1e-12
          and footnote and elapsed < 10)
    acceptance_log(7, "empirical positivity of sigma_N and tau_N, N<=50", ok,
                   f"min sigma {min_sigma:.3e}, min tau {min_tau:.3e}, sigma_3(pi/2)={s3:.15g}, "
                   f"coefficient condition {footnote}; {elapsed:.3f}s")
    assert ok


def test_criterion_8_symmetric_product(acceptance_log):
    start = time.perf_counter()
    mismatches = []
    compared = 0
    for n in range(1, 5):
        base = generators(n)
        ctx = SymProductContext(base)
        for k in range(7):
            for mu in multi_indices(n, k):
                compared += 1
                if ctx(mu) != sym_product_bruteforce(SymFactors(base, mu)):
                    mismatches.append(tuple(mu))
    powers = all(expand_power(generators(n), k).equal for n in range(1, 5) for k in range(9))
    elapsed = time.perf_counter() - start
    ok = not mismatches and powers and elapsed < 30
    acceptance_log(8, "recursion equals brute force; power expansion", ok,
                   f"{compared} multi-indices, mismatches {mismatches or 'none'}; {elapsed:.2f}s")
    assert ok
