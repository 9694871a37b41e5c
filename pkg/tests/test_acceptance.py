"""Acceptance criteria 1-9, one printed PASS/FAIL line per criterion."""

import json
import random
import time
from pathlib import Path

import pytest

from initforms import (
    Poly,
    Status,
    build_twist,
    build_u,
    check_initial_compat,
    check_sum_initial,
    find_nondividing,
    hull_vertices,
    initial_form,
    intruders,
    is_invariant,
    lnd_exp,
    make_coaction,
    stable_invariant_witness,
    substitute,
    wdeg,
)
from initforms.cli import main
from initforms.fuzz import (
    curated_suite,
    mutate_coaction,
    random_point_set,
    random_poly,
    random_prop23_instance,
    random_sum_family,
    random_triangular_lnd,
    random_weight,
    suite_invariants,
    suite_weights,
)
from oracles import brute_vertices

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def report(capsys):
    def emit(number, ok, summary):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} {summary}")
        assert ok, summary

    return emit


@pytest.fixture(scope="module")
def suite_instances():
    """Every curated action with 4 invariants built from its kernel elements."""
    rng = random.Random(2024)
    return [(entry, suite_invariants(entry, rng, 4)) for entry in curated_suite()]


def test_criterion_1_product_law(report):
    rng = random.Random(1)
    start = time.perf_counter()
    failures = 0
    for _ in range(1000):
        n = rng.randint(1, 4)
        w = random_weight(rng, n, d=rng.randint(1, 2), rational=rng.random() < 0.5)
        f, g = random_poly(rng, n, max_terms=12), random_poly(rng, n, max_terms=12)
        fg = f * g
        if wdeg(fg, w) != wdeg(f, w) + wdeg(g, w) or initial_form(fg, w) != initial_form(f, w) * initial_form(g, w):
            failures += 1
    elapsed = time.perf_counter() - start
    report(1, failures == 0 and elapsed < 5, f"1000 pairs, {failures} failures, {elapsed:.2f}s (< 5s)")


def test_criterion_2_sum_initial(report):
    verified = cancelled = wrong = 0
    for k in range(500):
        fs, w = random_sum_family(random.Random(f"c2:{k}"))
        if all(f.is_zero() for f in fs):
            continue
        top = max(wdeg(f, w) for f in fs)
        s = sum((initial_form(f, w) for f in fs if wdeg(f, w) == top), Poly.zero(fs[0].nvars))
        status = check_sum_initial(fs, w).status
        if s.is_zero():
            cancelled += status is Status.HYPOTHESIS_FAILS
            wrong += status is not Status.HYPOTHESIS_FAILS
        else:
            total = sum(fs[1:], fs[0])
            ok = status is Status.VERIFIED and initial_form(total, w) == s
            verified += ok
            wrong += not ok
    report(2, wrong == 0 and cancelled > 0, f"{verified} verified, {cancelled} cancelling, {wrong} misclassified")


def test_criterion_3_hull_oracle(report):
    start = time.perf_counter()
    mismatches = bad_certs = 0
    for k in range(300):
        P = random_point_set(random.Random(f"c3:{k}"))
        certs = hull_vertices(P)
        mismatches += {c.vertex for c in certs} != brute_vertices(P)
        bad_certs += not all(c.verify(P) for c in certs)
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and bad_certs == 0 and elapsed < 30
    report(3, ok, f"300 point sets, {mismatches} mismatches, {bad_certs} bad certificates, {elapsed:.2f}s (< 30s)")


def test_criterion_4_coactions(report):
    valid = 0
    for k in range(200):
        D = random_triangular_lnd(random.Random(f"c4:{k}"))
        assert D.m <= 4 and all(p.total_degree() <= 3 for p in D.images if p)
        a = lnd_exp(D)
        valid += make_coaction(a.images) == a
    rejected = 0
    for k in range(20):
        rng = random.Random(f"c4m:{k}")
        images, expected = mutate_coaction(rng, lnd_exp(random_triangular_lnd(rng)))
        try:
            make_coaction(images)
        except expected:
            rejected += 1
        except Exception:
            pass
    report(4, valid == 200 and rejected == 20, f"{valid}/200 LND exponentials valid, {rejected}/20 mutants rejected")


def test_criterion_5_prop23(report):
    verified = skipped = failed = 0
    for k in range(500):
        psi, u, f = random_prop23_instance(random.Random(f"c5:{k}"))
        if any(p.is_zero() for p in psi.poly_images()):
            skipped += 1
            continue
        r = check_initial_compat(build_twist(psi, u), f)
        if r.status is Status.HYPOTHESIS_FAILS:
            skipped += 1
        elif r.status is Status.VERIFIED and initial_form(substitute(psi, f).to_poly(), u) == r.details["rhs"]:
            verified += 1
        else:
            failed += 1
    report(5, failed == 0, f"{verified} verified, {skipped} with vanishing right-hand side, {failed} failures")


def test_criterion_6_no_intruders(report, suite_instances):
    actions = len(suite_instances)
    lnd_ns = {e.n for e, _ in suite_instances if e.name.startswith("lnd")}
    pairs = {e.name for e, _ in suite_instances if e.name.startswith("translation")}
    checked = with_intruder = 0
    for entry, fs in suite_instances:
        assert stable_invariant_witness(entry.action, fs[0], entry.n).ok
        for f in fs:
            assert is_invariant(entry.action, f.embed(entry.action.m))
            checked += 1
            with_intruder += bool(intruders(f))
    ok = actions >= 10 and {2, 3} <= lnd_ns and len(pairs) >= 3 and checked >= 50 and with_intruder == 0
    report(6, ok, f"{actions} actions, {checked} invariants, {with_intruder} with an intruder")


def test_criterion_7_build_u(report, suite_instances):
    runs = broken = 0
    for entry, _ in suite_instances:
        phi = entry.action.restrict(entry.n)
        weights = suite_weights(entry.n)
        assert len(weights) >= 5
        for w in weights:
            d = build_u(phi, w.padded(entry.action.m), w)
            runs += 1
            broken += not (d.degrees_match and d.z_monomial_present and d.independent)
    report(7, broken == 0, f"{runs} (action, weight) runs, {broken} with a failed postcondition")


def test_criterion_8_nondividing(report, suite_instances):
    pairs = missing = violated = 0
    for entry, fs in suite_instances:
        phi = entry.action.restrict(entry.n)
        S = Poly.gens(entry.n)
        for f in fs:
            for w in suite_weights(entry.n):
                r = find_nondividing(phi, S, [f], w)
                pairs += 1
                missing += r.status is not Status.VERIFIED or r.witness is None
                violated += r.reason == "theorem_violated"
    report(8, missing == 0 and violated == 0, f"{pairs} (f, w) pairs, {missing} without witness, {violated} violations")


def test_criterion_9_cli_goldens(report, capsys):
    jobs = sorted(GOLDEN.glob("*.json"))
    exact = 0
    for job in jobs:
        main(["theorem", "--job", str(job)])
        exact += capsys.readouterr().out == job.with_suffix(".out").read_text(encoding="utf-8")
    report(9, len(jobs) >= 20 and exact == len(jobs), f"{exact}/{len(jobs)} golden jobs byte-exact (suite time reported at session end)")
