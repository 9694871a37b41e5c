"""Seeded random instance generators and the curated action corpus.

All randomness flows through an explicit ``random.Random`` so every suite is
reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import errors
from .actions import (
    LND,
    AutomorphismPair,
    GaAction,
    is_invariant,
    lnd_exp,
    make_coaction,
    stable_invariant_witness,
    translation_action,
)
from .newton import hull_vertices
from .poly import AlgebraHom, Poly, ZPoly, parse_many
from .reports import Status
from .theorems import build_twist, build_u, check_initial_compat, check_no_intruder_stable, find_nondividing
from .weights import Weight, check_sum_initial, initial_form, wdeg


def _coeff(rng, bound=9):
    c = 0
    while c == 0:
        c = rng.randint(-bound, bound)
    return c


def random_poly(rng, nvars, max_terms=12, max_exp=3, max_deg=None, bound=9, allow_zero=False):
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            e = [rng.randint(0, max_exp) for _ in range(nvars)]
            if max_deg is not None:
                while sum(e) > max_deg:
                    e[rng.randrange(nvars)] -= 1
                    e = [max(a, 0) for a in e]
            terms[tuple(e)] = _coeff(rng, bound)
        p = Poly(nvars, terms)
        if p or allow_zero:
            return p


def random_weight(rng, nvars, d=1, lo=-3, hi=3, rational=False):
    def entry():
        num = rng.randint(lo, hi)
        return Fraction(num, rng.randint(1, 3)) if rational else Fraction(num)

    return Weight(tuple(tuple(entry() for _ in range(d)) for _ in range(nvars)))


def random_point_set(rng, max_points=12, max_dim=4, hi=3):
    dim = rng.randint(1, max_dim)
    count = rng.randint(1, max_points)
    return frozenset(tuple(rng.randint(0, hi) for _ in range(dim)) for _ in range(count))


def random_triangular_lnd(rng, m=None, max_deg=3):
    """D(x1) constant, D(x_i) in Q[x1..x_{i-1}] of degree <= max_deg."""
    m = m or rng.randint(1, 4)
    images = [Poly.const(rng.randint(-3, 3), m)]
    for i in range(1, m):
        if rng.random() < 0.2:
            images.append(Poly.zero(m))
            continue
        lower = random_poly(rng, i, max_terms=3, max_deg=max_deg, bound=5)
        images.append(lower.embed(m))
    return LND(images)


def mutate_coaction(rng, action: GaAction):
    """Images breaking one coaction axiom, and the error class expected.

    A z-free perturbation breaks the counit law. Adding c*x^a*z^j (j >= 2)
    keeps the counit and the z-linear part D, and a coaction over Q is
    determined by D as exp(zD), so coassociativity must fail.
    """
    m = action.m
    i = rng.randrange(m)
    images = list(action.images)
    mono = Poly.monomial(tuple(rng.randint(0, 2) for _ in range(m)), _coeff(rng, 5))
    if rng.random() < 0.5:
        images[i] = images[i] + ZPoly.from_poly(mono)
        return images, errors.CounitFails
    j = rng.randint(2, 3)
    images[i] = images[i] + ZPoly(m, {j: mono})
    return images, errors.CoassocFails


def random_sum_family(rng):
    n = rng.randint(1, 3)
    w = random_weight(rng, n, d=rng.randint(1, 2))
    fs = [random_poly(rng, n, max_terms=5, max_exp=3) for _ in range(rng.randint(1, 5))]
    if rng.random() < 0.4:
        degs = [wdeg(f, w) for f in fs]
        top = max(degs)
        s = Poly.zero(n)
        for f, d in zip(fs, degs):
            if d == top:
                s = s + initial_form(f, w)
        fs.append(-s)
    return fs, w


def random_prop23_instance(rng):
    n = rng.randint(1, 3)
    m = rng.randint(1, 3)
    images = [random_poly(rng, m, max_terms=3, max_deg=4, bound=5) for _ in range(n)]
    cancel = n >= 2 and rng.random() < 0.25
    if cancel:
        # psi(x1) + psi(x2) = 0, so psi^u kills x1 + x2 and its multiples
        images[1] = -images[0]
    psi = AlgebraHom(n, tuple(images))
    u = random_weight(rng, m, d=rng.randint(1, 2))
    f = random_poly(rng, n, max_terms=4, max_deg=4, bound=5)
    if cancel and rng.random() < 0.5:
        f = (Poly.var(0, n) + Poly.var(1, n)) * random_poly(rng, n, max_terms=2, max_deg=2, bound=5)
    return psi, u, f


# -- curated corpus ------------------------------------------------------------


@dataclass(frozen=True)
class SuiteEntry:
    """A nontrivial action on m variables and kernel elements lying in Q[x1..xn]."""

    name: str
    action: GaAction
    n: int
    kernel: tuple


def _lnd(images, m):
    return lnd_exp(LND(parse_many(images, m)))


def _ap(F, G, m):
    return AutomorphismPair(tuple(parse_many(F, m)), tuple(parse_many(G, m)))


def curated_suite():
    entries = [
        ("lnd_linear_2", _lnd(["0", "x1"], 2), 2, ["x1"]),
        ("lnd_translate_2", _lnd(["0", "1"], 2), 2, ["x1"]),
        ("lnd_cubic_2", _lnd(["0", "x1^3 + 2"], 2), 2, ["x1"]),
        ("lnd_reversed_2", _lnd(["x2", "0"], 2), 2, ["x2"]),
        ("lnd_weitzenbock_3", _lnd(["0", "x1", "x2"], 3), 3, ["x1", "x2^2 - 2*x1*x3"]),
        ("lnd_weitzenbock_3_n2", _lnd(["0", "x1", "x2"], 3), 2, ["x1"]),
        ("lnd_square_3", _lnd(["0", "x1^2", "x2"], 3), 3, ["x1", "x2^2 - 2*x1^2*x3"]),
        ("lnd_parallel_3", _lnd(["0", "x1", "x1"], 3), 3, ["x1", "x2 - x3"]),
        (
            "lnd_nagata_3",
            _lnd(["-2*x1*x2*x3 - 2*x2^3", "x1*x3^2 + x2^2*x3", "0"], 3),
            3,
            ["x3", "x1*x3 + x2^2"],
        ),
        (
            "lnd_weitzenbock_4_n3",
            _lnd(["0", "x1", "x2", "x3"], 4),
            3,
            ["x1", "x2^2 - 2*x1*x3"],
        ),
        (
            "translation_triangular_2",
            translation_action(_ap(["x1", "x2 + x1^2"], ["x1", "x2 - x1^2"], 2)),
            2,
            ["x2 + x1^2"],
        ),
        (
            "translation_swap_2",
            translation_action(_ap(["x2", "x1"], ["x2", "x1"], 2)),
            2,
            ["x1"],
        ),
        (
            "translation_mixed_2",
            translation_action(
                _ap(["x1 + x2", "x2 + x1^2 + 2*x1*x2 + x2^2"], ["x1 - x2 + x1^2", "x2 - x1^2"], 2)
            ),
            2,
            ["x2 + x1^2 + 2*x1*x2 + x2^2"],
        ),
        (
            "translation_triangular_3",
            translation_action(
                _ap(
                    ["x1", "x2 + x1^2", "x3 + x1*x2"],
                    ["x1", "x2 - x1^2", "x3 - x1*x2 + x1^3"],
                    3,
                )
            ),
            3,
            ["x2 + x1^2", "x3 + x1*x2"],
        ),
        (
            "translation_stable_3_n2",
            translation_action(
                _ap(
                    ["x1 + x2*x3", "x2", "x3 + x2^2"],
                    ["x1 - x2*x3 + x2^3", "x2", "x3 - x2^2"],
                    3,
                )
            ),
            2,
            ["x2"],
        ),
    ]
    return [SuiteEntry(name, a, n, tuple(parse_many(k, n))) for name, a, n, k in entries]


def suite_invariants(entry: SuiteEntry, rng, count=4):
    """Random nonconstant polynomial expressions in the entry's kernel elements."""
    k = len(entry.kernel)
    out = []
    while len(out) < count:
        P = random_poly(rng, k, max_terms=3, max_deg=3, bound=4)
        if P.is_constant():
            continue
        f = P.compose(list(entry.kernel))
        if not f.is_constant():
            out.append(f)
    return out


def suite_weights(n):
    return [
        Weight.of([1] * n),
        Weight.of(list(range(1, n + 1))),
        Weight.of([(-1) ** i * (i + 2) for i in range(n)]),
        Weight.of([[1, 0]] + [[0, i] for i in range(1, n)]),
        Weight.of([Fraction(1, 2)] + [Fraction(-3, 2)] * (n - 1)),
        Weight.of([0] * n),
    ]


# -- suites for the fuzz command -----------------------------------------------


def _suite_product(rng):
    n = rng.randint(1, 4)
    w = random_weight(rng, n, d=rng.randint(1, 2))
    f, g = random_poly(rng, n), random_poly(rng, n)
    ok = wdeg(f * g, w) == wdeg(f, w) + wdeg(g, w) and initial_form(f * g, w) == initial_form(f, w) * initial_form(g, w)
    return Status.VERIFIED if ok else Status.FAILED


def _suite_sum_initial(rng):
    fs, w = random_sum_family(rng)
    if all(f.is_zero() for f in fs):
        return Status.HYPOTHESIS_FAILS
    return check_sum_initial(fs, w).status


def _suite_hull(rng):
    P = random_point_set(rng)
    certs = hull_vertices(P)
    return Status.VERIFIED if certs and all(c.verify(P) for c in certs) else Status.FAILED


def _suite_coaction(rng):
    action = lnd_exp(random_triangular_lnd(rng))
    images, expected = mutate_coaction(rng, action)
    try:
        make_coaction(images)
    except expected:
        return Status.VERIFIED
    except errors.InitformsError:
        return Status.FAILED
    return Status.FAILED


def _suite_prop23(rng):
    psi, u, f = random_prop23_instance(rng)
    if any(g.is_zero() for g in psi.poly_images()):
        return Status.HYPOTHESIS_FAILS
    return check_initial_compat(build_twist(psi, u), f).status


def _pick(rng):
    entry = rng.choice(curated_suite_cached())
    f = suite_invariants(entry, rng, 1)[0]
    return entry, f


def _suite_thm11(rng):
    entry, f = _pick(rng)
    return check_no_intruder_stable(f, entry.action, entry.n).status


def _suite_build_u(rng):
    entry = rng.choice(curated_suite_cached())
    w = rng.choice(suite_weights(entry.n))
    data = build_u(entry.action.restrict(entry.n), w.padded(entry.action.m), w)
    return Status.VERIFIED if data.postconditions_hold else Status.FAILED


def _suite_thm13(rng):
    entry, f = _pick(rng)
    w = rng.choice(suite_weights(entry.n))
    S = Poly.gens(entry.n)
    return find_nondividing(entry.action.restrict(entry.n), S, [f], w).status


_CACHE = {}


def curated_suite_cached():
    if "suite" not in _CACHE:
        _CACHE["suite"] = curated_suite()
    return _CACHE["suite"]


SUITES: dict[str, Callable] = {
    "product": _suite_product,
    "sum_initial": _suite_sum_initial,
    "hull": _suite_hull,
    "coaction": _suite_coaction,
    "prop23": _suite_prop23,
    "thm11": _suite_thm11,
    "build_u": _suite_build_u,
    "thm13": _suite_thm13,
}


def run_suite(name: str, seed: int, count: int):
    """Run ``count`` instances; instance k uses its own RNG seeded by (seed, k)."""
    check = SUITES[name]
    tally = {s.value: 0 for s in (Status.VERIFIED, Status.HYPOTHESIS_FAILS, Status.FAILED)}
    failures = []
    for k in range(count):
        rng = random.Random(f"{seed}:{k}")
        status = check(rng)
        tally[status.value] += 1
        if status is Status.FAILED:
            failures.append(k)
    return {"suite": name, "seed": seed, "count": count, "tally": tally, "failed_instances": failures}
