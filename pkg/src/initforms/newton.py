"""Newton polytopes: certified hull vertices and intruders.

A support point is a vertex of the Newton polytope exactly when some linear
functional is strictly maximized there. Real functionals can always be
replaced by rational ones for finitely many lattice points, so every weight
produced here is rational, and it comes with an exact margin that can be
re-checked by plain arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import EmptySet, PointNotInSet, ZeroPolynomial
from .lp import phase_one
from .poly import Poly
from .reports import Report, Status
from .weights import Weight, initial_form

PointSet = frozenset


@dataclass(frozen=True)
class VertexCertificate:
    vertex: tuple
    weight: tuple
    margin: Fraction

    def verify(self, points: Iterable[tuple]) -> bool:
        top = _dot(self.vertex, self.weight)
        if self.margin <= 0:
            return False
        return all(top - _dot(q, self.weight) >= self.margin for q in points if q != self.vertex)

    def to_json(self):
        return {
            "vertex": list(self.vertex),
            "weight": [str(c) for c in self.weight],
            "margin": str(self.margin),
        }


def _dot(a, w):
    return sum((Fraction(x) * y for x, y in zip(a, w)), Fraction(0))


def support(f: Poly) -> PointSet:
    return f.support()


def _primitive(w):
    den = math.lcm(*(c.denominator for c in w))
    ints = [int(c * den) for c in w]
    g = math.gcd(*ints)
    return tuple(Fraction(c // g) for c in ints) if g else tuple(Fraction(0) for _ in w)


def separating_weight(p: tuple, P: Iterable[tuple]) -> Optional[tuple]:
    """Rational w with p.w > q.w for every other q in P, or None if p is not a vertex."""
    P = frozenset(tuple(q) for q in P)
    p = tuple(p)
    if p not in P:
        raise PointNotInSet(f"{p} is not in the point set")
    others = sorted(P - {p})
    if not others:
        return tuple(Fraction(0) for _ in p)
    n = len(p)
    # columns (q, 1) for q in others; right-hand side (p, 1)
    A = [[q[i] for q in others] for i in range(n)] + [[1] * len(others)]
    b = list(p) + [1]
    res = phase_one(A, b)
    if res.feasible:
        return None
    return _primitive(res.farkas[:n])


def _certificate(p, P):
    w = separating_weight(p, P)
    if w is None:
        return None
    top = _dot(p, w)
    gaps = [top - _dot(q, w) for q in P if q != p]
    return VertexCertificate(p, w, min(gaps) if gaps else Fraction(1))


def hull_vertices(P: Iterable[tuple]) -> list:
    """Certificates for the vertices of conv(P), sorted by vertex."""
    P = frozenset(tuple(q) for q in P)
    if not P:
        raise EmptySet("empty point set")
    certs = []
    for p in sorted(P):
        cert = _certificate(p, P)
        if cert is not None:
            assert cert.verify(P), f"bad certificate for {p}"
            certs.append(cert)
    return certs


def intruders(f: Poly) -> list:
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no Newton polytope")
    return [c.vertex for c in hull_vertices(f.support()) if all(c.vertex)]


def has_intruder(f: Poly) -> bool:
    return bool(intruders(f))


def check_monomial_criterion(f: Poly) -> Report:
    """Cross-check intruder detection against the initial-form divisibility test.

    f has no intruder iff at every weight isolating a vertex monomial, some
    variable fails to divide that monomial.
    """
    if f.is_zero():
        raise ZeroPolynomial("criterion needs a nonzero polynomial")
    certs = hull_vertices(f.support())
    all_miss = True
    rows = []
    for cert in certs:
        w = Weight.of(cert.weight)
        init = initial_form(f, w)
        expected = Poly(f.nvars, {cert.vertex: f.coefficient(cert.vertex)})
        if init != expected:
            return Report(
                Status.FAILED,
                witness=list(cert.vertex),
                reason="initial_form_not_vertex_monomial",
                details={"initial": init},
            )
        missing = [i + 1 for i, a in enumerate(cert.vertex) if a == 0]
        rows.append({"vertex": list(cert.vertex), "nondividing_vars": missing})
        all_miss = all_miss and bool(missing)
    intr = intruders(f)
    details = {"vertices": rows, "intruders": [list(v) for v in intr]}
    if (not intr) == all_miss:
        return Report(Status.VERIFIED, details=details)
    return Report(Status.FAILED, reason="inconsistent", details=details)
