"""Brute-force oracles, deliberately independent of the library's fast paths."""

from __future__ import annotations

import itertools
from fractions import Fraction

from initforms import Poly


def row_reduce(rows):
    """Reduced row echelon form over Q; returns (rref rows, pivot columns)."""
    rows = [[Fraction(v) for v in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def solve(A, b):
    """Some solution of A x = b over Q, or None."""
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    rref, pivots = row_reduce(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rref[i][-1]
    return x


def nullity(A):
    _, pivots = row_reduce(A)
    return len(A[0]) - len(pivots)


def int_det(M):
    """Bareiss fraction-free determinant of an integer matrix."""
    M = [list(r) for r in M]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[-1][-1]


def affine_coordinates(points):
    """Coordinate indices on which the projection of aff(points) is injective."""
    points = list(points)
    base = points[0]
    _, pivots = row_reduce([[a - b for a, b in zip(q, base)] for q in points[1:]] or [[0] * len(base)])
    return pivots


def in_convex_hull(p, others):
    """Is p a convex combination of ``others``?

    Every r-dimensional polytope is a union of full-dimensional simplices
    spanned by its own points, so it suffices to solve the barycentric system
    (by Cramer's rule) for every (r+1)-subset after projecting onto
    coordinates that parametrize the affine hull.
    """
    others = list(others)
    if not others:
        return False
    coords = affine_coordinates(others)
    if len(affine_coordinates(others + [p])) > len(coords):
        return False  # p is outside the affine hull
    r = len(coords)
    proj = [[q[i] for i in coords] for q in others]
    target = [p[i] for i in coords] + [1]
    for T in itertools.combinations(proj, r + 1):
        cols = [list(t) + [1] for t in T]
        D = int_det([[c[i] for c in cols] for i in range(r + 1)])
        if D == 0:
            continue
        for k in range(r + 1):
            swapped = cols[:k] + [target] + cols[k + 1 :]
            Dk = int_det([[c[i] for c in swapped] for i in range(r + 1)])
            if Dk * D < 0:
                break
        else:
            return True
    return False


def brute_vertices(P):
    P = set(P)
    return {p for p in P if not in_convex_hull(p, P - {p})}


def naive_mul(f: Poly, g: Poly) -> Poly:
    out = {}
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + Fraction(c1) * Fraction(c2)
    return Poly(f.nvars, out)


def monomials_upto(nvars, deg):
    return [e for e in itertools.product(range(deg + 1), repeat=nvars) if sum(e) <= deg]


def divisible_by_undetermined_coefficients(g: Poly, f: Poly) -> bool:
    """Is there q with deg q <= deg f - deg g and g*q == f?"""
    if f.is_zero():
        return True
    bound = f.total_degree() - g.total_degree()
    if bound < 0:
        return False
    unknowns = monomials_upto(f.nvars, bound)
    targets = monomials_upto(f.nvars, f.total_degree())
    index = {e: k for k, e in enumerate(targets)}
    A = [[Fraction(0)] * len(unknowns) for _ in targets]
    for col, qe in enumerate(unknowns):
        for ge, c in g.terms.items():
            e = tuple(a + b for a, b in zip(ge, qe))
            A[index[e]][col] += c
    b = [f.coefficient(e) for e in targets]
    return solve(A, b) is not None


def has_relation_upto(p1: Poly, p2: Poly, deg=3) -> bool:
    """Nonzero R(X, Y) of total degree <= deg with R(p1, p2) == 0."""
    exps = [(a, b) for a in range(deg + 1) for b in range(deg + 1 - a)]
    values = [(p1**a) * (p2**b) for a, b in exps]
    monos = sorted({e for v in values for e in v.terms})
    if not monos:
        return True
    A = [[v.coefficient(e) for v in values] for e in monos]
    return nullity(A) > 0
