"""Exact phase-1 simplex over Q with Bland's anti-cycling rule.

Decides feasibility of ``A x = b, x >= 0``. An infeasible system comes back
with a Farkas certificate ``y`` satisfying ``y^T A <= 0`` and ``y^T b > 0``,
read off the optimal phase-1 basis as ``c_B B^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    x: Optional[tuple] = None
    farkas: Optional[tuple] = None
    pivots: int = 0


def phase_one(A: Sequence[Sequence], b: Sequence) -> FeasibilityResult:
    m = len(A)
    n = len(A[0]) if m else 0
    signs = [1 if Fraction(bi) >= 0 else -1 for bi in b]
    # tableau columns: n structural, m artificial, then rhs
    T = []
    for i in range(m):
        row = [signs[i] * Fraction(a) for a in A[i]]
        row += [Fraction(int(k == i)) for k in range(m)]
        row.append(signs[i] * Fraction(b[i]))
        T.append(row)
    basis = [n + i for i in range(m)]
    cost = [Fraction(0)] * n + [Fraction(1)] * m
    width = n + m
    pivots = 0

    while True:
        reduced = [
            cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m)) for j in range(width)
        ]
        entering = next((j for j in range(width) if reduced[j] < 0), None)
        if entering is None:
            break
        best = None
        for i in range(m):
            if T[i][entering] > 0:
                ratio = T[i][-1] / T[i][entering]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            # phase-1 objective is bounded below by 0, so this cannot happen
            raise ArithmeticError("unbounded phase-1 problem")
        r = best[1]
        piv = T[r][entering]
        T[r] = [v / piv for v in T[r]]
        for i in range(m):
            if i != r and T[i][entering]:
                f = T[i][entering]
                T[i] = [a - f * c for a, c in zip(T[i], T[r])]
        basis[r] = entering
        pivots += 1

    infeasibility = sum(T[i][-1] for i in range(m) if basis[i] >= n)
    if infeasibility == 0:
        x = [Fraction(0)] * n
        for i, j in enumerate(basis):
            if j < n:
                x[j] = T[i][-1]
        return FeasibilityResult(True, x=tuple(x), pivots=pivots)
    y = []
    for k in range(m):
        yk = sum(cost[basis[i]] * T[i][n + k] for i in range(m))
        y.append(signs[k] * yk)
    return FeasibilityResult(False, farkas=tuple(y), pivots=pivots)
