"""Weights valued in Q^d with the lexicographic order.

Every finitely generated totally ordered abelian group embeds in some Q^d
ordered lexicographically, and Q^d is closed under the division by j needed
for the z-weight of the twisting construction, so this is the only group used.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import AllZero, ArityMismatch, DimMismatch, EmptyList
from .poly import Poly
from .reports import Report, Status


def _frac(x):
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class GroupElem:
    coords: tuple

    def __post_init__(self):
        coords = tuple(_frac(c) for c in self.coords)
        if not coords:
            raise DimMismatch("group elements need dimension >= 1")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, value):
        if isinstance(value, GroupElem):
            return value
        if isinstance(value, (int, Fraction, str)):
            return cls((value,))
        return cls(tuple(value))

    @classmethod
    def zero(cls, d):
        return cls((0,) * d)

    @property
    def dim(self):
        return len(self.coords)

    def _check(self, other):
        if not isinstance(other, GroupElem):
            raise TypeError(f"expected GroupElem, got {type(other).__name__}")
        if other.dim != self.dim:
            raise DimMismatch(f"dimension {self.dim} vs {other.dim}")

    def __eq__(self, other):
        if isinstance(other, GroupElem):
            return self.coords == other.coords
        if isinstance(other, MinusInfinity):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        if isinstance(other, MinusInfinity):
            return False
        self._check(other)
        return self.coords < other.coords

    def __add__(self, other):
        if isinstance(other, MinusInfinity):
            return other
        self._check(other)
        return GroupElem(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return GroupElem(tuple(-a for a in self.coords))

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def __mul__(self, k):
        k = Fraction(k)
        return GroupElem(tuple(a * k for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (1 / Fraction(k))

    def __repr__(self):
        return f"GroupElem({', '.join(str(c) for c in self.coords)})"

    __str__ = __repr__


class MinusInfinity:
    """Degree of the zero polynomial; below every GroupElem and absorbing."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return not isinstance(other, MinusInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, MinusInfinity)

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = MinusInfinity()
DegValue = Union[GroupElem, MinusInfinity]


def cmp(a: GroupElem, b: GroupElem) -> int:
    a._check(b)
    return (a.coords > b.coords) - (a.coords < b.coords)


@dataclass(frozen=True)
class Weight:
    """One group element per variable, all of one dimension."""

    per_var: tuple

    def __post_init__(self):
        per_var = tuple(GroupElem.of(g) for g in self.per_var)
        if not per_var:
            raise ArityMismatch("empty weight")
        if len({g.dim for g in per_var}) != 1:
            raise DimMismatch("weight entries have different dimensions")
        object.__setattr__(self, "per_var", per_var)

    @classmethod
    def of(cls, entries: Sequence):
        """``Weight.of([1, 2])`` (d=1) or ``Weight.of([[1, 0], [0, 1]])``."""
        if isinstance(entries, Weight):
            return entries
        return cls(tuple(entries))

    @property
    def nvars(self):
        return len(self.per_var)

    @property
    def dim(self):
        return self.per_var[0].dim

    def __len__(self):
        return len(self.per_var)

    def __getitem__(self, i):
        return self.per_var[i]

    def dot(self, a) -> GroupElem:
        total = [Fraction(0)] * self.dim
        for k, g in zip(a, self.per_var):
            if k:
                for t, c in enumerate(g.coords):
                    total[t] += k * c
        return GroupElem(tuple(total))

    def extend(self, *extra):
        return Weight(self.per_var + tuple(GroupElem.of(g) for g in extra))

    def padded(self, m):
        """(w, 0, ..., 0) of length m."""
        return self.extend(*[GroupElem.zero(self.dim)] * (m - self.nvars))

    def __repr__(self):
        return f"Weight({[list(map(str, g.coords)) for g in self.per_var]})"


def _check_arity(f: Poly, w: Weight):
    if f.nvars != w.nvars:
        raise ArityMismatch(f"polynomial in {f.nvars} variables, weight of length {w.nvars}")


def wdeg(f: Poly, w: Weight) -> DegValue:
    _check_arity(f, w)
    if f.is_zero():
        return MINUS_INFINITY
    return max(w.dot(e) for e in f.terms)


def initial_form(f: Poly, w: Weight) -> Poly:
    """Sum of the terms of f of maximal w-degree (ties all kept)."""
    _check_arity(f, w)
    if f.is_zero():
        return f
    degs = {e: w.dot(e) for e in f.terms}
    top = max(degs.values())
    return Poly(f.nvars, {e: c for e, c in f.terms.items() if degs[e] == top})


def check_sum_initial(fs: Sequence[Poly], w: Weight) -> Report:
    """Initial form of a sum when the top-degree initial forms do not cancel."""
    if not fs:
        raise EmptyList("need at least one polynomial")
    if all(f.is_zero() for f in fs):
        raise AllZero("all polynomials are zero")
    degs = [wdeg(f, w) for f in fs]
    delta = max(degs)
    top = [i for i, d in enumerate(degs) if d == delta]
    s = Poly.zero(fs[0].nvars)
    for i in top:
        s = s + initial_form(fs[i], w)
    details = {"delta": delta, "I": [i + 1 for i in top], "s": s}
    if s.is_zero():
        return Report(Status.HYPOTHESIS_FAILS, reason="initial_forms_cancel", details=details)
    total = Poly.zero(fs[0].nvars)
    for f in fs:
        total = total + f
    lhs = initial_form(total, w)
    details["initial_of_sum"] = lhs
    if lhs == s:
        return Report(Status.VERIFIED, details=details)
    return Report(Status.FAILED, reason="theorem_violated", details=details)
