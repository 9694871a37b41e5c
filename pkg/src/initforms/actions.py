"""Ga-actions on Q[x1..xm] given as coactions sigma: x_i -> sigma(x_i) in Q[x][z].

``GaAction`` values are only produced by ``make_coaction``, which checks the
counit law and coassociativity, so downstream checkers can rely on both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import (
    ArityMismatch,
    CoassocFails,
    CounitFails,
    NotAnAutomorphism,
    NotLocallyNilpotentWithinCap,
)
from .poly import AlgebraHom, Poly, ZPoly, substitute
from .reports import Report, Status

DEFAULT_NILPOTENCY_CAP = 64

_TOKEN = object()


class GaAction:
    __slots__ = ("images",)

    def __init__(self, images, *, _token=None):
        if _token is not _TOKEN:
            raise TypeError("construct GaAction values with make_coaction")
        self.images = tuple(images)

    @property
    def m(self):
        return len(self.images)

    def as_hom(self) -> AlgebraHom:
        return AlgebraHom(self.m, self.images)

    def restrict(self, n: int) -> AlgebraHom:
        """phi = sigma restricted to Q[x1..xn]."""
        if not 1 <= n <= self.m:
            raise ArityMismatch(f"cannot restrict an action on {self.m} variables to {n}")
        return AlgebraHom(n, self.images[:n])

    def apply(self, f: Poly) -> ZPoly:
        return substitute(self.as_hom(), f)

    def moved(self):
        """0-based indices i with sigma(x_i) != x_i."""
        gens = Poly.gens(self.m)
        return [i for i, g in enumerate(self.images) if g != gens[i]]

    def is_trivial(self):
        return not self.moved()

    def __eq__(self, other):
        return isinstance(other, GaAction) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"GaAction({[str(g) for g in self.images]})"


def _as_zpoly(g):
    return g if isinstance(g, ZPoly) else ZPoly.from_poly(g)


def make_coaction(images: Sequence) -> GaAction:
    images = [_as_zpoly(g) for g in images]
    m = len(images)
    if m == 0 or any(g.nvars != m for g in images):
        raise ArityMismatch("a coaction on m variables needs m images in m variables")
    gens = Poly.gens(m)
    for i, g in enumerate(images):
        if g.constant_term() != gens[i]:
            raise CounitFails(i, g.constant_term())

    # Coassociativity compared coefficientwise in z2: for every k,
    #   sigma(p_k) == sum_{j >= k} C(j, k) p_j z^(j-k).
    flat = [g.flat() for g in images]
    z = Poly.var(m, m + 1)
    for i, g in enumerate(images):
        top = g.z_degree()
        for k in range(top + 1):
            lhs = g.coeff(k).compose(flat)
            rhs = Poly.zero(m + 1)
            for j in range(k, top + 1):
                p = g.coeff(j)
                if p:
                    rhs = rhs + p.embed(m + 1) * z ** (j - k) * comb(j, k)
            if lhs != rhs:
                raise CoassocFails(i, ZPoly.from_flat(lhs), ZPoly.from_flat(rhs))
    return GaAction(images, _token=_TOKEN)


def is_invariant(a: GaAction, f: Poly) -> bool:
    if f.nvars != a.m:
        raise ArityMismatch(f"action on {a.m} variables, polynomial in {f.nvars}")
    image = a.apply(f)
    free = image.is_z_free()
    fixed = image == f
    assert free == fixed, "z-free image must equal f (counit law)"
    return free


class LND:
    """Derivation D given by D(x_i), checked to be locally nilpotent.

    Nilpotency on each generator (within ``cap`` steps) implies local
    nilpotency on the whole ring by the Leibniz rule.
    """

    __slots__ = ("images", "cap", "_orbits")

    def __init__(self, images: Sequence[Poly], cap: int = DEFAULT_NILPOTENCY_CAP):
        images = tuple(images)
        m = len(images)
        if m == 0 or any(p.nvars != m for p in images):
            raise ArityMismatch("a derivation on m variables needs m images in m variables")
        self.images = images
        self.cap = cap
        orbits = []
        for i, x in enumerate(Poly.gens(m)):
            orbit = [x]
            while orbit[-1]:
                if len(orbit) > cap:
                    raise NotLocallyNilpotentWithinCap(i, cap)
                orbit.append(self(orbit[-1]))
            orbits.append(tuple(orbit[:-1]))
        self._orbits = tuple(orbits)

    @property
    def m(self):
        return len(self.images)

    def __call__(self, f: Poly) -> Poly:
        out = Poly.zero(self.m)
        for i, d in enumerate(self.images):
            if d:
                out = out + f.diff(i) * d
        return out

    def orbit(self, i):
        """[x_i, D(x_i), D^2(x_i), ...] up to the last nonzero term."""
        return self._orbits[i]


def lnd_exp(D: LND) -> GaAction:
    """sigma(x_i) = sum_j D^j(x_i) z^j / j!."""
    images = []
    for i in range(D.m):
        coeffs = {j: p * Fraction(1, factorial(j)) for j, p in enumerate(D.orbit(i))}
        images.append(ZPoly(D.m, coeffs))
    return make_coaction(images)


@dataclass(frozen=True)
class AutomorphismPair:
    """Mutually inverse polynomial maps x -> F(x) and x -> G(x)."""

    F: tuple
    G: tuple

    def __post_init__(self):
        F, G = tuple(self.F), tuple(self.G)
        m = len(F)
        if m == 0 or len(G) != m or any(p.nvars != m for p in F + G):
            raise ArityMismatch("F and G must be m polynomials in m variables")
        gens = Poly.gens(m)
        for i in range(m):
            if G[i].compose(F) != gens[i]:
                raise NotAnAutomorphism(f"G_{i + 1}(F) != x{i + 1}")
            if F[i].compose(G) != gens[i]:
                raise NotAnAutomorphism(f"F_{i + 1}(G) != x{i + 1}")
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "G", G)

    @property
    def m(self):
        return len(self.F)

    def swapped(self, i: int):
        """Same coordinate system with F_1 and F_{i+1} exchanged."""
        order = list(range(self.m))
        order[0], order[i] = order[i], order[0]
        F = [self.F[k] for k in order]
        gens = Poly.gens(self.m)
        G = [g.compose([gens[k] for k in order]) for g in self.G]
        return AutomorphismPair(tuple(F), tuple(G))


def translation_action(ap: AutomorphismPair) -> GaAction:
    """The action f_1 -> f_1 + z, f_i -> f_i (i >= 2), in x-coordinates.

    sigma(x_j) = G_j(F_1 + z, F_2, ..., F_m).
    """
    m = ap.m
    z = Poly.var(m, m + 1)
    args = [f.embed(m + 1) for f in ap.F]
    args[0] = args[0] + z
    action = make_coaction([ZPoly.from_flat(g.compose(args)) for g in ap.G])
    for f in ap.F[1:]:
        assert is_invariant(action, f), f"F component {f} is not invariant"
    return action


def stable_invariant_witness(a: GaAction, f: Poly, n: int) -> Report:
    """Check that (a, n) witnesses f as a stable Ga-invariant of Q[x1..xn]."""
    if f.nvars != n or n > a.m:
        raise ArityMismatch(f"need f in {n} <= {a.m} variables, got {f.nvars}")
    if not is_invariant(a, f.embed(a.m)):
        return Report(Status.FAILED, reason="not_invariant")
    moved = [i for i in a.moved() if i < n]
    if not moved:
        return Report(Status.FAILED, reason="not_proper")
    return Report(Status.VERIFIED, witness=f"x{moved[0] + 1}", details={"moved": [i + 1 for i in moved]})
