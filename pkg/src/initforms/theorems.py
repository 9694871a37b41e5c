"""Instance checkers for the initial-form theorems on stable Ga-invariants.

Everything here checks finitely many concrete instances; nothing is proved.
Each checker returns a ``Report``. A ``FAILED`` report with reason
``"theorem_violated"`` on inputs whose hypotheses were verified means a bug.

Notation: psi: Q[x1..xn] -> Q[x1..xm] is z-free, phi: Q[x1..xn] -> Q[x1..xm][z]
is not. For a weight u on the target, psi^u sends x_i to the u-initial form of
psi(x_i) and u_psi lists the u-degrees of the psi(x_i).

Injectivity of phi^u is certified through algebraic independence of its
images (for maps out of a polynomial ring over a field the two coincide).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .actions import GaAction, is_invariant, stable_invariant_witness, translation_action, AutomorphismPair
from .errors import (
    ArityMismatch,
    EmptyInvariantList,
    HypothesisFails,
    NoZTerms,
    PreconditionFails,
    SNotFullRank,
    StarFails,
    TooManyPolys,
    WitnessInvalid,
    ZeroImage,
    ZeroPolynomial,
)
from .newton import intruders
from .poly import AlgebraHom, Poly, ZPoly, algebraically_independent, exact_divide, substitute
from .reports import Report, Status
from .weights import MINUS_INFINITY, GroupElem, Weight, initial_form, wdeg


@dataclass(frozen=True)
class TwistData:
    psi: AlgebraHom
    u: Weight
    u_psi: Weight
    psi_u: AlgebraHom

    @property
    def n(self):
        return self.psi.src_nvars


def build_twist(psi: AlgebraHom, u: Weight) -> TwistData:
    if not psi.is_z_free():
        raise PreconditionFails("psi must map into Q[x1..xm] (no z)")
    if u.nvars != psi.target_nvars:
        raise ArityMismatch(f"weight of length {u.nvars} for {psi.target_nvars} target variables")
    images = psi.poly_images()
    for i, g in enumerate(images):
        if g.is_zero():
            raise ZeroImage(i)
    u_psi = Weight(tuple(wdeg(g, u) for g in images))
    psi_u = AlgebraHom(psi.src_nvars, tuple(initial_form(g, u) for g in images))
    return TwistData(psi, u, u_psi, psi_u)


def check_initial_compat(t: TwistData, f: Poly) -> Report:
    """psi(f)^u == psi^u(f^{u_psi}) whenever the right-hand side is nonzero."""
    if f.nvars != t.n:
        raise ArityMismatch(f"f in {f.nvars} variables, psi has {t.n} sources")
    f_init = initial_form(f, t.u_psi)
    rhs = substitute(t.psi_u, f_init).to_poly()
    details = {"f_init": f_init, "rhs": rhs}
    if rhs.is_zero():
        return Report(Status.HYPOTHESIS_FAILS, reason="twisted_initial_form_vanishes", details=details)
    lhs = initial_form(substitute(t.psi, f).to_poly(), t.u)
    details["lhs"] = lhs
    if lhs == rhs:
        return Report(Status.VERIFIED, details=details)
    return Report(Status.FAILED, reason="theorem_violated", details=details)


def check_initial_membership(t: TwistData, l: int, f: Poly) -> Report:
    """If psi(f) lies in Q[x1..xl], so does psi^u(f^{u_psi})."""
    if f.nvars != t.n:
        raise ArityMismatch(f"f in {f.nvars} variables, psi has {t.n} sources")
    image = substitute(t.psi, f).to_poly()
    if any(i >= l for i in image.vars_used()):
        raise PreconditionFails(f"psi(f) = {image} is not in Q[x1..x{l}]")
    rhs = substitute(t.psi_u, initial_form(f, t.u_psi)).to_poly()
    outside = sorted(i for i in rhs.vars_used() if i >= l)
    details = {"image": rhs}
    if outside:
        return Report(Status.FAILED, witness=f"x{outside[0] + 1}", reason="theorem_violated", details=details)
    return Report(Status.VERIFIED, details=details)


# -- the z-weight construction ----------------------------------------------


def _z_candidates(phi: AlgebraHom, v: Weight, w: Weight):
    if v.nvars != phi.target_nvars or w.nvars != phi.src_nvars:
        raise ArityMismatch("weights do not match the homomorphism")
    out = []
    for i, img in enumerate(phi.images):
        for j, p in sorted(img.zcoeffs.items()):
            if j >= 1:
                out.append((i, j, (wdeg(p, v) - w[i]) / j))
    return out


def phi_z_degree(phi: AlgebraHom, v: Weight, w: Weight) -> GroupElem:
    """max over i and j >= 1 of (deg_v p_{i,j} - w_i) / j."""
    cands = _z_candidates(phi, v, w)
    if not cands:
        raise NoZTerms("phi maps Q[x1..xn] into Q[x1..xm]; no z-terms")
    return max(c for _, _, c in cands)


def check_star(phi: AlgebraHom, v: Weight, w: Weight) -> Report:
    """Condition (*): the v-initial forms of the p_i(0) are algebraically
    independent and deg_v p_i(0) = w_i.

    Independence is checked first; the report names the first failing clause.
    """
    if v.nvars != phi.target_nvars or w.nvars != phi.src_nvars:
        raise ArityMismatch("weights do not match the homomorphism")
    consts = [img.constant_term() for img in phi.images]
    inits = [initial_form(p, v) for p in consts]
    details = {"initial_forms": inits}
    try:
        independent = algebraically_independent(inits)
    except TooManyPolys:
        independent = False
    if not independent:
        return Report(Status.FAILED, reason="independence", details=details)
    for i, p in enumerate(consts):
        d = wdeg(p, v)
        if d == MINUS_INFINITY or d != w[i]:
            details["index"] = i + 1
            details["degree"] = d
            return Report(Status.FAILED, reason="degree", witness=f"x{i + 1}", details=details)
    return Report(Status.VERIFIED, details=details)


@dataclass(frozen=True)
class PhiData:
    phi: AlgebraHom
    v: Weight
    w: Weight
    deg_v_phi: GroupElem
    u: Weight
    phi_u: tuple
    maximizers: tuple
    degrees_match: bool
    z_monomial_present: bool
    independent: bool

    @property
    def postconditions_hold(self):
        return self.degrees_match and self.z_monomial_present and self.independent


def build_u(phi: AlgebraHom, v: Weight, w: Weight) -> PhiData:
    """u = (v, -deg_v phi) on (x1..xm, z), with its three defining properties checked."""
    star = check_star(phi, v, w)
    if not star.ok:
        raise StarFails(star.reason, star.details.get("index", 1) - 1)
    cands = _z_candidates(phi, v, w)
    if not cands:
        raise NoZTerms("phi maps Q[x1..xn] into Q[x1..xm]; no z-terms")
    top = max(c for _, _, c in cands)
    maximizers = tuple((i, j) for i, j, c in cands if c == top)
    u = v.extend(-top)
    flat = [img.flat() for img in phi.images]
    degrees_match = all(wdeg(p, u) == w[i] for i, p in enumerate(flat))
    phi_u = tuple(ZPoly.from_flat(initial_form(p, u)) for p in flat)
    z_present = all(not phi_u[i].coeff(j).is_zero() for i, j in maximizers)
    independent = algebraically_independent([p.flat() for p in phi_u])
    return PhiData(phi, v, w, top, u, phi_u, maximizers, degrees_match, z_present, independent)


# -- divisibility theorems ----------------------------------------------------


def _independent_subset(S: Sequence[Poly], n: int):
    # algebraic independence is a matroid, so greedy reaches the full rank
    chosen = []
    for g in S:
        if len(chosen) == n:
            break
        if algebraically_independent(chosen + [g]):
            chosen.append(g)
    return chosen


def find_nondividing(
    phi: AlgebraHom,
    S: Sequence[Poly],
    fs: Sequence[Poly],
    w: Weight,
    v: Optional[Weight] = None,
) -> Report:
    """Look for g in S dividing none of the f^w, f in the phi-invariant subring.

    ``v`` defaults to (w, 0, ..., 0), the weight for which (*) holds whenever
    phi is the restriction of a Ga-action.
    """
    n = phi.src_nvars
    if not fs:
        raise EmptyInvariantList("no invariants supplied")
    if w.nvars != n:
        raise ArityMismatch(f"weight of length {w.nvars} for {n} variables")
    for p in list(S) + list(fs):
        if p.nvars != n:
            raise ArityMismatch(f"{p} is not in Q[x1..x{n}]")
        if p.is_zero():
            raise ZeroPolynomial("S and fs must avoid 0")
    if len(_independent_subset(S, n)) < n:
        raise SNotFullRank(f"S has transcendence degree < {n}")
    for f in fs:
        if not substitute(phi, f).is_z_free():
            raise PreconditionFails(f"{f} is not invariant")
    if phi.is_z_free():
        return Report(Status.HYPOTHESIS_FAILS, reason="phi_has_no_z_terms")
    if v is None:
        v = w.padded(phi.target_nvars)
    star = check_star(phi, v, w)
    if not star.ok:
        return Report(Status.HYPOTHESIS_FAILS, reason=f"star_{star.reason}", details=star.details)

    inits = [initial_form(f, w) for f in fs]
    matrix = [[exact_divide(g, fw) is not None for fw in inits] for g in S]
    witnesses = [g for g, row in zip(S, matrix) if not any(row)]
    details = {"initial_forms": inits, "witnesses": witnesses}
    if witnesses:
        return Report(Status.VERIFIED, witness=witnesses[0], details=details)
    details["divides"] = matrix
    details["hypotheses_recheck"] = {"star": star.status, "phi_moves": not phi.is_z_free()}
    return Report(Status.FAILED, reason="theorem_violated", details=details)


def check_no_intruder_stable(f: Poly, action: GaAction, n: int) -> Report:
    """A verified stable Ga-invariant must have no intruder."""
    witness = stable_invariant_witness(action, f, n)
    if not witness.ok:
        raise WitnessInvalid(f"action does not witness {f} as stable invariant: {witness.reason}")
    found = intruders(f)
    details = {"moved": witness.details["moved"]}
    if found:
        return Report(Status.FAILED, witness=list(found[0]), reason="theorem_violated", details=details)
    return Report(Status.VERIFIED, details=details)


def check_coords_instance(
    ap: AutomorphismPair, n: int, S: Sequence[Poly], w: Weight, fs: Sequence[Poly]
) -> Report:
    """Nondividing witness for invariants of the translation f_1 -> f_1 + z.

    fs are elements of Q[x1..xn] lying in Q[f_2..f_m].
    """
    action = translation_action(ap)
    if n > ap.m:
        raise ArityMismatch(f"n = {n} exceeds m = {ap.m}")
    if not any(i < n for i in action.moved()):
        raise HypothesisFails(f"Q[x1..x{n}] is contained in Q[f_2..f_m]")
    for f in fs:
        if f.nvars != n:
            raise ArityMismatch(f"{f} is not in Q[x1..x{n}]")
        if not is_invariant(action, f.embed(ap.m)):
            raise PreconditionFails(f"{f} is not in Q[f_2..f_m]")
    return find_nondividing(action.restrict(n), S, fs, w)


def check_stable_coordinate(ap: AutomorphismPair, n: int, S: Sequence[Poly], w: Weight) -> Report:
    """Stable coordinate f = F_1 restricted to Q[x1..xn] (n >= 2).

    Picks the first i0 >= 2 for which translating f_{i0} moves some x_i with
    i <= n, then checks f against that translation.
    """
    f = ap.F[0].truncate(n)
    for i0 in range(1, ap.m):
        swapped = ap.swapped(i0)
        if any(i < n for i in translation_action(swapped).moved()):
            return check_coords_instance(swapped, n, S, w, [f])
    raise HypothesisFails("no translation moves Q[x1..xn]; n must be at least 2")
