"""Weighted initial forms, Newton polytopes and Ga-actions on Q[x1..xn]."""

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
from .newton import (
    VertexCertificate,
    check_monomial_criterion,
    has_intruder,
    hull_vertices,
    intruders,
    separating_weight,
    support,
)
from .poly import (
    AlgebraHom,
    Poly,
    ZPoly,
    algebraically_independent,
    divides,
    exact_divide,
    jacobian,
    parse_many,
    parse_poly,
    parse_zpoly,
    substitute,
)
from .reports import Report, Status
from .theorems import (
    PhiData,
    TwistData,
    build_twist,
    build_u,
    check_coords_instance,
    check_initial_compat,
    check_initial_membership,
    check_no_intruder_stable,
    check_stable_coordinate,
    check_star,
    find_nondividing,
    phi_z_degree,
)
from .weights import MINUS_INFINITY, GroupElem, Weight, check_sum_initial, cmp, initial_form, wdeg

__version__ = "0.1.0"
