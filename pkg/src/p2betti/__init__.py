"""Betti numbers of GIT quotients of ``(P^2)^n`` by the diagonal ``PSL_3``
action, as functions of the weight vector ``m``.

The main entry points are :func:`ip` (intersection Poincaré polynomial of any
quotient), :func:`cone_position`, :func:`find_small_resolution` and the
six-point closed form :func:`ip_closed_form`.
"""
from .core import (
    AdmissibilityError,
    ConeKind,
    ConePosition,
    ConsistencyError,
    DegeneratePathError,
    PoincarePoly,
    Polarization,
    Subset,
    normalize,
    projective_poly,
)
from .crossing import WallCrossing, crossing_delta, epsilon, q_poly, side_fiber_dim
from .p1 import hk_poincare, p1_ip, short_subsets
from .paths import chamber_poincare, find_crossings, ip, reference, reference_alt
from .six import count_excluded_collinear_triples, ip_closed_form, singularity_report
from .smallres import find_small_resolution, is_small, stable_sandwich
from .stability import cone_position, gamma_c, gamma_l, subset_state, z_strata

__version__ = "0.1.0"
