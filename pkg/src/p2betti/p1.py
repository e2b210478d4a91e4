"""Weighted configurations of points on ``P^1`` modulo ``SL_2`` (polygon spaces).

These quotients appear twice: as the strictly semistable locus ``Z(m)`` over a
wall (weights with the coincident indices deleted) and as the degenerate
quotient on a top face of the cone.

The Poincaré polynomial of a generic weight vector ``w`` of length ``N``,
sorted non-increasing, is::

    P = 1/(1 - t^2) * sum_{J in S} (t^{2|J|} - t^{2(N-|J|-2)})

where ``S`` collects the ``J`` in ``{1..N-1}`` with
``w_N + sum_J w < sum of the remaining weights`` (``J + {N}`` is short).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import (
    AdmissibilityError,
    ConsistencyError,
    PoincarePoly,
    Polarization,
    Subset,
    ints_of,
    subset_table,
)

__all__ = [
    "ShortSubsetFamily",
    "short_subsets",
    "hk_poincare",
    "p1_ip",
    "is_generic_p1",
]


@dataclass(frozen=True)
class ShortSubsetFamily:
    weights: Polarization
    members: tuple[Subset, ...]
    literal: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, J) -> bool:
        if not isinstance(J, Subset):
            J = Subset.of(J, self.weights.n)
        return J in self.members


def _check_p1_input(w) -> None:
    if len(w) < 3:
        raise AdmissibilityError("no moduli: a P^1 configuration needs at least 3 points")
    if any(x <= 0 for x in w):
        raise AdmissibilityError("P^1 weights must be positive")


def _half_sums(w: tuple[int, ...]) -> np.ndarray:
    """``2 * sum_J w - |w|`` for every mask ``J``."""
    member, _ = subset_table(len(w))
    arr = np.array(w, dtype=np.int64)
    return 2 * (member @ arr) - arr.sum()


def _sorted_ints(mp) -> tuple[int, ...]:
    return tuple(sorted(ints_of(mp), reverse=True))


def is_generic_p1(mp) -> bool:
    """No subset carries exactly half of the total weight."""
    w = ints_of(mp)
    return not (_half_sums(w) == 0).any()


def short_subsets(mp, *, literal: bool = False) -> ShortSubsetFamily:
    """Enumerate the index family of the polygon-space formula.

    With ``literal=True`` ``J`` may also contain ``N`` and the right-hand side
    runs over all ``i`` not in ``J``; this reading is exposed for comparison
    only and does not reproduce the known five-point value.
    """
    mp = Polarization.of(mp)
    _check_p1_input(mp.weights)
    if any(a < b for a, b in zip(mp, mp.weights[1:])):
        raise ValueError("weights must be sorted non-increasing")
    N = mp.n
    w = np.array(mp.integers(), dtype=np.int64)
    member, _ = subset_table(N)
    sums = member @ w
    total = w.sum()
    last = w[-1]
    if literal:
        ok = last + 2 * sums < total
        masks = np.flatnonzero(ok)
    else:
        free = (np.arange(1 << N) >> (N - 1)) & 1 == 0
        ok = free & (2 * (last + sums) < total)
        masks = np.flatnonzero(ok)
    members = tuple(Subset(int(k), N) for k in masks)
    return ShortSubsetFamily(mp, members, literal)


def _hk_from_family(fam: ShortSubsetFamily) -> PoincarePoly:
    N = fam.weights.n
    num = PoincarePoly()
    for J in fam.members:
        k = J.size
        hi = N - k - 2
        if hi < 0:
            raise ConsistencyError(f"negative exponent for J={J} in N={N}")
        num = num + PoincarePoly.monomial(2 * k) - PoincarePoly.monomial(2 * hi)
    quo, rem = num.divmod_one_minus_t2()
    if rem:
        raise ConsistencyError(f"(1 - t^2) does not divide {num} (weights {fam.weights})")
    return quo


@lru_cache(maxsize=4096)
def _hk_cached(w: tuple[int, ...], literal: bool) -> PoincarePoly:
    return _hk_from_family(short_subsets(Polarization(w), literal=literal))


def hk_poincare(mp, *, literal: bool = False) -> PoincarePoly:
    """Poincaré polynomial of a generic weighted ``(P^1)^N // SL_2``.

    Weights are sorted internally. An empty quotient (one weight above half
    the total) gives the zero polynomial.
    """
    w = _sorted_ints(mp)
    _check_p1_input(w)
    if 2 * w[0] > sum(w):
        return PoincarePoly()
    if not is_generic_p1(w):
        raise AdmissibilityError(f"strictly semistable P1 configuration {Polarization(w)}")
    return _hk_cached(w, literal)


def _perturb_to_small_side(w: tuple[int, ...], tie_sign: int) -> tuple[int, ...]:
    # lam*w - c*(1,...,1) +/- e_1: the uniform shift puts every wall J with
    # |J| < N/2 on the side where J is the heavier part (smaller fibre); the
    # e_1 term breaks the |J| = N/2 ties; lam keeps all other signs.
    N = len(w)
    c = 2
    lam = 2 * (c * N + 2) + 1
    cand = [lam * x - c for x in w]
    cand[0] += tie_sign
    g0 = _half_sums(w)
    g1 = _half_sums(tuple(cand))
    _, sizes = subset_table(N)
    if (g1 == 0).any():
        raise ConsistencyError(f"perturbation of {w} is not generic")
    keep = g0 != 0
    if (np.sign(g0[keep]) != np.sign(g1[keep])).any():
        raise ConsistencyError(f"perturbation of {w} left the adjacent chambers")
    walls = g0 == 0
    want = np.sign(N - 2 * sizes[walls])
    got = np.sign(g1[walls])
    strict = want != 0
    if (want[strict] != got[strict]).any():
        raise ConsistencyError(f"perturbation of {w} missed the minimal-fibre side")
    return tuple(cand)


def p1_ip(mp) -> PoincarePoly:
    """Intersection Poincaré polynomial of ``(P^1)^N(mp) // SL_2``.

    Generic weights go straight to :func:`hk_poincare`. On a wall of the
    ``P^1`` problem the value is the Poincaré polynomial of the adjacent
    chamber whose fibres over the strictly semistable points are smallest
    (for a wall ``J | J^c`` that is the side where the smaller of the two
    index sets is the heavier one). If some weight is exactly half the
    total the quotient is a single point.
    """
    w = _sorted_ints(mp)
    _check_p1_input(w)
    total = sum(w)
    if 2 * w[0] > total:
        return PoincarePoly()
    if 2 * w[0] == total:
        return PoincarePoly([1])
    return _p1_ip_cached(w)


@lru_cache(maxsize=4096)
def _p1_ip_cached(w: tuple[int, ...]) -> PoincarePoly:
    if is_generic_p1(w):
        return _hk_cached(w, False)
    a = hk_poincare(_perturb_to_small_side(w, +1))
    b = hk_poincare(_perturb_to_small_side(w, -1))
    if a != b:
        raise ConsistencyError(f"tie-breaking sides disagree for {w}: {a} vs {b}")
    return a
