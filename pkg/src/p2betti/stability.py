"""Numerical-criterion bookkeeping for ``(P^2)^n`` with weights ``m``.

For a subset ``K`` of ``{1..n}``::

    gamma_c(m, K) = |m| - 3 * sum(m_k for k in K)     # K coincident
    gamma_l(m, J) = 2|m| - 3 * sum(m_j for j in J)    # J collinear

and ``gamma_c(m, J) == -gamma_l(m, complement(J))``. Coincidence and
collinearity strata are semistable exactly when the matching value is
nonnegative (given that no single weight exceeds ``|m|/3``).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import (
    AdmissibilityError,
    ConeKind,
    ConePosition,
    Polarization,
    Subset,
    as_subset,
    ints_of,
    subset_table,
)

__all__ = [
    "StratumKind",
    "StratumStatus",
    "StratumState",
    "ZStratum",
    "gamma_c",
    "gamma_l",
    "gamma_c_all",
    "int_weights",
    "subset_state",
    "wall_subsets",
    "cone_position",
    "z_strata",
]


class StratumKind(enum.Enum):
    COINCIDENCE = "coincidence"
    COLLINEARITY = "collinearity"


class StratumStatus(enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    UNSTABLE = "unstable"

    @classmethod
    def from_sign(cls, g) -> StratumStatus:
        if g > 0:
            return cls.STABLE
        if g == 0:
            return cls.STRICTLY_SEMISTABLE
        return cls.UNSTABLE


@dataclass(frozen=True)
class StratumState:
    kind: StratumKind
    subset: Subset
    state: StratumStatus
    gamma: Fraction


@dataclass(frozen=True)
class ZStratum:
    """One component of the strictly semistable locus: ``K`` coincident,
    the complement collinear, parametrized by the ``K``-deleted weights."""

    coincident: Subset
    collinear: Subset
    dim: int
    reduced_weights: Polarization


def gamma_c(m, K) -> Fraction:
    m = Polarization.of(m)
    K = as_subset(K, m.n)
    return m.total - 3 * sum((m[i - 1] for i in K.indices), Fraction(0))


def gamma_l(m, J) -> Fraction:
    m = Polarization.of(m)
    J = as_subset(J, m.n)
    return 2 * m.total - 3 * sum((m[j - 1] for j in J.indices), Fraction(0))


def int_weights(m) -> np.ndarray:
    """Coprime integer representative as an array (object dtype if huge)."""
    ints = ints_of(m)
    big = max(ints) > 2**40
    return np.array(ints, dtype=object if big else np.int64)


def gamma_c_all(m) -> np.ndarray:
    """``gamma_c`` over every mask ``0 .. 2^n - 1``, up to a positive factor.

    Signs (and zeros) are exact; magnitudes are those of the coprime integer
    representative of ``m``.
    """
    w = int_weights(m)
    member, _ = subset_table(len(w))
    if w.dtype == object:
        member = member.astype(object)
    return w.sum() - 3 * (member @ w)


def _wall_masks(g: np.ndarray, n: int) -> np.ndarray:
    _, sizes = subset_table(n)
    hit = (g == 0) & (sizes >= 2) & (sizes <= n - 3)
    return np.flatnonzero(hit)


def _wall_list(w: tuple[int, ...]) -> list[Subset]:
    n = len(w)
    walls = [Subset(int(k), n) for k in _wall_masks(gamma_c_all(w), n)]
    walls.sort(key=Subset.sort_key)
    return walls


def wall_subsets(m) -> list[Subset]:
    """Subsets ``K`` with ``2 <= |K| <= n-3`` and ``sum_K m = |m|/3``."""
    return _wall_list(ints_of(m))


def subset_state(m, kind: StratumKind | str, S) -> StratumState:
    m = Polarization.of(m)
    kind = StratumKind(kind)
    S = as_subset(S, m.n)
    if any(w > m.lam for w in m):
        raise AdmissibilityError("outside admissible cone region")
    if kind is StratumKind.COINCIDENCE:
        if S.size < 2:
            raise ValueError("a coincidence stratum needs at least two indices")
        g = gamma_c(m, S)
    else:
        if S.size < 3:
            raise ValueError("a collinearity stratum needs at least three indices")
        g = gamma_l(m, S)
    return StratumState(kind, S, StratumStatus.from_sign(g), g)


def cone_position(m) -> ConePosition:
    """Classify ``m``; the first matching rule wins.

    Empty quotient (some weight above ``|m|/3``), zero-weight face, point
    quotient (two or more weights equal to ``|m|/3``), top face (exactly one),
    wall, chamber.
    """
    w = ints_of(m)
    T = sum(w)
    if any(3 * x > T for x in w):
        return ConePosition(ConeKind.EMPTY)
    zeros = tuple(i for i, x in enumerate(w, 1) if x == 0)
    if zeros:
        return ConePosition(ConeKind.FACE_ZERO, indices=zeros)
    tops = tuple(i for i, x in enumerate(w, 1) if 3 * x == T)
    if len(tops) >= 2:
        return ConePosition(ConeKind.POINT, indices=tops)
    if tops:
        return ConePosition(ConeKind.FACE_TOP, indices=tops)
    walls = _wall_list(w)
    if walls:
        return ConePosition(ConeKind.WALL, walls=tuple(walls))
    return ConePosition(ConeKind.CHAMBER)


def z_strata(m) -> list[ZStratum]:
    m = Polarization.of(m)
    pos = cone_position(m)
    if pos.kind in (ConeKind.EMPTY, ConeKind.FACE_ZERO):
        raise AdmissibilityError(f"no strictly semistable locus defined at {pos.kind.value}")
    out = []
    for K in wall_subsets(m):
        out.append(ZStratum(K, K.complement(), m.n - K.size - 3, m.delete(K.indices)))
    return out
