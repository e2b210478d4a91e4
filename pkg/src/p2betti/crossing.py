"""Change of the Poincaré polynomial across one codimension-1 wall.

Along the wall ``sum_K m = |m|/3`` the two adjacent geometric quotients map
to the categorical one, with fibres over the strictly semistable locus::

    gamma_c(K) > 0 side:  P^{n-|K|-3}
    gamma_c(K) < 0 side:  P^{2|K|-3}

so ``P(plus side) - P(minus side) = eps * Q * IP(Z)`` with ``eps`` and ``Q``
depending only on ``n`` and ``|K|``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AdmissibilityError,
    ConeKind,
    PoincarePoly,
    Polarization,
    Subset,
    as_subset,
    projective_poly,
)
from .p1 import p1_ip
from .stability import cone_position

__all__ = [
    "WallCrossing",
    "side_fiber_dim",
    "epsilon",
    "q_poly",
    "crossing_delta",
    "delta_from_reduced",
]


def _size(n: int, K) -> int:
    k = K if isinstance(K, int) else as_subset(K, n).size
    if not 2 <= k <= n - 3:
        raise AdmissibilityError(f"|K|={k} outside 2..{n - 3} for n={n}")
    return k


def side_fiber_dim(n: int, K, side: int) -> int:
    """Fibre dimension over ``Z`` on the chamber where ``sign(gamma_c(K)) == side``."""
    k = _size(n, K)
    if side > 0:
        return n - k - 3
    if side < 0:
        return 2 * k - 3
    raise ValueError("side must be +1 or -1")


def epsilon(n: int, K) -> int:
    k = _size(n, K)
    return (3 * k < n) - (3 * k > n)


def q_poly(n: int, K) -> PoincarePoly:
    """``t^{2a+2} + ... + t^{2b}`` for fibre dimensions ``a < b``; zero on ties."""
    k = _size(n, K)
    lo, hi = sorted((n - k - 3, 2 * k - 3))
    return PoincarePoly([0] * (2 * lo + 2) + [1, 0] * (hi - lo))


def delta_from_reduced(n: int, K, reduced) -> PoincarePoly:
    """``eps * Q * IP(Z)`` given the ``K``-deleted weights; skips ``IP(Z)`` when ``eps == 0``."""
    eps = epsilon(n, K)
    if eps == 0:
        return PoincarePoly()
    return eps * q_poly(n, K) * p1_ip(reduced)


@dataclass(frozen=True)
class WallCrossing:
    wall_point: Polarization
    subset: Subset
    n: int
    fiber_plus: int
    fiber_minus: int
    z_poly: PoincarePoly

    @classmethod
    def at(cls, wall_point, K) -> WallCrossing:
        """Validate that ``wall_point`` lies on ``K`` and on no other wall."""
        m = Polarization.of(wall_point)
        K = as_subset(K, m.n)
        _size(m.n, K)
        pos = cone_position(m)
        if pos.kind is not ConeKind.WALL or K not in pos.walls:
            raise AdmissibilityError(f"{m} does not lie on the wall {K}")
        if len(pos.walls) > 1:
            raise AdmissibilityError(
                f"non-generic wall point {m}: walls {', '.join(map(str, pos.walls))}"
            )
        ints = Polarization(m.integers())
        return cls(
            wall_point=ints,
            subset=K,
            n=m.n,
            fiber_plus=side_fiber_dim(m.n, K, +1),
            fiber_minus=side_fiber_dim(m.n, K, -1),
            z_poly=p1_ip(ints.delete(K.indices)),
        )

    @property
    def delta(self) -> PoincarePoly:
        """``P(gamma_c(K) > 0 side) - P(gamma_c(K) < 0 side)``."""
        return epsilon(self.n, self.subset) * q_poly(self.n, self.subset) * self.z_poly


def crossing_delta(wall_point, K) -> PoincarePoly:
    return WallCrossing.at(wall_point, K).delta
