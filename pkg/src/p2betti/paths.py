"""Poincaré polynomials of arbitrary quotients by walking through the cone.

A chamber's polynomial is obtained from a reference chamber with a known
quotient by following the straight segment to the target and adding the
wall-crossing correction at every wall met. Faces, points and walls are
reduced to chambers or to ``P^1`` problems first (see :func:`ip`).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .core import (
    AdmissibilityError,
    ConeKind,
    ConsistencyError,
    DegeneratePathError,
    PoincarePoly,
    Polarization,
    Subset,
    projective_poly,
    subset_table,
)
from .crossing import delta_from_reduced
from .p1 import p1_ip
from .smallres import find_small_resolution
from .stability import cone_position, gamma_c_all

__all__ = [
    "Crossing",
    "CrossingPlan",
    "reference",
    "reference_alt",
    "find_crossings",
    "transport",
    "chamber_poincare",
    "ip",
]


@dataclass(frozen=True)
class Crossing:
    s: Fraction
    subset: Subset
    wall_point: Polarization
    direction: int  # +1: into the gamma_c(K) > 0 side

    def to_dict(self) -> dict:
        return {
            "s": str(self.s),
            "subset": list(self.subset.indices),
            "wall_point": [int(w) for w in self.wall_point],
            "direction": self.direction,
        }


@dataclass(frozen=True)
class CrossingPlan:
    start: Polarization
    end: Polarization
    crossings: tuple[Crossing, ...]

    def __len__(self) -> int:
        return len(self.crossings)


def reference(n: int) -> tuple[Polarization, PoincarePoly]:
    """``(s,s,s,s,1,...,1)`` with ``s = 2(n-4)+1``; the quotient is ``(P^2)^{n-4}``."""
    if n < 4:
        raise AdmissibilityError("no positive-dimensional moduli for n < 4")
    s = 2 * (n - 4) + 1
    m = Polarization((s,) * 4 + (1,) * (n - 4))
    if cone_position(m).kind is not ConeKind.CHAMBER:
        raise ConsistencyError(f"reference {m} is not in a chamber")
    return m, projective_poly(2) ** (n - 4)


def reference_alt(n: int) -> tuple[Polarization, PoincarePoly]:
    """``(s,s,1,...,1)`` with ``s = n-3``; the quotient is ``P^{n-4} x P^{n-4}``."""
    if n < 5:
        raise AdmissibilityError("the two-heavy-point reference needs n >= 5")
    s = n - 3
    m = Polarization((s, s) + (1,) * (n - 2))
    if cone_position(m).kind is not ConeKind.CHAMBER:
        raise ConsistencyError(f"reference {m} is not in a chamber")
    return m, projective_poly(n - 4) ** 2


def _require_chamber(m: Polarization, what: str) -> None:
    kind = cone_position(m).kind
    if kind is not ConeKind.CHAMBER:
        raise AdmissibilityError(f"{what} {m} is not in a chamber ({kind.value})")


def _plan(a: tuple[int, ...], b: tuple[int, ...]) -> list[Crossing]:
    n = len(a)
    _, sizes = subset_table(n)
    g0 = gamma_c_all(a)
    g1 = gamma_c_all(b)
    sel = (sizes >= 2) & (sizes <= n - 3) & (np.sign(g0) != np.sign(g1))
    out = []
    for mask in np.flatnonzero(sel):
        x, y = int(g0[mask]), int(g1[mask])
        s = Fraction(x, x - y)
        # (x - y) * segment(s) = -y*a + x*b, an integer vector
        sign = 1 if x > y else -1
        v = [sign * (x * bi - y * ai) for ai, bi in zip(a, b)]
        g = gcd(*v)
        out.append(Crossing(s, Subset(int(mask), n), Polarization(tuple(t // g for t in v)), 1 if y > 0 else -1))
    out.sort(key=lambda c: c.s)
    for c0, c1 in zip(out, out[1:]):
        if c0.s == c1.s:
            raise DegeneratePathError(f"walls {c0.subset} and {c1.subset} are met at s={c0.s}")
    return out


def find_crossings(start, end) -> CrossingPlan:
    """Walls met by the segment between two chamber polarizations, in order.

    Both endpoints are replaced by their coprime integer representatives, so
    the segment is the one between those integer vectors. Raises
    :class:`DegeneratePathError` when two walls are met at the same point.
    """
    start, end = Polarization.of(start), Polarization.of(end)
    if start.n != end.n:
        raise ValueError("endpoints of different length")
    _require_chamber(start, "start")
    _require_chamber(end, "end")
    a, b = start.integers(), end.integers()
    # The admissible interior is convex, so the open segment stays inside it;
    # distinct crossing parameters mean every wall point is on a single wall.
    crossings = _plan(a, b)
    return CrossingPlan(Polarization(a), Polarization(b), tuple(crossings))


def _accumulate(poly: PoincarePoly, plan: CrossingPlan) -> PoincarePoly:
    n = plan.start.n
    for c in plan.crossings:
        reduced = [w for i, w in enumerate(c.wall_point.integers()) if not c.subset.mask >> i & 1]
        poly = poly + c.direction * delta_from_reduced(n, c.subset, reduced)
    return poly


def _perturbed(v: tuple[int, ...], rng: random.Random, prime: int, spread: int) -> tuple[int, ...]:
    return tuple(prime * x + rng.randint(-spread, spread) for x in v)


def transport(poly: PoincarePoly, start, end, *, seed: int = 0, prime: int = 101,
              retries: int = 64) -> PoincarePoly:
    """Carry the Poincaré polynomial of ``start``'s chamber over to ``end``'s.

    A degenerate straight segment is replaced by one between perturbed
    endpoints ``prime * m + k`` that stay in the same chambers. ``k`` is drawn
    from a ``seed``-ed generator in ``{-2..2}^n``; the range widens by 2 every
    8 failed attempts, since many equal weights can keep the small range
    degenerate.
    """
    start, end = Polarization.of(start), Polarization.of(end)
    try:
        return _accumulate(poly, find_crossings(start, end))
    except DegeneratePathError:
        pass
    a, b = start.integers(), end.integers()
    sig_a, sig_b = np.sign(gamma_c_all(a)), np.sign(gamma_c_all(b))
    rng = random.Random(seed)
    for attempt in range(retries):
        spread = 2 * (1 + attempt // 8)
        a2, b2 = _perturbed(a, rng, prime, spread), _perturbed(b, rng, prime, spread)
        if (np.sign(gamma_c_all(a2)) != sig_a).any() or (np.sign(gamma_c_all(b2)) != sig_b).any():
            continue
        try:
            plan = find_crossings(a2, b2)
        except DegeneratePathError:
            continue
        return _accumulate(poly, plan)
    raise ConsistencyError(f"could not find generic path from {start} to {end}")


def chamber_poincare(m, *, seed: int = 0, start=None) -> PoincarePoly:
    """Poincaré polynomial of the geometric quotient for a chamber polarization.

    ``start`` is an optional ``(polarization, polynomial)`` pair to walk from;
    the default is :func:`reference`.
    """
    m = Polarization.of(m)
    _require_chamber(m, "target")
    if start is None:
        start = reference(m.n)
    s, poly = start
    return transport(poly, s, m, seed=seed)


def ip(m, *, seed: int = 0) -> PoincarePoly:
    """Intersection Poincaré polynomial of ``X^SS(m) // G`` for any ``m``."""
    m = Polarization.of(m)
    pos = cone_position(m)
    kind = pos.kind
    if kind is ConeKind.EMPTY:
        return PoincarePoly()
    if kind is ConeKind.FACE_ZERO:
        return ip(m.delete(pos.indices), seed=seed)
    if kind is ConeKind.POINT:
        return PoincarePoly([1])
    if kind is ConeKind.FACE_TOP:
        return p1_ip(m.delete(pos.indices))
    if kind is ConeKind.WALL:
        return chamber_poincare(find_small_resolution(m), seed=seed)
    return chamber_poincare(m, seed=seed)
