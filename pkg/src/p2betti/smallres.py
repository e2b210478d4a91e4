"""Small resolutions of quotients on walls.

A nearby chamber polarization ``cand`` resolves the quotient at ``m`` when its
stable locus is squeezed between the stable and semistable loci of ``m``; the
resolution is small when, over every wall ``K`` through ``m``, ``cand`` sits
on the side whose fibre over ``Z`` is the smaller projective space.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import (
    AdmissibilityError,
    ConeKind,
    ConsistencyError,
    Polarization,
    Subset,
    subset_table,
)
from .crossing import side_fiber_dim
from .stability import cone_position, gamma_c_all, int_weights

__all__ = [
    "WallCheck",
    "SmallnessReport",
    "required_fiber_dims",
    "stable_sandwich",
    "is_small",
    "satisfies_definition",
    "find_small_resolution",
]


@dataclass(frozen=True)
class WallCheck:
    subset: Subset
    side: int
    fiber_dim: int
    required: str
    required_dims: tuple[int, ...]
    ok: bool

    def to_dict(self) -> dict:
        return {
            "subset": list(self.subset.indices),
            "side": self.side,
            "fiber_dim": self.fiber_dim,
            "required": self.required,
            "required_dims": list(self.required_dims),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class SmallnessReport:
    target: Polarization
    candidate: Polarization
    per_wall: tuple[WallCheck, ...]
    sandwich_ok: bool
    chamber_ok: bool
    verdict: bool

    def to_dict(self) -> dict:
        return {
            "target": [str(w) for w in self.target],
            "candidate": [str(w) for w in self.candidate],
            "per_wall": [c.to_dict() for c in self.per_wall],
            "sandwich_ok": self.sandwich_ok,
            "chamber_ok": self.chamber_ok,
            "verdict": self.verdict,
        }


def required_fiber_dims(n: int, K) -> tuple[int, ...]:
    """Fibre dimensions over ``Z_K`` allowed for a small resolution.

    ``2|K|-3`` when ``3|K| < n+1`` and ``n-|K|-3`` when ``3|K| > n-1``; both
    ranges meet only at ``3|K| = n`` where the two values coincide.
    """
    k = K if isinstance(K, int) else len(K)
    dims = set()
    if 3 * k < n + 1:
        dims.add(2 * k - 3)
    if 3 * k > n - 1:
        dims.add(n - k - 3)
    return tuple(sorted(dims))


def _sign_mask(n: int) -> np.ndarray:
    _, sizes = subset_table(n)
    return (sizes >= 1) & (sizes <= n - 1)


def stable_sandwich(m, cand) -> bool:
    """``X^SS(m) ⊃ X^S(cand)`` and ``X^S(cand) ⊃ X^S(m)``: every strict sign of
    ``gamma_c`` at ``m`` is kept at ``cand``."""
    m, cand = Polarization.of(m), Polarization.of(cand)
    if m.n != cand.n:
        raise ValueError("polarizations of different length")
    g0, g1 = gamma_c_all(m), gamma_c_all(cand)
    sel = _sign_mask(m.n) & (g0 != 0)
    return bool((np.sign(g0[sel]) == np.sign(g1[sel])).all())


def is_small(m, cand) -> SmallnessReport:
    m, cand = Polarization.of(m), Polarization.of(cand)
    if m.n != cand.n:
        raise ValueError("polarizations of different length")
    pos = cone_position(m)
    if pos.kind is not ConeKind.WALL:
        raise AdmissibilityError(f"{m} is not on a wall ({pos.kind.value})")
    n = m.n
    g1 = gamma_c_all(cand)
    checks = []
    for K in pos.walls:
        side = int(np.sign(g1[K.mask]))
        dims = required_fiber_dims(n, K)
        label = "either" if 3 * K.size == n else "min-fiber"
        if side == 0:
            checks.append(WallCheck(K, 0, -1, label, dims, False))
            continue
        d = side_fiber_dim(n, K, side)
        checks.append(WallCheck(K, side, d, label, dims, d in dims))
    sandwich = stable_sandwich(m, cand)
    chamber = cone_position(cand).kind is ConeKind.CHAMBER
    verdict = sandwich and chamber and all(c.ok for c in checks)
    return SmallnessReport(m, cand, tuple(checks), sandwich, chamber, verdict)


def satisfies_definition(report: SmallnessReport) -> bool:
    """Recheck ``codim {fibre dim >= r} > 2r`` for every ``r > 0`` directly.

    The stratum over wall ``K`` has codimension ``2(n-4) - (n-|K|-3)`` in the
    quotient and carries fibres of the realized dimension.
    """
    n = report.target.n
    for c in report.per_wall:
        if c.fiber_dim < 0:
            return False
        codim = 2 * (n - 4) - (n - c.subset.size - 3)
        if any(codim <= 2 * r for r in range(1, c.fiber_dim + 1)):
            return False
    return True


def _deltas(n: int, limit: int):
    """``{-1,0,1}^n`` ordered by l1 norm, then lexicographically; at most ``limit``."""
    count = 0
    for d in range(n + 1):
        layer = []
        for support in itertools.combinations(range(n), d):
            for signs in itertools.product((-1, 1), repeat=d):
                v = [0] * n
                for i, s in zip(support, signs):
                    v[i] = s
                layer.append(tuple(v))
        layer.sort()
        for v in layer:
            yield v
            count += 1
            if count >= limit:
                return


def _search(base: np.ndarray, n: int, g_m: np.ndarray, walls, limit: int):
    """First ``base + delta`` passing the vectorized small-side filter."""
    member, sizes = subset_table(n)
    strict = _sign_mask(n) & (g_m != 0)
    want = np.sign(g_m[strict])
    wall_idx = np.array([K.mask for K in walls], dtype=np.int64)
    allowed = np.zeros((len(walls), 2), dtype=bool)  # columns: side -1, side +1
    for r, K in enumerate(walls):
        dims = required_fiber_dims(n, K)
        allowed[r, 0] = side_fiber_dim(n, K, -1) in dims
        allowed[r, 1] = side_fiber_dim(n, K, +1) in dims
    interior = (sizes >= 1) & (sizes <= n - 1)
    chunk = max(1, (1 << 21) >> n)
    deltas = _deltas(n, limit)
    dtype = base.dtype
    while True:
        block = list(itertools.islice(deltas, chunk))
        if not block:
            return None
        cands = base[None, :] + np.array(block, dtype=dtype)
        pos = (cands > 0).all(axis=1)
        g = cands.sum(axis=1)[:, None] - 3 * (cands @ member.T)
        ok = pos & (g[:, interior] != 0).all(axis=1)
        ok &= (np.sign(g[:, strict]) == want).all(axis=1)
        gw = g[:, wall_idx]
        ok &= np.where(gw > 0, allowed[:, 1], allowed[:, 0]).all(axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            return tuple(int(x) for x in cands[hits[0]])


def find_small_resolution(m, *, limit: int = 20000) -> Polarization:
    """Integral chamber polarization near ``m`` giving a small resolution.

    Candidates ``3m + delta`` with ``delta`` in ``{-1,0,1}^n`` are tried by
    increasing l1 norm, then with scale 9 and 27. If that fails (it can when
    equal-fibre walls must be split while other walls need a definite side)
    the search falls back to ``L*m - c*(1,...,1) + delta``: the uniform shift
    lands on the smaller-fibre side of every wall at once and ``delta``
    separates the rest.
    """
    m = Polarization.of(m)
    pos = cone_position(m)
    if pos.kind is not ConeKind.WALL:
        raise AdmissibilityError(f"{m} is not on a wall ({pos.kind.value})")
    n = m.n
    w = int_weights(m)
    g_m = gamma_c_all(m)
    walls = pos.walls
    bases = [3 * w, 9 * w, 27 * w]
    c = 2 * n + 1
    bases.append((2 * n * (c + 1) + 1) * w - c)
    for base in bases:
        found = _search(base, n, g_m, walls, limit)
        if found is None:
            continue
        cand = Polarization(found)
        if not is_small(m, cand).verdict:
            raise ConsistencyError(f"vectorized filter accepted {cand} for {m} but is_small rejects it")
        return cand
    raise ConsistencyError(f"no small resolution found for {m}")
