"""Seeded sampling over integral polarizations: chamber discovery and the
six-point oracle comparison."""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .core import subset_table
from .paths import ip
from .six import ip_closed_form

__all__ = [
    "ChamberCount",
    "OracleResult",
    "admissible_samples",
    "count_chambers",
    "verify_six_point_oracle",
]


def admissible_samples(n: int, count: int, max_weight: int, seed: int) -> list[tuple[int, ...]]:
    """``count`` draws with ``1 <= m_i <= max_weight`` and ``m_i < |m|/3`` (rejection)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = tuple(rng.randint(1, max_weight) for _ in range(n))
        if all(3 * x < sum(m) for x in m):
            out.append(m)
    return out


@dataclass
class ChamberCount:
    n: int
    sampled: int
    admissible: int
    in_chambers: int
    distinct: int
    bound: int | None = None

    @property
    def within_bound(self) -> bool:
        return self.bound is None or self.distinct <= self.bound


def count_chambers(n: int, samples: int, max_weight: int, seed: int,
                   *, batch: int = 100_000) -> ChamberCount:
    """Distinct chambers met by sorted random integral polarizations.

    Each draw is sorted non-increasing; a chamber is identified by the sign
    pattern of ``gamma_c`` over the wall subsets (``2 <= |K| <= n-3``).
    """
    member, sizes = subset_table(n)
    cols = member[(sizes >= 2) & (sizes <= n - 3)]
    rng = np.random.default_rng(seed)
    seen: set[bytes] = set()
    admissible = in_chambers = 0
    left = samples
    while left > 0:
        k = min(batch, left)
        left -= k
        m = -np.sort(-rng.integers(1, max_weight + 1, size=(k, n)), axis=1)
        tot = m.sum(axis=1)
        ok = (3 * m < tot[:, None]).all(axis=1)
        m, tot = m[ok], tot[ok]
        admissible += len(m)
        g = tot[:, None] - 3 * (m @ cols.T)
        ch = (g != 0).all(axis=1)
        in_chambers += int(ch.sum())
        keys = np.packbits(g[ch] > 0, axis=1)
        seen.update(row.tobytes() for row in np.unique(keys, axis=0))
    return ChamberCount(n, samples, admissible, in_chambers, len(seen), 38 if n == 6 else None)


@dataclass
class OracleResult:
    samples: int
    matches: int
    walls: int
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.matches == self.samples


def _check_chunk(ms):
    from .core import ConeKind
    from .stability import cone_position

    out = []
    for m in ms:
        a, b = ip(m), ip_closed_form(m)
        out.append((m, a == b, cone_position(m).kind is ConeKind.WALL, a.to_list(), b.to_list()))
    return out


def verify_six_point_oracle(samples: int, max_weight: int, seed: int,
                            *, workers: int = 1) -> OracleResult:
    """Compare the wall-crossing pipeline against the six-point closed form."""
    ms = admissible_samples(6, samples, max_weight, seed)
    if workers > 1:
        size = max(1, len(ms) // (4 * workers))
        chunks = [ms[i:i + size] for i in range(0, len(ms), size)]
        with ProcessPoolExecutor(workers) as pool:
            rows = [r for part in pool.map(_check_chunk, chunks) for r in part]
    else:
        rows = _check_chunk(ms)
    res = OracleResult(samples, 0, 0)
    for m, same, wall, a, b in rows:
        res.matches += same
        res.walls += wall
        if not same:
            res.mismatches.append({"weights": list(m), "pipeline": a, "closed_form": b})
    return res
