"""Six points in the plane: closed-form intersection Betti numbers and the
local classification of special points.

With weights sorted non-increasing, the quotient's intersection Poincaré
polynomial is ``P^2 x P^2`` blown up in ``4 - k`` points, where ``k`` counts
the triples ``K`` with ``sum_K m <= |m|/3``. The five cases below decide ``k``
from the triple sums of the heaviest weights.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import AdmissibilityError, ConsistencyError, PoincarePoly, Polarization, normalize

__all__ = [
    "SingularityReport",
    "CASE_POLYS",
    "closed_form_case",
    "ip_closed_form",
    "singularity_report",
    "count_excluded_collinear_triples",
    "EXCLUSION_CHAINS",
]

CURVE_MODEL = "T1T4-T2T3"
TRIPLE_MODEL = "T1T2T3-T4T5"
SMOOTH = "nonsingular"

CASE_POLYS = {c: PoincarePoly([1, 0, 7 - c, 0, 8 - c, 0, 7 - c, 0, 1]) for c in range(1, 6)}

# Sorted-index triples whose coincidence can be semistable, nested by weight.
EXCLUSION_CHAINS = (
    ((4, 5, 6), (3, 5, 6), (2, 5, 6), (1, 5, 6)),
    ((4, 5, 6), (3, 5, 6), (3, 4, 6), (3, 4, 5)),
)


def _sorted_admissible(m) -> tuple[tuple[int, ...], tuple[int, ...]]:
    m = Polarization.of(m)
    if m.n != 6:
        raise AdmissibilityError(f"six-point formula needs n = 6, got n = {m.n}")
    if any(w <= 0 for w in m) or any(3 * w >= m.total for w in m):
        raise AdmissibilityError("use general ip pipeline: need 0 < m_i < |m|/3")
    w, perm, _ = normalize(m)
    return w.as_ints(), perm


def closed_form_case(m) -> int:
    """Which of the five cases applies (1..5)."""
    w, _ = _sorted_admissible(m)
    T = sum(w)

    def big(i, j, k):  # m_i + m_j + m_k >= 2|m|/3
        return 3 * (w[i - 1] + w[j - 1] + w[k - 1]) >= 2 * T

    conds = {
        1: not big(1, 2, 3),
        2: big(1, 2, 3) and not big(1, 2, 4),
        3: big(1, 2, 4) and not big(1, 2, 5) and not big(1, 3, 4),
        4: (big(1, 2, 5) and not big(1, 2, 6)) or (big(1, 3, 4) and not big(2, 3, 4)),
        5: big(1, 2, 6) or big(2, 3, 4),
    }
    hits = [c for c, ok in conds.items() if ok]
    if len(hits) != 1:
        raise ConsistencyError(f"case conditions for {tuple(w)} matched {hits}")
    return hits[0]


def ip_closed_form(m) -> PoincarePoly:
    return CASE_POLYS[closed_form_case(m)]


def count_excluded_collinear_triples(m) -> int:
    """Number of collinear triples ``V^L`` missing from the stable locus.

    ``V^L_{K'}`` is unstable exactly when the complementary triple ``K`` may
    coincide (``sum_K m <= |m|/3``); those ``K`` always sit inside one of the
    two chains in :data:`EXCLUSION_CHAINS` (sorted indices).
    """
    w, _ = _sorted_admissible(m)
    T = sum(w)
    light = {K for K in itertools.combinations(range(1, 7), 3)
             if 3 * sum(w[i - 1] for i in K) <= T}
    if not any(light <= set(chain) for chain in EXCLUSION_CHAINS):
        raise ConsistencyError(f"light triples {sorted(light)} of {tuple(w)} fit neither chain")
    return len(light)


@dataclass(frozen=True)
class SingularityReport:
    """Special points of ``Z(m)`` for six points (indices in input order)."""

    curves: tuple[tuple[int, int], ...]
    triple_points: tuple[tuple[tuple[int, int], ...], ...]
    smooth_points: tuple[tuple[int, int, int], ...]

    curve_model = CURVE_MODEL
    triple_model = TRIPLE_MODEL

    def to_dict(self) -> dict:
        return {
            "curves": [{"pair": list(p), "local_model": CURVE_MODEL} for p in self.curves],
            "triple_points": [
                {"partition": [list(p) for p in part], "local_model": TRIPLE_MODEL}
                for part in self.triple_points
            ],
            "smooth_points": [{"triple": list(t), "local_model": SMOOTH} for t in self.smooth_points],
        }


def _pair_partitions(items):
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for k, other in enumerate(rest):
        for tail in _pair_partitions(rest[:k] + rest[k + 1:]):
            yield ((first, other),) + tail


def singularity_report(m) -> SingularityReport:
    """Curves ``C_ij``, their triple points ``O_{ij,hl,kn}`` and the smooth
    points ``O_hij`` of the categorical quotient."""
    m = Polarization.of(m)
    if m.n != 6:
        raise AdmissibilityError(f"needs n = 6, got n = {m.n}")
    if not m.is_integral() or m.total % 3 != 0:
        raise AdmissibilityError("needs integral weights with 3 dividing |m|")
    if any(w <= 0 or 3 * w >= m.total for w in m):
        raise AdmissibilityError("needs 0 < m_i < |m|/3")
    w = m.as_ints()
    third = sum(w) // 3
    idx = range(1, 7)
    curves = tuple(p for p in itertools.combinations(idx, 2) if w[p[0] - 1] + w[p[1] - 1] == third)
    triples = tuple(
        part for part in _pair_partitions(tuple(idx))
        if all(w[i - 1] + w[j - 1] == third for i, j in part)
    )
    smooth = tuple(t for t in itertools.combinations(idx, 3) if sum(w[i - 1] for i in t) == third)
    return SingularityReport(curves, triples, smooth)
