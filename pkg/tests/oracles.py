"""Brute-force reference computations, written without the package's
vectorized helpers so they can serve as independent checks."""
from __future__ import annotations

import itertools
from fractions import Fraction


def subsets(indices):
    indices = list(indices)
    for r in range(len(indices) + 1):
        yield from itertools.combinations(indices, r)


def polygon_poly_pinned(w, pinned):
    """Polygon-space sum with an arbitrary pinned index (0-based), as a
    coefficient list; ``w`` must be generic."""
    N = len(w)
    total = sum(w)
    others = [i for i in range(N) if i != pinned]
    num = [0] * (2 * N + 2)
    for J in subsets(others):
        s = w[pinned] + sum(w[j] for j in J)
        if 2 * s < total:
            num[2 * len(J)] += 1
            num[2 * (N - len(J) - 2)] -= 1
    # divide by (1 - t^2)
    q = [0] * len(num)
    for i, c in enumerate(num):
        q[i] = c + (q[i - 2] if i >= 2 else 0)
    while q and q[-1] == 0:
        q.pop()
    return q


def is_generic_p1(w):
    total = sum(w)
    return all(2 * sum(J) != total for J in subsets(w))


def p1_walls(w):
    """Index sets J (as tuples, 0-based) carrying exactly half the weight."""
    total = sum(w)
    return [J for J in subsets(range(len(w))) if 2 * sum(w[j] for j in J) == total]


def min_fibre_p1(w, scale=None):
    """Poincaré coefficients of every generic chamber adjacent to ``w`` that
    lies on the minimal-fibre side of each ``P^1`` wall, found by search."""
    N = len(w)
    scale = scale or 4 * N + 1
    walls = [J for J in p1_walls(w) if 0 < len(J) < N]
    found = set()
    for delta in itertools.product((-1, 0, 1), repeat=N):
        v = [scale * x + d for x, d in zip(w, delta)]
        if min(v) <= 0 or not is_generic_p1(v):
            continue
        ok = True
        for J in walls:
            heavy = 2 * sum(v[j] for j in J) > sum(v)
            if 2 * len(J) < N and not heavy:
                ok = False
            if 2 * len(J) > N and heavy:
                ok = False
        if ok:
            if 2 * max(v) > sum(v):
                found.add(())
            else:
                found.add(tuple(polygon_poly_pinned(v, N - 1)))
    return found


def gamma_c(m, K):
    return Fraction(sum(m)) - 3 * sum(Fraction(m[k - 1]) for k in K)


def sign(x):
    return (x > 0) - (x < 0)


def wall_signs(m):
    """Sign of gamma_c for every K with 2 <= |K| <= n-3, keyed by index tuple."""
    n = len(m)
    return {K: sign(gamma_c(m, K))
            for r in range(2, n - 2) for K in itertools.combinations(range(1, n + 1), r)}


def segment_sign_changes(a, b, samples=1000):
    """Walls whose gamma sign differs between consecutive sample points of the
    open segment, with the bracketing parameter interval."""
    pts = [Fraction(j, samples) for j in range(samples + 1)]
    changes = []
    prev = wall_signs(a)
    for s0, s1 in zip(pts, pts[1:]):
        m = [(1 - s1) * x + s1 * y for x, y in zip(a, b)]
        cur = wall_signs(m)
        for K, v in cur.items():
            if v != prev[K]:
                changes.append((K, s0, s1))
        prev = {K: (v if v != 0 else prev[K]) for K, v in cur.items()}
    return changes
