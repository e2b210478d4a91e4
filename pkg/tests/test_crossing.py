import itertools

import pytest

from p2betti import (
    PoincarePoly,
    WallCrossing,
    chamber_poincare,
    cone_position,
    crossing_delta,
    epsilon,
    projective_poly,
    q_poly,
    side_fiber_dim,
)
from p2betti.core import AdmissibilityError, ConeKind
from p2betti.crossing import delta_from_reduced

T2_T4_T6 = PoincarePoly([0, 0, 1, 0, 1, 0, 1])


def test_side_fiber_examples():
    assert side_fiber_dim(7, [1, 7], +1) == 2
    assert side_fiber_dim(6, 3, -1) == 3
    assert side_fiber_dim(6, 2, +1) == side_fiber_dim(6, 2, -1) == 1


@pytest.mark.parametrize("n, k, eps", [(6, 2, 0), (6, 3, -1), (7, 2, 1)])
def test_epsilon_examples(n, k, eps):
    assert epsilon(n, k) == eps


def test_q_examples():
    assert q_poly(6, 3) == T2_T4_T6
    assert q_poly(6, 2) == PoincarePoly()
    assert q_poly(7, 2) == PoincarePoly.monomial(4)


@pytest.mark.parametrize("k", [0, 1, 4, 5])
def test_range_errors(k):
    for f in (lambda: epsilon(6, k), lambda: q_poly(6, k), lambda: side_fiber_dim(6, k, 1)):
        with pytest.raises(ValueError):
            f()


@pytest.mark.parametrize("n", range(5, 13))
def test_fibre_identity_exhaustive(n):
    for k in range(2, n - 2):
        plus = projective_poly(side_fiber_dim(n, k, +1))
        minus = projective_poly(side_fiber_dim(n, k, -1))
        eq = epsilon(n, k) * q_poly(n, k)
        assert plus - minus == eq
        q = q_poly(n, k)
        if q:
            low = next(i for i, c in enumerate(q.coeffs) if c)
            assert low + q.degree == 2 * (n + k) - 10


def test_seven_point_wall_delta():
    assert crossing_delta((9, 4, 4, 4, 4, 4, 1), [1, 7]).to_list() == [0, 0, 0, 0, 1, 0, 5, 0, 1]
    wc = WallCrossing.at((9, 4, 4, 4, 4, 4, 1), [1, 7])
    assert (wc.fiber_plus, wc.fiber_minus) == (2, 1)
    assert wc.z_poly == PoincarePoly([1, 0, 5, 0, 1])


def test_six_point_balanced_wall_is_zero():
    for K in itertools.combinations(range(1, 7), 2):
        assert delta_from_reduced(6, K, [1, 1, 1, 1]) == PoincarePoly()
    assert crossing_delta((12, 12, 12, 11, 11, 8), [4, 5]) == PoincarePoly()


def test_six_point_triple_wall():
    # (6,6,6,6,2,1) lies on four triple walls at once, so it is rejected as a
    # single-wall crossing point; the reduced-weight form gives the value.
    with pytest.raises(AdmissibilityError, match="non-generic wall point"):
        crossing_delta((6, 6, 6, 6, 2, 1), [4, 5, 6])
    assert delta_from_reduced(6, [4, 5, 6], (6, 6, 6)) == -T2_T4_T6
    assert [K.indices for K in cone_position((9, 9, 8, 7, 3, 3)).walls] == [(4, 5, 6)]
    assert crossing_delta((9, 9, 8, 7, 3, 3), [4, 5, 6]) == -T2_T4_T6


def test_not_on_wall():
    with pytest.raises(AdmissibilityError):
        crossing_delta((5, 5, 5, 5, 1, 1), [5, 6])


def _single_wall_points(n, bound):
    for m in itertools.combinations_with_replacement(range(bound, 0, -1), n):
        pos = cone_position(m)
        if pos.kind is ConeKind.WALL and len(pos.walls) == 1:
            yield m, pos.walls[0]


@pytest.mark.parametrize("n, bound, limit", [(6, 9, 40), (7, 10, 25), (8, 8, 10)])
def test_delta_matches_neighbouring_chambers(n, bound, limit):
    """P(plus side) - P(minus side), each computed by its own path."""
    checked = 0
    for m, K in _single_wall_points(n, bound):
        big = [20 * x for x in m]
        for d in itertools.product((-1, 0, 1), repeat=n):
            v = [a + b for a, b in zip(big, d)]
            if cone_position(v).kind is not ConeKind.CHAMBER:
                continue
            w = [2 * a - b for a, b in zip(big, v)]
            if cone_position(w).kind is not ConeKind.CHAMBER:
                continue
            g = sum(v) - 3 * sum(v[i - 1] for i in K.indices)
            plus, minus = (v, w) if g > 0 else (w, v)
            assert chamber_poincare(plus) - chamber_poincare(minus) == crossing_delta(m, K), (m, K)
            break
        checked += 1
        if checked >= limit:
            break
    assert checked == limit
