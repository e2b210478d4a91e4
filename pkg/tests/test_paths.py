from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import segment_sign_changes
from p2betti import (
    ConeKind,
    PoincarePoly,
    Polarization,
    chamber_poincare,
    cone_position,
    find_crossings,
    find_small_resolution,
    ip,
    ip_closed_form,
    projective_poly,
    reference,
    reference_alt,
)
from p2betti.core import AdmissibilityError, DegeneratePathError
from p2betti.paths import transport
from strategies import admissible, permutations_of

P2xP2 = PoincarePoly([1, 0, 2, 0, 3, 0, 2, 0, 1])
chambers = admissible(5, 8).filter(lambda m: cone_position(m).kind is ConeKind.CHAMBER)


class TestReference:
    def test_examples(self):
        m, p = reference(6)
        assert m.as_ints() == (5, 5, 5, 5, 1, 1) and p == P2xP2
        m, p = reference(7)
        assert m.as_ints() == (7, 7, 7, 7, 1, 1, 1) and p == projective_poly(2) ** 3
        m, p = reference(4)
        assert m.as_ints() == (1, 1, 1, 1) and p == PoincarePoly([1])

    def test_too_small(self):
        with pytest.raises(AdmissibilityError, match="no positive-dimensional moduli"):
            reference(3)

    @pytest.mark.parametrize("n", range(5, 11))
    def test_two_references_agree(self, n):
        alt, alt_poly = reference_alt(n)
        assert chamber_poincare(alt) == alt_poly
        ref, ref_poly = reference(n)
        assert chamber_poincare(ref, start=(alt, alt_poly)) == ref_poly


class TestFindCrossings:
    def test_same_point(self):
        assert len(find_crossings((5, 5, 5, 5, 1, 1), (5, 5, 5, 5, 1, 1))) == 0

    def test_degenerate_segment_is_refused(self):
        with pytest.raises(DegeneratePathError, match="met at s=1/8"):
            find_crossings((9, 4, 4, 4, 4, 3, 1), (7, 7, 7, 7, 1, 1, 1))

    @pytest.mark.parametrize("a, b", [
        ((5, 5, 5, 5, 1, 1), (7, 5, 4, 3, 2, 1)),
        ((5, 5, 5, 5, 1, 1), (9, 7, 5, 4, 2, 1)),
        ((505, 505, 506, 504, 101, 102), (706, 504, 405, 302, 203, 99)),
    ])
    def test_against_sign_scan(self, a, b):
        plan = find_crossings(a, b)
        scan = segment_sign_changes(a, b, samples=1000)
        assert sorted(c.subset.indices for c in plan.crossings) == sorted(K for K, _, _ in scan)
        by_subset = {K: (s0, s1) for K, s0, s1 in scan}
        for c in plan.crossings:
            s0, s1 = by_subset[c.subset.indices]
            assert s0 <= c.s <= s1
            assert cone_position(c.wall_point).walls == (c.subset,)

    def test_single_crossing_pair(self):
        plan = find_crossings((9, 4, 4, 4, 4, 3, 1), (8, 4, 4, 4, 4, 4, 1))
        (c,) = plan.crossings
        assert c.subset.indices == (1, 7) and c.direction == +1
        assert sum(c.wall_point) == 3 * (c.wall_point[0] + c.wall_point[6])

    def test_requires_chambers(self):
        with pytest.raises(AdmissibilityError):
            find_crossings((5, 5, 5, 5, 1, 1), (1, 1, 1, 1, 1, 1))

    @given(chambers.flatmap(lambda m: st.tuples(st.just(m), admissible(len(m), len(m)).filter(
        lambda v: cone_position(v).kind is ConeKind.CHAMBER))))
    def test_plan_invariants(self, pair):
        a, b = (Polarization(x).integers() for x in pair)
        try:
            plan = find_crossings(a, b)
        except DegeneratePathError:
            return
        ss = [c.s for c in plan.crossings]
        assert ss == sorted(set(ss)) and all(0 < s < 1 for s in ss)
        for c in plan.crossings:
            assert cone_position(c.wall_point).walls == (c.subset,)
            point = [(1 - c.s) * x + c.s * y for x, y in zip(a, b)]
            ratio = Fraction(c.wall_point[0]) / point[0]
            assert all(w == ratio * p for w, p in zip(c.wall_point, point))


class TestChamberPoincare:
    def test_examples(self):
        assert chamber_poincare((6, 6, 6, 6, 1, 1)) == P2xP2
        assert chamber_poincare((7, 5, 4, 3, 2, 1)) == ip_closed_form((7, 5, 4, 3, 2, 1))

    def test_known_delta(self):
        a = chamber_poincare((8, 4, 4, 4, 4, 4, 1))
        b = chamber_poincare((9, 4, 4, 4, 4, 3, 1))
        assert (a - b).to_list() == [0, 0, 0, 0, 1, 0, 5, 0, 1]

    def test_rejects_walls(self):
        with pytest.raises(AdmissibilityError):
            chamber_poincare((9, 4, 4, 4, 4, 4, 1))

    @given(chambers)
    def test_path_independence(self, m):
        base = chamber_poincare(m)
        for seed in (1, 2, 3):
            assert chamber_poincare(m, seed=seed) == base
        assert chamber_poincare(m, start=reference_alt(len(m))) == base

    @given(chambers, chambers)
    def test_round_trip(self, a, b):
        if len(a) != len(b):
            return
        p = chamber_poincare(a)
        there = transport(p, a, b, seed=5)
        assert there == chamber_poincare(b)
        assert transport(there, b, a, seed=9) == p

    @given(chambers)
    def test_duality(self, m):
        p = chamber_poincare(m)
        n = len(m)
        assert p.degree == 4 * (n - 4) and p.is_palindromic(4 * (n - 4))
        assert p[0] == 1 and p.odd_coeffs_vanish() and all(c >= 0 for c in p.coeffs)


class TestIP:
    def test_examples(self):
        assert ip((9, 4, 4, 4, 4, 4, 1)) == chamber_poincare((9, 4, 4, 4, 4, 3, 1))
        assert ip((6, 6, 6, 6, 2, 1)) == P2xP2
        assert ip((1, 1, 1, 0, 0, 0)) == PoincarePoly([1])

    @pytest.mark.parametrize("m, coeffs", [
        ((10, 1, 1, 1), []),
        ((2, 2, 1, 1), [1]),
        ((4, 3, 3, 2), [1]),          # top face, reduced (3,3,2): a point
        ((6, 4, 3, 3, 2), [1, 0, 1]),  # top face, reduced (4,3,3,2): P^1
        ((5, 5, 5, 0, 1, 1, 1, 1, 1, 0), None),
    ])
    def test_degenerate_dispatch(self, m, coeffs):
        if coeffs is None:
            assert ip(m) == ip([x for x in m if x])
        else:
            assert ip(m).to_list() == coeffs

    @given(admissible(5, 8))
    def test_walls_and_chambers_are_dual(self, m):
        p = ip(m)
        n = len(m)
        assert p.is_palindromic(4 * (n - 4)) and p[0] == 1 and p.odd_coeffs_vanish()

    @given(admissible(5, 8), st.integers(2, 7), st.data())
    def test_scale_and_permutation(self, m, c, data):
        pm = data.draw(permutations_of(m))
        assert ip([c * x for x in pm]) == ip(m)

    @given(admissible(5, 8))
    def test_wall_independence_of_reference(self, m):
        if cone_position(m).kind is not ConeKind.WALL:
            return
        cand = find_small_resolution(m)
        assert chamber_poincare(cand, start=reference_alt(len(m))) == ip(m)
