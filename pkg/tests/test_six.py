import itertools

import pytest
from hypothesis import given

from p2betti import (
    ConeKind,
    PoincarePoly,
    cone_position,
    count_excluded_collinear_triples,
    ip_closed_form,
    singularity_report,
    z_strata,
)
from p2betti.core import AdmissibilityError
from p2betti.six import CASE_POLYS, closed_form_case
from strategies import admissible

six = admissible(6, 6, max_weight=40)
P2xP2 = PoincarePoly([1, 0, 2, 0, 3, 0, 2, 0, 1])
BLOWUP = PoincarePoly([0, 0, 1, 0, 1, 0, 1])


@pytest.mark.parametrize("m, case, excluded", [
    ((1, 1, 1, 1, 1, 1), 1, 0),
    ((6, 6, 6, 6, 2, 1), 5, 4),
    ((5, 5, 5, 5, 1, 1), 5, 4),
])
def test_examples(m, case, excluded):
    assert closed_form_case(m) == case
    assert ip_closed_form(m) == CASE_POLYS[case]
    assert count_excluded_collinear_triples(m) == excluded


def test_case_polys():
    assert CASE_POLYS[1].to_list() == [1, 0, 6, 0, 7, 0, 6, 0, 1]
    assert CASE_POLYS[5] == P2xP2


@pytest.mark.parametrize("m", [(10, 1, 1, 1, 1, 1), (4, 2, 2, 2, 1, 1), (1, 1, 1, 1, 1), (0, 1, 1, 1, 1, 1)])
def test_precondition(m):
    with pytest.raises(AdmissibilityError, match="general ip pipeline|n = 6"):
        ip_closed_form(m)


def test_exhaustive_small_weights():
    """Cases are exclusive and exhaustive, and agree with the blow-up count."""
    seen = set()
    for m in itertools.combinations_with_replacement(range(9, 0, -1), 6):
        if 3 * m[0] >= sum(m):
            continue
        c = closed_form_case(m)  # raises unless exactly one case holds
        seen.add(c)
        k = count_excluded_collinear_triples(m)
        assert ip_closed_form(m) == P2xP2 + (4 - k) * BLOWUP
    assert seen == {1, 2, 3, 4, 5}


@given(six)
def test_case_count_consistency(m):
    k = count_excluded_collinear_triples(m)
    assert 0 <= k <= 4
    assert ip_closed_form(m) == P2xP2 + (4 - k) * BLOWUP


@given(six)
def test_order_of_input_is_irrelevant(m):
    assert ip_closed_form(m) == ip_closed_form(tuple(reversed(m)))


class TestSingularities:
    def test_four_smooth_points(self):
        rep = singularity_report((6, 6, 6, 6, 2, 1))
        assert rep.curves == () and rep.triple_points == ()
        assert rep.smooth_points == ((1, 5, 6), (2, 5, 6), (3, 5, 6), (4, 5, 6))

    def test_equal_weights(self):
        rep = singularity_report((1,) * 6)
        assert len(rep.curves) == 15 and len(rep.triple_points) == 15
        assert rep.smooth_points == ()
        for part in rep.triple_points:
            assert all(p in rep.curves for p in part)

    def test_precondition(self):
        with pytest.raises(AdmissibilityError):
            singularity_report((5, 5, 5, 5, 1, 1))

    def test_models_in_report(self):
        d = singularity_report((1,) * 6).to_dict()
        assert d["curves"][0]["local_model"] == "T1T4-T2T3"
        assert d["triple_points"][0]["local_model"] == "T1T2T3-T4T5"

    @given(six.filter(lambda m: sum(m) % 3 == 0))
    def test_consistent_with_z_strata(self, m):
        rep = singularity_report(m)
        ks = {z.coincident.indices for z in z_strata(m)} if cone_position(m).kind is ConeKind.WALL else set()
        assert set(rep.curves) == {k for k in ks if len(k) == 2}
        assert set(rep.smooth_points) == {k for k in ks if len(k) == 3}
        for part in rep.triple_points:
            assert all(p in rep.curves for p in part)
