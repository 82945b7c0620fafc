import random

import pytest
from hypothesis import given, settings, strategies as st

from flagpos.errors import InvalidInputError
from flagpos.flagbundle import (
    HomogeneousBundle,
    ParabolicSpec,
    SplittingType,
    Status,
    check_fiber_triviality,
    classify,
    is_globally_generated_snow,
    line_degree_on_curve,
    restrict_to_curve,
)
from flagpos.rootsys import Weight, positive_roots, supported_types
from flagpos.weights import is_dominant

B = HomogeneousBundle.build


def test_restrict_examples():
    assert restrict_to_curve(B("A1", (), [[4]]), 1) == SplittingType((4,))
    assert restrict_to_curve(B("A1", (), [[-2]]), 1).degrees == (-2,)
    assert restrict_to_curve(B("A2", (), [[1, 1]]), 1).degrees == (1,)
    E = B("A2", (), [([2, -1], 1), ([0, 1], 2)])
    assert E.rank == 3
    assert restrict_to_curve(E, 2).degrees == (-1, 1, 1)
    assert str(restrict_to_curve(E, 2)) == "(-1,1,1)"


@pytest.mark.parametrize("j", [0, 3, -1])
def test_restrict_index_out_of_range(j):
    with pytest.raises(InvalidInputError):
        restrict_to_curve(B("A2", (), [[1, 1]]), j)


def test_line_degree_examples():
    rs = positive_roots("A2")
    for j in (1, 2):
        assert line_degree_on_curve(rs.fundamental_weight(j), rs.simple_root(j)) == 1
    for r in rs.positive_roots:
        assert line_degree_on_curve(Weight.zero(2), r) == 0
    assert line_degree_on_curve(Weight((1, 1)), rs.positive_roots[-1]) == 2


def test_fiber_triviality_examples():
    ok, bad = check_fiber_triviality(B("A3", (), [[1, -2, 3]]))
    assert ok and bad == []
    ok, bad = check_fiber_triviality(B("A2", {1}, [[0, 1], [0, 2]]))
    assert ok
    ok, bad = check_fiber_triviality(B("A2", {1}, [[1, 1]]))
    assert not ok
    assert [(v.j, v.weight) for v in bad] == [(1, Weight((1, 1)))]


def test_snow_examples():
    assert is_globally_generated_snow(B("A2", (), [[1, 1], [0, 1]]))
    assert not is_globally_generated_snow(B("A1", (), [[-1]]))
    assert is_globally_generated_snow(B("A2", (), [[1, 0], [0, 1]]))
    # non-dominant weight below a dominant one does not matter
    assert is_globally_generated_snow(B("A2", (), [[2, 2], [1, -1]]))


def test_classify_examples():
    v = classify(B("A1", (), [([1], 2)]))
    assert v.status is Status.STRICTLY_NEF_HENCE_AMPLE and v.globally_generated and v.ample
    v = classify(B("A2", (), [[1, 0]]))
    assert v.status is Status.NEF_NOT_STRICT and v.globally_generated
    v = classify(B("A2", (), [[2, -1]]))
    assert v.status is Status.NOT_NEF_ON_TEST_CURVES
    assert (v.first_violation.kind, v.first_violation.j, v.first_violation.degree) == ("test_curve", 2, -1)
    v = classify(B("A2", (), [[0, 0]]))
    assert v.status is Status.NEF_NOT_STRICT and v.globally_generated


def test_classify_on_partial_flag():
    # P^2 as A2 / P with I = {2}: O(1) + O(2) is ample
    v = classify(B("A2", {2}, [[1, 0], [2, 0]]))
    assert v.status is Status.STRICTLY_NEF_HENCE_AMPLE
    assert set(v.splitting) == {1} and set(v.fiber_degrees) == {2}
    assert v.fiber_degrees[2].degrees == (0, 0)


def test_fiber_violation_with_negative_degree_is_not_nef():
    v = classify(B("A2", {1}, [[-1, 2]]))
    assert v.status is Status.NOT_NEF_ON_TEST_CURVES
    assert v.first_violation.kind == "fiber"
    assert not v.fiber_consistent


def test_fiber_violation_with_positive_degree_is_never_ample():
    v = classify(B("A2", {1}, [[1, 1]]))
    assert v.status is Status.NEF_NOT_STRICT
    assert not v.fiber_consistent and v.first_violation is None
    assert [x.j for x in v.fiber_violations] == [1]


def test_parabolic_validation():
    rs = positive_roots("A2")
    with pytest.raises(InvalidInputError):
        ParabolicSpec(rs, {1, 2})
    with pytest.raises(InvalidInputError):
        ParabolicSpec(rs, {3})
    with pytest.raises(InvalidInputError):
        B("A2", (), [[1, 0, 0]])


def test_report_both_maximal_sets_when_orders_disagree():
    v = classify(B("A2", (), [[1, 1], [-1, 2]]))
    assert not v.orders_agree
    assert v.maximal_root_order.distinct() == [Weight((1, 1))]
    # (1,1) - (0,0) is the highest root and dominant: both orders agree
    v = classify(B("A2", (), [[1, 1], [0, 0]]))
    assert v.orders_agree and v.maximal_root_order is None


TYPES6 = [t for t in supported_types(6)]


@st.composite
def bundles(draw, lo=-3, hi=3):
    t = draw(st.sampled_from(TYPES6))
    n = t.rank
    I = draw(st.sets(st.integers(1, n), max_size=n - 1))
    k = draw(st.integers(1, 8))
    ws = draw(st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=k, max_size=k))
    return B(str(t), I, ws)


@given(bundles())
def test_verdict_invariants(E):
    v = classify(E)
    if v.status is Status.STRICTLY_NEF_HENCE_AMPLE:
        assert v.globally_generated and v.fiber_consistent
        assert all(is_dominant(w) for w in E.weights.distinct())
    if v.status is not Status.NOT_NEF_ON_TEST_CURVES:
        assert all(d >= 0 for s in v.splitting.values() for d in s.degrees)
        if v.fiber_consistent:
            assert v.globally_generated
    assert v.globally_generated == is_globally_generated_snow(E)
    assert all(len(s) == E.rank for s in v.splitting.values())


@given(bundles(0, 3))
def test_dominant_weights_give_nonnegative_degrees(E):
    v = classify(E)
    assert all(d >= 0 for s in v.splitting.values() for d in s.degrees)
    assert v.status is not Status.NOT_NEF_ON_TEST_CURVES


@given(bundles(), st.data())
def test_twist_shifts_splitting(E, data):
    n = E.parabolic.rank
    mu = Weight(tuple(data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))))
    F = E.twist(mu)
    rs = E.root_system
    for j in range(1, n + 1):
        shift = line_degree_on_curve(mu, rs.simple_root(j))
        expect = sorted(d + shift for d in restrict_to_curve(E, j).degrees)
        assert list(restrict_to_curve(F, j).degrees) == expect


@settings(max_examples=200)
@given(st.sampled_from(list(supported_types(8))), st.data())
def test_line_bundle_degrees_are_pairings(t, data):
    n = t.rank
    lam = Weight(tuple(data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))))
    E = HomogeneousBundle(ParabolicSpec(positive_roots(t)), [lam])
    v = classify(E)
    for j in range(1, n + 1):
        assert v.splitting[j].degrees == (line_degree_on_curve(lam, E.root_system.simple_root(j)),)


def test_verdict_deterministic():
    rng = random.Random(7)
    E = B("B3", {2}, [[rng.randint(-2, 2) for _ in range(3)] for _ in range(5)])
    assert classify(E) == classify(E)
