import pytest
from hypothesis import given, strategies as st

from flagpos.errors import InvalidInputError
from flagpos.rootsys import (
    Root,
    SimpleType,
    Weight,
    cartan_matrix,
    pairing,
    positive_roots,
    root_in_weight_coords,
    supported_types,
)

from oracles import ROOT_COUNTS, coroot_via_form, root_strings

ALL_TYPES = list(supported_types(8))


def test_supported_types_cover_table():
    assert {(t.family, t.rank) for t in ALL_TYPES} == set(ROOT_COUNTS)


@pytest.mark.parametrize("name", ["a1", "A2", " g2 ", "E 8"])
def test_parse_type_case_insensitive(name):
    t = SimpleType.parse(name)
    assert str(t) == name.replace(" ", "").upper()


@pytest.mark.parametrize("name", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3", "A", "2A"])
def test_invalid_types_rejected(name):
    with pytest.raises(InvalidInputError):
        SimpleType.parse(name)


def test_cartan_small_cases():
    assert cartan_matrix(SimpleType("A", 1)) == ((2,),)
    assert cartan_matrix(SimpleType("A", 2)) == ((2, -1), (-1, 2))
    assert cartan_matrix(SimpleType("G", 2)) == ((2, -1), (-3, 2))


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_cartan_invariants(t):
    import numpy as np

    a = cartan_matrix(t)
    n = t.rank
    for i in range(n):
        assert a[i][i] == 2
        for j in range(n):
            if i != j:
                assert a[i][j] <= 0
                assert (a[i][j] == 0) == (a[j][i] == 0)
    assert round(np.linalg.det(np.array(a, dtype=float))) > 0


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_positive_roots_match_root_string_oracle(t):
    rs = positive_roots(t)
    got = {r.simple_coords for r in rs.positive_roots}
    assert got == root_strings(rs.cartan)
    assert len(got) == ROOT_COUNTS[(t.family, t.rank)]


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_coroots_match_invariant_form(t):
    rs = positive_roots(t)
    for r in rs.positive_roots:
        assert r.coroot_coords == coroot_via_form(rs.cartan, r.simple_coords)


def test_small_root_lists():
    assert [r.simple_coords for r in positive_roots("A1").positive_roots] == [(1,)]
    assert [r.simple_coords for r in positive_roots("A2").positive_roots] == [(0, 1), (1, 0), (1, 1)]
    assert len(positive_roots("G2").positive_roots) == 6


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_closure_and_ordering(t):
    rs = positive_roots(t)
    allroots = {r.simple_coords for r in rs.roots()}
    n = rs.rank
    for r in rs.roots():
        for i in range(n):
            k = sum(rs.cartan[i][m] * r.simple_coords[m] for m in range(n))
            img = list(r.simple_coords)
            img[i] -= k
            assert tuple(img) in allroots
    keys = [(r.height, r.simple_coords) for r in rs.positive_roots]
    assert keys == sorted(keys)
    top = rs.highest_root()
    assert all(all(a >= b for a, b in zip(top.simple_coords, r.simple_coords)) for r in rs.positive_roots)


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_fundamental_weights_dual_to_simple_coroots(t):
    rs = positive_roots(t)
    for i in range(1, t.rank + 1):
        for j in range(1, t.rank + 1):
            assert pairing(rs.fundamental_weight(i), rs.simple_root(j)) == int(i == j)


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_simple_root_as_weight_is_cartan_column(t):
    rs = positive_roots(t)
    for j in range(1, t.rank + 1):
        w = root_in_weight_coords(rs.simple_root(j), t)
        for i in range(1, t.rank + 1):
            assert pairing(w, rs.simple_root(i)) == rs.cartan[i - 1][j - 1]


def test_pairing_examples():
    rs = positive_roots("A2")
    top = rs.positive_roots[-1]
    assert top.simple_coords == (1, 1) and top.coroot_coords == (1, 1)
    assert pairing(Weight((1, 1)), top) == 2
    assert pairing(Weight.zero(2), top) == 0
    assert root_in_weight_coords(rs.simple_root(1), rs) == Weight((2, -1))
    assert root_in_weight_coords(top, "A2") == Weight((1, 1))
    assert root_in_weight_coords(positive_roots("A1").simple_root(1), "A1") == Weight((2,))


def test_pairing_rank_mismatch():
    with pytest.raises(InvalidInputError):
        pairing(Weight((1, 0, 0)), positive_roots("A2").simple_root(1))


def test_root_weight_pairs_with_own_coroot_to_two():
    # <alpha, alpha^vee> = 2 for every root, in every type
    for t in ALL_TYPES:
        rs = positive_roots(t)
        for r in rs.positive_roots:
            assert pairing(root_in_weight_coords(r, rs), r) == 2


coord = st.integers(-50, 50)


@given(st.sampled_from(ALL_TYPES), st.data())
def test_pairing_bilinear(t, data):
    rs = positive_roots(t)
    vec = st.lists(coord, min_size=t.rank, max_size=t.rank).map(lambda c: Weight(tuple(c)))
    lam, mu = data.draw(vec), data.draw(vec)
    alpha = data.draw(st.sampled_from(rs.roots()))
    assert pairing(lam + mu, alpha) == pairing(lam, alpha) + pairing(mu, alpha)
    assert pairing(-lam, alpha) == -pairing(lam, alpha)
    assert pairing(lam, -alpha) == -pairing(lam, alpha)


def test_root_system_is_cached_and_immutable():
    a = positive_roots("E8")
    assert a is positive_roots(SimpleType("E", 8))
    with pytest.raises(AttributeError):
        a.positive_roots = ()
    assert isinstance(a.positive_roots[0], Root)
