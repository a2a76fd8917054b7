import pytest
from hypothesis import given, strategies as st

from matchtile.complexes import independence_complex, matching_complex
from matchtile.graphs import H_graph, cycle_graph, path_graph, polygon_line_tiling
from matchtile.homology import connectivity_of_profile, homology_of
from matchtile.theory import (
    EMPTY,
    INFINITY,
    POINT,
    HomotopyType,
    check_bases_agree,
    connectivity,
    connectivity_G,
    connectivity_H,
    jmmv_lower_bound,
    join,
    kozlov,
    predict_G,
    predict_H,
    prediction_json,
    suspend,
    wedge,
)

S = HomotopyType.sphere


def test_suspend():
    assert suspend(POINT, 5) == POINT
    assert suspend(EMPTY, 1) == S(0)
    assert suspend(EMPTY, 0) == EMPTY
    assert suspend(S(1, 2), 2) == S(3, 2)


def test_wedge():
    assert wedge([S(4), POINT]) == S(4)
    assert wedge([S(4), S(4)]) == S(4, 2)
    with pytest.raises(ValueError):
        wedge([EMPTY, S(1)])


def test_join():
    assert join(S(0), S(0)) == S(1)
    m = 1
    assert suspend(join(S(m - 1), S(m - 1)), 0) == S(1)
    assert join(POINT, S(5)) == POINT
    assert join(EMPTY, S(3, 2)) == S(3, 2)
    assert join(S(1, 2), S(0, 3)) == S(2, 6)


def test_type_invariants():
    with pytest.raises(ValueError):
        HomotopyType.from_dims([-1, 2])
    assert HomotopyType.from_dims([]) == POINT
    assert HomotopyType.from_dims([2, 1, 2]) == HomotopyType.from_dims({1: 1, 2: 2})


def test_connectivity_of_types():
    assert connectivity(POINT) == INFINITY
    assert connectivity(EMPTY) == -2
    assert connectivity(wedge([S(3), S(5)])) == 2


def test_kozlov_examples():
    assert kozlov("path", 6) == S(1)
    assert kozlov("cycle", 8) == S(2)
    assert kozlov("path", 0) == EMPTY
    assert kozlov("path", 4) == POINT
    assert kozlov("cycle", 9) == S(2, 2)
    with pytest.raises(ValueError):
        kozlov("cycle", 2)


@pytest.mark.parametrize("k", range(1, 13))
def test_kozlov_paths_match_brute_force(k):
    assert homology_of(independence_complex(path_graph(k))).betti == kozlov("path", k).betti()


@pytest.mark.parametrize("k", range(3, 13))
def test_kozlov_cycles_match_brute_force(k):
    assert homology_of(independence_complex(cycle_graph(k))).betti == kozlov("cycle", k).betti()


def test_predict_G_examples():
    assert predict_G(4, 2) == S(4, 2)
    assert predict_G(3, 3) == wedge([S(4), S(3)])
    assert predict_G(3, 4) == wedge([S(5, 5), S(4)])
    assert predict_G(5, 4) == S(10, 2)
    assert predict_G(7, 0) == POINT


def test_predict_H_examples():
    assert predict_H(3, 0) == S(0)
    assert predict_H(3, 1) == S(1)
    assert predict_H(3, 2) == wedge([S(3, 2), S(2)])
    with pytest.raises(ValueError):
        predict_H(5, 1)


@pytest.mark.parametrize("m", range(1, 4))
@pytest.mark.parametrize("t", range(1, 11))
def test_3m_plus_1_closed_form(m, t):
    assert predict_G(3 * m + 1, t) == S(2 * t * m, t)


def test_bases_agree():
    check_bases_agree(range(1, 10))


@pytest.mark.parametrize("n", [3, 6, 9])
def test_3m_recursion_terminates(n):
    for t in range(0, 40):
        g, h = predict_G(n, t), predict_H(n, t)
        assert g.variant.value in ("point", "wedge") and h.variant.value == "wedge"


def test_deep_recursion():
    assert predict_G(5, 400).variant.value == "wedge"
    assert predict_G(6, 300).variant.value == "wedge"


def test_connectivity_examples():
    assert connectivity_G(5, 4) == 9
    assert all(connectivity_G(3, t) == t - 1 for t in range(1, 20))
    assert connectivity_G(4, 3) == 5


@pytest.mark.parametrize("n", range(2, 12))
@pytest.mark.parametrize("t", range(1, 25))
def test_connectivity_formula_matches_predicted_wedge(n, t):
    assert connectivity_G(n, t) == connectivity(predict_G(n, t))
    if n % 3 == 0:
        assert connectivity_H(n, t) == connectivity(predict_H(n, t))


@pytest.mark.parametrize("n", [3, 6, 9])
def test_connectivity_H_at_zero(n):
    assert connectivity_H(n, 0) == -1 == connectivity(predict_H(n, 0))


def test_jmmv_examples():
    assert jmmv_lower_bound(5, 4) == 9
    assert jmmv_lower_bound(2, 3) == 0
    assert jmmv_lower_bound(5, 3) == 6 and connectivity_G(5, 3) == 7
    with pytest.raises(ValueError):
        jmmv_lower_bound(3, 2)


@pytest.mark.parametrize("n", [2, 5, 8])
def test_connectivity_at_least_jmmv_bound(n):
    gaps = [connectivity_G(n, t) - jmmv_lower_bound(n, t) for t in range(1, 21)]
    assert min(gaps) >= 0 and max(gaps) > 0


@pytest.mark.parametrize("n,t", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1), (5, 2), (6, 1), (7, 1)])
def test_prediction_matches_brute_force(n, t):
    h = homology_of(matching_complex(polygon_line_tiling(n, t)))
    assert h.torsion == {}
    assert h.betti == predict_G(n, t).betti()
    assert connectivity_of_profile(h) == connectivity_G(n, t)


@pytest.mark.parametrize("t", range(0, 4))
def test_H_prediction_matches_brute_force(t):
    h = homology_of(independence_complex(H_graph(3, t)))
    assert h.torsion == {} and h.betti == predict_H(3, t).betti()


def test_prediction_json():
    assert prediction_json(3, 3) == {
        "family": "G", "n": 3, "t": 3, "type": "wedge", "spheres": {"3": 1, "4": 1}, "connectivity": 2,
    }
    assert prediction_json(4, 0)["connectivity"] == "inf"


types = st.one_of(
    st.just(POINT),
    st.just(EMPTY),
    st.dictionaries(st.integers(0, 6), st.integers(1, 3), min_size=1, max_size=3).map(HomotopyType.from_dims),
)
non_empty = types.filter(lambda h: h != EMPTY)


@given(types, st.integers(0, 5), st.integers(0, 5))
def test_suspension_additive(h, a, b):
    assert suspend(h, a + b) == suspend(suspend(h, a), b)


@given(types, types, types)
def test_join_commutative_associative(x, y, z):
    assert join(x, y) == join(y, x)
    assert join(join(x, y), z) == join(x, join(y, z))


@given(non_empty, non_empty, non_empty)
def test_wedge_laws(x, y, z):
    assert wedge([x, y]) == wedge([y, x])
    assert wedge([wedge([x, y]), z]) == wedge([x, wedge([y, z])])
    assert wedge([x, POINT]) == x


@given(types, st.integers(1, 4))
def test_suspension_is_join_with_s0(h, k):
    out = h
    for _ in range(k):
        out = join(out, S(0))
    assert out == suspend(h, k)
